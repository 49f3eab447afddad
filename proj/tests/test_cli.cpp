#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "zetalab/cli.hpp"

namespace zetalab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

TEST(CliBernoulli, Text) {
  const auto r = run({"bernoulli", "7"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 8U);
  EXPECT_EQ(l.back(), "7 0");
  EXPECT_EQ(l[1], "1 -1/2");
  EXPECT_EQ(run({"bernoulli", "0"}).out, "0 1\n");
}

TEST(CliBernoulli, JsonRoundTrips) {
  const auto r = run({"bernoulli", "12", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 13U);
  EXPECT_EQ(j.back(), "-691/2730");
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(BigRational::parse(j[n].get<std::string>()), bernoulli(n));
}

TEST(CliBernoulli, Csv) {
  const auto l = lines(run({"bernoulli", "2", "--format", "csv"}).out);
  EXPECT_EQ(l, (std::vector<std::string>{"n,B", "0,1", "1,-1/2", "2,1/6"}));
}

TEST(CliZeta, ExactEven) {
  EXPECT_EQ(run({"zeta", "--exact-even", "2"}).out, "1/90 * pi^4\n");
  const auto j = nlohmann::json::parse(run({"zeta", "--exact-even", "3", "--format", "json"}).out);
  EXPECT_EQ(PiPowerExact::parse(j["exact"].get<std::string>()), zeta_even_exact(3));
  EXPECT_EQ(run({"zeta", "--exact-even", "0"}).code, cli::kExitUsage);
}

TEST(CliZeta, DirichletSingleTerm) {
  const auto j = nlohmann::json::parse(run({"zeta", "--dirichlet", "2", "--terms", "1", "--format", "json"}).out);
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["error"], "1");
  EXPECT_EQ(j["error_kind"], "rigorous_tail");
}

TEST(CliZeta, EulerProductSingleFactor) {
  const auto r = run({"zeta", "--euler-product", "2", "--prime-limit", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.33333333333333"), std::string::npos);
}

TEST(CliZeta, Errors) {
  EXPECT_EQ(run({"zeta", "--dirichlet", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"zeta", "--dirichlet", "0.5", "--imag", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"zeta"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"zeta", "--dirichlet", "2", "--euler-product", "2"}).code, cli::kExitUsage);
  const auto r = run({"zeta", "--dirichlet", "1"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliGamma, Exact) {
  EXPECT_EQ(run({"gamma", "2.5", "--method", "exact"}).out, "3/4 * sqrt(pi)\n");
  EXPECT_EQ(run({"gamma", "5", "--method", "exact"}).out, "24\n");
  EXPECT_EQ(run({"gamma", "-1/2", "--method", "exact"}).out, "-2 * sqrt(pi)\n");
  const auto j = nlohmann::json::parse(run({"gamma", "7/2", "--method", "exact", "--format", "json"}).out);
  EXPECT_EQ(PiPowerExact::parse(j["exact"].get<std::string>()), PiPowerExact(make_rational(15, 8), 0, true));
}

TEST(CliGamma, Errors) {
  const auto pole = run({"gamma", "0"});
  EXPECT_EQ(pole.code, cli::kExitUsage);
  EXPECT_NE(pole.err.find("pole"), std::string::npos);
  EXPECT_EQ(run({"gamma", "-3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gamma", "0.25", "--method", "exact"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gamma", "-0.5", "--method", "gauss"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gamma", "1", "--method", "simpson"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gamma", "abc"}).code, cli::kExitUsage);
}

TEST(CliGamma, NumericRoutes) {
  const auto g = nlohmann::json::parse(run({"gamma", "1/2", "--method", "gauss", "--terms", "10000", "--format", "json"}).out);
  EXPECT_LT(std::abs(std::stod(g["value"].get<std::string>()) - std::sqrt(M_PI)), 1e-3);
  const auto w = nlohmann::json::parse(
      run({"gamma", "1.5", "--method", "weierstrass", "--terms", "10000", "--format", "json"}).out);
  EXPECT_LT(std::abs(std::stod(w["value"].get<std::string>()) - std::sqrt(M_PI) / 2), 1e-3);
  EXPECT_EQ(w["error_kind"], "heuristic");
}

TEST(CliEulerGamma, Values) {
  const auto one = nlohmann::json::parse(run({"euler-gamma", "1", "--format", "json"}).out);
  EXPECT_EQ(one["value"], "1");
  const auto two = nlohmann::json::parse(run({"euler-gamma", "2", "--format", "json"}).out);
  EXPECT_EQ(two["value"], "0.806852819440055");
  EXPECT_EQ(run({"euler-gamma", "0"}).code, cli::kExitUsage);
}

TEST(CliPrimes, Formats) {
  EXPECT_EQ(run({"primes", "10"}).out, "2 3 5 7\n");
  const auto j = nlohmann::json::parse(run({"primes", "100", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 25);
}

TEST(CliReport, ContainsAllValues) {
  const auto text = run({"report"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("zeta(6) = 1/945 * pi^6\n"), std::string::npos);

  const auto csv = lines(run({"report", "--format", "csv"}).out);
  ASSERT_EQ(csv.size(), 17U);
  EXPECT_EQ(csv[0], "name,exact,decimal");

  const auto j = nlohmann::json::parse(run({"report", "--format", "json"}).out);
  ASSERT_EQ(j["values"].size(), 16U);
  for (const auto& v : j["values"]) {
    ASSERT_TRUE(v.contains("name") && v.contains("exact") && v.contains("decimal"));
    const PiPowerExact exact = PiPowerExact::parse(v["exact"].get<std::string>());
    EXPECT_EQ(exact.to_string(), v["exact"]);
    EXPECT_EQ(pi_power_eval(exact).to_string(15), v["decimal"]) << v["name"];
  }
}

TEST(CliVerify, SinglePointAtRoundingFloor) {
  const auto r = run({"verify", "--identities", "reflection", "--grid", "0.5", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 1U);
  const auto& rep = j["reports"][0];
  const std::vector<std::string> keys{"identity", "argument", "lhs", "rhs", "residual", "params"};
  std::vector<std::string> seen;
  for (const auto& [k, v] : rep.items()) seen.push_back(k);
  EXPECT_EQ(seen, keys);
  EXPECT_EQ(rep["residual"], "0");
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "--identities", "sine-product", "--grid", "0.5", "--terms", "1"}).code,
            cli::kExitVerifyFailed);
  EXPECT_EQ(run({"verify", "--grid", "0.5,,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--grid", "abc"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--identities", "nope"}).code, cli::kExitUsage);
  // excluded points do not fail the run
  EXPECT_EQ(run({"verify", "--identities", "zcot-partial-fraction", "--grid", "1,pi"}).code, cli::kExitOk);
}

TEST(CliVerify, CsvColumns) {
  const auto r = run({"verify", "--identities", "zcot-bernoulli", "--grid", "1,2", "--format", "csv"});
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 3U);
  EXPECT_EQ(l[0], "identity,argument,lhs,rhs,residual,params");
  EXPECT_EQ(l[1].rfind("zcot-bernoulli,1,", 0), 0U);
}

TEST(CliOutputOptions, Validation) {
  EXPECT_EQ(run({"report", "--precision", "31"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--digits", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--precision", "64", "--digits", "19"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"report", "--precision", "64", "--digits", "18"}).code, cli::kExitOk);
  EXPECT_EQ(run({"report", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(CliOutputOptions, DigitsControlsRendering) {
  const auto j = nlohmann::json::parse(run({"euler-gamma", "2", "--digits", "6", "--format", "json"}).out);
  EXPECT_EQ(j["value"], "0.806853");
}

TEST(CliOutputOptions, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "zetalab_cli_out_test.txt";
  std::filesystem::remove(path);
  const auto r = run({"bernoulli", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "0 1\n1 -1/2\n2 1/6\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"bernoulli", "2", "--out", "/nonexistent-dir/x.txt"}).code, cli::kExitUsage);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> invocations{
      {"report"}, {"report", "--format", "json"}, {"report", "--format", "csv"},
      {"verify", "--identities", "cot-halving,zcot-zeta-series", "--format", "json"},
      {"gamma", "0.3"}, {"zeta", "--euler-product", "3", "--imag", "1", "--prime-limit", "500"}};
  for (const auto& args : invocations) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

}  // namespace
}  // namespace zetalab
