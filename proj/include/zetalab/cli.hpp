#pragma once

// zetalab <command> [args] [--format text|json|csv] [--precision N] [--digits N] [--out FILE]
//
// Exit codes: 0 success (or every verify residual passed), 1 a verify
// residual failed its threshold, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetalab/bernoulli.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/numcore/pi_power.hpp"
#include "zetalab/numcore/primes.hpp"
#include "zetalab/numcore/real.hpp"
#include "zetalab/report_io.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "text";
  long precision = kDefaultPrecision;
  int digits = 15;
  std::string out_file;
};

/// Significant decimal digits that `precision` bits can carry.
inline int max_decimal_digits(long precision) {
  return static_cast<int>(std::floor(static_cast<double>(precision - 1) * std::log10(2.0)));
}

namespace detail {

using Json = nlohmann::ordered_json;

inline void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--precision", o.precision, "Working precision in bits (>= 32)");
  cmd->add_option("--digits", o.digits, "Significant decimal digits for approximate values");
  cmd->add_option("--out", o.out_file, "Write output to FILE instead of standard output");
}

inline void validate(const OutputOptions& o) {
  check_precision(o.precision);
  if (o.digits < 1 || o.digits > max_decimal_digits(o.precision)) {
    throw DomainError("--digits must be in 1.." + std::to_string(max_decimal_digits(o.precision)) + " at " +
                      std::to_string(o.precision) + " bits");
  }
}

inline Json opt_json(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }
inline std::string opt_text(const std::optional<std::string>& v) { return v.value_or(""); }

// ---- bernoulli ------------------------------------------------------------

inline void cmd_bernoulli(unsigned n_max, const OutputOptions& o, std::ostream& out) {
  const BernoulliTable table = bernoulli_table(n_max);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& b : table.values()) arr.push_back(b.to_string());
    out << arr.dump() << '\n';
    return;
  }
  if (o.format == "csv") out << "n,B\n";
  const char sep = o.format == "csv" ? ',' : ' ';
  for (std::size_t n = 0; n < table.size(); ++n) out << n << sep << table[n].to_string() << '\n';
}

// ---- zeta -----------------------------------------------------------------

struct ZetaRequest {
  std::optional<unsigned> exact_even;
  std::optional<std::string> dirichlet;
  std::optional<std::string> euler_product;
  std::string imag = "0";
  std::uint64_t terms = 1000;
  std::uint64_t prime_limit = 1000;
  bool rigorous = false;
};

struct ZetaRow {
  std::string method;
  std::string argument;
  std::optional<std::string> s_imag, limit, exact, value, value_imag, error, error_kind, convergence_check;
};

inline constexpr std::string_view kZetaCsvHeader =
    "method,argument,s_imag,limit,exact,value,value_imag,error,error_kind,convergence_check";

inline ZetaRow zeta_row(const ZetaRequest& req, const OutputOptions& o) {
  const int methods = (req.exact_even ? 1 : 0) + (req.dirichlet ? 1 : 0) + (req.euler_product ? 1 : 0);
  if (methods != 1) throw DomainError("zeta needs exactly one of --exact-even, --dirichlet, --euler-product");
  if (req.exact_even) {
    const PiPowerExact v = zeta_even_exact(*req.exact_even);
    return {"exact-even", std::to_string(*req.exact_even), {}, {}, v.to_string(),
            pi_power_eval(v, o.precision).to_string(o.digits), {}, {}, {}, {}};
  }
  const bool dirichlet = req.dirichlet.has_value();
  const std::string s_text = dirichlet ? *req.dirichlet : *req.euler_product;
  const ApproxReal re = parse_real(s_text, o.precision);
  const ApproxReal im = parse_real(req.imag, o.precision);
  const EulerProductOptions ep{req.rigorous};
  const std::uint64_t limit = dirichlet ? req.terms : req.prime_limit;

  ZetaRow row{dirichlet ? "dirichlet" : "euler-product", s_text, {}, std::to_string(limit), {}, {}, {}, {}, {}, {}};
  if (im.is_zero()) {
    const BoundedValue v = dirichlet ? zeta_dirichlet(re, limit, o.precision)
                                     : zeta_euler_product(re, limit, o.precision, ep);
    row.value = v.value.to_string(o.digits);
    row.error = v.error.bound().to_string(o.digits);
    row.error_kind = std::string(to_string(v.error.kind()));
  } else {
    const ZetaArgument s(re, im);
    const BoundedComplex v = dirichlet ? zeta_dirichlet(s, limit, o.precision)
                                       : zeta_euler_product(s, limit, o.precision, ep);
    row.s_imag = req.imag;
    row.value = v.value.re.to_string(o.digits);
    row.value_imag = v.value.im.to_string(o.digits);
    row.error = v.error.bound().to_string(o.digits);
    row.error_kind = std::string(to_string(v.error.kind()));
  }
  if (!dirichlet) {
    const auto terms = euler_product_terms(re, limit);
    row.convergence_check = terms.empty() || product_convergence_check(terms) ? "pass" : "fail";
  }
  return row;
}

inline void cmd_zeta(const ZetaRequest& req, const OutputOptions& o, std::ostream& out) {
  const ZetaRow r = zeta_row(req, o);
  if (o.format == "json") {
    Json j;
    j["method"] = r.method;
    j["argument"] = r.argument;
    j["s_imag"] = opt_json(r.s_imag);
    j["limit"] = opt_json(r.limit);
    j["exact"] = opt_json(r.exact);
    j["value"] = opt_json(r.value);
    j["value_imag"] = opt_json(r.value_imag);
    j["error"] = opt_json(r.error);
    j["error_kind"] = opt_json(r.error_kind);
    j["convergence_check"] = opt_json(r.convergence_check);
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << kZetaCsvHeader << '\n'
        << r.method << ',' << csv_field(r.argument) << ',' << opt_text(r.s_imag) << ',' << opt_text(r.limit) << ','
        << opt_text(r.exact) << ',' << opt_text(r.value) << ',' << opt_text(r.value_imag) << ','
        << opt_text(r.error) << ',' << opt_text(r.error_kind) << ',' << opt_text(r.convergence_check) << '\n';
  } else if (r.exact) {
    out << *r.exact << '\n';
  } else {
    out << "value " << *r.value << '\n';
    if (r.value_imag) out << "imag " << *r.value_imag << '\n';
    out << "error " << *r.error << " (" << *r.error_kind << ")\n";
    if (r.convergence_check) out << "convergence_check " << *r.convergence_check << '\n';
  }
}

// ---- gamma ----------------------------------------------------------------

struct GammaRequest {
  std::string s;
  std::string method = "auto";
  std::optional<std::uint64_t> terms;
};

inline constexpr std::string_view kGammaCsvHeader = "method,s,classification,terms,exact,value,error,error_kind";

inline void cmd_gamma(const GammaRequest& req, const OutputOptions& o, std::ostream& out) {
  const GammaArgument arg = GammaArgument::parse(req.s);
  std::optional<std::string> exact, value, error, kind, terms;
  if (req.method == "exact") {
    exact = gamma_exact(arg).to_string();
  } else {
    std::optional<BoundedValue> v;
    if (req.method == "gauss") {
      terms = std::to_string(req.terms.value_or(10000));
      v = gamma_gauss(arg.approx(o.precision), req.terms.value_or(10000), o.precision);
    } else if (req.method == "weierstrass") {
      terms = std::to_string(req.terms.value_or(10000));
      v = gamma_weierstrass(arg.approx(o.precision), req.terms.value_or(10000), o.precision);
    } else {
      GammaOptions go;
      if (req.terms) go.weierstrass_terms = *req.terms;
      v = gamma(arg, o.precision, go);
      if (arg.classification() != GammaClass::generic_real && v->error.kind() == BoundKind::rigorous_tail) {
        exact = gamma_exact(arg).to_string();
      } else {
        terms = std::to_string(go.weierstrass_terms);
      }
    }
    value = v->value.to_string(o.digits);
    error = v->error.bound().to_string(o.digits);
    kind = std::string(to_string(v->error.kind()));
  }

  const std::string classification(to_string(arg.classification()));
  if (o.format == "json") {
    Json j;
    j["method"] = req.method;
    j["s"] = arg.value().to_string();
    j["classification"] = classification;
    j["terms"] = opt_json(terms);
    j["exact"] = opt_json(exact);
    j["value"] = opt_json(value);
    j["error"] = opt_json(error);
    j["error_kind"] = opt_json(kind);
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << kGammaCsvHeader << '\n'
        << req.method << ',' << arg.value().to_string() << ',' << classification << ',' << opt_text(terms) << ','
        << opt_text(exact) << ',' << opt_text(value) << ',' << opt_text(error) << ',' << opt_text(kind) << '\n';
  } else if (req.method == "exact") {
    out << *exact << '\n';
  } else {
    if (exact) out << "exact " << *exact << '\n';
    out << "value " << *value << '\n' << "error " << *error << " (" << *kind << ")\n";
  }
}

// ---- euler-gamma ----------------------------------------------------------

inline void cmd_euler_gamma(std::uint64_t m, bool corrected, const OutputOptions& o, std::ostream& out) {
  const EulerGamma g = euler_constant(m, o.precision, corrected);
  const std::string value = g.value.to_string(o.digits);
  const std::string error = g.error.bound().to_string(o.digits);
  const std::string kind(to_string(g.error.kind()));
  if (o.format == "json") {
    Json j;
    j["m"] = g.m_used;
    j["corrected"] = corrected;
    j["value"] = value;
    j["error"] = error;
    j["error_kind"] = kind;
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "m,corrected,value,error,error_kind\n"
        << g.m_used << ',' << (corrected ? "true" : "false") << ',' << value << ',' << error << ',' << kind << '\n';
  } else {
    out << "value " << value << '\n' << "m " << g.m_used << '\n' << "error " << error << " (" << kind << ")\n";
  }
}

// ---- primes ---------------------------------------------------------------

inline void cmd_primes(std::uint64_t limit, const OutputOptions& o, std::ostream& out) {
  const PrimeList list = sieve_primes(limit);
  if (o.format == "json") {
    Json j;
    j["limit"] = list.limit;
    j["count"] = list.primes.size();
    j["primes"] = list.primes;
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "p\n";
    for (const auto p : list.primes) out << p << '\n';
  } else {
    for (std::size_t i = 0; i < list.primes.size(); ++i) out << (i == 0 ? "" : " ") << list.primes[i];
    out << '\n';
  }
}

// ---- verify ---------------------------------------------------------------

struct VerifyRequest {
  std::vector<std::string> identities;
  std::optional<std::string> grid;
  std::optional<std::uint64_t> terms;
  unsigned threads = 0;
};

inline int cmd_verify(const VerifyRequest& req, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  SuiteConfig config;
  config.identities = req.identities;
  if (req.grid) config.grid = parse_grid(*req.grid);
  config.terms = req.terms;
  config.precision = o.precision;
  config.threads = req.threads;
  const std::vector<ResidualReport> reports = run_identity_suite(config);

  std::size_t pass = 0, fail = 0, excluded = 0;
  for (const auto& r : reports) {
    pass += r.status == ReportStatus::pass ? 1 : 0;
    fail += r.status == ReportStatus::fail ? 1 : 0;
    excluded += r.status == ReportStatus::excluded ? 1 : 0;
  }
  const std::string summary = "summary: " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
                              std::to_string(excluded) + " excluded";

  if (o.format == "json") {
    Json j;
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r, o.digits));
    j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"excluded", excluded}};
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << kReportCsvHeader << '\n';
    for (const auto& r : reports) out << to_csv_row(r, o.digits) << '\n';
    err << summary << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.identity << ' ' << r.params.at("point");
      if (r.status == ReportStatus::excluded) {
        out << " excluded: " << r.params.at("reason") << '\n';
        continue;
      }
      out << " lhs=" << r.lhs->to_string(o.digits) << " rhs=" << r.rhs->to_string(o.digits)
          << " residual=" << r.residual->to_string(4) << " threshold=" << r.threshold->to_string(4) << ' '
          << to_string(r.status) << '\n';
    }
    out << summary << '\n';
  }
  return fail == 0 ? kExitOk : kExitVerifyFailed;
}

// ---- report ---------------------------------------------------------------

struct PaperValue {
  std::string name;
  PiPowerExact exact;
};

/// The sixteen headline values: zeta(2..8 even), B_0..B_7, and Gamma at
/// 3/2, 5/2, 7/2, -1/2.
inline std::vector<PaperValue> report_values() {
  std::vector<PaperValue> values;
  for (unsigned n = 1; n <= 4; ++n) values.push_back({"zeta(" + std::to_string(2 * n) + ")", zeta_even_exact(n)});
  const BernoulliTable b = bernoulli_table(7);
  for (std::size_t n = 0; n <= 7; ++n) values.push_back({"B_" + std::to_string(n), PiPowerExact(b[n])});
  for (const char* s : {"3/2", "5/2", "7/2", "-1/2"}) {
    values.push_back({std::string("Gamma(") + s + ")", gamma_exact(GammaArgument::parse(s))});
  }
  return values;
}

inline void cmd_report(const OutputOptions& o, std::ostream& out) {
  const auto values = report_values();
  if (o.format == "json") {
    Json j;
    j["values"] = Json::array();
    for (const auto& v : values) {
      j["values"].push_back(Json{{"name", v.name},
                                 {"exact", v.exact.to_string()},
                                 {"decimal", pi_power_eval(v.exact, o.precision).to_string(o.digits)}});
    }
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "name,exact,decimal\n";
    for (const auto& v : values) {
      out << csv_field(v.name) << ',' << v.exact.to_string() << ','
          << pi_power_eval(v.exact, o.precision).to_string(o.digits) << '\n';
    }
  } else {
    for (const auto& v : values) {
      out << v.name << " = " << v.exact.to_string() << '\n'
          << "  ~= " << pi_power_eval(v.exact, o.precision).to_string(o.digits) << '\n';
    }
  }
}

}  // namespace detail

/// Runs one command line. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zetalab: exact and numerical zeta, Bernoulli and Gamma values with identity checks", "zetalab"};
  app.require_subcommand(1);
  OutputOptions o;

  unsigned bernoulli_n = 0;
  auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_n");
  bern->add_option("n_max", bernoulli_n, "Largest index")->required();

  detail::ZetaRequest zreq;
  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta by exact form, Dirichlet series, or Euler product");
  zeta_cmd->add_option("--exact-even", zreq.exact_even, "n: exact zeta(2n)");
  zeta_cmd->add_option("--dirichlet", zreq.dirichlet, "s: partial Dirichlet sum");
  zeta_cmd->add_option("--euler-product", zreq.euler_product, "s: truncated Euler product");
  zeta_cmd->add_option("--imag", zreq.imag, "Imaginary part of s");
  zeta_cmd->add_option("--terms", zreq.terms, "Dirichlet terms")->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--prime-limit", zreq.prime_limit, "Largest prime bound for the Euler product");
  zeta_cmd->add_flag("--rigorous", zreq.rigorous, "Rigorous remaining-product bound for the Euler product");

  detail::GammaRequest greq;
  auto* gamma_cmd = app.add_subcommand("gamma", "Gamma function");
  gamma_cmd->add_option("s", greq.s, "Argument: integer, decimal, or p/q")->required();
  gamma_cmd->add_option("--method", greq.method, "auto, exact, gauss, or weierstrass")
      ->check(CLI::IsMember({"auto", "exact", "gauss", "weierstrass"}));
  gamma_cmd->add_option("--terms", greq.terms, "h for Gauss, n_terms for Weierstrass")->check(CLI::PositiveNumber);

  std::uint64_t euler_m = 0;
  bool corrected = false;
  auto* eg = app.add_subcommand("euler-gamma", "Euler's constant from H_m - log m");
  eg->add_option("m", euler_m, "Index m")->required()->check(CLI::PositiveNumber);
  eg->add_flag("--corrected", corrected, "Subtract 1/(2m)");

  detail::VerifyRequest vreq;
  auto* verify = app.add_subcommand("verify", "Check the identity suite against frozen thresholds");
  verify->add_option("--identities", vreq.identities, "Comma-separated identity names")->delimiter(',');
  verify->add_option("--grid", vreq.grid, "Comma-separated points: decimal, p/q, or multiples of pi");
  verify->add_option("--terms", vreq.terms, "Override every identity's truncation parameter")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", vreq.threads, "Worker threads (0 = hardware concurrency)");

  auto* report = app.add_subcommand("report", "The headline exact values with decimals");

  std::uint64_t prime_limit = 0;
  auto* primes = app.add_subcommand("primes", "Primes up to a limit");
  primes->add_option("limit", prime_limit, "Upper limit")->required();

  for (auto* cmd : {bern, zeta_cmd, gamma_cmd, eg, verify, report, primes}) detail::add_output_options(cmd, o);

  std::vector<const char*> argv{"zetalab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    detail::validate(o);
    if (bern->parsed()) detail::cmd_bernoulli(bernoulli_n, o, buffer);
    if (zeta_cmd->parsed()) detail::cmd_zeta(zreq, o, buffer);
    if (gamma_cmd->parsed()) detail::cmd_gamma(greq, o, buffer);
    if (eg->parsed()) detail::cmd_euler_gamma(euler_m, corrected, o, buffer);
    if (verify->parsed()) code = detail::cmd_verify(vreq, o, buffer, err);
    if (report->parsed()) detail::cmd_report(o, buffer);
    if (primes->parsed()) detail::cmd_primes(prime_limit, o, buffer);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << o.out_file << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace zetalab::cli
