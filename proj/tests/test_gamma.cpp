#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetalab/gamma.hpp"

namespace zetalab {
namespace {

GammaArgument arg(const char* text) { return GammaArgument::parse(text); }
ApproxReal sqrt_pi(long p = kDefaultPrecision) { return sqrt(pi(p)); }

TEST(GammaArgument, Classification) {
  EXPECT_EQ(arg("5").classification(), GammaClass::positive_integer);
  EXPECT_EQ(arg("5/2").classification(), GammaClass::half_integer);
  EXPECT_EQ(arg("-1/2").classification(), GammaClass::half_integer);
  EXPECT_EQ(arg("0.25").classification(), GammaClass::generic_real);
  EXPECT_EQ(arg("-2.5").classification(), GammaClass::half_integer);
}

TEST(GammaArgument, PolesRejected) {
  for (const char* pole : {"0", "-1", "-7", "0/3"}) EXPECT_THROW(arg(pole), DomainError) << pole;
}

TEST(GammaExact, ListedValues) {
  EXPECT_EQ(gamma_exact(arg("5/2")), PiPowerExact(make_rational(3, 4), 0, true));
  EXPECT_EQ(gamma_exact(arg("7/2")), PiPowerExact(make_rational(15, 8), 0, true));
  EXPECT_EQ(gamma_exact(arg("5")), PiPowerExact(BigRational(24)));
  EXPECT_EQ(gamma_exact(arg("-1/2")), PiPowerExact(BigRational(-2), 0, true));
  EXPECT_EQ(gamma_exact(arg("3/2")), PiPowerExact(make_rational(1, 2), 0, true));
  EXPECT_EQ(gamma_exact(arg("1/2")), PiPowerExact(BigRational(1), 0, true));
  EXPECT_EQ(gamma_exact(arg("2.5")).to_string(), "3/4 * sqrt(pi)");
}

TEST(GammaExact, OutsideClosedFormsIsDomainError) {
  EXPECT_THROW(gamma_exact(arg("-3/2")), DomainError);
  EXPECT_THROW(gamma_exact(arg("0.25")), DomainError);
}

TEST(GammaExact, FactorialsThroughTwenty) {
  for (unsigned n = 1; n <= 20; ++n) {
    const PiPowerExact g = gamma_exact(GammaArgument(BigRational(static_cast<long>(n))));
    EXPECT_EQ(g, PiPowerExact(BigRational(oracle::factorial_loop(n - 1)))) << n;
  }
}

TEST(GammaExact, HalfIntegerLadder) {
  for (long n = 0; n <= 20; ++n) {
    const BigRational lower = make_rational(2 * n + 1, 2);
    const BigRational upper = make_rational(2 * n + 3, 2);
    EXPECT_EQ(gamma_exact(GammaArgument(upper)), gamma_exact(GammaArgument(lower)) * lower) << n;
  }
  // Gamma(1/2) = (-1/2) Gamma(-1/2)
  EXPECT_EQ(gamma_exact(arg("1/2")), gamma_exact(arg("-1/2")) * make_rational(-1, 2));
}

TEST(GammaExact, AgreesWithMpfr) {
  for (const char* s : {"1/2", "3/2", "-1/2", "21/2", "7", "41/2"}) {
    const ApproxReal mine = pi_power_eval(gamma_exact(arg(s)), 128);
    const ApproxReal ref = oracle::mpfr_gamma(arg(s).approx(192));
    EXPECT_LE(abs(mine - ref), ulp(mine) * 2) << s;
  }
}

TEST(GammaGauss, SmallProduct) {
  const BoundedValue r = gamma_gauss(ApproxReal(1, 128), 4);
  const ApproxReal four_fifths = ApproxReal(4, 128) / 5;
  EXPECT_LE(abs(r.value - four_fifths), ulp(four_fifths));
  EXPECT_EQ(r.error.kind(), BoundKind::heuristic);
}

TEST(GammaGauss, ApproachesOneAtOne) {
  const BoundedValue r = gamma_gauss(ApproxReal(1, 128), 100000);
  EXPECT_LT(abs(r.value - 1), ApproxReal::from_double(2e-5));
}

TEST(GammaGauss, HalfAtTenThousand) {
  const BoundedValue r = gamma_gauss(ApproxReal::from_double(0.5), 10000);
  EXPECT_LT(abs(r.value - sqrt_pi()), ApproxReal::from_double(1e-3));
}

TEST(GammaGauss, DifferencingDecays) {
  const ApproxReal half = ApproxReal::from_double(0.5);
  ApproxReal previous = ApproxReal::from_double(1e9);
  for (std::uint64_t h : {100U, 1000U, 10000U}) {
    const ApproxReal gap = abs(gamma_gauss(half, h).value - gamma_gauss(half, 2 * h).value);
    EXPECT_LT(gap, previous) << h;
    previous = gap;
  }
}

TEST(GammaGauss, DomainGuard) {
  EXPECT_THROW(gamma_gauss(ApproxReal(0L, 64), 10), DomainError);
  EXPECT_THROW(gamma_gauss(ApproxReal::from_double(-0.5), 10), DomainError);
  EXPECT_THROW(gamma_gauss(ApproxReal(1, 64), 0), DomainError);
}

TEST(GammaWeierstrass, Examples) {
  const BoundedValue one = gamma_weierstrass(ApproxReal(1, 128), 100000);
  EXPECT_LT(abs(one.value - 1), ApproxReal::from_double(1e-5));

  const BoundedValue three_halves = gamma_weierstrass(ApproxReal::from_double(1.5), 10000);
  const ApproxReal target = sqrt_pi() / 2;
  EXPECT_LT(abs(three_halves.value - target), ApproxReal::from_double(1e-3));
  EXPECT_LE(abs(three_halves.value - target), three_halves.error.bound());

  const BoundedValue neg_half = gamma_weierstrass(ApproxReal::from_double(-0.5), 10000);
  EXPECT_LT(abs(neg_half.value + sqrt_pi() * 2), ApproxReal::from_double(1e-2));
  EXPECT_LE(abs(neg_half.value + sqrt_pi() * 2), neg_half.error.bound());
}

TEST(GammaWeierstrass, PolesRejected) {
  EXPECT_THROW(gamma_weierstrass(ApproxReal(0L, 64), 10), DomainError);
  EXPECT_THROW(gamma_weierstrass(ApproxReal(-3, 64), 10), DomainError);
}

TEST(GammaRoutes, GaussWeierstrassAgreement) {
  for (const ApproxReal& s : {ApproxReal::from_double(0.25), ApproxReal::from_double(0.5),
                              ApproxReal::from_double(1.5), ApproxReal::from_double(2.5), pi(128)}) {
    const BoundedValue g = gamma_gauss(s, 10000);
    const BoundedValue w = gamma_weierstrass(s, 10000);
    EXPECT_LE(abs(g.value - w.value), g.error.bound() + w.error.bound()) << s.to_string();
    const ApproxReal ref = oracle::mpfr_gamma(s);
    EXPECT_LE(abs(w.value - ref), w.error.bound()) << s.to_string();
  }
}

TEST(EulerConstant, Examples) {
  const EulerGamma one = euler_constant(1);
  EXPECT_EQ(one.value, ApproxReal(1, 128));
  EXPECT_EQ(one.m_used, 1U);
  EXPECT_EQ(one.error.kind(), BoundKind::heuristic);

  const ApproxReal expected = ApproxReal::from_double(1.5) - log(ApproxReal(2, 128));
  EXPECT_LE(abs(euler_constant(2).value - expected), ulp(expected));
  EXPECT_EQ(euler_constant(2).value.to_string(6), "0.806853");

  EXPECT_THROW(euler_constant(0), DomainError);
}

TEST(EulerConstant, CorrectedMillionMatchesRichardsonOracle) {
  const ApproxReal reference = oracle::richardson_gamma(100000, 128);
  const EulerGamma g = euler_constant(1000000, 128, true);
  EXPECT_LT(abs(g.value - reference), ApproxReal::from_double(5e-7));
  EXPECT_EQ(g.value.to_string(6), "0.577216");
  // The Richardson oracle itself against MPFR's constant.
  EXPECT_LT(abs(reference - oracle::mpfr_euler_gamma(128)), ApproxReal::from_double(1e-12));
}

TEST(EulerConstant, UncorrectedIsPlainDifference) {
  const EulerGamma plain = euler_constant(1000);
  const EulerGamma corrected = euler_constant(1000, kDefaultPrecision, true);
  const ApproxReal shift = ApproxReal(1, 128) / 2000;
  // Each value is rounded once at the scale of gamma, not of the shift.
  EXPECT_LE(abs(plain.value - corrected.value - shift), ulp(plain.value) * 2);
}

TEST(EulerConstant, GapsShrink) {
  for (std::uint64_t m : {100U, 1000U, 5000U}) {
    const ApproxReal half = euler_constant(m / 2).value;
    const ApproxReal full = euler_constant(m).value;
    const ApproxReal twice = euler_constant(2 * m).value;
    EXPECT_LT(abs(twice - full), abs(full - half)) << m;
  }
}

TEST(GammaDispatcher, Examples) {
  EXPECT_EQ(gamma(arg("4")).value, ApproxReal(6, 128));
  const BoundedValue g = gamma(arg("3/2"));
  EXPECT_LE(abs(g.value - sqrt_pi() / 2), ulp(g.value));
  EXPECT_EQ(g.value.to_string(9), "0.886226925");
  EXPECT_THROW(gamma(arg("0")), DomainError);
}

TEST(GammaDispatcher, ShiftsNegativeArguments) {
  for (const char* s : {"-3/2", "-5/2", "-0.3", "-4.75", "7.25", "0.1"}) {
    const BoundedValue g = gamma(arg(s));
    const ApproxReal ref = oracle::mpfr_gamma(arg(s).approx(160));
    EXPECT_LE(abs(g.value - ref), g.error.bound()) << s;
  }
  EXPECT_THROW(gamma(arg("2000000.5")), DomainError);
}

TEST(GammaDispatcher, RecursionOnGrid) {
  for (long q = 1; q <= 20; ++q) {
    if (q % 4 == 0) continue;
    const BigRational s = make_rational(q, 4);
    const BoundedValue a = gamma(GammaArgument(s + BigRational(1)));
    const BoundedValue b = gamma(GammaArgument(s));
    const ApproxReal sb = b.value * s;
    const ApproxReal budget = a.error.bound() + b.error.bound() * s + ulp(a.value) * 4;
    EXPECT_LE(abs(a.value - sb), budget) << s.to_string();
  }
}

}  // namespace
}  // namespace zetalab
