#include <doctest.h>

#include <cmath>
#include <complex>

#include "hdet/numkernel.hpp"
#include "hdet/rational.hpp"

using namespace hdet;

namespace {
const double kPi = 3.14159265358979323846;
double cnorm(CValue a, CValue b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("bernoulli numbers match the classical table") {
  CHECK(bernoulli_number(0) == Rat(1));
  CHECK(bernoulli_number(1) == Rat(-1) / Rat(2));
  CHECK(bernoulli_number(2) == Rat(1) / Rat(6));
  CHECK(bernoulli_number(4) == Rat(-1) / Rat(30));
  CHECK(bernoulli_number(3) == Rat(0));
  CHECK(bernoulli_number(12) == Rat(-691) / Rat(2730));
}

TEST_CASE("bernoulli polynomials: B_3 and the reflection B_m(1-z)") {
  // B_3(z) = z^3 - 3/2 z^2 + 1/2 z
  const RPoly& b3 = bernoulli_poly_exact(3);
  CHECK(b3.degree() == 3);
  CHECK(b3.coeff(3) == Rat(1));
  CHECK(b3.coeff(2) == Rat(-3) / Rat(2));
  CHECK(b3.coeff(1) == Rat(1) / Rat(2));
  CHECK(b3.coeff(0) == Rat(0));
  // reflection at a rational point: B_m(1-z) = (-1)^m B_m(z)
  for (int m = 0; m <= 6; ++m) {
    Rat z(3, 7);
    Rat lhs = bernoulli_poly_exact(m).eval_rat(Rat(1) - z);
    Rat rhs = bernoulli_poly_exact(m).eval_rat(z);
    if (m % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
  // complex evaluation agrees with the exact polynomial
  CValue z(0.3, 0.4);
  CHECK(cnorm(bernoulli_poly(3, z), b3.eval(z)) < 1e-15);
}

TEST_CASE("signed Stirling numbers of the first kind") {
  CHECK(stirling_first_signed(4, 2) == Int(11));
  CHECK(stirling_first_signed(5, 1) == Int(24));
  CHECK(stirling_first_signed(4, 3) == Int(-6));
  CHECK(stirling_first_signed(3, 3) == Int(1));
  CHECK(stirling_first_signed(3, 0) == Int(0));
  CHECK(stirling_first_signed(3, 5) == Int(0));
}

TEST_CASE("harmonic numbers and partial ranges") {
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(5) == Rat(137) / Rat(60));
  CHECK(harmonic(0) == Rat(0));
  CHECK(harmonic_range(3, 5) == Rat(47) / Rat(60));
  CHECK(harmonic_range(1, 5) == harmonic(5));
}

TEST_CASE("tangent series coefficients against the Bernoulli formula") {
  CHECK(tan_series_coeff(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tan_series_coeff(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(tan_series_coeff(2) == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(tan_series_coeff(3) == doctest::Approx(17.0 / 315.0).epsilon(1e-15));
  // numeric sanity: the truncated series reproduces tan(0.3)
  double x = 0.3, acc = 0.0, xp = x;
  for (int j = 0; j <= 12; ++j) {
    acc += tan_series_coeff(j) * xp;
    xp *= x * x;
  }
  CHECK(acc == doctest::Approx(std::tan(x)).epsilon(1e-14));
}

TEST_CASE("digamma at classical points") {
  const double euler_gamma = 0.57721566490153286061;
  CHECK(std::abs(digamma(CValue(1.0, 0.0)).real() + euler_gamma) < 1e-12);
  // psi(1/2) = -gamma - 2 log 2
  CHECK(std::abs(digamma(CValue(0.5, 0.0)).real() -
                 (-1.9635100260214234794)) < 1e-12);
  CHECK(std::abs(digamma(CValue(1.0, 0.0)).imag()) < 1e-13);
  // recurrence psi(z+1) = psi(z) + 1/z at a complex point
  CValue z(0.7, 1.3);
  CHECK(cnorm(digamma(z + CValue(1.0, 0.0)), digamma(z) + 1.0 / z) < 1e-12);
}

TEST_CASE("complex log-gamma against the real lgamma and the recurrence") {
  CHECK(std::abs(lgamma_complex(CValue(0.5, 0.0)).real() -
                 0.5 * std::log(kPi)) < 1e-13);
  for (double x : {0.25, 1.0, 2.5, 7.0}) {
    CHECK(std::abs(lgamma_complex(CValue(x, 0.0)).real() - std::lgamma(x)) <
          1e-12);
  }
  CValue z(0.4, 0.9);
  CValue lhs = lgamma_complex(z + CValue(1.0, 0.0));
  CValue rhs = lgamma_complex(z) + std::log(z);
  CHECK(cnorm(lhs, rhs) < 1e-12);
}

TEST_CASE("branch-corrected logarithm: cut membership and exponential") {
  // lambda = 0: branch points at 0 and 1; cut down from the left point,
  // up from the right one.
  CHECK(on_branch_cut(0.0, CValue(0.0, -0.5)));
  CHECK(!on_branch_cut(0.0, CValue(0.0, 0.5)));
  CHECK(on_branch_cut(0.0, CValue(1.0, 0.5)));
  CHECK(!on_branch_cut(0.0, CValue(1.0, -0.5)));
  // lambda >= 1/4: cuts live on the critical line beyond +-sqrt(lambda-1/4)
  CHECK(on_branch_cut(1.25, CValue(0.5, 1.5)));
  CHECK(!on_branch_cut(1.25, CValue(0.5, 0.5)));

  // real point right of both branch points: plain logarithm
  CValue l = branch_log_j(0.0, CValue(2.0, 0.0));
  CHECK(std::abs(l.real() - std::log(2.0)) < 1e-14);
  CHECK(std::abs(l.imag()) < 1e-14);
  // exp(l) == lambda - s(1-s) off the cuts
  for (double lam : {0.0, 0.21, 0.25, 2.0}) {
    CValue s(0.8, 0.6);
    CValue val = lam - s * (CValue(1.0, 0.0) - s);
    CHECK(cnorm(std::exp(branch_log_j(lam, s)), val) < 1e-12);
  }
  CHECK_THROWS_AS(branch_log_j(0.0, CValue(1.0, 0.5)), branch_cut_error);
  CHECK_THROWS_AS(branch_log_j(-1.0, CValue(2.0, 0.0)), domain_error);
}

TEST_CASE("eval point carries t = s - 1/2 and region tags") {
  EvalPoint p = make_eval_point(CValue(2.0, 1.0), {0.0});
  CHECK(cnorm(p.t, CValue(1.5, 1.0)) < 1e-15);
  CHECK(p.right_of_center);
  CHECK(p.off_real_ray);
  CHECK(p.off_spectral_cuts);
  EvalPoint q = make_eval_point(CValue(1.0, 0.5), {0.0});
  CHECK(!q.off_spectral_cuts);
  EvalPoint r = make_eval_point(CValue(0.3, 0.0));
  CHECK(!r.right_of_center);
  CHECK(!r.off_real_ray);
  CHECK(r.off_spectral_cuts);
}

TEST_CASE("adaptive quadrature reproduces closed-form integrals") {
  ToleranceConfig cfg;
  double eb = 0.0;
  // int_0^1 x^3 = 1/4
  CValue a = quadrature([](double x) { return CValue(x * x * x, 0.0); }, 0.0,
                        1.0, cfg, &eb);
  CHECK(std::abs(a.real() - 0.25) < 1e-13);
  CHECK(eb >= 0.0);
  // int_0^pi sin = 2
  CValue b = quadrature([](double x) { return CValue(std::sin(x), 0.0); },
                        0.0, kPi, cfg);
  CHECK(std::abs(b.real() - 2.0) < 1e-12);
  // oscillatory complex integrand: int_0^1 e^{2 pi i x} e^{2 pi x} dx
  //   = (e^{2 pi (1+i)} - 1) / (2 pi (1 + i)) = (e^{2 pi} - 1)/(2 pi (1+i))
  CValue c = quadrature(
      [](double x) {
        return std::exp(CValue(2.0 * kPi * x, 2.0 * kPi * x));
      },
      0.0, 1.0, cfg);
  CValue expect = (std::exp(2.0 * kPi) - 1.0) / (2.0 * kPi * CValue(1.0, 1.0));
  CHECK(cnorm(c, expect) / std::abs(expect) < 1e-12);
  // cross-check against the fixed-grid Simpson oracle
  CValue s = simpson_oracle([](double x) { return CValue(std::sin(x), 0.0); },
                            0.0, kPi, 2000);
  CHECK(std::abs(s.real() - 2.0) < 1e-10);
}

TEST_CASE("numerical differentiation is high-order and reports its order") {
  ToleranceConfig cfg;
  FDReport rep;
  CValue d = numeric_dw([](CValue w) { return std::exp(w); },
                        CValue(1.0, 0.0), cfg, &rep);
  CHECK(std::abs(d.real() - std::exp(1.0)) < 1e-9);
  // base sequence is second order; Richardson raises the returned value only
  CHECK(rep.observed_order > 1.5);
  // complex direction: d/dw w^3 at 2+i is 3(2+i)^2
  CValue w0(2.0, 1.0);
  CValue d3 = numeric_dw([](CValue w) { return w * w * w; }, w0, cfg);
  CHECK(cnorm(d3, 3.0 * w0 * w0) < 1e-8);
}

TEST_CASE("compensated summation keeps cancellation error tiny") {
  KahanSum acc;
  for (int i = 0; i < 10; ++i) acc.add(CValue(0.1, -0.1));
  CHECK(std::abs(acc.total().real() - 1.0) < 1e-15);
  CHECK(std::abs(acc.total().imag() + 1.0) < 1e-15);
  CHECK(acc.abs_sum() == doctest::Approx(10.0 * std::abs(CValue(0.1, -0.1))));
}

TEST_CASE("exact binomials, factorials, and the rational binomial") {
  CHECK(binom(5, 2) == Int(10));
  CHECK(binom(-1, 3) == Int(-1));
  CHECK(binom(4, 7) == Int(0));
  CHECK(binom(4, -1) == Int(0));
  CHECK(factorial(6) == Int(720));
  CHECK(double_factorial(7) == Int(105));
  CHECK(double_factorial(8) == Int(384));
  // binom(1/2, 2) = (1/2)(-1/2)/2 = -1/8
  CHECK(binom_rat(Rat(1) / Rat(2), 2) == Rat(-1) / Rat(8));
}
