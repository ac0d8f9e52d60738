#include <doctest.h>

#include <cmath>

#include "hdet/hurwitz.hpp"
#include "hdet/multigamma.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/verify.hpp"

using namespace hdet;

namespace {
const double kPi = 3.14159265358979323846;
double cnorm(CValue a, CValue b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("order-two lattice zeta at z = 1 telescopes to zeta(w-1)") {
  // sum_k (k+1)(1+k)^{-w} = zeta(w - 1)
  CValue w(3.5, 0.0);
  CValue lhs = barnes_zeta(2, w, CValue(1.0, 0.0));
  CValue rhs = hurwitz_zeta(w - 1.0, CValue(1.0, 0.0));
  CHECK(cnorm(lhs, rhs) < 1e-11);
  // frozen value zeta(5/2) = 1.3414872572509172
  CHECK(std::abs(lhs.real() - 1.3414872572509172) < 1e-11);
}

TEST_CASE("order one collapses to the normalized gamma") {
  // Gamma_1(z) = Gamma(z)/sqrt(2 pi): at z = 1/2 the log is -log(2)/2
  CValue lg = log_multigamma(1, 1, CValue(0.5, 0.0)).value;
  CHECK(std::abs(lg.real() - (-0.5 * std::log(2.0))) < 1e-11);
  CHECK(std::abs(lg.imag()) < 1e-12);
  CValue lg2 = log_multigamma(1, 1, CValue(2.5, 0.0)).value;
  CHECK(std::abs(lg2.real() -
                 (std::lgamma(2.5) - 0.5 * std::log(2.0 * kPi))) < 1e-11);
}

TEST_CASE("double-gamma layer matches the classical Barnes normalization") {
  // G(1) = G(2) = G(3) = 1, G(4) = 2
  CHECK(std::abs(log_vigneras_G(2, CValue(1.0, 0.0)).value.real()) < 1e-9);
  CHECK(std::abs(log_vigneras_G(2, CValue(2.0, 0.0)).value.real()) < 1e-9);
  CHECK(std::abs(log_vigneras_G(2, CValue(3.0, 0.0)).value.real()) < 1e-9);
  CHECK(std::abs(log_vigneras_G(2, CValue(4.0, 0.0)).value.real() -
                 std::log(2.0)) < 1e-9);
  // frozen log G(1/2) = log2/24 - log pi/4 + 1/8 - 3/2 log A
  CHECK(std::abs(log_vigneras_G(2, CValue(0.5, 0.0)).value.real() -
                 (-0.50543305448969538)) < 1e-9);
  // order one is the classical log-gamma
  CValue z(1.3, 0.7);
  CHECK(cnorm(log_vigneras_G(1, z).value, lgamma_complex(z)) < 1e-10);
}

TEST_CASE("multiple sine at order one is 2 sin(pi z)") {
  CHECK(std::abs(log_mult_sine(1, CValue(0.25, 0.0)).value.real() -
                 0.5 * std::log(2.0)) < 1e-10);
  CValue z(0.6, 0.2);
  CValue expect = std::log(2.0 * std::sin(kPi * z));
  CHECK(cnorm(log_mult_sine(1, z).value, expect) < 1e-10);
}

TEST_CASE("basic sine and cosine integrals at checkable points") {
  // degree-1 cosine is 2 cos(pi z): at z = 1/4 the log is log(2)/2
  CHECK(std::abs(log_basic_cosine(1, 0.25).value.real() -
                 0.5 * std::log(2.0)) < 1e-10);
  CHECK(std::abs(log_basic_cosine(1, 0.0).value.real() - std::log(2.0)) <
        1e-12);
  // degree-1 sine is 2 sin(pi z), computed by a regularized integral
  CHECK(std::abs(log_basic_sine(1, 0.3).value.real() -
                 std::log(2.0 * std::sin(kPi * 0.3))) < 1e-9);
  // higher degrees are normalized to 1 at the origin (log -> 0)
  CHECK(std::abs(log_basic_cosine(2, 1e-8).value.real()) < 1e-12);
}

TEST_CASE("gamma ladder and special values at the origin of the family") {
  // Gamma_n(z+1) = Gamma_n(z)/Gamma_{n-1}(z) with Gamma_0(z) = 1/z
  CValue z(0.8, 0.4);
  CValue lhs = log_multigamma(1, 1, z + CValue(1.0, 0.0)).value;
  CValue rhs = log_multigamma(1, 1, z).value + std::log(z);
  CHECK(cnorm(lhs, rhs) < 1e-10);
}

TEST_CASE("domain guards across the family") {
  CHECK_THROWS_AS(barnes_zeta(2, CValue(2.0, 0.0), CValue(1.0, 0.0)),
                  pole_error);
  CHECK_THROWS_AS(log_multigamma(1, 1, CValue(-0.5, 0.0)), domain_error);
  CHECK_THROWS_AS(log_mult_sine(1, CValue(1.5, 0.0)), domain_error);
  CHECK_THROWS_AS(log_basic_cosine(1, 0.6), domain_error);
  CHECK_THROWS_AS(log_basic_sine(2, 1.2), domain_error);
  CHECK_THROWS_AS(log_multigamma(0, 1, CValue(1.0, 0.0)), domain_error);
}

TEST_CASE("verification suite: multigamma identities all pass") {
  VerificationReport rep = run_suite("multigamma");
  for (const auto& c : rep.cases) {
    INFO(c.name, " residual=", c.residual, " at ", c.point);
    CHECK(c.passed);
  }
  CHECK(rep.cases_total() >= 10);
}
