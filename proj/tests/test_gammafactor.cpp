#include <doctest.h>

#include <cmath>

#include "hdet/gammafactor.hpp"
#include "hdet/hurwitz.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/verify.hpp"

using namespace hdet;

namespace {
double cnorm(CValue a, CValue b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("moment integral: direct quadrature equals the decomposition") {
  CValue w(2.0, 0.0);
  CHECK(cnorm(J_direct(1, w, 0.3), J_decomposed(1, w, 0.3)) < 1e-7);
  CValue wc(2.6, 0.8);
  CHECK(cnorm(J_direct(1, wc, 0.2), J_decomposed(1, wc, 0.2)) < 1e-7);
}

TEST_CASE("shifted-sum piece at w = 0 has the elementary value") {
  // J_{m,2}(0) = zeta(-m, 1/2) + t^{m+1}/(m+1); m = 1, t = 1/4:
  //   1/24 + (1/16)/2
  double t = 0.25;
  CValue got = J_m2_series(1, CValue(0.0, 0.0), t);
  CHECK(std::abs(got.real() - (1.0 / 24.0 + t * t / 2.0)) < 1e-12);
  CHECK(std::abs(got.imag()) < 1e-14);
  // the tangent piece vanishes identically at w = 0
  CHECK(std::abs(J_m1_beta_series(1, CValue(0.0, 0.0), t).real()) < 1e-14);
}

TEST_CASE("w-derivative at zero: closed form equals finite differences") {
  ToleranceConfig cfg;
  for (int m : {1, 3}) {
    double t = 0.3;
    CValue fd = numeric_dw(
        [&](CValue w) { return J_decomposed(m, w, t); }, CValue(0.0, 0.0),
        cfg);
    CHECK(cnorm(fd, J_dw0_closed(m, t)) < 1e-6);
  }
}

TEST_CASE("log-derivative remainder: series equals the closed evaluation") {
  for (int m : {1, 3}) {
    for (double t : {0.1, 0.25, 0.4}) {
      CHECK(cnorm(R_series(m, t, 0), R_closed(m, t)) < 1e-9);
    }
  }
  // explicit term count within range reproduces the auto-truncated sum
  CHECK(cnorm(R_series(1, 0.25, 200), R_series(1, 0.25, 0)) < 1e-12);
}

TEST_CASE("digamma moment integral: quadrature equals the closed form") {
  CHECK(cnorm(Phi_integral(1, 0.3, CValue(1.0, 0.0)),
              Phi_closed(1, 0.3, CValue(1.0, 0.0))) < 1e-8);
  CHECK(cnorm(Phi_integral(2, 0.4, CValue(0.5, 0.0)),
              Phi_closed(2, 0.4, CValue(0.5, 0.0))) < 1e-8);
}

TEST_CASE("depth-one gamma factor matches its explicit zeta-derivative form") {
  // log phi_1(s) = -2 t^2 - 4 t zd(0, s) + 4 zd(-1, s), t = s - 1/2
  CValue s(0.8, 0.0), t = s - 0.5;
  CValue expect = -2.0 * t * t -
                  4.0 * t * hurwitz_zeta_dw(CValue(0.0, 0.0), s) +
                  4.0 * hurwitz_zeta_dw(CValue(-1.0, 0.0), s);
  for (PhiForm f :
       {PhiForm::MilnorForm, PhiForm::BarnesForm, PhiForm::VignerasForm}) {
    CHECK(cnorm(log_phi(1, s, f).value, expect) < 1e-9);
  }
  CHECK(cnorm(log_phi_from_moments(1, 0.8).value, expect) < 1e-8);
}

TEST_CASE("three closed forms of the gamma factor agree at depth 2 and 3") {
  CValue s(0.72, 0.35);
  for (int r : {2, 3}) {
    CValue a = log_phi(r, s, PhiForm::MilnorForm).value;
    CValue b = log_phi(r, s, PhiForm::BarnesForm).value;
    CValue c = log_phi(r, s, PhiForm::VignerasForm).value;
    CHECK(cnorm(a, b) < 1e-8);
    CHECK(cnorm(a, c) < 1e-8);
  }
}

TEST_CASE("gamma factor functional equation holds inside the strip") {
  for (int r : {1, 2, 3}) {
    CHECK(std::abs(phi_fe_residual(r, CValue(0.3, 0.4))) < 1e-7);
  }
  CHECK_THROWS_AS(phi_fe_residual(1, CValue(1.5, 0.0)), domain_error);
}

TEST_CASE("argument guards on the moment layer") {
  CHECK_THROWS_AS(J_direct(2, CValue(3.0, 0.0), 0.3), domain_error);
  CHECK_THROWS_AS(J_direct(1, CValue(0.5, 0.0), 0.3), domain_error);
  CHECK_THROWS_AS(J_decomposed(1, CValue(2.0, 0.0), 0.7), domain_error);
  CHECK_THROWS_AS(R_series(2, 0.3, 0), domain_error);
  CHECK_THROWS_AS(log_phi(0, CValue(0.8, 0.0), PhiForm::BarnesForm),
                  domain_error);
}

TEST_CASE("verification suite: gamma-factor identities all pass") {
  VerificationReport rep = run_suite("gammafactor");
  for (const auto& c : rep.cases) {
    INFO(c.name, " residual=", c.residual, " at ", c.point);
    CHECK(c.passed);
  }
  CHECK(rep.cases_total() >= 10);
}
