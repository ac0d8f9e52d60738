#include <doctest.h>

#include <cmath>

#include "hdet/hurwitz.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/verify.hpp"

using namespace hdet;

namespace {
const double kPi = 3.14159265358979323846;
double cnorm(CValue a, CValue b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("hurwitz zeta at classical anchor points") {
  // zeta(2, 1) = pi^2/6
  CHECK(std::abs(hurwitz_zeta(CValue(2.0, 0.0), CValue(1.0, 0.0)).real() -
                 kPi * kPi / 6.0) < 1e-12);
  // zeta(-1, 1/2) = 1/24
  CHECK(std::abs(hurwitz_zeta(CValue(-1.0, 0.0), CValue(0.5, 0.0)).real() -
                 1.0 / 24.0) < 1e-12);
  // zeta(0, z) = 1/2 - z
  CHECK(std::abs(hurwitz_zeta(CValue(0.0, 0.0), CValue(0.7, 0.0)).real() -
                 (-0.2)) < 1e-12);
  // shift: zeta(w, z) - zeta(w, z+1) = z^{-w}
  CValue w(1.7, 0.4), z(0.8, 0.3);
  CValue lhs = hurwitz_zeta(w, z) - hurwitz_zeta(w, z + CValue(1.0, 0.0));
  CHECK(cnorm(lhs, std::pow(z, -w)) < 1e-12);
}

TEST_CASE("w-derivative at the classical points") {
  // d/dw zeta(w, 1) at w = 0 is -log(2 pi)/2
  CHECK(std::abs(hurwitz_zeta_dw(CValue(0.0, 0.0), CValue(1.0, 0.0)).real() -
                 (-0.91893853320467274178)) < 1e-11);
  // frozen zeta'(-l) values (independent multiprecision oracle)
  CHECK(std::abs(zeta_prime_neg(1).real() - (-0.16542114370045092921)) <
        1e-11);
  CHECK(std::abs(zeta_prime_neg(2).real() - (-0.03044845705839327078)) <
        1e-11);
  CHECK(std::abs(zeta_prime_neg(3).real() - 0.00537857635777430114) < 1e-11);
  // half-argument derivative: d/dw zeta(w,1/2) = 2^w log2 zeta(w)
  //   + (2^w - 1) zeta'(w), frozen at w = -1: 0.05382943932689441
  CHECK(std::abs(hurwitz_zeta_dw(CValue(-1.0, 0.0), CValue(0.5, 0.0)).real() -
                 0.05382943932689441) < 1e-11);
}

TEST_CASE("odd zeta values at the half shift") {
  // zeta(3, 1/2) = 7 zeta(3)
  CHECK(std::abs(odd_zeta_half(1).real() - 7.0 * 1.2020569031595942854) <
        1e-12);
  // general scaling: zeta(2j+1, 1/2) = (2^{2j+1} - 1) zeta(2j+1)
  CValue direct = hurwitz_zeta(CValue(5.0, 0.0), CValue(0.5, 0.0));
  CHECK(cnorm(odd_zeta_half(2), direct) < 1e-12);
}

TEST_CASE("plan changes do not move the value") {
  EulerMaclaurinPlan coarse{18, 8}, fine{40, 16};
  CValue w(-2.3, 1.1), z(0.6, -0.4);
  CHECK(cnorm(hurwitz_zeta(w, z, coarse), hurwitz_zeta(w, z, fine)) < 1e-10);
  CHECK(cnorm(hurwitz_zeta_dw(w, z, coarse), hurwitz_zeta_dw(w, z, fine)) <
        1e-9);
}

TEST_CASE("domain guards: pole at w = 1, left half-plane z, bad indices") {
  CHECK_THROWS_AS(hurwitz_zeta(CValue(1.0, 0.0), CValue(1.0, 0.0)),
                  pole_error);
  CHECK_THROWS_AS(hurwitz_zeta(CValue(2.0, 0.0), CValue(-1.0, 0.0)),
                  domain_error);
  CHECK_THROWS_AS(hurwitz_zeta_dw(CValue(2.0, 0.0), CValue(0.0, 0.0)),
                  domain_error);
  CHECK_THROWS_AS(odd_zeta_half(0), domain_error);
}

TEST_CASE("verification suite: hurwitz identities all pass") {
  VerificationReport rep = run_suite("hurwitz");
  for (const auto& c : rep.cases) {
    INFO(c.name, " residual=", c.residual, " at ", c.point);
    CHECK(c.passed);
  }
  CHECK(rep.cases_total() >= 10);
}
