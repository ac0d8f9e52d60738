#include <doctest.h>

#include <string>

#include "hdet/numkernel.hpp"
#include "hdet/polycoeff.hpp"
#include "hdet/rational.hpp"
#include "hdet/verify.hpp"

using namespace hdet;

namespace {
Rat frac(long n, long d) { return Rat(n) / Rat(d); }
// Polynomial from ascending coefficients c0 + c1 x + c2 x^2 + ...
RPoly tpoly(std::initializer_list<Rat> cs) {
  RPoly p;
  int k = 0;
  for (const Rat& c : cs) p += RPoly::monomial(c, k++);
  return p;
}
}  // namespace

TEST_CASE("leading constants of the gamma-factor exponent") {
  CHECK(C_const(1) == Rat(-2));
  CHECK(C_const(2) == frac(-2, 3));
  CHECK(C_const(3) == frac(-16, 45));
}

TEST_CASE("zeta-derivative weights D_r(k) and their reduced form") {
  CHECK(D_coeff(1, 1) == Rat(-4));
  CHECK(D_coeff(1, 2) == Rat(4));
  CHECK(D_coeff(2, 2) == Rat(-8));
  CHECK(D_coeff(2, 3) == Rat(12));
  CHECK(D_coeff(2, 4) == Rat(-4));
  CHECK(D_coeff(2, 1) == Rat(0));
  CHECK(D_coeff(2, 5) == Rat(0));
  CHECK(D_tilde(2, 2) == Rat(4));
  CHECK(D_tilde(2, 4) == Rat(-4));
  CHECK(D_tilde(3, 1) == Rat(0));
  CHECK(D_tilde(3, 3) == Rat(0));
}

TEST_CASE("shift-basis coefficients c_{r,j} and the expansion they solve") {
  // (T + z)^0 = c_{1,1}(z): the depth-1 coefficient is the constant 1
  CHECK(c_poly(1, 1) == RPoly(Rat(1)));
  // depth 2: (T + z) = (z - 1) + 1 * (T + 1)
  CHECK(c_poly(2, 1) == tpoly({Rat(-1), Rat(1)}));
  CHECK(c_poly(2, 2) == RPoly(Rat(1)));
  // coefficients above the depth vanish
  CHECK(c_poly(2, 3).is_zero());
  CHECK(c_poly(3, 5).is_zero());
  // the closed form and the recursion agree
  for (int r = 1; r <= 6; ++r)
    for (int j = 1; j <= r; ++j) CHECK(c_poly(r, j) == c_poly_recursive(r, j));
}

TEST_CASE("printed gamma-factor exponents for depths one to three") {
  CHECK(alpha_poly(1, 1) == RPoly(Rat(-2)));
  CHECK(alpha_poly(1, 2) == RPoly(Rat(4)));

  CHECK(alpha_poly(2, 1) == tpoly({frac(1, 2), Rat(0), Rat(-2)}));
  CHECK(alpha_poly(2, 2) == tpoly({Rat(-13), Rat(0), Rat(4)}));
  CHECK(alpha_poly(2, 3) == RPoly(Rat(36)));
  CHECK(alpha_poly(2, 4) == RPoly(Rat(-24)));

  CHECK(alpha_poly(3, 1) ==
        tpoly({frac(-1, 8), Rat(0), Rat(1), Rat(0), Rat(-2)}));
  CHECK(alpha_poly(3, 2) ==
        tpoly({frac(121, 4), Rat(0), Rat(-26), Rat(0), Rat(4)}));
  CHECK(alpha_poly(3, 3) == tpoly({Rat(-330), Rat(0), Rat(72)}));
  CHECK(alpha_poly(3, 4) == tpoly({Rat(1020), Rat(0), Rat(-48)}));
  CHECK(alpha_poly(3, 5) == RPoly(Rat(-1200)));
  CHECK(alpha_poly(3, 6) == RPoly(Rat(480)));

  // both construction paths produce the same family
  for (int r = 1; r <= 4; ++r)
    for (int j = 1; j <= 2 * r; ++j)
      CHECK(alpha_poly(r, j) == alpha_poly_via_moments(r, j));
}

TEST_CASE("printed complete-zeta exponents (palindromic family)") {
  CHECK(alpha_hat_poly(1, 0) == RPoly(Rat(2)));
  CHECK(alpha_hat_poly(1, 1) == RPoly(Rat(2)));

  CHECK(alpha_hat_poly(2, 0) == tpoly({frac(-1, 2), Rat(0), Rat(2)}));
  CHECK(alpha_hat_poly(2, 1) == tpoly({frac(-23, 2), Rat(0), Rat(-2)}));
  CHECK(alpha_hat_poly(2, 2) == alpha_hat_poly(2, 1));
  CHECK(alpha_hat_poly(2, 3) == alpha_hat_poly(2, 0));

  CHECK(alpha_hat_poly(3, 0) ==
        tpoly({frac(1, 8), Rat(0), Rat(-1), Rat(0), Rat(2)}));
  CHECK(alpha_hat_poly(3, 1) ==
        tpoly({frac(237, 8), Rat(0), Rat(-21), Rat(0), Rat(-6)}));
  CHECK(alpha_hat_poly(3, 2) ==
        tpoly({frac(841, 4), Rat(0), Rat(22), Rat(0), Rat(4)}));
  for (int l = 0; l <= 5; ++l)
    CHECK(alpha_hat_poly(3, l) == alpha_hat_poly(3, 5 - l));
}

TEST_CASE("printed double-gamma-route exponents") {
  CHECK(beta_poly(1, 0) == tpoly({Rat(0), Rat(-4)}));
  CHECK(beta_poly(1, 1) == RPoly(Rat(4)));
  CHECK(beta_poly(2, 0).is_zero());
  CHECK(beta_poly(2, 1) == tpoly({Rat(0), Rat(0), Rat(-8)}));
  CHECK(beta_poly(2, 2) == tpoly({Rat(0), Rat(12)}));
  CHECK(beta_poly(2, 3) == RPoly(Rat(-4)));
  CHECK(beta_poly(3, 2) == tpoly({Rat(0), Rat(0), Rat(0), Rat(-16)}));
  CHECK(beta_poly(3, 5) == RPoly(Rat(4)));
}

TEST_CASE("generalized Bernoulli layer collapses to the classical one") {
  for (int m = 0; m <= 8; ++m) {
    RPoly nb = barnes_bernoulli(1, m);
    // degree m polynomial agreeing with B_m at rational points
    CHECK(nb.eval_rat(frac(1, 3)) ==
          bernoulli_poly_exact(m).eval_rat(frac(1, 3)));
  }
  // order-n layer has degree m + n - 1
  CHECK(barnes_bernoulli(3, 2).degree() == 4);
}

TEST_CASE("multiplicity reports: consistency and the depth-one match") {
  MultiplicityReport rep = multiplicity_report(1, 2, 2);
  CHECK(rep.matches_a);  // depth one: constant 2(g-1)(2k+1) both ways
  CHECK(rep.defining == RPoly(Rat(10)));
  MultiplicityReport rep2 = multiplicity_report(2, 1, 2);
  // defining sum = 2(g-1)(2k+1)(t^2 - (k+1/2)^2)^{r-1}; r=2,k=1,g=2:
  //   6 t^2 - 27/2
  CHECK(rep2.defining == tpoly({frac(-27, 2), Rat(0), Rat(6)}));
  CHECK(rep2.matches_a == (rep2.defining == rep2.form_a));
  CHECK(rep2.matches_b == (rep2.defining == rep2.form_b));
}

TEST_CASE("family dump renders exact fractions") {
  std::string d = dump_family(PolyFamily::alpha, 2, 4);
  CHECK(d.find("36") != std::string::npos);
  CHECK(d.find("-24") != std::string::npos);
  std::string c = dump_family(PolyFamily::c, 3, 3);
  CHECK(!c.empty());
}

TEST_CASE("verification suite: combinatorial identities all pass") {
  VerificationReport rep = run_suite("combinatorics");
  for (const auto& c : rep.cases) {
    INFO(c.name, " residual=", c.residual, " at ", c.point);
    CHECK(c.passed);
  }
  CHECK(rep.cases_total() >= 15);
}
