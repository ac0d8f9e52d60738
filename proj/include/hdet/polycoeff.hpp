// Exact rational combinatorics: every coefficient polynomial and constant of
// the gamma-factor and zeta-assembly layer, plus the multiplicity-sum oracle.
#ifndef HDET_POLYCOEFF_HPP
#define HDET_POLYCOEFF_HPP

#include <string>

#include "hdet/rpoly.hpp"

namespace hdet {

// Polynomial families cached in the coefficient table.
enum class PolyFamily { c, b, alpha, alpha_hat, beta, barnes_bernoulli };

// c_{r,j}(z) = sum_{l=0}^{j-1} C(j-1,l) (-1)^l (z-l-1)^{r-1}.
RPoly c_poly(int r, int j);
// Same polynomial by the two-term recursion
// c_{r,j}(z) = (z-1) c_{r-1,j}(z) + (j-1) c_{r-1,j-1}(z-1)  (test path).
RPoly c_poly_recursive(int r, int j);

// b_{n,k}(z): degree n-1-k, defined through signed Stirling numbers so that
// C(j+n-1, n-1) = sum_k b_{n,k}(z) (j+z)^k. Out-of-range k: zero polynomial.
RPoly b_poly(int n, int k);

// C_r = sum_{l=0}^{r-1} C(r-1,l) (-1)^l/(l+1) (H(l) - 2H(2l+1)), exact.
Rat C_const(int r);

// D_r(k) = sum_l 4 (-1)^{l+k} C(r-1,l) C(2l+1,k-1); 0 outside 1 <= k <= 2r.
Rat D_coeff(int r, int k);

// D~_{r,p} = sum_{k=p}^{2r} C(k-1,k-p) D_r(k); 0 outside 1 <= p <= 2r.
Rat D_tilde(int r, int p);

// alpha_{r,j}(t) = 4 sum_{l} C(r-1,l-1) (-1)^{l-1} c_{2l,j}(1/2) t^{2r-2l},
// an even polynomial. Out-of-range j: zero polynomial.
RPoly alpha_poly(int r, int j);
// Same polynomial assembled as sum_{k=j}^{2r} c_{k,j}(t+1/2) D_r(k) t^{2r-k}
// (test path).
RPoly alpha_poly_via_moments(int r, int j);

// alpha^_{r,l}(t) = (-1)^l sum_{j=1}^{2r-l} C(2r-j, l) alpha_{r,j}(t).
RPoly alpha_hat_poly(int r, int l);

// beta_{r,l}(t) = sum_{j=l+1}^{2r} b_{j,l}(t+1/2) alpha_{r,j}(t).
RPoly beta_poly(int r, int l);

// Barnes multiple Bernoulli polynomial {}_nB_m(z): (-1)^m m! times the
// coefficient of t^{m+n-1} in (t/(e^t-1))^n e^{(n-z)t}; degree m+n-1.
RPoly barnes_bernoulli(int n, int m);

// The exact defining sum (g-1) sum_{j=1}^{2r} C(k+j-1, j-1) alpha_{r,j}(t).
// Neither closed form is assumed; see multiplicity_report.
RPoly multiplicity_poly_oracle(int r, int k, int g);

// Comparison of the defining sum against the two printed candidate closed
// forms: A = 2(g-1)(2k+1)((s-k)(s-k-1))^{r-1} and
// B = 2(g-1)(2k-1)(t^2-(k+1/2)^2)^{r-1}, both rewritten in t = s - 1/2.
struct MultiplicityReport {
  int r = 0, k = 0, g = 0;
  RPoly defining, form_a, form_b;
  bool matches_a = false, matches_b = false;
};
MultiplicityReport multiplicity_report(int r, int k, int g);

// Plain-text dump of a family: one line per index pair, exact fractions.
std::string dump_family(PolyFamily family, int max_i, int max_j);

}  // namespace hdet

#endif  // HDET_POLYCOEFF_HPP
