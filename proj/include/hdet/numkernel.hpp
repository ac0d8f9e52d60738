// Foundational kernels: exact Bernoulli/Stirling/harmonic tables, digamma and
// log-gamma for complex arguments, the branch-corrected logarithm, adaptive
// quadrature, and Richardson-extrapolated numerical differentiation.
#ifndef HDET_NUMKERNEL_HPP
#define HDET_NUMKERNEL_HPP

#include <functional>

#include "hdet/errors.hpp"
#include "hdet/rational.hpp"
#include "hdet/rpoly.hpp"
#include "hdet/types.hpp"

namespace hdet {

// ---- exact layer ----------------------------------------------------------

// Bernoulli number B_k (B_1 = -1/2), exact, cached.
const Rat& bernoulli_number(int k);

// Bernoulli polynomial B_m(z) as an exact polynomial, cached.
const RPoly& bernoulli_poly_exact(int m);

// B_m(z) evaluated at a complex point.
CValue bernoulli_poly(int m, CValue z);

// Signed Stirling number of the first kind s(n, m): coefficients of the
// falling factorial, equivalently (z)_n (rising) = sum (-1)^{n+m} s(n,m) z^m.
// Out-of-range m yields 0.
Int stirling_first_signed(int n, int m);

// H(m) = sum_{k=1..m} 1/k, with H(m) = 0 for m <= 0.
Rat harmonic(int m);
// H(m, n) = sum_{k=m..n} 1/k, requires n >= m >= 1.
Rat harmonic_range(int m, int n);

// Coefficient T_j in tan(x) = sum_{j>=0} T_j x^{2j+1} (double precision,
// derived from the exact Bernoulli table; cached).
double tan_series_coeff(int j);

// ---- floating kernels ------------------------------------------------------

// psi(z) for complex z off the non-positive integers; >= 12 significant
// digits for |z| <= 50.
CValue digamma(CValue z);

// Principal-strategy log Gamma(z) via shift + Stirling series. exp of sums of
// these is used where only the exponential matters (Beta factors, anchors).
CValue lgamma_complex(CValue z);

// Branch-corrected logarithm l_j(s) with exp(l_j(s)) = lambda - s(1-s):
// for 0 <= lambda < 1/4 the two real branch points 1/2 -+ mu carry vertical
// cuts (down from the left point, up from the right one) and the arguments
// are taken in [-pi/2, 3pi/2) and [-3pi/2, pi/2) respectively; for
// lambda >= 1/4 the principal logarithm applies (cuts on the critical line).
CValue branch_log_j(double lambda, CValue s);

using Integrand = std::function<CValue(double)>;

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b]. The achieved
// bound is written to *err_bound when non-null; failure to certify
// cfg.quadrature_target (scaled by 1 + |value|) raises accuracy_error with
// the best estimate attached.
CValue quadrature(const Integrand& f, double a, double b,
                  const ToleranceConfig& cfg, double* err_bound = nullptr);

// Fixed-grid composite Simpson rule (test oracle; n panels, n even).
CValue simpson_oracle(const Integrand& f, double a, double b, int n);

struct FDReport {
  double observed_order = 0.0;  // empirical convergence order of D(h)
  double err_estimate = 0.0;    // spread of the Richardson tableau
};

// d/dw f at w0 by central differences (base step cfg.fd_step) with two
// Richardson levels; an erratic tableau raises accuracy_error.
CValue numeric_dw(const std::function<CValue(CValue)>& f, CValue w0,
                  const ToleranceConfig& cfg, FDReport* report = nullptr);

// Compensated (Neumaier) accumulator for complex sums; abs_sum tracks the
// magnitude mass for a-posteriori rounding estimates.
class KahanSum {
 public:
  void add(CValue x) {
    add_part(x.real(), re_, re_c_);
    add_part(x.imag(), im_, im_c_);
    abs_sum_ += std::abs(x);
  }
  CValue total() const { return {re_ + re_c_, im_ + im_c_}; }
  double abs_sum() const { return abs_sum_; }

 private:
  static void add_part(double x, double& s, double& c) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0, abs_sum_ = 0.0;
};

}  // namespace hdet

#endif  // HDET_NUMKERNEL_HPP
