// Core value types: complex carrier, log-space values, tolerance bundle, and
// the evaluation point with its canonical t = s - 1/2 shift and region tags.
#ifndef HDET_TYPES_HPP
#define HDET_TYPES_HPP

#include <complex>
#include <vector>

namespace hdet {

// Carrier for every scalar the library evaluates (s, t, w, z, xi).
using CValue = std::complex<double>;

// log f(z) as produced directly by a defining zeta-derivative or integral.
// Sums of LogValues correspond to products of the underlying function values;
// multiplying by a polynomial exponent p(t) realizes f(z)^{p(t)} as
// exp(p(t) * value) with this canonical logarithm.
struct LogValue {
  CValue value{0.0, 0.0};
  LogValue() = default;
  explicit LogValue(CValue v) : value(v) {}
  LogValue& operator+=(const LogValue& o) {
    value += o.value;
    return *this;
  }
  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator*(CValue c, const LogValue& v) {
    return LogValue(c * v.value);
  }
};

struct ToleranceConfig {
  double abs_tol = 1e-8;            // residual acceptance threshold
  double rel_tol = 1e-10;           // relative variant where applicable
  double quadrature_target = 1e-12; // requested |error bound| for quadrature
  double fd_step = 1e-4;            // central finite-difference base step
};

// A point s with the ubiquitous shift t = s - 1/2 enforced at construction,
// plus coarse region tags computed against a caller-supplied eigenvalue list
// (empty list = no spectral cuts known).
struct EvalPoint {
  CValue s{0.0, 0.0};
  CValue t{0.0, 0.0};              // always s - 1/2
  bool right_of_center = false;    // Re(s) > 1/2
  bool off_real_ray = false;       // s not on the real ray (-inf, 1]
  bool off_spectral_cuts = false;  // s off every cut induced by the lambdas
};

// Classifies s against the cut system of the given eigenvalues; lambdas may
// be empty, in which case off_spectral_cuts is trivially true.
EvalPoint make_eval_point(CValue s, const std::vector<double>& lambdas = {});

// True when s lies on (within tol of) the logarithm cut set for eigenvalue
// lambda (vertical rays from the branch points; see branch_log_j).
bool on_branch_cut(double lambda, CValue s, double tol = 1e-12);

}  // namespace hdet

#endif  // HDET_TYPES_HPP
