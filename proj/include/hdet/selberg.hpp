// Zeta functions built from the length spectrum of a genus-g hyperbolic
// surface: higher-order Selberg zetas Z^{(m)}, the depth-r combination
// Z_{Gamma,r}, the geometric side of the higher-depth determinant, and the
// completed function fed by the 2r-th order gamma shifts.
#ifndef HDET_SELBERG_HPP
#define HDET_SELBERG_HPP

#include <string>
#include <vector>

#include "hdet/errors.hpp"
#include "hdet/types.hpp"

namespace hdet {

struct PrimitiveClass {
  double norm = 0.0;    // N(P) > 1
  int multiplicity = 1; // >= 1
};

struct LengthSpectrum {
  int genus = 2;
  std::string label;
  std::vector<PrimitiveClass> primitives;  // sorted by ascending norm

  // log of the smallest norm; > 0, controls every convergence rate.
  double spectral_gap() const;
  // Throws domain_error unless genus >= 2, all norms > 1 in ascending
  // order, and all multiplicities >= 1.
  void validate() const;
};

struct TruncationPolicy {
  int k_max = 256;                 // cap on the power index per class
  int n_max = 256;                 // cap on the shift index (product form)
  double tail_target = 1e-14;      // absolute bound requested for the tail
};

// The spectrum shipped with the library (also in data/synthetic.json).
const LengthSpectrum& builtin_spectrum();

// Parse a spectrum from JSON text: object with integer "genus" >= 2,
// string "label", array "primitives" of {"norm", "multiplicity"}; unknown
// keys are rejected. Throws spectrum_parse_error carrying line/column.
LengthSpectrum parse_spectrum_json(const std::string& text);
LengthSpectrum load_spectrum_file(const std::string& path);

// Polylogarithm Li_m(z) = sum_{k>=1} z^k / k^m for |z| < 1.
CValue polylog(int m, CValue z);

// log Z^{(m)}(s) for Re(s) > 1: minus the class sum of
// (log N_P)^{1-m} N_P^{-ks} / (k^m (1 - N_P^{-k})). The optional out
// parameter receives a certified bound on the truncation tail.
CValue log_poly_selberg(int m, CValue s, const LengthSpectrum& spec,
                        const TruncationPolicy& pol = {},
                        double* tail_bound = nullptr);

// The same value through the shifted-product route: minus the class sum of
// (log N_P)^{1-m} sum_n Li_m(N_P^{-s-n}).
CValue log_poly_selberg_product(int m, CValue s, const LengthSpectrum& spec,
                                const TruncationPolicy& pol = {},
                                double* tail_bound = nullptr);

// log Z_{Gamma,r}(s) = (-1)^{r-1} (r-1)! sum_{m=0}^{r-1}
//   (r-1+m)! / (m! (r-1-m)!) (2t)^{r-1-m} log Z^{(r+m)}(s), t = s - 1/2.
CValue log_milnor_selberg(int r, CValue s, const LengthSpectrum& spec,
                          const TruncationPolicy& pol = {});

// log of the geometric higher-depth determinant:
// (g-1) log phi_r(s) + log Z_{Gamma,r}(s).
CValue log_higher_det_geom(int r, CValue s, const LengthSpectrum& spec,
                           const TruncationPolicy& pol = {});

// Completed form: (g-1) sum_l alpha_hat_{r,l}(t) log Gamma_{2r}(s+l)
// + log Z_{Gamma,r}(s); equals log_higher_det_geom on Re(s) > 1.
CValue log_complete_MS(int r, CValue s, const LengthSpectrum& spec,
                       const TruncationPolicy& pol = {});

// d/ds log Z^{(m)}(s) + log Z^{(m-1)}(s), numerically differentiated;
// identically ~0 for m >= 2.
CValue ladder_residual_poly(int m, CValue s, const LengthSpectrum& spec,
                            const TruncationPolicy& pol = {},
                            const ToleranceConfig& cfg = {});

// (2s-1)^{-1} d/ds log Z_{Gamma,r}(s) - (r-1) log Z_{Gamma,r-1}(s); ~0 for
// r >= 2.
CValue ladder_residual_MS(int r, CValue s, const LengthSpectrum& spec,
                          const TruncationPolicy& pol = {},
                          const ToleranceConfig& cfg = {});

// Reconstruct log Z^{(m)}(s) from log Z^{(1)} by m-1 nested integrations
// from the anchor a (both with Re > 1) and return the residual against the
// direct evaluation. Supports 2 <= m <= 4.
CValue iterated_integral_check(int m, CValue s, CValue a,
                               const LengthSpectrum& spec,
                               const TruncationPolicy& pol = {},
                               const ToleranceConfig& cfg = {});

// Diagnostic only: reflection residual
//   left_log - [(g-1) sum_j (-alpha_{r,j}(t)) log S_j(s) + log Z_{Gamma,r}(s)]
// where left_log is a caller-supplied value standing in for
// log Z_{Gamma,r}(1-s), which a finite Euler product cannot reach
// (it would need Re(s) > 1 and Re(1-s) > 1 at once). Requires
// 1 < Re(s) < 2 so every sine log is defined.
CValue fe_diagnostic_MS(int r, CValue s, CValue left_log,
                        const LengthSpectrum& spec,
                        const TruncationPolicy& pol = {});

}  // namespace hdet

#endif  // HDET_SELBERG_HPP
