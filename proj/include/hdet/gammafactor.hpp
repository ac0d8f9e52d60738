// Archimedean gamma factor of the higher-depth determinant: the moment
// integrals J_m, their w-derivative at zero, the remainder/partial-integral
// helpers R_m and Phi_m, and log phi_r assembled in three equivalent closed
// forms (depth-gamma, order-gamma, Vigneras-G).
#ifndef HDET_GAMMAFACTOR_HPP
#define HDET_GAMMAFACTOR_HPP

#include "hdet/errors.hpp"
#include "hdet/types.hpp"

namespace hdet {

enum class PhiForm { MilnorForm, BarnesForm, VignerasForm };

// J_m(w, t) = int_0^inf x^m (x^2 + t^2)^{-w} tanh(pi x) dx, m odd >= 1,
// t in (0, 1/2).

// Direct adaptive quadrature on [0, X] plus an exact power tail (tanh -> 1);
// converges only for Re(w) > (m+1)/2.
CValue J_direct(int m, CValue w, double t, const ToleranceConfig& cfg = {});

// Analytic continuation: i^{m+1}/cos(pi w) * (J_{m,1} + J_{m,2}), valid for
// all w away from half-integers (prefactor pole) and the J_{m,2} poles at
// w = (m+1)/2 - j.
CValue J_decomposed(int m, CValue w, double t, const ToleranceConfig& cfg = {});

// The two pieces of the continuation, exposed for cross-checks.
// J_{m,1} as a convergent quadrature over the segment (0, t); requires
// Re(w) < 1/2 so the endpoint singularity stays integrable.
CValue J_m1_quadrature(int m, CValue w, double t,
                       const ToleranceConfig& cfg = {});
// J_{m,1} as an everywhere-convergent Beta-kernel series (tangent
// coefficients against Beta(1 - w, j + (m+2)/2)).
CValue J_m1_beta_series(int m, CValue w, double t);
// J_{m,2} as a binomial series over Hurwitz zeta values at z = 1/2.
CValue J_m2_series(int m, CValue w, double t);

// d/dw J_m(w, t) at w = 0, in closed form through depth gammas and the
// basic cosine; equals the numeric derivative of J_decomposed.
CValue J_dw0_closed(int m, double t);

// R_m(t): remainder series sum_j zeta(2j + 1, 1/2) t^{2j+m+1} / (2j+m+1)
// over j >= 1; terms <= 0 selects the count automatically. Requires
// 0 < t < 1/2.
CValue R_series(int m, double t, int terms);
// The same quantity in closed form through depth gammas at t + 1/2.
CValue R_closed(int m, double t);

// Phi_m(t, z) = int_0^t xi^m psi(xi + z) d xi, Re(z) > 0, by quadrature...
CValue Phi_integral(int m, double t, CValue z, const ToleranceConfig& cfg = {});
// ...and in closed form through depth gammas at t + z plus a Bernoulli
// polynomial correction.
CValue Phi_closed(int m, double t, CValue z);

// log phi_r(s), Re(s) > 0, in the requested closed form. All three forms
// agree on the common domain.
LogValue log_phi(int r, CValue s, PhiForm form);

// Defining assembly -2 sum_l binom(r-1, l) t^{2(r-1-l)} dJ_{2l+1}/dw|_0 for
// real s in (1/2, 1); agrees with the closed forms.
LogValue log_phi_from_moments(int r, double s);

// log phi_r(1 - s) - sum_k alpha_{r,k}(t) log S_k(s) - log phi_r(s) for
// 0 < Re(s) < 1; identically ~0.
CValue phi_fe_residual(int r, CValue s);

}  // namespace hdet

#endif  // HDET_GAMMAFACTOR_HPP
