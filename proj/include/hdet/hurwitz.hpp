// Hurwitz zeta continuation for complex order, its w-derivative, and the
// memoized special constants consumed downstream (zeta'(-l), zeta(2j+1,1/2)).
#ifndef HDET_HURWITZ_HPP
#define HDET_HURWITZ_HPP

#include "hdet/errors.hpp"
#include "hdet/types.hpp"

namespace hdet {

// Euler-Maclaurin evaluation plan: N leading terms summed directly, M
// Bernoulli boundary corrections. N >= 1, M even, M <= 24.
struct EulerMaclaurinPlan {
  int N = 25;
  int M = 12;
};

// zeta(w, z) = sum_{n>=0} (n+z)^{-w}, continued in w. Requires Re(z) > 0 and
// w != 1. For strongly negative Re(w) the effective shift count is capped
// (and the boundary order raised) so double-precision cancellation stays
// below the certified targets; the plan applies verbatim elsewhere.
CValue hurwitz_zeta(CValue w, CValue z, const EulerMaclaurinPlan& plan = {});

// d/dw zeta(w, z): term-by-term analytic derivative of the same
// representation (every (n+z)^{-w} contributes -log(n+z)(n+z)^{-w}, and
// likewise for the integral and boundary terms).
CValue hurwitz_zeta_dw(CValue w, CValue z, const EulerMaclaurinPlan& plan = {});

// zeta'(-l) = hurwitz_zeta_dw(-l, 1), cached.
CValue zeta_prime_neg(int l);

// zeta(2j+1, 1/2) by direct summation with an integral tail correction, an
// independent code path from the Euler-Maclaurin evaluator; cached.
CValue odd_zeta_half(int j);

}  // namespace hdet

#endif  // HDET_HURWITZ_HPP
