// Gamma-family special functions in log-space: Barnes multiple zeta,
// multiple gamma of arbitrary depth, the Vigneras normalization, normalized
// multiple sine, and the basic multiple sine/cosine integrals.
#ifndef HDET_MULTIGAMMA_HPP
#define HDET_MULTIGAMMA_HPP

#include "hdet/errors.hpp"
#include "hdet/hurwitz.hpp"
#include "hdet/types.hpp"

namespace hdet {

// zeta_n(w, z) = sum_{m=0}^{n-1} b_{n,m}(z) zeta(w - m, z); equals the
// n-fold lattice sum for Re(w) > n and continues it elsewhere. Poles at
// w in {1, ..., n}.
CValue barnes_zeta(int n, CValue w, CValue z,
                   const EulerMaclaurinPlan& plan = {});

// log Gamma_{n,r}(z) = sum_m b_{n,m}(z) (d/dw zeta)(1 - r - m, z); requires
// Re(z) > 0. Gamma_n = Gamma_{n,1}; the depth-r gamma of order one
// (n = 1, r = k) is the k-th Milnor gamma.
LogValue log_multigamma(int n, int r, CValue z,
                        const EulerMaclaurinPlan& plan = {});

// log G_n(z) = (-1)^n sum_j b_{n,j}(z) zeta'(-j) + (-1)^{n-1} log Gamma_n(z).
LogValue log_vigneras_G(int n, CValue z);

// log S_n(z) = -log Gamma_n(z) + (-1)^n log Gamma_n(n-z); requires both
// Re(z) > 0 and Re(n-z) > 0.
LogValue log_mult_sine(int n, CValue z);

// log of the basic multiple sine: integral of pi xi^{n-1} cot(pi xi) over
// [0, z]. n = 1 is regularized as log(2 pi z) + int (pi cot(pi xi) - 1/xi)
// and requires z in (0, 1); n >= 2 requires |z| < 1.
LogValue log_basic_sine(int n, double z, const ToleranceConfig& cfg = {});

// log of the basic multiple cosine: minus the integral of
// pi xi^{n-1} tan(pi xi) over [0, z], plus log 2 when n = 1 (the degree-1
// function is 2 cos(pi z)); requires |z| < 1/2.
LogValue log_basic_cosine(int n, double z, const ToleranceConfig& cfg = {});

}  // namespace hdet

#endif  // HDET_MULTIGAMMA_HPP
