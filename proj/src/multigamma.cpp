#include "hdet/multigamma.hpp"

#include <cmath>
#include <complex>

#include "hdet/numkernel.hpp"
#include "hdet/polycoeff.hpp"
#include "hdet/rational.hpp"

namespace hdet {

namespace {

constexpr double kPoleTol = 1e-12;

// Sum of coeff * zeta-like terms with compensated accumulation.
CValue weighted_sum(int n, CValue z, const std::function<CValue(int)>& term) {
  KahanSum acc;
  for (int m = 0; m < n; ++m) {
    const RPoly& b = b_poly(n, m);
    acc.add(b.eval(z) * term(m));
  }
  return acc.total();
}

}  // namespace

CValue barnes_zeta(int n, CValue w, CValue z, const EulerMaclaurinPlan& plan) {
  if (n < 1) throw domain_error("barnes_zeta: order must be >= 1");
  for (int k = 1; k <= n; ++k) {
    if (std::abs(w - CValue(k, 0)) < kPoleTol) {
      throw pole_error("barnes_zeta: pole at integer argument in {1..n}");
    }
  }
  return weighted_sum(n, z, [&](int m) {
    return hurwitz_zeta(w - CValue(m, 0), z, plan);
  });
}

LogValue log_multigamma(int n, int r, CValue z, const EulerMaclaurinPlan& plan) {
  if (n < 1) throw domain_error("log_multigamma: order must be >= 1");
  if (r < 1) throw domain_error("log_multigamma: depth must be >= 1");
  if (z.real() <= 0.0) {
    throw domain_error("log_multigamma: requires Re(z) > 0");
  }
  CValue v = weighted_sum(n, z, [&](int m) {
    return hurwitz_zeta_dw(CValue(1 - r - m, 0), z, plan);
  });
  return LogValue{v};
}

LogValue log_vigneras_G(int n, CValue z) {
  if (n < 1) throw domain_error("log_vigneras_G: order must be >= 1");
  if (z.real() <= 0.0) {
    throw domain_error("log_vigneras_G: requires Re(z) > 0");
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  KahanSum acc;
  for (int j = 0; j < n; ++j) {
    acc.add(b_poly(n, j).eval(z) * sign * zeta_prime_neg(j));
  }
  acc.add(CValue(-sign, 0) * log_multigamma(n, 1, z).value);
  return LogValue{acc.total()};
}

LogValue log_mult_sine(int n, CValue z) {
  if (n < 1) throw domain_error("log_mult_sine: order must be >= 1");
  if (z.real() <= 0.0 || (double(n) - z.real()) <= 0.0) {
    throw domain_error("log_mult_sine: requires 0 < Re(z) < n");
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  CValue v = -log_multigamma(n, 1, z).value +
             CValue(sign, 0) * log_multigamma(n, 1, CValue(n, 0) - z).value;
  return LogValue{v};
}

LogValue log_basic_sine(int n, double z, const ToleranceConfig& cfg) {
  if (n < 1) throw domain_error("log_basic_sine: order must be >= 1");
  if (n == 1) {
    // Regularized: log(2 pi z) + int_0^z (pi cot(pi xi) - 1/xi) d xi.
    if (!(z > 0.0 && z < 1.0)) {
      throw domain_error("log_basic_sine: n = 1 requires z in (0, 1)");
    }
    auto f = [](double xi) -> CValue {
      if (xi < 1e-7) {
        const double px = M_PI * xi;
        return CValue(-px * M_PI / 3.0 * (1.0 + px * px / 15.0), 0);
      }
      return CValue(M_PI / std::tan(M_PI * xi) - 1.0 / xi, 0);
    };
    double err = 0.0;
    CValue integral = quadrature(f, 0.0, z, cfg, &err);
    return LogValue{CValue(std::log(2.0 * M_PI * z), 0) + integral};
  }
  if (!(std::abs(z) < 1.0)) {
    throw domain_error("log_basic_sine: requires |z| < 1");
  }
  auto f = [n](double xi) -> CValue {
    if (std::abs(xi) < 1e-7) {
      // xi^{n-1} * pi cot(pi xi) = xi^{n-2} (1 - (pi xi)^2/3 - ...).
      const double px = M_PI * xi;
      return CValue(std::pow(xi, n - 2) * (1.0 - px * px / 3.0), 0);
    }
    return CValue(std::pow(xi, n - 1) * M_PI / std::tan(M_PI * xi), 0);
  };
  double err = 0.0;
  CValue integral = quadrature(f, 0.0, z, cfg, &err);
  return LogValue{integral};
}

LogValue log_basic_cosine(int n, double z, const ToleranceConfig& cfg) {
  if (n < 1) throw domain_error("log_basic_cosine: order must be >= 1");
  if (!(std::abs(z) < 0.5)) {
    throw domain_error("log_basic_cosine: requires |z| < 1/2");
  }
  auto f = [n](double xi) -> CValue {
    return CValue(std::pow(xi, n - 1) * M_PI * std::tan(M_PI * xi), 0);
  };
  double err = 0.0;
  CValue integral = quadrature(f, 0.0, z, cfg, &err);
  // Degree 1 carries the normalization constant log 2 (the function is
  // 2 cos(pi z), value 2 at z = 0); higher degrees are 1 at the origin.
  const double c0 = (n == 1) ? std::log(2.0) : 0.0;
  return LogValue{CValue(c0, 0) - integral};
}

}  // namespace hdet
