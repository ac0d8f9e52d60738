#include "hdet/gammafactor.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "hdet/hurwitz.hpp"
#include "hdet/multigamma.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/polycoeff.hpp"
#include "hdet/rational.hpp"

namespace hdet {

namespace {

constexpr double kTinyTol = 1e-12;

void check_moment_args(const char* who, int m, double t) {
  if (m < 1 || m % 2 == 0) {
    throw domain_error(std::string(who) + ": moment index must be odd >= 1");
  }
  if (!(t > 0.0 && t < 0.5)) {
    throw domain_error(std::string(who) + ": requires t in (0, 1/2)");
  }
}

// (-1)^{(m+1)/2}: the real value of i^{m+1} for odd m.
double quarter_sign(int m) { return ((m + 1) / 2) % 2 == 0 ? 1.0 : -1.0; }

CValue ipow(CValue base, int n) {
  CValue acc(1.0, 0.0);
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

bool near_nonpos_int(CValue z, long* which = nullptr) {
  if (std::abs(z.imag()) > kTinyTol) return false;
  const double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.real() - r) > kTinyTol) return false;
  if (which != nullptr) *which = static_cast<long>(r);
  return true;
}

// 1/Gamma(z), entire: zero at non-positive integers.
CValue recip_gamma(CValue z) {
  if (near_nonpos_int(z)) return CValue(0.0, 0.0);
  return std::exp(-lgamma_complex(z));
}

// 2^{-s} zeta(s, 1/2) = sum_{k>=0} (2k+1)^{-s}; overflow-free for large
// Re(s), delegated to the Euler-Maclaurin evaluator otherwise.
CValue scaled_zeta_half(CValue s) {
  if (s.real() >= 30.0) {
    KahanSum acc;
    for (int k = 0;; ++k) {
      CValue term = std::exp(-s * std::log(2.0 * k + 1.0));
      acc.add(term);
      if (k > 0 && std::abs(term) < 1e-20) break;
      if (k > 64) break;
    }
    return acc.total();
  }
  return std::exp(-s * std::log(2.0)) * hurwitz_zeta(s, CValue(0.5, 0.0));
}

double log_depth_gamma_half(int k, double z) {
  return log_multigamma(1, k, CValue(z, 0.0)).value.real();
}

}  // namespace

CValue J_direct(int m, CValue w, double t, const ToleranceConfig& cfg) {
  check_moment_args("J_direct", m, t);
  if (!(w.real() > 0.5 * (m + 1))) {
    throw domain_error("J_direct: requires Re(w) > (m+1)/2");
  }
  const double X = std::max(8.0, m + 6.0);
  auto f = [m, w, t](double x) -> CValue {
    const double r2 = x * x + t * t;
    return std::pow(x, m) * std::exp(-w * std::log(r2)) *
           CValue(std::tanh(M_PI * x), 0.0);
  };
  double err = 0.0;
  CValue head = quadrature(f, 0.0, X, cfg, &err);
  // Exact tail of int_X^inf x^m (x^2+t^2)^{-w} dx (binomial in x^2 = v - t^2).
  KahanSum tail;
  const int half = (m - 1) / 2;
  const double lr = std::log(X * X + t * t);
  for (int i = 0; i <= half; ++i) {
    const double c = to_double(binom(half, i)) *
                     std::pow(-t * t, half - i);
    tail.add(CValue(0.5 * c, 0.0) *
             std::exp((CValue(i + 1, 0) - w) * lr) / (w - CValue(i + 1, 0)));
  }
  return head + tail.total();
}

CValue J_m1_quadrature(int m, CValue w, double t, const ToleranceConfig& cfg) {
  check_moment_args("J_m1_quadrature", m, t);
  if (!(w.real() < 0.5)) {
    throw domain_error("J_m1_quadrature: requires Re(w) < 1/2");
  }
  // xi = t sin(theta) maps (0, t) to (0, pi/2) and softens the endpoint.
  auto f = [m, w, t](double theta) -> CValue {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (c <= 0.0) return CValue(0.0, 0.0);
    return std::exp((CValue(1.0, 0.0) - 2.0 * w) * std::log(c)) *
           CValue(std::pow(s, m) * std::tan(M_PI * t * s), 0.0);
  };
  double err = 0.0;
  CValue integral = quadrature(f, 0.0, M_PI / 2.0, cfg, &err);
  return -std::sin(M_PI * w) *
         std::exp((CValue(m + 1, 0) - 2.0 * w) * std::log(t)) * integral;
}

CValue J_m1_beta_series(int m, CValue w, double t) {
  check_moment_args("J_m1_beta_series", m, t);
  // -sin(pi w) t^{m+1-2w} * (1/2) sum_j T_j (pi t)^{2j+1} B(1-w, q_j) with
  // q_j = j + (m+2)/2, folded through the reflection formula so the only
  // w-dependent factors are 1/Gamma(w) and 1/Gamma(q_j + 1 - w).
  const CValue rg_w = recip_gamma(w);
  KahanSum acc;
  double scale = 0.0;
  int quiet = 0;
  const double pt = M_PI * t;
  for (int j = 0; j <= 3000; ++j) {
    const double q = 0.5 * (m + 2) + j;
    const CValue denom_arg = CValue(q + 1.0, 0.0) - w;
    CValue term(0.0, 0.0);
    if (!near_nonpos_int(denom_arg)) {
      term = tan_series_coeff(j) * std::pow(pt, 2 * j + 1) *
             std::exp(CValue(std::lgamma(q), 0.0) - lgamma_complex(denom_arg));
    }
    acc.add(term);
    scale = std::max(scale, std::abs(term));
    if (j >= 8) {
      quiet = (std::abs(term) < 1e-18 * (scale + 1.0)) ? quiet + 1 : 0;
      if (quiet >= 3) {
        return CValue(-0.5 * M_PI, 0.0) *
               std::exp((CValue(m + 1, 0) - 2.0 * w) * std::log(t)) * rg_w *
               acc.total();
      }
    }
  }
  throw accuracy_error("J_m1_beta_series: series did not converge",
                       acc.total(), scale);
}

CValue J_m2_series(int m, CValue w, double t) {
  check_moment_args("J_m2_series", m, t);
  // sum_j binom(w+j-1, j) t^{2j} zeta(2w + 2j - m, 1/2); the binomial is
  // accumulated as a rising-factorial product. Written with the scaled
  // zeta so large arguments cannot overflow.
  long pole_p = 0;
  const bool w_nonpos_int = near_nonpos_int(w, &pole_p);
  KahanSum acc;
  CValue coef(1.0, 0.0);  // binom(w+j-1, j), rising-factorial recursion
  double scale = 0.0;
  int quiet = 0;
  const double tt4 = 4.0 * t * t;                              // (2t)^2
  double pow_2t_2j = 1.0;                                      // (2t)^{2j}
  const CValue two_pow = std::exp((2.0 * w - double(m)) * std::log(2.0));
  for (int j = 0; j <= 5000; ++j) {
    const CValue arg = 2.0 * w + CValue(2 * j - m, 0.0);
    CValue term(0.0, 0.0);
    if (std::abs(arg - CValue(1.0, 0.0)) < kTinyTol) {
      if (w_nonpos_int && 2 * j == m + 1 - 2 * pole_p) {
        // Removable point: the vanishing binomial cancels the zeta pole;
        // the limit is t^{2j} (-1)^p p! (j-1-p)! / (2 j!) with p = -w.
        const long p = -pole_p;
        const double lim =
            0.5 * std::pow(t, 2 * j) * ((p % 2 == 0) ? 1.0 : -1.0) *
            std::exp(std::lgamma(double(p + 1)) +
                     std::lgamma(double(j - p)) -
                     std::lgamma(double(j + 1)));
        term = CValue(lim, 0.0);
      } else {
        throw pole_error("J_m2_series: pole at w = (m+1)/2 - j");
      }
    } else {
      // coef t^{2j} zeta(arg, 1/2) = coef (2t)^{2j} 2^{2w-m} [2^{-arg} zeta].
      term = coef * pow_2t_2j * two_pow * scaled_zeta_half(arg);
    }
    acc.add(term);
    scale = std::max(scale, std::abs(term));
    coef *= (w + CValue(j, 0.0)) / double(j + 1);
    pow_2t_2j *= tt4;
    if (j >= 8) {
      quiet = (std::abs(term) < 1e-18 * (scale + 1.0)) ? quiet + 1 : 0;
      if (quiet >= 3) return acc.total();
    }
  }
  throw accuracy_error("J_m2_series: series did not converge", acc.total(),
                       scale);
}

CValue J_decomposed(int m, CValue w, double t, const ToleranceConfig& cfg) {
  check_moment_args("J_decomposed", m, t);
  (void)cfg;
  const CValue cosw = std::cos(M_PI * w);
  if (std::abs(cosw) < 1e-9) {
    throw pole_error("J_decomposed: representation pole at half-integer w");
  }
  const CValue j1 = J_m1_beta_series(m, w, t);
  const CValue j2 = J_m2_series(m, w, t);
  return CValue(quarter_sign(m), 0.0) * (j1 + j2) / cosw;
}

CValue J_dw0_closed(int m, double t) {
  check_moment_args("J_dw0_closed", m, t);
  const double sign = quarter_sign(m);
  const double hh = to_double(harmonic((m - 1) / 2) - 2 * harmonic(m));
  KahanSum acc;
  acc.add(CValue(sign * hh * std::pow(t, m + 1) / double(m + 1), 0.0));
  for (int k = 1; k <= m + 1; ++k) {
    const double c = 2.0 * sign * ((k % 2 == 0) ? 1.0 : -1.0) *
                     to_double(binom(m, k - 1)) * std::pow(t, m + 1 - k);
    acc.add(CValue(c * log_depth_gamma_half(k, t + 0.5), 0.0));
  }
  return acc.total();
}

CValue R_series(int m, double t, int terms) {
  check_moment_args("R_series", m, t);
  // sum_{j>=1} zeta(2j+1, 1/2) t^{2j+m+1} / (2j+m+1), written through the
  // scaled sum b_j = 2^{-(2j+1)} zeta(2j+1, 1/2) so nothing overflows:
  // term_j = b_j (2t)^{2j+1} t^m / (2j+m+1).
  const int cap = terms > 0 ? terms : 4000;
  const double tm = std::pow(t, m);
  KahanSum acc;
  for (int j = 1; j <= cap; ++j) {
    double bracket;  // 2^{-(2j+1)} zeta(2j+1, 1/2) = sum (2k+1)^{-(2j+1)}
    if (j <= 12) {
      bracket = odd_zeta_half(j).real() * std::pow(2.0, -(2 * j + 1));
    } else {
      bracket = 0.0;
      for (int k = 0; k <= 40; ++k) {
        const double piece = std::pow(2.0 * k + 1.0, -(2.0 * j + 1.0));
        bracket += piece;
        if (piece < 1e-19) break;
      }
    }
    const double term =
        bracket * std::pow(2.0 * t, 2 * j + 1) * tm / double(2 * j + m + 1);
    acc.add(CValue(term, 0.0));
    if (terms <= 0 && j > 4 && term < 1e-19 * (1.0 + acc.abs_sum())) break;
  }
  return acc.total();
}

CValue R_closed(int m, double t) {
  check_moment_args("R_closed", m, t);
  KahanSum acc;
  for (int k = 1; k <= m + 1; ++k) {
    const double c = ((k % 2 == 0) ? 1.0 : -1.0) * to_double(binom(m, k - 1)) *
                     std::pow(t, m + 1 - k);
    acc.add(CValue(c * log_depth_gamma_half(k, t + 0.5), 0.0));
  }
  acc.add(CValue(-0.5, 0.0) * log_basic_cosine(m + 1, t).value);
  const double psi_half = digamma(CValue(0.5, 0.0)).real();
  acc.add(CValue(-(to_double(harmonic(m)) - psi_half) * std::pow(t, m + 1) /
                     double(m + 1),
                 0.0));
  for (int j = 1; j <= (m - 1) / 2; ++j) {
    const double b = to_double(bernoulli_poly_exact(m + 1 - 2 * j)
                                   .eval_rat(Rat(1, 2)));
    acc.add(CValue(0.5 * b / double(j * (m + 1 - 2 * j)) * std::pow(t, 2 * j),
                   0.0));
  }
  acc.add(CValue(-log_depth_gamma_half(m + 1, 0.5), 0.0));
  return acc.total();
}

CValue Phi_integral(int m, double t, CValue z, const ToleranceConfig& cfg) {
  if (m < 0) throw domain_error("Phi_integral: moment index must be >= 0");
  if (!(t > 0.0 && t < 0.5)) {
    throw domain_error("Phi_integral: requires t in (0, 1/2)");
  }
  if (z.real() <= 0.0) {
    throw domain_error("Phi_integral: requires Re(z) > 0");
  }
  auto f = [m, z](double xi) -> CValue {
    return std::pow(xi, m) * digamma(z + CValue(xi, 0.0));
  };
  double err = 0.0;
  return quadrature(f, 0.0, t, cfg, &err);
}

CValue Phi_closed(int m, double t, CValue z) {
  if (m < 0) throw domain_error("Phi_closed: moment index must be >= 0");
  if (!(t > 0.0 && t < 0.5)) {
    throw domain_error("Phi_closed: requires t in (0, 1/2)");
  }
  if (z.real() <= 0.0) {
    throw domain_error("Phi_closed: requires Re(z) > 0");
  }
  const CValue tz = z + CValue(t, 0.0);
  KahanSum acc;
  for (int k = 1; k <= m + 1; ++k) {
    const double c = ((k % 2 == 0) ? -1.0 : 1.0) * to_double(binom(m, k - 1)) *
                     std::pow(t, m + 1 - k);
    acc.add(CValue(c, 0.0) * log_multigamma(1, k, tz).value);
  }
  acc.add(CValue(to_double(harmonic(m)) * std::pow(t, m + 1) / double(m + 1),
                 0.0));
  for (int l = 1; l <= m; ++l) {
    const double sgn = ((l + m) % 2 == 0) ? 1.0 : -1.0;
    acc.add(CValue(sgn * std::pow(t, l) / double(l * (m + 1 - l)), 0.0) *
            bernoulli_poly(m + 1 - l, z));
  }
  const double sgn_last = ((m + 1) % 2 == 0) ? 1.0 : -1.0;
  acc.add(CValue(sgn_last, 0.0) * log_multigamma(1, m + 1, z).value);
  return acc.total();
}

LogValue log_phi(int r, CValue s, PhiForm form) {
  if (r < 1) throw domain_error("log_phi: depth must be >= 1");
  if (s.real() <= 0.0) throw domain_error("log_phi: requires Re(s) > 0");
  const CValue t = s - CValue(0.5, 0.0);
  KahanSum acc;
  acc.add(to_double(C_const(r)) * ipow(t, 2 * r));
  switch (form) {
    case PhiForm::MilnorForm: {
      for (int k = r; k <= 2 * r; ++k) {
        const double d = to_double(D_coeff(r, k));
        if (d == 0.0) continue;
        acc.add(d * ipow(t, 2 * r - k) *
                hurwitz_zeta_dw(CValue(1 - k, 0), s));
      }
      break;
    }
    case PhiForm::BarnesForm: {
      for (int j = 1; j <= 2 * r; ++j) {
        acc.add(alpha_poly(r, j).eval(t) * log_multigamma(j, 1, s).value);
      }
      break;
    }
    case PhiForm::VignerasForm: {
      for (int l = 0; l <= 2 * r - 1; ++l) {
        acc.add(beta_poly(r, l).eval(t) * zeta_prime_neg(l));
      }
      for (int j = 1; j <= 2 * r; ++j) {
        const double sgn = (j % 2 == 1) ? 1.0 : -1.0;
        acc.add(sgn * alpha_poly(r, j).eval(t) * log_vigneras_G(j, s).value);
      }
      break;
    }
  }
  return LogValue{acc.total()};
}

LogValue log_phi_from_moments(int r, double s) {
  if (r < 1) throw domain_error("log_phi_from_moments: depth must be >= 1");
  if (!(s > 0.5 && s < 1.0)) {
    throw domain_error("log_phi_from_moments: requires s in (1/2, 1)");
  }
  const double t = s - 0.5;
  KahanSum acc;
  for (int l = 0; l <= r - 1; ++l) {
    const double c = 2.0 * to_double(binom(r - 1, l)) *
                     std::pow(t, 2 * (r - 1 - l));
    acc.add(CValue(-c, 0.0) * J_dw0_closed(2 * l + 1, t));
  }
  return LogValue{acc.total()};
}

CValue phi_fe_residual(int r, CValue s) {
  if (r < 1) throw domain_error("phi_fe_residual: depth must be >= 1");
  if (!(s.real() > 0.0 && s.real() < 1.0)) {
    throw domain_error("phi_fe_residual: requires 0 < Re(s) < 1");
  }
  const CValue t = s - CValue(0.5, 0.0);
  CValue lhs = log_phi(r, CValue(1.0, 0.0) - s, PhiForm::BarnesForm).value;
  CValue rhs = log_phi(r, s, PhiForm::BarnesForm).value;
  KahanSum sines;
  for (int k = 1; k <= 2 * r; ++k) {
    sines.add(alpha_poly(r, k).eval(t) * log_mult_sine(k, s).value);
  }
  return lhs - sines.total() - rhs;
}

}  // namespace hdet
