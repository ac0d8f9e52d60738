#include "hdet/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace hdet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---- Bernoulli numbers: exact reciprocal of sum x^k/(k+1)! ----------------
// x/(e^x - 1) = 1 / sum_{k>=0} x^k/(k+1)!; with a_k = 1/(k+1)! the reciprocal
// series b satisfies b_0 = 1, b_k = -sum_{i=1..k} a_i b_{k-i}; B_k = k! b_k.
class BernoulliTable {
 public:
  const Rat& get(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(k);
    return table_[static_cast<size_t>(k)];
  }

 private:
  void extend(int k) {
    if (static_cast<int>(series_.size()) > k) return;
    if (series_.empty()) {
      series_.push_back(Rat(1));
      table_.push_back(Rat(1));
    }
    for (int n = static_cast<int>(series_.size()); n <= k; ++n) {
      Rat b(0);
      for (int i = 1; i <= n; ++i) {
        Rat a = Rat(1) / Rat(factorial(static_cast<unsigned long>(i) + 1));
        b -= a * series_[static_cast<size_t>(n - i)];
      }
      b.canonicalize();
      series_.push_back(b);
      Rat bn = b * Rat(factorial(static_cast<unsigned long>(n)));
      bn.canonicalize();
      table_.push_back(bn);
    }
  }
  std::mutex mu_;
  std::vector<Rat> series_;  // b_k = B_k / k!
  std::vector<Rat> table_;   // B_k
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

class BernoulliPolyTable {
 public:
  const RPoly& get(int m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(m);
    if (it != table_.end()) return it->second;
    // Multiplying the number series by e^{zx}: B_m(z) = sum_k C(m,k) B_k
    // z^{m-k}.
    RPoly p;
    for (int k = 0; k <= m; ++k) {
      Rat c = Rat(binom(m, k)) * bernoulli_number(k);
      c.canonicalize();
      p += RPoly::monomial(c, m - k);
    }
    return table_.emplace(m, std::move(p)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, RPoly> table_;
};

BernoulliPolyTable& bernoulli_poly_table() {
  static BernoulliPolyTable t;
  return t;
}

// Signed Stirling triangle, s(n+1, m) = s(n, m-1) - n s(n, m).
class StirlingTable {
 public:
  Int get(int n, int m) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
      int nn = static_cast<int>(rows_.size());
      std::vector<Int> row(static_cast<size_t>(nn) + 1, Int(0));
      if (nn == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_.back();
        for (int mm = 1; mm <= nn; ++mm) {
          Int up = (mm <= nn - 1) ? prev[static_cast<size_t>(mm)] : Int(0);
          Int left = (mm - 1 <= nn - 1) ? prev[static_cast<size_t>(mm - 1)]
                                        : Int(0);
          row[static_cast<size_t>(mm)] = left - Int(nn - 1) * up;
        }
      }
      rows_.push_back(std::move(row));
    }
    if (m < 0 || m > n) return 0;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Int>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable t;
  return t;
}

// Asymptotic tail shared by digamma/lgamma; valid once Re(z) is large.
constexpr double kShiftThreshold = 13.0;
constexpr int kAsymptoticTerms = 8;

double bern_d(int k) { return bernoulli_number(k).get_d(); }

}  // namespace

const Rat& bernoulli_number(int k) {
  if (k < 0) throw domain_error("bernoulli_number: negative index");
  return bernoulli_table().get(k);
}

const RPoly& bernoulli_poly_exact(int m) {
  if (m < 0) throw domain_error("bernoulli_poly: negative index");
  return bernoulli_poly_table().get(m);
}

CValue bernoulli_poly(int m, CValue z) { return bernoulli_poly_exact(m).eval(z); }

Int stirling_first_signed(int n, int m) {
  if (n < 1) throw domain_error("stirling_first_signed: n must be positive");
  return stirling_table().get(n, m);
}

Rat harmonic(int m) {
  Rat h(0);
  for (int k = 1; k <= m; ++k) h += Rat(1, k);
  h.canonicalize();
  return h;
}

Rat harmonic_range(int m, int n) {
  if (!(n >= m && m >= 1))
    throw domain_error("harmonic_range: requires n >= m >= 1");
  Rat h(0);
  for (int k = m; k <= n; ++k) h += Rat(1, k);
  h.canonicalize();
  return h;
}

double tan_series_coeff(int j) {
  // tan x = sum_j T_j x^{2j+1}. From tan' = 1 + tan^2:
  // (2j+1) T_j = sum_{a+b=j-1} T_a T_b, all terms positive, so the double
  // recurrence is stable to arbitrary depth.
  static std::mutex mu;
  static std::vector<double> cache{1.0};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= j) {
    const int jj = static_cast<int>(cache.size());
    KahanSum conv;
    for (int a = 0; a <= jj - 1; ++a) {
      conv.add(CValue(cache[static_cast<size_t>(a)] *
                          cache[static_cast<size_t>(jj - 1 - a)],
                      0.0));
    }
    cache.push_back(conv.total().real() / double(2 * jj + 1));
  }
  return cache[static_cast<size_t>(j)];
}

CValue digamma(CValue z) {
  double zr = std::round(z.real());
  if (z.imag() == 0.0 && zr <= 0.0 && std::abs(z.real() - zr) < 1e-13)
    throw pole_error("digamma: non-positive integer argument");
  CValue acc(0.0, 0.0);
  while (z.real() < kShiftThreshold) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  CValue inv = 1.0 / z, inv2 = inv * inv;
  CValue r = std::log(z) - 0.5 * inv;
  CValue p = inv2;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    r -= bern_d(2 * k) / (2.0 * k) * p;
    p *= inv2;
  }
  return r + acc;
}

CValue lgamma_complex(CValue z) {
  double zr = std::round(z.real());
  if (z.imag() == 0.0 && zr <= 0.0 && std::abs(z.real() - zr) < 1e-13)
    throw pole_error("lgamma_complex: non-positive integer argument");
  CValue acc(0.0, 0.0);
  while (z.real() < kShiftThreshold) {
    acc -= std::log(z);
    z += 1.0;
  }
  CValue inv = 1.0 / z;
  CValue r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  CValue p = inv;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    r += bern_d(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv * inv;
  }
  return r + acc;
}

// ---- branch-corrected logarithm -------------------------------------------

bool on_branch_cut(double lambda, CValue s, double tol) {
  if (lambda < 0.25) {
    double mu = std::sqrt(0.25 - lambda);
    double ap = 0.5 - mu, am = 0.5 + mu;
    if (std::abs(s.real() - ap) < tol && s.imag() < tol) return true;
    if (std::abs(s.real() - am) < tol && s.imag() > -tol) return true;
    return false;
  }
  double r = std::sqrt(lambda - 0.25);
  return std::abs(s.real() - 0.5) < tol && std::abs(s.imag()) > r - tol;
}

CValue branch_log_j(double lambda, CValue s) {
  if (lambda < 0.0) throw domain_error("branch_log_j: lambda must be >= 0");
  if (on_branch_cut(lambda, s)) throw branch_cut_error("branch_log_j: s on cut");
  CValue val = lambda - s * (1.0 - s);
  if (lambda >= 0.25) return std::log(val);  // principal branch applies
  double mu = std::sqrt(0.25 - lambda);
  CValue ap(0.5 - mu, 0.0), am(0.5 + mu, 0.0);
  double argp = std::arg(s - ap);  // lift to [-pi/2, 3pi/2)
  if (argp < -kPi / 2) argp += 2.0 * kPi;
  double argm = std::arg(s - am);  // lift to [-3pi/2, pi/2)
  if (argm >= kPi / 2) argm -= 2.0 * kPi;
  return CValue(std::log(std::abs(val)), argp + argm);
}

EvalPoint make_eval_point(CValue s, const std::vector<double>& lambdas) {
  EvalPoint p;
  p.s = s;
  p.t = s - 0.5;
  p.right_of_center = s.real() > 0.5;
  p.off_real_ray = !(std::abs(s.imag()) < 1e-12 && s.real() <= 1.0);
  p.off_spectral_cuts = true;
  for (double l : lambdas)
    if (on_branch_cut(l, s)) p.off_spectral_cuts = false;
  return p;
}

// ---- quadrature ------------------------------------------------------------

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const double kXgk[8] = {0.991455371120812639206854697526329,
                        0.949107912342758524526189684047851,
                        0.864864423359769072789712788640926,
                        0.741531185599394439863864773280788,
                        0.586087235467691130294144838258730,
                        0.405845151377397166906606412076961,
                        0.207784955007898467600689403773245,
                        0.000000000000000000000000000000000};
const double kWgk[8] = {0.022935322010529224963732008058970,
                        0.063092092629978553290700663189204,
                        0.104790010322250183839876322541518,
                        0.140653259715525918745189590510238,
                        0.169004726639267902826583426598550,
                        0.190350578064785409913256402421014,
                        0.204432940075298892414161999234649,
                        0.209482141084727828012999174891714};
const double kWg[4] = {0.129484966168869693270611432679082,
                       0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975,
                       0.417959183673469387755102040816327};

struct GkResult {
  CValue value;
  double err;
};

GkResult gk15(const Integrand& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  CValue fc = f(c);
  CValue k15 = kWgk[7] * fc;
  CValue g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    CValue fv = f(c - x) + f(c + x);
    k15 += kWgk[i] * fv;
    if (i % 2 == 1) g7 += kWg[i / 2] * fv;
  }
  k15 *= h;
  g7 *= h;
  return {k15, std::abs(k15 - g7)};
}

void quad_rec(const Integrand& f, double a, double b, double tol, int depth,
              KahanSum& acc, double& err_acc, bool& certified) {
  GkResult r = gk15(f, a, b);
  if (r.err <= tol || depth >= 48) {
    acc.add(r.value);
    err_acc += r.err;
    if (r.err > tol) certified = false;
    return;
  }
  double m = 0.5 * (a + b);
  quad_rec(f, a, m, 0.5 * tol, depth + 1, acc, err_acc, certified);
  quad_rec(f, m, b, 0.5 * tol, depth + 1, acc, err_acc, certified);
}

}  // namespace

CValue quadrature(const Integrand& f, double a, double b,
                  const ToleranceConfig& cfg, double* err_bound) {
  if (a == b) {
    if (err_bound) *err_bound = 0.0;
    return CValue(0.0, 0.0);
  }
  if (a > b) return -quadrature(f, b, a, cfg, err_bound);
  KahanSum acc;
  double err = 0.0;
  bool certified = true;
  quad_rec(f, a, b, cfg.quadrature_target, 0, acc, err, certified);
  CValue v = acc.total();
  if (err_bound) *err_bound = err;
  if (!certified && err > cfg.quadrature_target * (1.0 + std::abs(v)))
    throw accuracy_error("quadrature: target not certified", v, err);
  return v;
}

CValue simpson_oracle(const Integrand& f, double a, double b, int n) {
  if (n < 2 || n % 2 != 0)
    throw domain_error("simpson_oracle: panel count must be even >= 2");
  double h = (b - a) / n;
  KahanSum acc;
  acc.add(f(a));
  acc.add(f(b));
  for (int i = 1; i < n; ++i)
    acc.add((i % 2 ? 4.0 : 2.0) * f(a + i * h));
  return acc.total() * (h / 3.0);
}

CValue numeric_dw(const std::function<CValue(CValue)>& f, CValue w0,
                  const ToleranceConfig& cfg, FDReport* report) {
  double h = cfg.fd_step;
  auto central = [&](double step) {
    return (f(w0 + CValue(step, 0.0)) - f(w0 - CValue(step, 0.0))) /
           (2.0 * step);
  };
  CValue d0 = central(h), d1 = central(h / 2.0), d2 = central(h / 4.0);
  CValue r1 = (4.0 * d1 - d0) / 3.0;
  CValue r2 = (4.0 * d2 - d1) / 3.0;
  CValue r = (16.0 * r2 - r1) / 15.0;
  double lo = std::abs(d1 - d0), hi = std::abs(d2 - d1);
  double order = (lo > 0 && hi > 0) ? std::log2(lo / hi) : 2.0;
  double est = std::abs(r2 - r1);
  if (report) {
    report->observed_order = order;
    report->err_estimate = est;
  }
  if (est > 1e-2 * (1.0 + std::abs(r)))
    throw accuracy_error("numeric_dw: inconsistent Richardson tableau", r, est);
  return r;
}

}  // namespace hdet
