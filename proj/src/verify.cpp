#include "hdet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <random>
#include <sstream>

#include "hdet/gammafactor.hpp"
#include "hdet/hurwitz.hpp"
#include "hdet/multigamma.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/polycoeff.hpp"
#include "hdet/rational.hpp"
#include "hdet/selberg.hpp"

namespace hdet {

int VerificationReport::cases_passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.passed ? 1 : 0;
  return n;
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.residual);
  return m;
}

namespace {

constexpr unsigned kSeed = 20260814u;

// ---- plumbing ---------------------------------------------------------------

std::string cstr(CValue z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0.0) {
    os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

// Residual scaled by the magnitude of the larger side (absolute near zero).
double rel(CValue a, CValue b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

struct CaseCollector {
  CaseResult res;
  void sample(double r, const std::string& point) {
    if (!(r <= res.residual)) {  // also promotes NaN
      res.residual = r;
      res.point = point;
    }
  }
  void exact(bool ok, const std::string& point) {
    if (!ok) sample(1.0, point);
  }
};

class Suite {
 public:
  Suite(std::string name, const ToleranceConfig& cfg) : cfg_(cfg) {
    rep_.suite = std::move(name);
    override_tol_ = cfg.abs_tol != ToleranceConfig{}.abs_tol;
  }

  void check(const std::string& id, double default_tol,
             const std::function<void(CaseCollector&)>& body) {
    CaseCollector col;
    col.res.name = id;
    col.res.tolerance =
        (override_tol_ && default_tol > 0.0) ? cfg_.abs_tol : default_tol;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(col);
      col.res.passed = col.res.residual <= col.res.tolerance;
    } catch (const std::exception& e) {
      col.res.residual = std::numeric_limits<double>::infinity();
      col.res.passed = false;
      col.res.point = std::string("exception: ") + e.what();
    }
    col.res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep_.cases.push_back(std::move(col.res));
  }

  const ToleranceConfig& cfg() const { return cfg_; }
  VerificationReport take() { return std::move(rep_); }

 private:
  ToleranceConfig cfg_;
  bool override_tol_ = false;
  VerificationReport rep_;
};

struct Sampler {
  std::mt19937 rng;
  explicit Sampler(unsigned salt) : rng(kSeed + salt) {}
  double uni(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  }
  CValue box(double re0, double re1, double im0, double im1) {
    double re = uni(re0, re1);
    double im = uni(im0, im1);
    return {re, im};
  }
};

template <class E, class F>
bool raises(F&& f) {
  try {
    (void)f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

Rat frac(long n, long d) { return Rat(n) / Rat(d); }

RPoly tpoly(std::initializer_list<Rat> ascending) {
  RPoly p;
  int deg = 0;
  for (const Rat& c : ascending) {
    if (c != 0) p += RPoly::monomial(c, deg);
    ++deg;
  }
  return p;
}

Rat pow_rat(const Rat& x, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= x;
  r.canonicalize();
  return r;
}

Int pow2_int(int e) { return Int(1) << static_cast<unsigned>(e); }

// ---- suite: combinatorics ---------------------------------------------------

void suite_combinatorics(Suite& su) {
  su.check("closed_form_C_r", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 10; ++r) {
      Rat closed = -Rat(double_factorial(2UL * r)) /
                   (Rat(r) * Rat(r) * Rat(double_factorial(2UL * r - 1)));
      closed.canonicalize();
      c.exact(C_const(r) == closed, "r=" + std::to_string(r));
    }
  });

  su.check("closed_form_D_rk", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 8; ++r) {
      for (int k = 0; k <= 2 * r; ++k) {
        Rat closed(0);
        if (k >= 1) {
          long sign = ((k + r - 1) % 2 == 0) ? 1 : -1;
          closed = Rat(binom(r, k - r)) * frac(2L * k * sign, r) *
                   Rat(pow2_int(2 * r - k));
          closed.canonicalize();
        }
        c.exact(D_coeff(r, k) == closed,
                "r=" + std::to_string(r) + ",k=" + std::to_string(k));
      }
      c.exact(D_coeff(r, 2 * r + 1) == 0, "r=" + std::to_string(r) + ",k>2r");
    }
  });

  su.check("closed_form_D_tilde", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 8; ++r) {
      for (int p = 1; p <= 2 * r; ++p) {
        Rat closed(0);
        if (p % 2 == 0) {
          int q = p / 2;
          long sign = ((q - 1) % 2 == 0) ? 1 : -1;
          closed = Rat(4 * sign) * Rat(binom(r - 1, q - 1));
          closed.canonicalize();
        }
        c.exact(D_tilde(r, p) == closed,
                "r=" + std::to_string(r) + ",p=" + std::to_string(p));
      }
    }
  });

  su.check("binomial_generating_identity", 0.0, [](CaseCollector& c) {
    const std::vector<Rat> zs = {frac(1, 2), frac(-3, 2), Rat(2), frac(7, 3),
                                 frac(-1, 4)};
    const RPoly T = RPoly::variable();
    for (int r = 1; r <= 8; ++r) {
      for (const Rat& z : zs) {
        RPoly lhs = (T + RPoly(z)).pow(static_cast<unsigned>(r - 1));
        RPoly rhs;
        for (int j = 1; j <= r + 2; ++j) {
          RPoly basis(Rat(1));  // product (T+1)...(T+j-1) / (j-1)!
          for (int i = 1; i <= j - 1; ++i) basis = basis * (T + RPoly(Rat(i)));
          basis = (Rat(1) / Rat(factorial(static_cast<unsigned long>(j - 1)))) *
                  basis;
          rhs += c_poly(r, j).eval_rat(z) * basis;
        }
        c.exact(lhs == rhs, "r=" + std::to_string(r) + ",z=" + z.get_str());
      }
    }
  });

  su.check("coefficient_recursion", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 6; ++r)
      for (int j = 1; j <= r + 1; ++j)
        c.exact(c_poly(r, j) == c_poly_recursive(r, j),
                "r=" + std::to_string(r) + ",j=" + std::to_string(j));
  });

  su.check("alpha_two_paths", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 5; ++r)
      for (int j = 1; j <= 2 * r; ++j)
        c.exact(alpha_poly(r, j) == alpha_poly_via_moments(r, j),
                "r=" + std::to_string(r) + ",j=" + std::to_string(j));
  });

  su.check("alpha_inversion", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 5; ++r) {
      for (int k = 1; k <= 2 * r; ++k) {
        RPoly rhs;
        for (int j = k; j <= 2 * r; ++j)
          rhs += Rat(binom(j - 1, k - 1)) * alpha_poly(r, j);
        if (k % 2 != 0) rhs = -rhs;
        c.exact(alpha_poly(r, k) == rhs,
                "r=" + std::to_string(r) + ",k=" + std::to_string(k));
      }
    }
  });

  su.check("alpha_hat_fold", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 5; ++r) {
      for (int m = 1; m <= 2 * r; ++m) {
        RPoly lhs;
        for (int l = 2 * r - m; l <= 2 * r - 1; ++l)
          lhs += Rat(binom(l, 2 * r - m)) * alpha_hat_poly(r, l);
        RPoly rhs = alpha_poly(r, m);
        if (m % 2 != 0) rhs = -rhs;
        c.exact(lhs == rhs,
                "r=" + std::to_string(r) + ",m=" + std::to_string(m));
      }
    }
  });

  su.check("alpha_hat_palindrome", 0.0, [](CaseCollector& c) {
    for (int r = 1; r <= 5; ++r)
      for (int l = 0; l <= 2 * r - 1; ++l)
        c.exact(alpha_hat_poly(r, l) == alpha_hat_poly(r, 2 * r - 1 - l),
                "r=" + std::to_string(r) + ",l=" + std::to_string(l));
  });

  su.check("printed_phi_exponents", 0.0, [](CaseCollector& c) {
    c.exact(C_const(1) == Rat(-2), "C_1");
    c.exact(C_const(2) == frac(-2, 3), "C_2");
    c.exact(C_const(3) == frac(-16, 45), "C_3");
    c.exact(alpha_poly(1, 1) == tpoly({Rat(-2)}), "alpha_{1,1}");
    c.exact(alpha_poly(1, 2) == tpoly({Rat(4)}), "alpha_{1,2}");
    c.exact(alpha_poly(2, 1) == tpoly({frac(1, 2), Rat(0), Rat(-2)}),
            "alpha_{2,1}");
    c.exact(alpha_poly(2, 2) == tpoly({Rat(-13), Rat(0), Rat(4)}),
            "alpha_{2,2}");
    c.exact(alpha_poly(2, 3) == tpoly({Rat(36)}), "alpha_{2,3}");
    c.exact(alpha_poly(2, 4) == tpoly({Rat(-24)}), "alpha_{2,4}");
    c.exact(alpha_poly(3, 1) ==
                tpoly({frac(-1, 8), Rat(0), Rat(1), Rat(0), Rat(-2)}),
            "alpha_{3,1}");
    c.exact(alpha_poly(3, 2) ==
                tpoly({frac(121, 4), Rat(0), Rat(-26), Rat(0), Rat(4)}),
            "alpha_{3,2}");
    c.exact(alpha_poly(3, 3) == tpoly({Rat(-330), Rat(0), Rat(72)}),
            "alpha_{3,3}");
    c.exact(alpha_poly(3, 4) == tpoly({Rat(1020), Rat(0), Rat(-48)}),
            "alpha_{3,4}");
    c.exact(alpha_poly(3, 5) == tpoly({Rat(-1200)}), "alpha_{3,5}");
    c.exact(alpha_poly(3, 6) == tpoly({Rat(480)}), "alpha_{3,6}");
    for (int r = 1; r <= 4; ++r)
      for (int j = 1; j <= 2 * r; ++j)
        c.exact(alpha_poly(r, j).even_part_only(),
                "alpha parity r=" + std::to_string(r) +
                    ",j=" + std::to_string(j));
  });

  su.check("printed_complete_exponents", 0.0, [](CaseCollector& c) {
    c.exact(alpha_hat_poly(1, 0) == tpoly({Rat(2)}), "ahat_{1,0}");
    c.exact(alpha_hat_poly(1, 1) == tpoly({Rat(2)}), "ahat_{1,1}");
    RPoly a20 = tpoly({frac(-1, 2), Rat(0), Rat(2)});
    RPoly a21 = tpoly({frac(-23, 2), Rat(0), Rat(-2)});
    c.exact(alpha_hat_poly(2, 0) == a20, "ahat_{2,0}");
    c.exact(alpha_hat_poly(2, 1) == a21, "ahat_{2,1}");
    c.exact(alpha_hat_poly(2, 2) == a21, "ahat_{2,2}");
    c.exact(alpha_hat_poly(2, 3) == a20, "ahat_{2,3}");
    RPoly a30 = tpoly({frac(1, 8), Rat(0), Rat(-1), Rat(0), Rat(2)});
    RPoly a31 = tpoly({frac(237, 8), Rat(0), Rat(-21), Rat(0), Rat(-6)});
    RPoly a32 = tpoly({frac(841, 4), Rat(0), Rat(22), Rat(0), Rat(4)});
    c.exact(alpha_hat_poly(3, 0) == a30, "ahat_{3,0}");
    c.exact(alpha_hat_poly(3, 1) == a31, "ahat_{3,1}");
    c.exact(alpha_hat_poly(3, 2) == a32, "ahat_{3,2}");
    c.exact(alpha_hat_poly(3, 3) == a32, "ahat_{3,3}");
    c.exact(alpha_hat_poly(3, 4) == a31, "ahat_{3,4}");
    c.exact(alpha_hat_poly(3, 5) == a30, "ahat_{3,5}");
  });

  su.check("printed_vigneras_exponents", 0.0, [](CaseCollector& c) {
    c.exact(beta_poly(1, 0) == tpoly({Rat(0), Rat(-4)}), "beta_{1,0}");
    c.exact(beta_poly(1, 1) == tpoly({Rat(4)}), "beta_{1,1}");
    c.exact(beta_poly(2, 0).is_zero(), "beta_{2,0}");
    c.exact(beta_poly(2, 1) == tpoly({Rat(0), Rat(0), Rat(-8)}), "beta_{2,1}");
    c.exact(beta_poly(2, 2) == tpoly({Rat(0), Rat(12)}), "beta_{2,2}");
    c.exact(beta_poly(2, 3) == tpoly({Rat(-4)}), "beta_{2,3}");
    c.exact(beta_poly(3, 0).is_zero(), "beta_{3,0}");
    c.exact(beta_poly(3, 1).is_zero(), "beta_{3,1}");
    c.exact(beta_poly(3, 2) == tpoly({Rat(0), Rat(0), Rat(0), Rat(-16)}),
            "beta_{3,2}");
    c.exact(beta_poly(3, 3) == tpoly({Rat(0), Rat(0), Rat(32)}), "beta_{3,3}");
    c.exact(beta_poly(3, 4) == tpoly({Rat(0), Rat(-20)}), "beta_{3,4}");
    c.exact(beta_poly(3, 5) == tpoly({Rat(4)}), "beta_{3,5}");
  });

  su.check("printed_zeta_weights", 0.0, [](CaseCollector& c) {
    // Weight of (2t)^{r-1-m} log Z^{(r+m)}:
    // (-1)^{r-1} (r-1)! (r-1+m)! / (m! (r-1-m)!).
    auto weight = [](int r, int m) {
      Rat w = Rat(factorial(static_cast<unsigned long>(r - 1))) *
              Rat(factorial(static_cast<unsigned long>(r - 1 + m))) /
              (Rat(factorial(static_cast<unsigned long>(m))) *
               Rat(factorial(static_cast<unsigned long>(r - 1 - m))));
      if ((r - 1) % 2 != 0) w = -w;
      w.canonicalize();
      return w;
    };
    c.exact(weight(1, 0) == Rat(1), "r=1");
    c.exact(weight(2, 0) == Rat(-1), "r=2,m=0");   // -(2t) log Z^{(2)}
    c.exact(weight(2, 1) == Rat(-2), "r=2,m=1");   // -2 log Z^{(3)}
    c.exact(weight(3, 0) == Rat(2), "r=3,m=0");    // 2 (2t)^2 log Z^{(3)}
    c.exact(weight(3, 1) == Rat(12), "r=3,m=1");   // 12 (2t) log Z^{(4)}
    c.exact(weight(3, 2) == Rat(24), "r=3,m=2");   // 24 log Z^{(5)}
  });

  su.check("bernoulli_layer", 0.0, [](CaseCollector& c) {
    for (int m = 0; m <= 8; ++m)
      c.exact(barnes_bernoulli(1, m) == bernoulli_poly_exact(m),
              "order-1 reduction m=" + std::to_string(m));
    const RPoly z = RPoly::variable();
    for (int m = 1; m <= 12; ++m) {
      RPoly diff = bernoulli_poly_exact(m).compose(z + RPoly(Rat(1))) -
                   bernoulli_poly_exact(m);
      c.exact(diff == Rat(m) * RPoly::monomial(Rat(1), m - 1).compose(z),
              "difference m=" + std::to_string(m));
      RPoly refl = bernoulli_poly_exact(m).compose(RPoly(Rat(1)) - z);
      RPoly want = bernoulli_poly_exact(m);
      if (m % 2 != 0) want = -want;
      c.exact(refl == want, "reflection m=" + std::to_string(m));
    }
    for (int k = 3; k <= 13; k += 2)
      c.exact(bernoulli_number(k) == 0, "odd B_" + std::to_string(k));
  });

  su.check("stirling_layer", 0.0, [](CaseCollector& c) {
    const RPoly z = RPoly::variable();
    for (int n = 1; n <= 9; ++n) {
      RPoly rising(Rat(1));
      for (int i = 0; i < n; ++i) rising = rising * (z + RPoly(Rat(i)));
      RPoly sum;
      for (int m = 0; m <= n; ++m) {
        Rat coef = Rat(stirling_first_signed(n, m));
        if ((n + m) % 2 != 0) coef = -coef;
        sum += coef * RPoly::monomial(Rat(1), m);
      }
      c.exact(rising == sum, "rising factorial n=" + std::to_string(n));
    }
    const std::vector<Rat> zs = {frac(1, 2), Rat(2)};
    for (int n = 1; n <= 5; ++n) {
      for (int j : {0, 1, 2, 5, 9}) {
        for (const Rat& zv : zs) {
          Rat rhs(0);
          for (int k = 0; k <= n - 1; ++k)
            rhs += b_poly(n, k).eval_rat(zv) * pow_rat(Rat(j) + zv, k);
          rhs.canonicalize();
          c.exact(Rat(binom(j + n - 1, n - 1)) == rhs,
                  "lattice multiplicity n=" + std::to_string(n) +
                      ",j=" + std::to_string(j));
        }
      }
    }
  });

  su.check("tangent_coefficients", 5e-14, [](CaseCollector& c) {
    for (int j = 0; j <= 8; ++j) {
      int k = 2 * j + 2;
      Rat b = bernoulli_number(k);
      Rat exact = Rat(pow2_int(k)) * (Rat(pow2_int(k)) - Rat(1)) * b /
                  Rat(factorial(static_cast<unsigned long>(k)));
      if (j % 2 != 0) exact = -exact;
      exact.canonicalize();
      double want = exact.get_d();
      c.sample(std::abs(tan_series_coeff(j) / want - 1.0),
               "j=" + std::to_string(j));
    }
  });

  su.check("multiplicity_oracle_report", 0.0, [](CaseCollector& c) {
    for (int g : {2, 7}) {
      for (int r = 1; r <= 4; ++r) {
        for (int k = 0; k <= 6; ++k) {
          MultiplicityReport rep = multiplicity_report(r, k, g);
          std::string pt = "r=" + std::to_string(r) +
                           ",k=" + std::to_string(k) +
                           ",g=" + std::to_string(g);
          c.exact(rep.matches_a == (rep.defining == rep.form_a),
                  pt + " report(a)");
          c.exact(rep.matches_b == (rep.defining == rep.form_b),
                  pt + " report(b)");
          // Independently derived closed value of the defining sum:
          // 2(g-1)(2k+1) (t^2 - (k+1/2)^2)^{r-1}.
          RPoly base = tpoly({frac(-(2L * k + 1) * (2L * k + 1), 4), Rat(0),
                              Rat(1)});
          RPoly closed = Rat(2L * (g - 1) * (2L * k + 1)) *
                         base.pow(static_cast<unsigned>(r - 1));
          c.exact(rep.defining == closed, pt + " closed sum");
        }
      }
    }
  });

  su.check("branch_log_exponential", 1e-12, [&su](CaseCollector& c) {
    Sampler smp(1);
    const std::vector<double> lambdas = {0.0, 0.06, 0.24, 0.25, 0.35, 1.7,
                                         5.2};
    for (double lam : lambdas) {
      int accepted = 0;
      while (accepted < 40) {
        CValue s = smp.box(-2.5, 3.5, -3.0, 3.0);
        if (on_branch_cut(lam, s, 0.05)) continue;
        ++accepted;
        CValue want = CValue(lam, 0) - s * (CValue(1, 0) - s);
        CValue got = std::exp(branch_log_j(lam, s));
        c.sample(std::abs(got - want) / (1.0 + std::abs(want)),
                 "lambda=" + std::to_string(lam) + ",s=" + cstr(s));
      }
    }
    (void)su;
  });

  su.check("gamma_digamma_recurrence", 1e-10, [](CaseCollector& c) {
    Sampler smp(2);
    for (int i = 0; i < 25; ++i) {
      CValue z = smp.box(0.3, 6.0, -4.0, 4.0);
      c.sample(rel(digamma(z + CValue(1, 0)), digamma(z) + 1.0 / z),
               "psi z=" + cstr(z));
      c.sample(rel(lgamma_complex(z + CValue(1, 0)),
                   lgamma_complex(z) + std::log(z)),
               "lgamma z=" + cstr(z));
    }
    for (double x : {0.4, 1.3, 2.7, 6.1, 11.5}) {
      c.sample(std::abs(lgamma_complex(CValue(x, 0)).real() - std::lgamma(x)),
               "real axis x=" + std::to_string(x));
    }
  });

  su.check("digamma_is_lgamma_slope", 1e-6, [&su](CaseCollector& c) {
    for (CValue z : {CValue(0.8, 0), CValue(2.4, 0), CValue(1.3, 0.9),
                     CValue(3.1, -1.2), CValue(0.5, 2.0)}) {
      CValue fd = numeric_dw([](CValue u) { return lgamma_complex(u); }, z,
                             su.cfg());
      c.sample(rel(fd, digamma(z)), "z=" + cstr(z));
    }
  });

  su.check("quadrature_reference_values", 1e-12, [&su](CaseCollector& c) {
    double err = 0.0;
    CValue a = quadrature([](double x) { return CValue(x * x * x, 0); }, 0.0,
                          1.0, su.cfg(), &err);
    c.sample(std::abs(a - CValue(0.25, 0)), "cubic");
    CValue b = quadrature([](double x) { return CValue(std::sin(x), 0); }, 0.0,
                          M_PI, su.cfg(), &err);
    c.sample(std::abs(b - CValue(2.0, 0)), "sine arch");
    CValue d = quadrature(
        [](double x) { return CValue(1.0 / (1.0 + x * x), 0); }, 0.0, 1.0,
        su.cfg(), &err);
    c.sample(std::abs(d - CValue(M_PI / 4.0, 0)), "arctan kernel");
    CValue e = quadrature(
        [](double x) { return CValue(std::cos(10.0 * x) * std::exp(x), 0); },
        0.0, 2.0 * M_PI, su.cfg(), &err);
    double want = (std::exp(2.0 * M_PI) - 1.0) / 101.0;
    c.sample(std::abs(e - CValue(want, 0)) / want, "oscillatory");
    CValue f = simpson_oracle(
        [](double x) { return CValue(std::cos(10.0 * x) * std::exp(x), 0); },
        0.0, 2.0 * M_PI, 40000);
    c.sample(std::abs(f - e) / want, "simpson cross-check");
  });

  su.check("fd_differentiator", 1e-9, [&su](CaseCollector& c) {
    FDReport rep;
    CValue d = numeric_dw([](CValue w) { return std::exp(w); }, CValue(1, 0),
                          su.cfg(), &rep);
    c.sample(std::abs(d - std::exp(CValue(1, 0))) / M_E, "exp at 1");
    // the base central differences halve their step twice: order ~ 2
    c.exact(rep.observed_order > 1.5, "convergence order");
    CValue d2 = numeric_dw([](CValue w) { return std::sin(w); },
                           CValue(0.3, 0.2), su.cfg());
    c.sample(rel(d2, std::cos(CValue(0.3, 0.2))), "sin at 0.3+0.2i");
  });

  su.check("harmonic_values", 0.0, [](CaseCollector& c) {
    c.exact(harmonic(0) == 0, "H(0)");
    c.exact(harmonic(1) == 1, "H(1)");
    c.exact(harmonic(3) == frac(11, 6), "H(3)");
    c.exact(harmonic_range(2, 4) == frac(13, 12), "H(2..4)");
    for (int m = 1; m <= 30; ++m)
      c.exact(harmonic(m) - harmonic(m - 1) == frac(1, m),
              "increment m=" + std::to_string(m));
  });
}

// ---- suite: hurwitz ---------------------------------------------------------

void suite_hurwitz(Suite& su) {
  su.check("plan_independence", 1e-9, [](CaseCollector& c) {
    const std::vector<CValue> ws = {CValue(2.3, 0),   CValue(-3.7, 0),
                                    CValue(-0.5, 2),  CValue(4.1, -1.3),
                                    CValue(-6.2, 0.7), CValue(-11.5, 0)};
    const std::vector<CValue> zs = {CValue(0.6, 0), CValue(1.0, 0),
                                    CValue(3.25, 0), CValue(1.2, 0.8)};
    const std::vector<EulerMaclaurinPlan> plans = {{15, 8}, {25, 12}, {40, 16}};
    for (CValue w : ws) {
      for (CValue z : zs) {
        for (size_t i = 0; i < plans.size(); ++i) {
          for (size_t j = i + 1; j < plans.size(); ++j) {
            c.sample(rel(hurwitz_zeta(w, z, plans[i]),
                         hurwitz_zeta(w, z, plans[j])),
                     "value w=" + cstr(w) + ",z=" + cstr(z));
            c.sample(rel(hurwitz_zeta_dw(w, z, plans[i]),
                         hurwitz_zeta_dw(w, z, plans[j])),
                     "deriv w=" + cstr(w) + ",z=" + cstr(z));
          }
        }
      }
    }
  });

  su.check("bernoulli_special_values", 1e-10, [](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.5, 0), CValue(1.0, 0),
                                    CValue(1.7, 0), CValue(3.25, 0),
                                    CValue(0.3, 0.4)};
    for (int m = 1; m <= 8; ++m) {
      for (CValue z : zs) {
        CValue want = -bernoulli_poly(m, z) / double(m);
        c.sample(rel(hurwitz_zeta(CValue(1 - m, 0), z), want),
                 "m=" + std::to_string(m) + ",z=" + cstr(z));
      }
    }
  });

  su.check("defining_series", 1e-10, [](CaseCollector& c) {
    struct Pt {
      CValue w, z;
    };
    const std::vector<Pt> pts = {{CValue(3.5, 0), CValue(0.7, 0)},
                                 {CValue(3.5, 0), CValue(2.2, 0)},
                                 {CValue(7.2, 0), CValue(0.7, 0)},
                                 {CValue(2.5, 3), CValue(1.3, 0)}};
    const int N = 40000;
    for (const Pt& p : pts) {
      KahanSum acc;
      for (int n = 0; n < N; ++n) acc.add(std::pow(CValue(n, 0) + p.z, -p.w));
      CValue edge = CValue(N, 0) + p.z;
      // Euler-Maclaurin tail: integral + half endpoint + first correction.
      acc.add(std::pow(edge, CValue(1, 0) - p.w) / (p.w - CValue(1, 0)));
      acc.add(0.5 * std::pow(edge, -p.w));
      acc.add(p.w / 12.0 * std::pow(edge, -p.w - CValue(1, 0)));
      c.sample(rel(hurwitz_zeta(p.w, p.z), acc.total()),
               "w=" + cstr(p.w) + ",z=" + cstr(p.z));
    }
  });

  su.check("shift_relation", 1e-10, [](CaseCollector& c) {
    Sampler smp(3);
    int accepted = 0;
    while (accepted < 20) {
      CValue w = smp.box(-8.0, 6.0, -3.0, 3.0);
      if (std::abs(w - CValue(1, 0)) < 0.1) continue;
      CValue z = smp.box(0.3, 4.0, -2.0, 2.0);
      ++accepted;
      CValue lhs = hurwitz_zeta(w, z);
      CValue rhs = hurwitz_zeta(w, z + CValue(1, 0)) + std::pow(z, -w);
      c.sample(rel(lhs, rhs), "w=" + cstr(w) + ",z=" + cstr(z));
      c.sample(rel(hurwitz_zeta_dw(w, z),
                   hurwitz_zeta_dw(w, z + CValue(1, 0)) -
                       std::log(z) * std::pow(z, -w)),
               "deriv w=" + cstr(w) + ",z=" + cstr(z));
    }
  });

  su.check("half_argument_reflection", 1e-10, [](CaseCollector& c) {
    const std::vector<CValue> ws = {CValue(-5.5, 0),  CValue(-1.2, 0),
                                    CValue(0.3, 0),   CValue(2.7, 0),
                                    CValue(1.5, 2.0), CValue(-3.3, -1.1)};
    for (CValue w : ws) {
      CValue zeta1 = hurwitz_zeta(w, CValue(1, 0));
      CValue want = (std::pow(CValue(2, 0), w) - 1.0) * zeta1;
      c.sample(rel(hurwitz_zeta(w, CValue(0.5, 0)), want), "w=" + cstr(w));
    }
  });

  su.check("derivative_matches_fd", 1e-7, [&su](CaseCollector& c) {
    struct Pt {
      CValue w, z;
    };
    const std::vector<Pt> pts = {{CValue(0.7, 0), CValue(0.9, 0)},
                                 {CValue(-2.3, 0), CValue(1.4, 0)},
                                 {CValue(0.5, 1.5), CValue(2.0, 0)},
                                 {CValue(-4.1, 0), CValue(1.1, -0.6)},
                                 {CValue(3.2, 0), CValue(0.55, 0)}};
    for (const Pt& p : pts) {
      CValue z = p.z;
      CValue fd = numeric_dw(
          [z](CValue w) { return hurwitz_zeta(w, z); }, p.w, su.cfg());
      c.sample(rel(fd, hurwitz_zeta_dw(p.w, p.z)),
               "w=" + cstr(p.w) + ",z=" + cstr(p.z));
    }
  });

  su.check("lerch_anchor", 1e-9, [](CaseCollector& c) {
    Sampler smp(4);
    const double half_log_2pi = 0.5 * std::log(2.0 * M_PI);
    for (int i = 0; i < 12; ++i) {
      double x = smp.uni(0.3, 5.0);
      double want = std::lgamma(x) - half_log_2pi;
      double got = hurwitz_zeta_dw(CValue(0, 0), CValue(x, 0)).real();
      c.sample(std::abs(std::exp(got) / std::exp(want) - 1.0),
               "x=" + std::to_string(x));
    }
    for (int i = 0; i < 8; ++i) {
      CValue z = smp.box(0.3, 5.0, -2.0, 2.0);
      CValue want = lgamma_complex(z) - CValue(half_log_2pi, 0);
      CValue got = hurwitz_zeta_dw(CValue(0, 0), z);
      c.sample(std::abs(std::exp(got) - std::exp(want)) /
                   std::abs(std::exp(want)),
               "z=" + cstr(z));
    }
  });

  su.check("frozen_constants", 1e-12, [](CaseCollector& c) {
    c.sample(std::abs(zeta_prime_neg(0) - CValue(-0.9189385332046727418, 0)),
             "zeta'(0)");
    c.sample(std::abs(zeta_prime_neg(1) - CValue(-0.1654211437004509292, 0)),
             "zeta'(-1)");
    c.sample(std::abs(zeta_prime_neg(2) - CValue(-0.0304484570583932707, 0)),
             "zeta'(-2)");
    c.sample(std::abs(odd_zeta_half(1) - CValue(8.4143983221171600, 0)) /
                 8.41,
             "zeta(3,1/2)");
    c.sample(std::abs(hurwitz_zeta(CValue(-1, 0), CValue(0.5, 0)) -
                      CValue(1.0 / 24.0, 0)),
             "zeta(-1,1/2)");
    c.sample(std::abs(hurwitz_zeta(CValue(2, 0), CValue(1, 0)) -
                      CValue(M_PI * M_PI / 6.0, 0)) /
                 (M_PI * M_PI / 6.0),
             "zeta(2)");
  });

  su.check("derivative_half_argument", 1e-10, [](CaseCollector& c) {
    const std::vector<CValue> ws = {CValue(-1.5, 0), CValue(-4.2, 0),
                                    CValue(0.3, 0), CValue(2.6, 0),
                                    CValue(-2.5, 1.0)};
    const double log2 = std::log(2.0);
    for (CValue w : ws) {
      CValue two_w = std::pow(CValue(2, 0), w);
      CValue want = two_w * log2 * hurwitz_zeta(w, CValue(1, 0)) +
                    (two_w - 1.0) * hurwitz_zeta_dw(w, CValue(1, 0));
      c.sample(rel(hurwitz_zeta_dw(w, CValue(0.5, 0)), want), "w=" + cstr(w));
    }
  });

  su.check("domain_guards", 0.0, [](CaseCollector& c) {
    c.exact(raises<pole_error>(
                [] { return hurwitz_zeta(CValue(1, 0), CValue(0.7, 0)); }),
            "pole at w=1");
    c.exact(raises<domain_error>(
                [] { return hurwitz_zeta(CValue(2, 0), CValue(-0.5, 0)); }),
            "Re(z) <= 0");
    c.exact(raises<domain_error>([] { return odd_zeta_half(0); }),
            "divergent odd index");
  });
}

// ---- suite: multigamma ------------------------------------------------------

void suite_multigamma(Suite& su) {
  su.check("lattice_sum", 1e-8, [](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.8, 0), CValue(1.5, 0.5)};
    for (int n : {2, 3}) {
      for (CValue w : {CValue(n + 2.5, 0), CValue(n + 1.5, 1.0)}) {
        for (CValue z : zs) {
          KahanSum acc;
          const int J = 60000;
          double mult = 1.0;  // binom(j+n-1, n-1)
          for (int j = 0; j < J; ++j) {
            mult = 1.0;
            for (int i = 1; i <= n - 1; ++i) mult *= double(j + i) / double(i);
            acc.add(mult * std::pow(z + CValue(j, 0), -w));
          }
          // Tail from j = J: the weight is prod_{i<n} (u + i - z)/(n-1)! in
          // u = j + z, so the integral from U = J + z is elementary; the
          // half-term makes the remainder O(U^{n-2-Re w}).
          std::vector<CValue> poly{CValue(1, 0)};
          for (int i = 1; i <= n - 1; ++i) {
            std::vector<CValue> next(poly.size() + 1, CValue(0, 0));
            for (size_t a = 0; a < poly.size(); ++a) {
              next[a + 1] += poly[a];
              next[a] += poly[a] * (CValue(i, 0) - z);
            }
            poly = next;
          }
          double fac = 1.0;
          for (int i = 2; i <= n - 1; ++i) fac *= i;
          CValue U = z + CValue(J, 0);
          for (size_t a = 0; a < poly.size(); ++a) {
            acc.add(poly[a] / fac * std::pow(U, CValue(a + 1.0, 0) - w) /
                    (w - CValue(a + 1.0, 0)));
          }
          double mult_j = 1.0;
          for (int i = 1; i <= n - 1; ++i) mult_j *= double(J + i) / i;
          acc.add(0.5 * mult_j * std::pow(U, -w));
          c.sample(rel(barnes_zeta(n, w, z), acc.total()),
                   "n=" + std::to_string(n) + ",w=" + cstr(w) +
                       ",z=" + cstr(z));
        }
      }
    }
  });

  su.check("special_values", 1e-9, [](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.5, 0), CValue(1, 0), CValue(2, 0),
                                    CValue(1, 1)};
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        for (CValue z : zs) {
          CValue lhs = barnes_zeta(n, CValue(1 - m, 0), z);
          CValue rhs = -barnes_bernoulli(n, m).eval(z) / double(m);
          c.sample(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)),
                   "n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                       ",z=" + cstr(z));
        }
      }
    }
  });

  su.check("gamma_ladder", 1e-9, [](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.7, 0), CValue(1.3, 0),
                                    CValue(2.1, 0.4), CValue(0.35, 0)};
    for (int n = 1; n <= 4; ++n) {
      for (CValue z : zs) {
        CValue lower = (n == 1) ? -std::log(z)
                                : log_multigamma(n - 1, 1, z).value;
        CValue res = log_multigamma(n, 1, z + CValue(1, 0)).value -
                     log_multigamma(n, 1, z).value + lower;
        c.sample(std::abs(res), "n=" + std::to_string(n) + ",z=" + cstr(z));
      }
    }
  });

  su.check("depth_ladder", 1e-9, [](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.6, 0), CValue(1.7, 0),
                                    CValue(1.2, 0.9)};
    for (int r = 1; r <= 4; ++r) {
      for (CValue z : zs) {
        CValue res = log_multigamma(1, r, z + CValue(1, 0)).value -
                     log_multigamma(1, r, z).value -
                     std::pow(z, r - 1) * std::log(z);
        c.sample(std::abs(res), "r=" + std::to_string(r) + ",z=" + cstr(z));
      }
    }
  });

  su.check("vigneras_normalization", 1e-9, [](CaseCollector& c) {
    for (CValue z : {CValue(0.7, 0), CValue(2.3, 0), CValue(1.4, -0.8)}) {
      c.sample(rel(log_vigneras_G(1, z).value, lgamma_complex(z)),
               "G_1 z=" + cstr(z));
    }
    for (CValue z : {CValue(0.8, 0), CValue(1.9, 0), CValue(1.1, 0.5)}) {
      CValue res = log_vigneras_G(2, z + CValue(1, 0)).value -
                   log_vigneras_G(2, z).value - lgamma_complex(z);
      c.sample(std::abs(res), "G_2 ladder z=" + cstr(z));
    }
  });

  su.check("sine_classic", 1e-10, [](CaseCollector& c) {
    for (CValue z : {CValue(0.2, 0), CValue(0.5, 0), CValue(0.77, 0),
                     CValue(0.4, 0.3)}) {
      CValue want = std::log(2.0 * std::sin(M_PI * z));
      c.sample(rel(log_mult_sine(1, z).value, want), "normalized z=" + cstr(z));
    }
    for (double x : {0.1, 0.45, 0.9}) {
      CValue want = std::log(CValue(2.0 * std::sin(M_PI * x), 0));
      c.sample(std::abs(log_basic_sine(1, x).value - want),
               "basic x=" + std::to_string(x));
    }
  });

  su.check("sine_ladder", 1e-9, [](CaseCollector& c) {
    struct Pt {
      int n;
      CValue z;
    };
    const std::vector<Pt> pts = {{2, CValue(0.4, 0)},  {2, CValue(0.8, 0.3)},
                                 {3, CValue(0.4, 0)},  {3, CValue(1.2, 0)},
                                 {4, CValue(1.2, 0)},  {4, CValue(0.8, 0.3)}};
    for (const Pt& p : pts) {
      CValue res = log_mult_sine(p.n, p.z + CValue(1, 0)).value -
                   log_mult_sine(p.n, p.z).value +
                   log_mult_sine(p.n - 1, p.z).value;
      c.sample(std::abs(res), "n=" + std::to_string(p.n) + ",z=" + cstr(p.z));
    }
  });

  su.check("gamma_reflection_product", 1e-8, [](CaseCollector& c) {
    for (int n = 1; n <= 4; ++n) {
      for (CValue z : {CValue(0.3, 0), CValue(0.45, 0), CValue(0.35, 0.2)}) {
        KahanSum acc;
        for (int j = 1; j <= n; ++j) {
          double coef = double(binom(n - 1, j - 1).get_si());
          if (j % 2 != 0) coef = -coef;
          acc.add(coef * (log_mult_sine(j, z).value +
                          log_multigamma(j, 1, z).value));
        }
        CValue res =
            log_multigamma(n, 1, CValue(1, 0) - z).value - acc.total();
        c.sample(std::abs(res), "n=" + std::to_string(n) + ",z=" + cstr(z));
      }
    }
  });

  su.check("sine_cosine_duplication", 1e-9, [](CaseCollector& c) {
    for (int n = 1; n <= 3; ++n) {
      for (double z : {0.08, 0.17, 0.23}) {
        CValue lhs = log_basic_cosine(n, z).value;
        CValue rhs = std::pow(2.0, 1 - n) * log_basic_sine(n, 2 * z).value -
                     log_basic_sine(n, z).value;
        c.sample(std::abs(lhs - rhs),
                 "n=" + std::to_string(n) + ",z=" + std::to_string(z));
      }
    }
  });

  su.check("barnes_zeta_ladder", 1e-9, [](CaseCollector& c) {
    for (int n : {2, 3}) {
      for (CValue w : {CValue(4.5, 0), CValue(-1.3, 0.8)}) {
        for (CValue z : {CValue(0.8, 0), CValue(1.6, 0)}) {
          CValue lhs = barnes_zeta(n, w, z);
          CValue rhs = barnes_zeta(n, w, z + CValue(1, 0)) +
                       barnes_zeta(n - 1, w, z);
          c.sample(rel(lhs, rhs), "n=" + std::to_string(n) + ",w=" + cstr(w) +
                                      ",z=" + cstr(z));
        }
      }
    }
  });

  su.check("order_one_is_hurwitz", 1e-12, [](CaseCollector& c) {
    for (CValue w : {CValue(2.4, 0), CValue(-1.7, 0.9)}) {
      for (CValue z : {CValue(0.7, 0), CValue(1.9, 0.3)}) {
        c.sample(rel(barnes_zeta(1, w, z), hurwitz_zeta(w, z)),
                 "w=" + cstr(w) + ",z=" + cstr(z));
      }
    }
  });

  su.check("domain_guards", 0.0, [](CaseCollector& c) {
    c.exact(raises<pole_error>(
                [] { return barnes_zeta(2, CValue(1, 0), CValue(0.5, 0)); }),
            "pole w=1");
    c.exact(raises<pole_error>(
                [] { return barnes_zeta(2, CValue(2, 0), CValue(0.5, 0)); }),
            "pole w=2");
    c.exact(raises<domain_error>(
                [] { return log_multigamma(1, 1, CValue(-0.2, 0)); }),
            "gamma domain");
    c.exact(raises<domain_error>(
                [] { return log_mult_sine(2, CValue(2.5, 0)); }),
            "sine domain");
    c.exact(raises<domain_error>([] { return log_basic_cosine(1, 0.6); }),
            "cosine domain");
  });
}

// ---- suite: gammafactor -----------------------------------------------------

void suite_gammafactor(Suite& su) {
  su.check("moment_bridge", 1e-7, [&su](CaseCollector& c) {
    struct Pt {
      int m;
      double off, t;
    };
    const std::vector<Pt> pts = {{1, 0.8, 0.15}, {1, 1.6, 0.30}, {1, 2.4, 0.45},
                                 {3, 0.8, 0.30}, {3, 1.6, 0.45}, {3, 2.4, 0.15},
                                 {5, 0.8, 0.45}, {5, 1.6, 0.15}, {5, 2.4, 0.30}};
    for (const Pt& p : pts) {
      CValue w((p.m + 1) / 2.0 + p.off, 0);
      CValue a = J_direct(p.m, w, p.t, su.cfg());
      CValue b = J_decomposed(p.m, w, p.t, su.cfg());
      c.sample(std::abs(a - b) / (1.0 + std::abs(a)),
               "m=" + std::to_string(p.m) + ",w=" + cstr(w) +
                   ",t=" + std::to_string(p.t));
    }
    CValue w(2.1, 0.9);
    c.sample(std::abs(J_direct(1, w, 0.3, su.cfg()) -
                      J_decomposed(1, w, 0.3, su.cfg())),
             "complex w");
  });

  su.check("decomposition_pieces", 1e-8, [&su](CaseCollector& c) {
    const std::vector<CValue> ws = {CValue(-0.7, 0), CValue(0.25, 0),
                                    CValue(-0.2, 0.3), CValue(0.4, 0)};
    for (int m : {1, 3, 5}) {
      for (CValue w : ws) {
        for (double t : {0.15, 0.45}) {
          CValue a = J_m1_quadrature(m, w, t, su.cfg());
          CValue b = J_m1_beta_series(m, w, t);
          c.sample(std::abs(a - b) / (1.0 + std::abs(a)),
                   "m=" + std::to_string(m) + ",w=" + cstr(w) +
                       ",t=" + std::to_string(t));
        }
      }
    }
  });

  su.check("shifted_sum_defining", 1e-9, [](CaseCollector& c) {
    const double t = 0.3;
    for (int m : {1, 3}) {
      for (CValue w : {CValue((m + 3) / 2.0, 0), CValue((m + 3) / 2.0, 1.1)}) {
        const int K = 20000;
        KahanSum acc;
        for (int k = 0; k <= K; ++k) {
          double h = k + 0.5;
          acc.add(std::pow(CValue(h, 0), CValue(m, 0) - 2.0 * w) *
                  std::pow(CValue(1.0 - t * t / (h * h), 0), -w));
        }
        // Tail via the binomial expansion of (1 - t^2/h^2)^{-w}: each order
        // contributes a Hurwitz zeta starting at K + 3/2.
        CValue coef(1, 0);
        for (int i = 0; i <= 3; ++i) {
          CValue arg = 2.0 * w - CValue(m, 0) + CValue(2 * i, 0);
          acc.add(coef * std::pow(t, 2 * i) *
                  hurwitz_zeta(arg, CValue(K + 1.5, 0)));
          coef *= (w + CValue(i, 0)) / CValue(i + 1, 0);
        }
        c.sample(rel(J_m2_series(m, w, t), acc.total()),
                 "m=" + std::to_string(m) + ",w=" + cstr(w));
      }
    }
  });

  su.check("continuation_at_zero", 1e-10, [](CaseCollector& c) {
    for (int m : {1, 3, 5}) {
      for (double t : {0.12, 0.31, 0.44}) {
        std::string pt = "m=" + std::to_string(m) + ",t=" + std::to_string(t);
        CValue j1 = J_m1_beta_series(m, CValue(0, 0), t);
        c.exact(std::abs(j1) == 0.0, pt + " first piece");
        CValue want = -bernoulli_poly(m + 1, CValue(0.5, 0)) / double(m + 1) +
                      CValue(std::pow(t, m + 1) / (m + 1), 0);
        c.sample(std::abs(J_m2_series(m, CValue(0, 0), t) - want),
                 pt + " second piece");
        double sign = ((m + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        c.sample(std::abs(J_decomposed(m, CValue(0, 0), t) - sign * want),
                 pt + " assembled");
      }
    }
  });

  su.check("derivative_at_zero", 1e-6, [&su](CaseCollector& c) {
    for (int m : {1, 3, 5}) {
      for (double t : {0.12, 0.25, 0.38}) {
        CValue fd = numeric_dw(
            [m, t, &su](CValue w) { return J_decomposed(m, w, t, su.cfg()); },
            CValue(0, 0), su.cfg());
        c.sample(std::abs(fd - J_dw0_closed(m, t)),
                 "m=" + std::to_string(m) + ",t=" + std::to_string(t));
      }
    }
  });

  su.check("remainder_two_paths", 1e-9, [](CaseCollector& c) {
    for (int m : {1, 3, 5}) {
      for (double t : {0.1, 0.25, 0.4}) {
        std::string pt = "m=" + std::to_string(m) + ",t=" + std::to_string(t);
        CValue series = R_series(m, t, 0);
        c.sample(std::abs(series - R_closed(m, t)), pt);
        c.sample(std::abs(series - R_series(m, t, 80)) * 1e3,
                 pt + " term-count stability");
      }
    }
  });

  su.check("partial_integral_two_paths", 1e-8, [&su](CaseCollector& c) {
    const std::vector<CValue> zs = {CValue(0.8, 0), CValue(1.6, 0),
                                    CValue(1.1, 0.6)};
    for (int m : {1, 2, 3, 4}) {
      for (double t : {0.2, 0.4}) {
        for (CValue z : zs) {
          CValue a = Phi_integral(m, t, z, su.cfg());
          CValue b = Phi_closed(m, t, z);
          c.sample(std::abs(a - b), "m=" + std::to_string(m) +
                                        ",t=" + std::to_string(t) +
                                        ",z=" + cstr(z));
        }
      }
    }
  });

  su.check("remainder_cosine_link", 1e-9, [&su](CaseCollector& c) {
    const double psi_half = -1.9635100260214234794;  // psi(1/2)
    for (int m : {1, 3}) {
      for (double t : {0.2, 0.35}) {
        CValue res = R_series(m, t, 0) + Phi_integral(m, t, CValue(0.5, 0),
                                                      su.cfg()) +
                     0.5 * log_basic_cosine(m + 1, t, su.cfg()).value -
                     CValue(psi_half * std::pow(t, m + 1) / (m + 1), 0);
        c.sample(std::abs(res),
                 "m=" + std::to_string(m) + ",t=" + std::to_string(t));
      }
    }
  });

  su.check("cross_form_agreement", 1e-8, [](CaseCollector& c) {
    Sampler smp(5);
    for (int r : {1, 2, 3}) {
      for (int i = 0; i < 25; ++i) {
        CValue s = smp.box(0.2, 3.0, -1.5, 1.5);
        CValue a = log_phi(r, s, PhiForm::MilnorForm).value;
        CValue b = log_phi(r, s, PhiForm::BarnesForm).value;
        CValue v = log_phi(r, s, PhiForm::VignerasForm).value;
        double worst = std::max({std::abs(a - b), std::abs(a - v),
                                 std::abs(b - v)});
        c.sample(worst, "r=" + std::to_string(r) + ",s=" + cstr(s));
      }
    }
  });

  su.check("moment_assembly", 1e-8, [](CaseCollector& c) {
    for (int r : {1, 2, 3}) {
      for (double s : {0.6, 0.72, 0.85, 0.95}) {
        CValue a = log_phi_from_moments(r, s).value;
        CValue b = log_phi(r, CValue(s, 0), PhiForm::MilnorForm).value;
        c.sample(std::abs(a - b),
                 "r=" + std::to_string(r) + ",s=" + std::to_string(s));
      }
    }
  });

  su.check("functional_equation", 1e-7, [](CaseCollector& c) {
    Sampler smp(6);
    int r = 1;
    for (int i = 0; i < 20; ++i) {
      CValue s = smp.box(0.08, 0.92, -0.8, 0.8);
      c.sample(std::abs(phi_fe_residual(r, s)),
               "r=" + std::to_string(r) + ",s=" + cstr(s));
      r = (r % 3) + 1;
    }
  });

  su.check("sine_shift_product", 1e-8, [](CaseCollector& c) {
    for (int r : {1, 2}) {
      for (CValue s : {CValue(0.3, 0), CValue(0.62, 0), CValue(0.5, 0.25)}) {
        CValue t = s - CValue(0.5, 0);
        KahanSum lhs;
        for (int j = 1; j <= 2 * r; ++j)
          lhs.add(alpha_poly(r, j).eval(t) * log_mult_sine(j, s).value);
        KahanSum rhs;
        for (int l = 0; l <= 2 * r - 1; ++l) {
          CValue shift(l, 0);
          rhs.add(alpha_hat_poly(r, l).eval(t) *
                  (log_multigamma(2 * r, 1, CValue(1, 0) - s + shift).value -
                   log_multigamma(2 * r, 1, s + shift).value));
        }
        c.sample(std::abs(lhs.total() - rhs.total()),
                 "r=" + std::to_string(r) + ",s=" + cstr(s));
      }
    }
  });

  su.check("domain_guards", 0.0, [&su](CaseCollector& c) {
    c.exact(raises<domain_error>(
                [&su] { return J_direct(3, CValue(1.0, 0), 0.3, su.cfg()); }),
            "direct moment divergence");
    c.exact(raises<pole_error>(
                [&su] {
                  return J_decomposed(1, CValue(0.5, 0), 0.3, su.cfg());
                }),
            "half-integer prefactor pole");
    c.exact(raises<pole_error>(
                [] { return J_m2_series(1, CValue(1.0, 0), 0.3); }),
            "shifted-sum pole");
    c.exact(raises<domain_error>(
                [&su] { return J_direct(2, CValue(5, 0), 0.3, su.cfg()); }),
            "even moment index");
    c.exact(raises<domain_error>(
                [&su] { return J_direct(3, CValue(5, 0), 0.6, su.cfg()); }),
            "t out of range");
    c.exact(raises<domain_error>([] { return R_series(1, 0.5, 0); }),
            "remainder t range");
    c.exact(raises<domain_error>(
                [] { return log_phi(0, CValue(1, 0), PhiForm::BarnesForm); }),
            "depth must be positive");
    c.exact(raises<domain_error>(
                [] {
                  return log_phi(1, CValue(-0.1, 0), PhiForm::BarnesForm);
                }),
            "left half-plane");
  });
}

// ---- suite: selberg ---------------------------------------------------------

void suite_selberg(Suite& su) {
  const LengthSpectrum& spec = builtin_spectrum();
  const TruncationPolicy pol{};

  su.check("euler_product_two_paths", 1e-10, [&](CaseCollector& c) {
    const std::vector<CValue> ss = {CValue(2.0, 0), CValue(2.5, 0),
                                    CValue(2.0, 1.5), CValue(3.1, -0.9)};
    for (int m = 1; m <= 5; ++m) {
      for (CValue s : ss) {
        double tail_a = 0.0, tail_b = 0.0;
        CValue a = log_poly_selberg(m, s, spec, pol, &tail_a);
        CValue b = log_poly_selberg_product(m, s, spec, pol, &tail_b);
        c.sample(std::abs(a - b) + tail_a + tail_b,
                 "m=" + std::to_string(m) + ",s=" + cstr(s));
      }
    }
  });

  su.check("truncation_certification", 1e-14, [&](CaseCollector& c) {
    for (int m : {1, 2}) {
      for (CValue s : {CValue(1.6, 0), CValue(2.2, 0.7)}) {
        TruncationPolicy coarse = pol;
        coarse.tail_target = 1e-6;
        TruncationPolicy fine = pol;
        fine.tail_target = 1e-15;
        double bound_coarse = 0.0, bound_fine = 0.0;
        CValue a = log_poly_selberg(m, s, spec, coarse, &bound_coarse);
        CValue b = log_poly_selberg(m, s, spec, fine, &bound_fine);
        double overshoot = std::abs(a - b) - bound_coarse - bound_fine;
        c.sample(std::max(0.0, overshoot),
                 "m=" + std::to_string(m) + ",s=" + cstr(s));
      }
    }
  });

  su.check("derivative_ladder", 1e-6, [&](CaseCollector& c) {
    for (int m : {2, 3, 4}) {
      for (CValue s : {CValue(1.5, 0), CValue(1.9, 0.7), CValue(2.5, 0)}) {
        c.sample(std::abs(ladder_residual_poly(m, s, spec, pol, su.cfg())),
                 "m=" + std::to_string(m) + ",s=" + cstr(s));
      }
    }
  });

  su.check("depth_ladder", 1e-6, [&](CaseCollector& c) {
    for (int r : {2, 3}) {
      for (CValue s : {CValue(1.5, 0), CValue(1.8, 0), CValue(2.2, 0.5)}) {
        c.sample(std::abs(ladder_residual_MS(r, s, spec, pol, su.cfg())),
                 "r=" + std::to_string(r) + ",s=" + cstr(s));
      }
    }
  });

  su.check("iterated_integral_m2", 1e-6, [&](CaseCollector& c) {
    c.sample(std::abs(iterated_integral_check(2, CValue(3, 0), CValue(2, 0),
                                              spec, pol, su.cfg())),
             "s=3,a=2");
    c.sample(std::abs(iterated_integral_check(2, CValue(1.8, 0),
                                              CValue(1.4, 0), spec, pol,
                                              su.cfg())),
             "s=1.8,a=1.4");
    c.sample(std::abs(iterated_integral_check(2, CValue(2, 0), CValue(2, 0),
                                              spec, pol, su.cfg())),
             "empty path");
  });

  su.check("iterated_integral_m3", 1e-5, [&](CaseCollector& c) {
    c.sample(std::abs(iterated_integral_check(3, CValue(2.5, 0), CValue(2, 0),
                                              spec, pol, su.cfg())),
             "s=2.5,a=2");
  });

  su.check("iterated_integral_m4", 1e-4, [&](CaseCollector& c) {
    c.sample(std::abs(iterated_integral_check(4, CValue(1.9, 0),
                                              CValue(1.6, 0), spec, pol,
                                              su.cfg())),
             "s=1.9,a=1.6");
  });

  su.check("assembly_printed_weights", 1e-13, [&](CaseCollector& c) {
    for (CValue s : {CValue(2.3, 0), CValue(2.1, 0.8)}) {
      CValue t2 = 2.0 * (s - CValue(0.5, 0));
      CValue z1 = log_poly_selberg(1, s, spec, pol);
      CValue z2 = log_poly_selberg(2, s, spec, pol);
      CValue z3 = log_poly_selberg(3, s, spec, pol);
      CValue z4 = log_poly_selberg(4, s, spec, pol);
      CValue z5 = log_poly_selberg(5, s, spec, pol);
      c.sample(rel(log_milnor_selberg(1, s, spec, pol), z1),
               "r=1,s=" + cstr(s));
      c.sample(rel(log_milnor_selberg(2, s, spec, pol), -t2 * z2 - 2.0 * z3),
               "r=2,s=" + cstr(s));
      c.sample(rel(log_milnor_selberg(3, s, spec, pol),
                   2.0 * t2 * t2 * z3 + 12.0 * t2 * z4 + 24.0 * z5),
               "r=3,s=" + cstr(s));
    }
  });

  su.check("determinant_linearity", 1e-12, [&](CaseCollector& c) {
    LengthSpectrum g3 = spec;
    g3.genus = 3;
    for (int r : {1, 2}) {
      for (CValue s : {CValue(1.3, 0), CValue(1.6, 0.4)}) {
        CValue diff = log_higher_det_geom(r, s, g3, pol) -
                      log_higher_det_geom(r, s, spec, pol);
        c.sample(rel(diff, log_phi(r, s, PhiForm::BarnesForm).value),
                 "r=" + std::to_string(r) + ",s=" + cstr(s));
        c.sample(std::abs(log_milnor_selberg(r, s, g3, pol) -
                          log_milnor_selberg(r, s, spec, pol)),
                 "genus independence r=" + std::to_string(r));
      }
    }
  });

  su.check("complete_vs_geometric", 1e-8, [&](CaseCollector& c) {
    for (int r : {1, 2, 3}) {
      for (CValue s : {CValue(1.2, 0), CValue(1.45, 0), CValue(1.3, 0.2)}) {
        CValue t = s - CValue(0.5, 0);
        CValue res = log_complete_MS(r, s, spec, pol) -
                     log_higher_det_geom(r, s, spec, pol) +
                     double(spec.genus - 1) * C_const(r).get_d() *
                         std::pow(t, 2 * r);
        c.sample(std::abs(res), "r=" + std::to_string(r) + ",s=" + cstr(s));
      }
    }
  });

  su.check("gamma_shift_identity", 1e-8, [&](CaseCollector& c) {
    for (int r : {1, 2, 3}) {
      for (CValue s : {CValue(0.8, 0), CValue(1.2, 0), CValue(1.5, 0.5)}) {
        CValue t = s - CValue(0.5, 0);
        KahanSum lhs;
        for (int l = 0; l <= 2 * r - 1; ++l)
          lhs.add(alpha_hat_poly(r, l).eval(t) *
                  log_multigamma(2 * r, 1, s + CValue(l, 0)).value);
        KahanSum rhs;
        for (int mth = 1; mth <= 2 * r; ++mth)
          rhs.add(alpha_poly(r, mth).eval(t) *
                  log_multigamma(mth, 1, s).value);
        c.sample(std::abs(lhs.total() - rhs.total()),
                 "r=" + std::to_string(r) + ",s=" + cstr(s));
      }
    }
  });

  su.check("reflection_diagnostic_wiring", 1e-12, [&](CaseCollector& c) {
    for (CValue s : {CValue(1.2, 0), CValue(1.6, 0.3)}) {
      // Printed depth-1 sine exponents: S_1(s)^2 S_2(s)^{-4} per unit genus
      // excess, i.e. minus the alpha polynomials.
      CValue rhs = double(spec.genus - 1) *
                       (2.0 * std::log(2.0 * std::sin(M_PI * s)) -
                        4.0 * log_mult_sine(2, s).value) +
                   log_milnor_selberg(1, s, spec, pol);
      c.sample(std::abs(fe_diagnostic_MS(1, s, rhs, spec, pol)),
               "s=" + cstr(s));
    }
  });

  su.check("monotone_euler_product", 0.0, [&](CaseCollector& c) {
    std::vector<double> mags;
    for (double s : {1.3, 1.7, 2.4}) {
      double prev = std::numeric_limits<double>::infinity();
      for (int m = 1; m <= 5; ++m) {
        CValue v = log_poly_selberg(m, CValue(s, 0), spec, pol);
        std::string pt = "m=" + std::to_string(m) + ",s=" + std::to_string(s);
        c.exact(std::abs(v.imag()) < 1e-18, pt + " realness");
        c.exact(v.real() < 0.0, pt + " sign");
        c.exact(std::abs(v.real()) < prev, pt + " order monotone");
        prev = std::abs(v.real());
      }
      mags.push_back(std::abs(
          log_poly_selberg(1, CValue(s, 0), spec, pol).real()));
    }
    c.exact(mags[0] > mags[1] && mags[1] > mags[2], "decay in s");
  });

  su.check("multiplicity_linearity", 1e-13, [&](CaseCollector& c) {
    LengthSpectrum doubled = spec;
    for (auto& p : doubled.primitives) p.multiplicity *= 2;
    for (int m : {1, 3}) {
      for (CValue s : {CValue(1.4, 0), CValue(2.0, 0.6)}) {
        CValue a = log_poly_selberg(m, s, spec, pol);
        CValue b = log_poly_selberg(m, s, doubled, pol);
        c.sample(rel(b, 2.0 * a), "m=" + std::to_string(m) + ",s=" + cstr(s));
      }
    }
  });

  su.check("spectrum_io", 0.0, [&](CaseCollector& c) {
    const std::string good = R"({
      "genus": 2,
      "label": "synthetic",
      "primitives": [
        {"norm": 7.25, "multiplicity": 1},
        {"norm": 12.0625, "multiplicity": 1},
        {"norm": 19.84375, "multiplicity": 1},
        {"norm": 33.09765625, "multiplicity": 1},
        {"norm": 57.912109375, "multiplicity": 1}
      ]
    })";
    LengthSpectrum parsed = parse_spectrum_json(good);
    c.exact(parsed.genus == spec.genus, "genus round-trip");
    c.exact(parsed.label == spec.label, "label round-trip");
    c.exact(parsed.primitives.size() == spec.primitives.size(),
            "count round-trip");
    for (size_t i = 0; i < parsed.primitives.size(); ++i) {
      c.exact(parsed.primitives[i].norm == spec.primitives[i].norm,
              "norm bit-exact i=" + std::to_string(i));
      c.exact(parsed.primitives[i].multiplicity ==
                  spec.primitives[i].multiplicity,
              "multiplicity i=" + std::to_string(i));
    }
    auto fails_at = [&c](const std::string& text, const std::string& what) {
      try {
        (void)parse_spectrum_json(text);
        c.exact(false, what + " accepted");
      } catch (const spectrum_parse_error& e) {
        c.exact(e.line >= 1 && e.column >= 1, what + " position");
      } catch (...) {
        c.exact(false, what + " wrong exception type");
      }
    };
    fails_at("{ not json", "malformed document");
    fails_at(R"({"genus": 2, "label": "x", "primitives": )"
             R"([{"norm": 7.0, "multiplicity": 1}], "extra": 1})",
             "unknown top-level key");
    fails_at(R"({"genus": 2, "label": "x", "primitives": )"
             R"([{"norm": 7.0, "multiplicity": 1, "weight": 2}]})",
             "unknown primitive key");
    fails_at(R"({"genus": 1, "label": "x", "primitives": )"
             R"([{"norm": 7.0, "multiplicity": 1}]})",
             "genus too small");
    fails_at(R"({"genus": 2, "label": "x", "primitives": )"
             R"([{"norm": 0.5, "multiplicity": 1}]})",
             "norm below 1");
    fails_at(R"({"genus": 2, "label": "x", "primitives": )"
             R"([{"norm": 7.0, "multiplicity": 0}]})",
             "multiplicity below 1");
    fails_at(R"({"genus": 2, "label": "x", "primitives": []})",
             "empty primitive list");
  });

  su.check("domain_guards", 0.0, [&](CaseCollector& c) {
    c.exact(raises<domain_error>([&] {
              return log_poly_selberg(1, CValue(0.9, 0), spec, pol);
            }),
            "convergence half-plane");
    c.exact(raises<domain_error>([&] {
              return iterated_integral_check(5, CValue(2, 0), CValue(2, 0),
                                             spec, pol);
            }),
            "nest depth cap");
    c.exact(raises<domain_error>([&] {
              return fe_diagnostic_MS(1, CValue(2.5, 0), CValue(0, 0), spec,
                                      pol);
            }),
            "diagnostic strip");
    c.exact(raises<domain_error>([&] { return polylog(1, CValue(1.0, 0)); }),
            "polylog radius");
  });
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "combinatorics", "hurwitz", "multigamma", "gammafactor", "selberg"};
  return names;
}

VerificationReport run_suite(const std::string& name,
                             const ToleranceConfig& cfg) {
  Suite su(name, cfg);
  if (name == "combinatorics") {
    suite_combinatorics(su);
  } else if (name == "hurwitz") {
    suite_hurwitz(su);
  } else if (name == "multigamma") {
    suite_multigamma(su);
  } else if (name == "gammafactor") {
    suite_gammafactor(su);
  } else if (name == "selberg") {
    suite_selberg(su);
  } else {
    throw domain_error("run_suite: unknown suite '" + name + "'");
  }
  return su.take();
}

std::vector<VerificationReport> run_all(const ToleranceConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const std::string& name : verify_suite_names())
    out.push_back(run_suite(name, cfg));
  return out;
}

std::string format_report(const VerificationReport& rep) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  for (const CaseResult& c : rep.cases) {
    os << (c.passed ? "  [PASS] " : "  [FAIL] ") << rep.suite << "/" << c.name
       << "  residual=" << c.residual << "  tol=" << c.tolerance;
    if (!c.point.empty()) os << "  @ " << c.point;
    os << "\n";
  }
  os << "suite " << rep.suite << ": " << rep.cases_passed() << "/"
     << rep.cases_total() << " cases passed, max residual "
     << rep.max_residual() << "\n";
  return os.str();
}

}  // namespace hdet
