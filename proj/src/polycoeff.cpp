#include "hdet/polycoeff.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hdet/errors.hpp"
#include "hdet/numkernel.hpp"

namespace hdet {

namespace {

// Immutable-after-insert coefficient store shared by all families.
class CoefficientTable {
 public:
  using Key = std::tuple<PolyFamily, int, int>;
  // Builders may themselves consult other cached families, so the lock must
  // be re-entrant; map references stay valid because entries are never
  // erased.
  template <typename F>
  const RPoly& get(PolyFamily fam, int i, int j, F&& build) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = table_.find({fam, i, j});
    if (it != table_.end()) return it->second;
    RPoly p = build();
    return table_.emplace(Key{fam, i, j}, std::move(p)).first->second;
  }

 private:
  std::recursive_mutex mu_;
  std::map<Key, RPoly> table_;
};

CoefficientTable& table() {
  static CoefficientTable t;
  return t;
}

RPoly z_plus(const Rat& c) {  // the polynomial z + c
  RPoly p = RPoly::variable();
  p += RPoly(c);
  return p;
}

RPoly build_c(int r, int j) {
  RPoly p;
  for (int l = 0; l <= j - 1; ++l) {
    Rat coef = Rat(binom(j - 1, l));
    if (l % 2) coef = -coef;
    p += coef * z_plus(Rat(-(l + 1))).pow(static_cast<unsigned>(r - 1));
  }
  return p;
}

RPoly build_b(int n, int k) {
  RPoly p;
  for (int m = k; m <= n - 1; ++m) {
    Rat coef = Rat(binom(m, k)) * Rat(stirling_first_signed(n, m + 1));
    p += coef * RPoly::monomial(Rat(1), m - k);
  }
  Rat norm = Rat(1) / Rat(factorial(static_cast<unsigned long>(n - 1)));
  if ((n - 1 - k) % 2) norm = -norm;
  return norm * p;
}

RPoly build_alpha(int r, int j) {
  RPoly p;
  for (int l = (j + 1) / 2; l <= r; ++l) {
    Rat coef = Rat(4) * Rat(binom(r - 1, l - 1)) *
               c_poly(2 * l, j).eval_rat(Rat(1, 2));
    if ((l - 1) % 2) coef = -coef;
    coef.canonicalize();
    p += RPoly::monomial(coef, 2 * (r - l));
  }
  return p;
}

}  // namespace

RPoly c_poly(int r, int j) {
  if (r < 1 || j < 1) throw domain_error("c_poly: requires r, j >= 1");
  return table().get(PolyFamily::c, r, j, [&] { return build_c(r, j); });
}

RPoly c_poly_recursive(int r, int j) {
  if (r < 1 || j < 1) throw domain_error("c_poly_recursive: r, j >= 1");
  if (r == 1) return j == 1 ? RPoly(Rat(1)) : RPoly();
  RPoly p = z_plus(Rat(-1)) * c_poly_recursive(r - 1, j);
  if (j >= 2) {
    RPoly shifted = c_poly_recursive(r - 1, j - 1).compose(z_plus(Rat(-1)));
    p += Rat(j - 1) * shifted;
  }
  return p;
}

RPoly b_poly(int n, int k) {
  if (n < 1) throw domain_error("b_poly: requires n >= 1");
  if (k < 0 || k > n - 1) return RPoly();
  return table().get(PolyFamily::b, n, k, [&] { return build_b(n, k); });
}

Rat C_const(int r) {
  if (r < 1) throw domain_error("C_const: requires r >= 1");
  Rat c(0);
  for (int l = 0; l <= r - 1; ++l) {
    Rat term = Rat(binom(r - 1, l)) * (harmonic(l) - 2 * harmonic(2 * l + 1)) /
               Rat(l + 1);
    if (l % 2) term = -term;
    c += term;
  }
  c.canonicalize();
  return c;
}

Rat D_coeff(int r, int k) {
  if (r < 1) throw domain_error("D_coeff: requires r >= 1");
  if (k < 1 || k > 2 * r) return Rat(0);
  Rat d(0);
  for (int l = (k - 1) / 2; l <= r - 1; ++l) {
    Rat term = Rat(4) * Rat(binom(r - 1, l)) * Rat(binom(2 * l + 1, k - 1));
    if ((l + k) % 2) term = -term;
    d += term;
  }
  d.canonicalize();
  return d;
}

Rat D_tilde(int r, int p) {
  if (r < 1) throw domain_error("D_tilde: requires r >= 1");
  if (p < 1 || p > 2 * r) return Rat(0);
  Rat d(0);
  for (int k = p; k <= 2 * r; ++k)
    d += Rat(binom(k - 1, k - p)) * D_coeff(r, k);
  d.canonicalize();
  return d;
}

RPoly alpha_poly(int r, int j) {
  if (r < 1) throw domain_error("alpha_poly: requires r >= 1");
  if (j < 1 || j > 2 * r) return RPoly();
  return table().get(PolyFamily::alpha, r, j,
                     [&] { return build_alpha(r, j); });
}

RPoly alpha_poly_via_moments(int r, int j) {
  if (r < 1 || j < 1) throw domain_error("alpha_poly_via_moments: bad index");
  RPoly p;
  RPoly t_half = z_plus(Rat(1, 2));  // substitutes t + 1/2 into c_{k,j}
  for (int k = j; k <= 2 * r; ++k) {
    RPoly term = c_poly(k, j).compose(t_half);
    term = D_coeff(r, k) * term;
    term = term * RPoly::monomial(Rat(1), 2 * r - k);
    p += term;
  }
  return p;
}

RPoly alpha_hat_poly(int r, int l) {
  if (r < 1) throw domain_error("alpha_hat_poly: requires r >= 1");
  if (l < 0 || l > 2 * r - 1) return RPoly();
  return table().get(PolyFamily::alpha_hat, r, l, [&] {
    RPoly p;
    for (int j = 1; j <= 2 * r - l; ++j)
      p += Rat(binom(2 * r - j, l)) * alpha_poly(r, j);
    if (l % 2) p = -p;
    return p;
  });
}

RPoly beta_poly(int r, int l) {
  if (r < 1) throw domain_error("beta_poly: requires r >= 1");
  if (l < 0 || l > 2 * r - 1) return RPoly();
  return table().get(PolyFamily::beta, r, l, [&] {
    RPoly p;
    RPoly t_half = z_plus(Rat(1, 2));
    for (int j = l + 1; j <= 2 * r; ++j)
      p += b_poly(j, l).compose(t_half) * alpha_poly(r, j);
    return p;
  });
}

RPoly barnes_bernoulli(int n, int m) {
  if (n < 1 || m < 0) throw domain_error("barnes_bernoulli: bad index");
  return table().get(PolyFamily::barnes_bernoulli, n, m, [&] {
    int order = m + n;  // truncation order in t (need coefficient m+n-1)
    // q = (t/(e^t-1))^n as exact rationals q_0..q_{order-1}.
    std::vector<Rat> base(static_cast<size_t>(order), Rat(0));
    for (int k = 0; k < order; ++k) {
      base[static_cast<size_t>(k)] =
          bernoulli_number(k) / Rat(factorial(static_cast<unsigned long>(k)));
    }
    std::vector<Rat> q(static_cast<size_t>(order), Rat(0));
    q[0] = 1;
    for (int rep = 0; rep < n; ++rep) {
      std::vector<Rat> next(static_cast<size_t>(order), Rat(0));
      for (int i = 0; i < order; ++i)
        for (int jj = 0; i + jj < order; ++jj)
          next[static_cast<size_t>(i + jj)] +=
              q[static_cast<size_t>(i)] * base[static_cast<size_t>(jj)];
      q = std::move(next);
    }
    // e^{(n-z)t}: coefficient of t^i is (n-z)^i / i! as a polynomial in z.
    RPoly result;
    RPoly n_minus_z = Rat(-1) * z_plus(Rat(-n));
    for (int i = 0; i <= m + n - 1; ++i) {
      int jj = m + n - 1 - i;
      if (q[static_cast<size_t>(jj)] == 0) continue;
      Rat scale =
          q[static_cast<size_t>(jj)] /
          Rat(factorial(static_cast<unsigned long>(i)));
      result += scale * n_minus_z.pow(static_cast<unsigned>(i));
    }
    Rat norm = Rat(factorial(static_cast<unsigned long>(m)));
    if (m % 2) norm = -norm;
    return norm * result;
  });
}

RPoly multiplicity_poly_oracle(int r, int k, int g) {
  if (r < 1 || k < 0) throw domain_error("multiplicity_poly_oracle: bad index");
  if (g < 2) throw domain_error("multiplicity_poly_oracle: requires g >= 2");
  RPoly p;
  for (int j = 1; j <= 2 * r; ++j)
    p += Rat(binom(k + j - 1, j - 1)) * alpha_poly(r, j);
  return Rat(g - 1) * p;
}

MultiplicityReport multiplicity_report(int r, int k, int g) {
  MultiplicityReport rep;
  rep.r = r;
  rep.k = k;
  rep.g = g;
  rep.defining = multiplicity_poly_oracle(r, k, g);
  // Form A in t: (s-k)(s-k-1) = (t-k)^2 - 1/4 with s = t + 1/2.
  RPoly t_minus_k = z_plus(Rat(-k));
  RPoly quad_a = t_minus_k * t_minus_k;
  quad_a -= RPoly(Rat(1, 4));
  rep.form_a = Rat(2 * (g - 1) * (2 * k + 1)) *
               quad_a.pow(static_cast<unsigned>(r - 1));
  // Form B in t: t^2 - (k+1/2)^2.
  RPoly quad_b = RPoly::monomial(Rat(1), 2);
  Rat kk = Rat(2 * k + 1, 2);
  quad_b -= RPoly(kk * kk);
  rep.form_b = Rat(2 * (g - 1) * (2 * k - 1)) *
               quad_b.pow(static_cast<unsigned>(r - 1));
  rep.matches_a = (rep.defining == rep.form_a);
  rep.matches_b = (rep.defining == rep.form_b);
  return rep;
}

std::string dump_family(PolyFamily family, int max_i, int max_j) {
  std::ostringstream out;
  auto emit = [&](const char* name, int i, int j, const RPoly& p) {
    out << name << "[" << i << "," << j << "]:";
    if (p.is_zero()) {
      out << " 0";
    } else {
      for (const Rat& c : p.coeffs()) out << " " << c.get_str();
    }
    out << "\n";
  };
  for (int i = 1; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      switch (family) {
        case PolyFamily::c:
          if (j >= 1) emit("c", i, j, c_poly(i, j));
          break;
        case PolyFamily::b:
          emit("b", i, j, b_poly(i, j));
          break;
        case PolyFamily::alpha:
          if (j >= 1) emit("alpha", i, j, alpha_poly(i, j));
          break;
        case PolyFamily::alpha_hat:
          emit("alpha_hat", i, j, alpha_hat_poly(i, j));
          break;
        case PolyFamily::beta:
          emit("beta", i, j, beta_poly(i, j));
          break;
        case PolyFamily::barnes_bernoulli:
          emit("bb", i, j, barnes_bernoulli(i, j));
          break;
      }
    }
  }
  return out.str();
}

}  // namespace hdet
