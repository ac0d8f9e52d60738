// Univariate polynomial with exact rational coefficients, ascending order,
// canonical form (no trailing zero coefficient). Degree of the zero
// polynomial is the -infinity sentinel kDegreeNegInf.
#ifndef HDET_RPOLY_HPP
#define HDET_RPOLY_HPP

#include <climits>
#include <string>
#include <vector>

#include "hdet/rational.hpp"
#include "hdet/types.hpp"

namespace hdet {

inline constexpr int kDegreeNegInf = INT_MIN;

class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  explicit RPoly(long c) : RPoly(Rat(c)) {}

  static RPoly monomial(const Rat& c, int deg) {
    RPoly p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rat(0));
      p.coeffs_.back() = c;
    }
    return p;
  }
  static RPoly variable() { return monomial(Rat(1), 1); }

  int degree() const {
    return coeffs_.empty() ? kDegreeNegInf
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
  }

  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RPoly& operator+=(const RPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RPoly& operator-=(const RPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly();
    RPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }
  friend RPoly operator*(const Rat& c, const RPoly& p) {
    if (c == 0) return RPoly();
    RPoly r = p;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  RPoly operator-() const { return Rat(-1) * (*this); }

  RPoly pow(unsigned e) const {
    RPoly r(Rat(1));
    RPoly base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // Substitutes q for the variable (Horner).
  RPoly compose(const RPoly& q) const {
    RPoly r;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      r = r * q;
      r += RPoly(coeffs_[i]);
    }
    return r;
  }

  Rat eval_rat(const Rat& x) const {
    Rat r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    r.canonicalize();
    return r;
  }

  CValue eval(CValue x) const {
    CValue r(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i].get_d();
    return r;
  }

  bool even_part_only() const {
    for (size_t i = 1; i < coeffs_.size(); i += 2)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const RPoly& a, const RPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const RPoly& a, const RPoly& b) { return !(a == b); }

  // Exact plain-text rendering, e.g. "-2*x^2 + 1/2".
  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      const Rat& c = coeffs_[i];
      if (c == 0) continue;
      std::string mag = Rat(abs(c)).get_str();
      if (out.empty())
        out += (c < 0 ? "-" : "");
      else
        out += (c < 0 ? " - " : " + ");
      if (i == 0)
        out += mag;
      else {
        if (mag != "1") out += mag + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;  // ascending degree
};

}  // namespace hdet

#endif  // HDET_RPOLY_HPP
