#include "hdet/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hdet/gammafactor.hpp"
#include "hdet/multigamma.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/polycoeff.hpp"
#include "hdet/rational.hpp"

namespace hdet {

namespace {

using nlohmann::json;

void require_convergence_halfplane(const char* who, CValue s) {
  if (!(s.real() > 1.0)) {
    throw domain_error(std::string(who) + ": requires Re(s) > 1");
  }
}

// 1-based line/column of a byte offset in text.
std::pair<int, int> offset_to_line_col(const std::string& text,
                                       size_t offset) {
  int line = 1, col = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void reject_at_token(const std::string& text,
                                  const std::string& token,
                                  const std::string& why) {
  size_t pos = text.find(token);
  if (pos == std::string::npos) pos = 0;
  auto [line, col] = offset_to_line_col(text, pos);
  throw spectrum_parse_error(why, line, col);
}

const char* const kSpectrumKeys[] = {"genus", "label", "primitives"};
const char* const kPrimitiveKeys[] = {"norm", "multiplicity"};

}  // namespace

double LengthSpectrum::spectral_gap() const {
  if (primitives.empty()) {
    throw domain_error("length spectrum: no primitive classes");
  }
  return std::log(primitives.front().norm);
}

void LengthSpectrum::validate() const {
  if (genus < 2) throw domain_error("length spectrum: genus must be >= 2");
  if (primitives.empty()) {
    throw domain_error("length spectrum: no primitive classes");
  }
  double prev = 1.0;
  for (const auto& p : primitives) {
    if (!(p.norm > 1.0)) {
      throw domain_error("length spectrum: norms must exceed 1");
    }
    if (p.norm < prev) {
      throw domain_error("length spectrum: norms must be ascending");
    }
    if (p.multiplicity < 1) {
      throw domain_error("length spectrum: multiplicities must be >= 1");
    }
    prev = p.norm;
  }
}

const LengthSpectrum& builtin_spectrum() {
  static const LengthSpectrum spec = [] {
    LengthSpectrum s;
    s.genus = 2;
    s.label = "synthetic";
    s.primitives = {{7.25, 1},
                    {12.0625, 1},
                    {19.84375, 1},
                    {33.09765625, 1},
                    {57.912109375, 1}};
    s.validate();
    return s;
  }();
  return spec;
}

LengthSpectrum parse_spectrum_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = offset_to_line_col(
        text, e.byte > 0 ? static_cast<size_t>(e.byte - 1) : 0);
    throw spectrum_parse_error(std::string("invalid JSON: ") + e.what(), line,
                               col);
  }
  if (!doc.is_object()) {
    throw spectrum_parse_error("spectrum must be a JSON object", 1, 1);
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (std::none_of(std::begin(kSpectrumKeys), std::end(kSpectrumKeys),
                     [&](const char* k) { return it.key() == k; })) {
      reject_at_token(text, "\"" + it.key() + "\"",
                      "unknown key \"" + it.key() + "\"");
    }
  }
  LengthSpectrum out;
  if (!doc.contains("genus") || !doc["genus"].is_number_integer()) {
    reject_at_token(text, "genus", "\"genus\" must be an integer >= 2");
  }
  out.genus = doc["genus"].get<int>();
  if (out.genus < 2) {
    reject_at_token(text, "genus", "\"genus\" must be an integer >= 2");
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      reject_at_token(text, "label", "\"label\" must be a string");
    }
    out.label = doc["label"].get<std::string>();
  }
  if (!doc.contains("primitives") || !doc["primitives"].is_array() ||
      doc["primitives"].empty()) {
    reject_at_token(text, "primitives",
                    "\"primitives\" must be a non-empty array");
  }
  for (const auto& entry : doc["primitives"]) {
    if (!entry.is_object()) {
      reject_at_token(text, "primitives",
                      "primitive entries must be objects");
    }
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      if (std::none_of(std::begin(kPrimitiveKeys), std::end(kPrimitiveKeys),
                       [&](const char* k) { return it.key() == k; })) {
        reject_at_token(text, "\"" + it.key() + "\"",
                        "unknown key \"" + it.key() + "\" in primitive");
      }
    }
    PrimitiveClass p;
    if (!entry.contains("norm") || !entry["norm"].is_number()) {
      reject_at_token(text, "norm", "primitive \"norm\" must be a number");
    }
    p.norm = entry["norm"].get<double>();
    if (!(p.norm > 1.0)) {
      reject_at_token(text, "norm", "primitive norms must exceed 1");
    }
    if (entry.contains("multiplicity")) {
      if (!entry["multiplicity"].is_number_integer() ||
          entry["multiplicity"].get<int>() < 1) {
        reject_at_token(text, "multiplicity",
                        "\"multiplicity\" must be an integer >= 1");
      }
      p.multiplicity = entry["multiplicity"].get<int>();
    }
    out.primitives.push_back(p);
  }
  std::stable_sort(out.primitives.begin(), out.primitives.end(),
                   [](const PrimitiveClass& a, const PrimitiveClass& b) {
                     return a.norm < b.norm;
                   });
  out.validate();
  return out;
}

LengthSpectrum load_spectrum_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw spectrum_parse_error("cannot open spectrum file: " + path, 0, 0);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spectrum_json(buf.str());
}

CValue polylog(int m, CValue z) {
  if (m < 1) throw domain_error("polylog: order must be >= 1");
  const double az = std::abs(z);
  if (!(az < 1.0)) throw domain_error("polylog: requires |z| < 1");
  if (m == 1) return -std::log(CValue(1.0, 0.0) - z);
  KahanSum acc;
  CValue zk = z;
  for (int k = 1; k <= 10000; ++k) {
    const CValue term = zk / std::pow(double(k), double(m));
    acc.add(term);
    zk *= z;
    // Geometric tail bound |z|^{k+1}/(1-|z|) relative to the leading term.
    if (std::abs(zk) / (1.0 - az) < 1e-18 * (std::abs(acc.total()) + 1e-300)) {
      break;
    }
  }
  return acc.total();
}

CValue log_poly_selberg(int m, CValue s, const LengthSpectrum& spec,
                        const TruncationPolicy& pol, double* tail_bound) {
  if (m < 1) throw domain_error("log_poly_selberg: order must be >= 1");
  require_convergence_halfplane("log_poly_selberg", s);
  spec.validate();
  const double sigma = s.real();
  KahanSum acc;
  double tail_total = 0.0;
  for (const auto& p : spec.primitives) {
    const double logN = std::log(p.norm);
    const double weight = p.multiplicity * std::pow(logN, 1.0 - double(m));
    // Terms decay like N^{-k sigma}; certified geometric bound for the tail
    // past K: w (1-1/N)^{-1} N^{-(K+1) sigma} / (1 - N^{-sigma}).
    const double decay = std::pow(p.norm, -sigma);
    const double head_fac =
        std::abs(weight) / ((1.0 - 1.0 / p.norm) * (1.0 - decay));
    int K = 1;
    double tail = head_fac * std::pow(p.norm, -2.0 * sigma);
    while (tail > pol.tail_target / double(spec.primitives.size()) &&
           K < pol.k_max) {
      ++K;
      tail *= decay;
    }
    if (tail > pol.tail_target / double(spec.primitives.size())) {
      throw accuracy_error(
          "log_poly_selberg: k_max too small for requested tail", acc.total(),
          tail);
    }
    KahanSum cls;
    for (int k = 1; k <= K; ++k) {
      const double Nk = std::pow(p.norm, -double(k));
      const CValue num = std::exp(-s * (double(k) * logN));
      cls.add(num / (std::pow(double(k), double(m)) * (1.0 - Nk)));
    }
    acc.add(CValue(-weight, 0.0) * cls.total());
    tail_total += tail;
  }
  if (tail_bound != nullptr) *tail_bound = tail_total;
  return acc.total();
}

CValue log_poly_selberg_product(int m, CValue s, const LengthSpectrum& spec,
                                const TruncationPolicy& pol,
                                double* tail_bound) {
  if (m < 1) {
    throw domain_error("log_poly_selberg_product: order must be >= 1");
  }
  require_convergence_halfplane("log_poly_selberg_product", s);
  spec.validate();
  const double sigma = s.real();
  KahanSum acc;
  double tail_total = 0.0;
  for (const auto& p : spec.primitives) {
    const double logN = std::log(p.norm);
    const double weight = p.multiplicity * std::pow(logN, 1.0 - double(m));
    // |Li_m(N^{-s-n})| <= N^{-sigma-n}/(1-N^{-sigma-n}); tail past n_eff is
    // geometric with ratio 1/N.
    const double decay = 1.0 / p.norm;
    int n_eff = 0;
    double first = std::pow(p.norm, -sigma - 1.0) /
                   (1.0 - std::pow(p.norm, -sigma - 1.0));
    double tail = std::abs(weight) * first / (1.0 - decay);
    while (tail > pol.tail_target / double(spec.primitives.size()) &&
           n_eff < pol.n_max) {
      ++n_eff;
      tail *= decay;
    }
    if (tail > pol.tail_target / double(spec.primitives.size())) {
      throw accuracy_error(
          "log_poly_selberg_product: n_max too small for requested tail",
          acc.total(), tail);
    }
    KahanSum cls;
    for (int n = 0; n <= n_eff; ++n) {
      cls.add(polylog(m, std::exp(-(s + double(n)) * logN)));
    }
    acc.add(CValue(-weight, 0.0) * cls.total());
    tail_total += tail;
  }
  if (tail_bound != nullptr) *tail_bound = tail_total;
  return acc.total();
}

CValue log_milnor_selberg(int r, CValue s, const LengthSpectrum& spec,
                          const TruncationPolicy& pol) {
  if (r < 1) throw domain_error("log_milnor_selberg: depth must be >= 1");
  require_convergence_halfplane("log_milnor_selberg", s);
  const CValue two_t = 2.0 * s - CValue(1.0, 0.0);
  const double outer =
      ((r - 1) % 2 == 0 ? 1.0 : -1.0) * to_double(factorial(r - 1));
  KahanSum acc;
  CValue pow_2t(1.0, 0.0);
  // m runs downward in the exponent of (2t); accumulate ascending powers.
  std::vector<CValue> powers(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    powers[static_cast<size_t>(i)] = pow_2t;
    pow_2t *= two_t;
  }
  for (int m = 0; m <= r - 1; ++m) {
    const double c = to_double(Rat(factorial(r - 1 + m)) /
                               (Rat(factorial(m)) * Rat(factorial(r - 1 - m))));
    acc.add(c * powers[static_cast<size_t>(r - 1 - m)] *
            log_poly_selberg(r + m, s, spec, pol));
  }
  return outer * acc.total();
}

CValue log_higher_det_geom(int r, CValue s, const LengthSpectrum& spec,
                           const TruncationPolicy& pol) {
  spec.validate();
  const double vol_factor = double(spec.genus - 1);
  return vol_factor * log_phi(r, s, PhiForm::BarnesForm).value +
         log_milnor_selberg(r, s, spec, pol);
}

CValue log_complete_MS(int r, CValue s, const LengthSpectrum& spec,
                       const TruncationPolicy& pol) {
  if (r < 1) throw domain_error("log_complete_MS: depth must be >= 1");
  spec.validate();
  require_convergence_halfplane("log_complete_MS", s);
  const CValue t = s - CValue(0.5, 0.0);
  KahanSum shifts;
  for (int l = 0; l <= 2 * r - 1; ++l) {
    shifts.add(alpha_hat_poly(r, l).eval(t) *
               log_multigamma(2 * r, 1, s + CValue(l, 0)).value);
  }
  return double(spec.genus - 1) * shifts.total() +
         log_milnor_selberg(r, s, spec, pol);
}

CValue ladder_residual_poly(int m, CValue s, const LengthSpectrum& spec,
                            const TruncationPolicy& pol,
                            const ToleranceConfig& cfg) {
  if (m < 2) throw domain_error("ladder_residual_poly: requires m >= 2");
  require_convergence_halfplane("ladder_residual_poly", s);
  auto f = [&](CValue w) { return log_poly_selberg(m, w, spec, pol); };
  CValue ds = numeric_dw(f, s, cfg);
  return ds + log_poly_selberg(m - 1, s, spec, pol);
}

CValue ladder_residual_MS(int r, CValue s, const LengthSpectrum& spec,
                          const TruncationPolicy& pol,
                          const ToleranceConfig& cfg) {
  if (r < 2) throw domain_error("ladder_residual_MS: requires r >= 2");
  require_convergence_halfplane("ladder_residual_MS", s);
  auto f = [&](CValue w) { return log_milnor_selberg(r, w, spec, pol); };
  CValue ds = numeric_dw(f, s, cfg);
  return ds / (2.0 * s - CValue(1.0, 0.0)) -
         double(r - 1) * log_milnor_selberg(r - 1, s, spec, pol);
}

namespace {

// Nested antiderivative of log Z^{(1)} along the segment from a: level 0 is
// log Z^{(1)} itself, level p integrates level p-1 from a to the argument.
CValue nested_integral(int level, CValue upper, CValue a,
                       const LengthSpectrum& spec, const TruncationPolicy& pol,
                       const ToleranceConfig& cfg) {
  if (level == 0) return log_poly_selberg(1, upper, spec, pol);
  const CValue dir = upper - a;
  if (std::abs(dir) == 0.0) return CValue(0.0, 0.0);
  ToleranceConfig inner = cfg;
  inner.quadrature_target = std::max(cfg.quadrature_target, 1e-11) * 10.0;
  auto f = [&](double tau) {
    return nested_integral(level - 1, a + tau * dir, a, spec, pol, inner);
  };
  double err = 0.0;
  return dir * quadrature(f, 0.0, 1.0, cfg, &err);
}

}  // namespace

CValue iterated_integral_check(int m, CValue s, CValue a,
                               const LengthSpectrum& spec,
                               const TruncationPolicy& pol,
                               const ToleranceConfig& cfg) {
  if (m < 2 || m > 4) {
    throw domain_error("iterated_integral_check: requires 2 <= m <= 4");
  }
  require_convergence_halfplane("iterated_integral_check", s);
  require_convergence_halfplane("iterated_integral_check anchor", a);
  // Taylor-with-remainder along the ladder d/ds log Z^{(k)} = -log Z^{(k-1)}:
  // log Z^{(m)}(s) = sum_{k=0}^{m-2} (-(s-a))^k / k! log Z^{(m-k)}(a)
  //                + (-1)^{m-1} int ... int log Z^{(1)}.
  KahanSum rhs;
  CValue pow_sa(1.0, 0.0);
  for (int k = 0; k <= m - 2; ++k) {
    rhs.add(pow_sa * log_poly_selberg(m - k, a, spec, pol));
    pow_sa *= -(s - a) / double(k + 1);
  }
  const double sign = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
  rhs.add(sign * nested_integral(m - 1, s, a, spec, pol, cfg));
  return rhs.total() - log_poly_selberg(m, s, spec, pol);
}

CValue fe_diagnostic_MS(int r, CValue s, CValue left_log,
                        const LengthSpectrum& spec,
                        const TruncationPolicy& pol) {
  if (r < 1) throw domain_error("fe_diagnostic_MS: depth must be >= 1");
  if (!(s.real() > 1.0 && s.real() < 2.0)) {
    throw domain_error("fe_diagnostic_MS: requires 1 < Re(s) < 2");
  }
  spec.validate();
  const CValue t = s - CValue(0.5, 0);
  KahanSum rhs;
  for (int j = 1; j <= 2 * r; ++j) {
    // S_1 = 2 sin(pi z) is entire; the general sine requires Re(z) < j,
    // which holds here for every j >= 2.
    CValue log_sj = (j == 1)
        ? std::log(2.0 * std::sin(M_PI * s))
        : log_mult_sine(j, s).value;
    rhs.add(-alpha_poly(r, j).eval(t) * log_sj);
  }
  CValue right = double(spec.genus - 1) * rhs.total() +
                 log_milnor_selberg(r, s, spec, pol);
  return left_log - right;
}

}  // namespace hdet
