#include "hdet/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hdet/numkernel.hpp"

namespace hdet {

namespace {

constexpr double kEps = 2.220446049250313e-16;
// Cancellation budget for the alternating growth of the direct sum when
// Re(w) < 0: keep eps * (N + |z|)^{1 - Re w} under this.
constexpr double kCancelBudget = 3e-12;

struct EmResult {
  CValue value;
  CValue deriv;
};

void check_domain(CValue w, CValue z) {
  if (!(z.real() > 0.0))
    throw domain_error("hurwitz_zeta: requires Re(z) > 0");
  if (std::abs(w - CValue(1.0, 0.0)) < 1e-12)
    throw pole_error("hurwitz_zeta: pole at w = 1");
}

int effective_N(CValue w, CValue z, const EulerMaclaurinPlan& plan) {
  double sigma = w.real();
  int n = std::max(1, plan.N);
  if (sigma < -0.5) {
    double cap = std::pow(kCancelBudget / kEps, 1.0 / (1.0 - sigma));
    int ncap = static_cast<int>(std::floor(cap - std::abs(z)));
    n = std::clamp(ncap, 2, n);
  }
  // The asymptotic boundary series needs N past |Im w|/(2 pi) to decay.
  int nimag =
      static_cast<int>(std::ceil(std::abs(w.imag()) / (2.0 * 3.14159265))) + 2;
  if (std::abs(w.imag()) > 1.0) n = std::max(n, nimag);
  return n;
}

int effective_M(CValue w, const EulerMaclaurinPlan& plan) {
  int m = std::clamp(plan.M, 2, 24);
  double sigma = w.real();
  if (sigma < -0.5)
    m = std::clamp(static_cast<int>(std::ceil(-2.0 * sigma)) + 8, m, 24);
  return (m + 1) / 2 * 2;  // keep the boundary order even
}

// One pass producing both the continued value and its w-derivative.
EmResult em_core(CValue w, CValue z, int N, int M) {
  KahanSum val, der;
  for (int n = 0; n < N; ++n) {
    CValue L = std::log(z + static_cast<double>(n));
    CValue p = std::exp(-w * L);
    val.add(p);
    der.add(-L * p);
  }
  CValue Lz = std::log(z + static_cast<double>(N));
  CValue q = std::exp(-w * Lz);             // (N+z)^{-w}
  CValue nz = z + static_cast<double>(N);   // N + z
  CValue wm1 = w - 1.0;
  CValue tail = q * nz / wm1;               // (N+z)^{1-w}/(w-1)
  val.add(tail);
  der.add(-tail * Lz - tail / wm1);
  val.add(0.5 * q);
  der.add(-0.5 * Lz * q);
  // Boundary corrections B_{2k}/(2k)! (w)_{2k-1} (N+z)^{-w-2k+1}; the rising
  // factorial and its derivative advance by two factors per step.
  CValue pv = w, pd = CValue(1.0, 0.0);
  CValue powz = q * nz;                     // (N+z)^{-w+1}
  CValue inv2 = 1.0 / (nz * nz);
  double c2k = 1.0;                         // (2k)! accumulator
  for (int k = 1; k <= M; ++k) {
    c2k *= (2.0 * k - 1.0) * (2.0 * k);
    powz *= inv2;                           // (N+z)^{-w-2k+1}
    double coef = bernoulli_number(2 * k).get_d() / c2k;
    val.add(coef * pv * powz);
    der.add(coef * (pd * powz - pv * powz * Lz));
    CValue f1 = w + (2.0 * k - 1.0), f2 = w + (2.0 * k);
    pd = pd * f1 + pv;
    pv = pv * f1;
    pd = pd * f2 + pv;
    pv = pv * f2;
  }
  return {val.total(), der.total()};
}

std::mutex g_cache_mu;

}  // namespace

CValue hurwitz_zeta(CValue w, CValue z, const EulerMaclaurinPlan& plan) {
  check_domain(w, z);
  EmResult r = em_core(w, z, effective_N(w, z, plan), effective_M(w, plan));
  return r.value;
}

CValue hurwitz_zeta_dw(CValue w, CValue z, const EulerMaclaurinPlan& plan) {
  check_domain(w, z);
  EmResult r = em_core(w, z, effective_N(w, z, plan), effective_M(w, plan));
  return r.deriv;
}

CValue zeta_prime_neg(int l) {
  if (l < 0) throw domain_error("zeta_prime_neg: negative index");
  static std::map<int, CValue> cache;
  std::lock_guard<std::mutex> lock(g_cache_mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  CValue v = hurwitz_zeta_dw(CValue(-l, 0.0), CValue(1.0, 0.0));
  cache.emplace(l, v);
  return v;
}

CValue odd_zeta_half(int j) {
  if (j < 1) throw domain_error("odd_zeta_half: requires j >= 1");
  static std::map<int, CValue> cache;
  std::lock_guard<std::mutex> lock(g_cache_mu);
  auto it = cache.find(j);
  if (it != cache.end()) return it->second;
  double s = 2.0 * j + 1.0;
  // Direct real sum, then integral tail plus the first two Euler-Maclaurin
  // boundary corrections of the remainder at cutoff N.
  int N = std::max(1000, 2 * static_cast<int>(std::pow(1e13, 1.0 / (s + 1.0))));
  double acc = 0.0, comp = 0.0;
  for (int n = N - 1; n >= 0; --n) {
    double term = std::pow(n + 0.5, -s);
    double t = acc + term;  // Neumaier step (terms are positive, descending)
    comp += (std::abs(acc) >= term) ? (acc - t) + term : (term - t) + acc;
    acc = t;
  }
  double x = N + 0.5;
  double v = acc + comp + std::pow(x, 1.0 - s) / (s - 1.0) +
             0.5 * std::pow(x, -s) - (s / 12.0) * std::pow(x, -s - 1.0);
  CValue result(v, 0.0);
  cache.emplace(j, result);
  return result;
}

}  // namespace hdet
