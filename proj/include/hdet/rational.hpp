// Exact big-rational helpers on top of GMP: factorials, double factorials,
// binomials (integer and rational upper argument), and conversions.
#ifndef HDET_RATIONAL_HPP
#define HDET_RATIONAL_HPP

#include <gmpxx.h>

#include "hdet/types.hpp"

namespace hdet {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int double_factorial(unsigned long n) {
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

// binom(n, k) with integer n possibly negative: product formula
// n(n-1)...(n-k+1)/k!; k < 0 yields 0.
inline Int binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= Int(n - i);
  Int r = num / factorial(static_cast<unsigned long>(k));
  return r;
}

// binom(q, k) for rational q: q(q-1)...(q-k+1)/k!.
inline Rat binom_rat(const Rat& q, long k) {
  if (k < 0) return Rat(0);
  Rat num = 1;
  for (long i = 0; i < k; ++i) num *= q - i;
  Rat r = num / Rat(factorial(static_cast<unsigned long>(k)));
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline CValue to_cvalue(const Rat& q) { return CValue(q.get_d(), 0.0); }

}  // namespace hdet

#endif  // HDET_RATIONAL_HPP
