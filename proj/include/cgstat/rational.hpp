#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cgstat {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Integer integer_from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline Integer ipow(long long base, unsigned long exp) {
  Integer z;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(z.get_mpz_t(), b.get_mpz_t(), exp);
  return z;
}

}  // namespace cgstat
