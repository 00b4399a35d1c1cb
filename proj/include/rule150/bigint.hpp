#pragma once

#include <gmpxx.h>

#include <string>

namespace rule150 {

/// Arbitrary-precision integer; used for natural-number counts as well.
using Integer = mpz_class;
using Nat = mpz_class;
/// Exact fraction in lowest terms.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// 2^e as an Integer.
inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace rule150
