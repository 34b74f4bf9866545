#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dialg/error.hpp"

namespace dialg {

/// Exact rational in lowest terms with positive denominator (GMP keeps mpq canonical).
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  if (d == 0) throw Error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "n" or "n/d" with optional leading sign.
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw Error("invalid rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace dialg
