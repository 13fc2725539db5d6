#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blk {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with q > 0, always including the denominator ("0/1", "3/1").
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and a leading sign. Throws Error(SyntaxError).
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// The rational with smallest denominator strictly between lo and hi (lo < hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace blk
