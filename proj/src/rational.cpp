#include "blk/rational.hpp"

#include <cctype>

#include "blk/error.hpp"

namespace blk {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) bad();
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad();
    return Integer(std::string(text.substr(from, to - from)));
  };
  auto slash = text.find('/', pos);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(digits(pos, text.size()));
  } else {
    Integer den = digits(slash + 1, text.size());
    if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    q = Rational(digits(pos, slash), den);
    q.canonicalize();
  }
  return negative ? Rational(-q) : q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi, hi possibly infinite.
Rational simplest_nonneg(const Rational& lo, const Rational* hi) {
  Integer next = floor(lo) + 1;
  if (hi == nullptr || Rational(next) < *hi) {
    return Rational(next);
  }
  // No integer strictly inside: lo and hi share the integer part fl,
  // with hi <= fl + 1.
  Integer fl = floor(lo);
  Rational lo_frac = lo - fl;
  Rational hi_frac = *hi - fl;
  // Recurse on the reciprocals: (1/hi_frac, 1/lo_frac).
  Rational new_lo = 1 / hi_frac;
  if (lo_frac == 0) {
    return Rational(fl) + 1 / simplest_nonneg(new_lo, nullptr);
  }
  Rational new_hi = 1 / lo_frac;
  return Rational(fl) + 1 / simplest_nonneg(new_lo, &new_hi);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) fail(ErrorKind::InvariantViolation, "simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) {
    Rational a = -hi;
    Rational b = -lo;
    return -simplest_nonneg(a, &b);
  }
  return simplest_nonneg(lo, &hi);
}

}  // namespace blk
