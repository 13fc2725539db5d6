#pragma once

#include <string>
#include <vector>

#include "blk/matrix.hpp"

namespace blk {

// Dense univariate polynomial over Q, coeffs[i] of lambda^i, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly linear(const Rational& root);  // lambda - root

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& lead() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Euclidean division a = q b + r.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace blk
