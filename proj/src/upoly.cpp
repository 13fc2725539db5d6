#include "blk/upoly.hpp"

#include <sstream>

#include "blk/error.hpp"

namespace blk {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lead());
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * Rational(-1); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& v : r) v *= c;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvariantViolation, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[k + db] / b.lead();
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    out << (i == degree() ? "" : " + ") << "(" << coeffs_[i].get_str() << ")";
    if (i > 0) out << "*l^" << i;
  }
  return out.str();
}

}  // namespace blk
