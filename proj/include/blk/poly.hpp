#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "blk/rational.hpp"

namespace blk {

// x^exps * s^s. The x-part has one entry per variable x_0..x_n.
struct Monomial {
  std::vector<int> x;
  int s = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int> xs, int s_exp = 0) : x(std::move(xs)), s(s_exp) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(x.size()); }
  int degree() const;  // total x-degree
  bool is_one() const { return s == 0 && degree() == 0; }
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  // Storage order only; monomial orderings go through cmp().
  auto operator<=>(const Monomial&) const = default;
};

enum class OrderKind {
  LocalDegreeX,       // units maximal, equal degree by reverse lex
  LocalDegreeS,       // s^0 > s^1 > ...; x-parts compared locally on ties
  BlockSThenX,        // (<_s, <_x)
  BlockSThenUnitVec,  // (<_s, >_mu) on module terms s^k e_i
};

struct MonomialOrder {
  OrderKind kind = OrderKind::LocalDegreeX;
};

inline constexpr MonomialOrder kLocalX{OrderKind::LocalDegreeX};
inline constexpr MonomialOrder kLocalS{OrderKind::LocalDegreeS};
inline constexpr MonomialOrder kBlockSX{OrderKind::BlockSThenX};
inline constexpr MonomialOrder kBlockSUnit{OrderKind::BlockSThenUnitVec};

// greater == "more leading". Throws VariableMismatch on differing variable counts.
std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// s^s e_index in a free module over Q[[s]].
struct ModuleTerm {
  int s = 0;
  int index = 0;
};

// Lower s-power leads; on equal s-power the lower index leads (e_1 > e_2 > ...).
std::strong_ordering cmp(const MonomialOrder& order, ModuleTerm a, ModuleTerm b);

class Poly {
public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly term(const Monomial& m, const Rational& c);
  static Poly variable(int nvars, int i);
  static Poly s_power(int nvars, int k);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly derivative(int var) const;  // d/dx_var
  Poly scale(const Rational& c) const { return *this * c; }

  Monomial lead(const MonomialOrder& order) const;  // precondition: nonzero
  Rational lead_coeff(const MonomialOrder& order) const;

  int max_x_degree() const;
  int min_x_degree() const;
  int max_s_degree() const;
  bool has_s() const { return max_s_degree() > 0; }

  // Terms of x-degree < bound and s-degree < s_bound.
  Poly truncate(int x_bound, int s_bound = 1 << 20) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  int nvars_;
  TermMap terms_;
};

// deg(x_i) = -1 for all i, deg(s) = deg_s < 0.
struct WeightedDegree {
  int deg_s = -1;
  int of(const Monomial& m) const { return m.s * deg_s - m.degree(); }
};

// Maximum weighted degree over the terms. Throws InvariantViolation on zero.
int weighted_deg(const WeightedDegree& w, const Poly& p);

std::vector<std::string> default_variable_names(int nvars);

}  // namespace blk
