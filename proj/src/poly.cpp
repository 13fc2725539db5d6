#include "blk/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blk/error.hpp"

namespace blk {

int Monomial::degree() const { return std::accumulate(x.begin(), x.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (s > other.s) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > other.x[i]) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (x.size() != other.x.size())
    fail(ErrorKind::VariableMismatch, "monomial variable counts differ");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += other.x[i];
  s += other.s;
  return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial q = a;
  for (std::size_t i = 0; i < q.x.size(); ++i) q.x[i] -= b.x[i];
  q.s -= b.s;
  return q;
}

namespace {

std::strong_ordering cmp_local_x(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return db <=> da;
  // Reverse lexicographic: the last differing exponent decides, smaller wins.
  for (std::size_t i = a.x.size(); i-- > 0;) {
    if (a.x[i] != b.x[i]) return b.x[i] <=> a.x[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.x.size() != b.x.size())
    fail(ErrorKind::VariableMismatch, "cmp: monomial variable counts differ");
  switch (order.kind) {
    case OrderKind::LocalDegreeX:
      if (auto c = cmp_local_x(a, b); c != 0) return c;
      return b.s <=> a.s;
    case OrderKind::LocalDegreeS:
    case OrderKind::BlockSThenX:
    case OrderKind::BlockSThenUnitVec:
      if (a.s != b.s) return b.s <=> a.s;
      return cmp_local_x(a, b);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp(const MonomialOrder&, ModuleTerm a, ModuleTerm b) {
  if (a.s != b.s) return b.s <=> a.s;
  return b.index <=> a.index;
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Monomial m = Monomial::one(nvars);
  m.x.at(i) = 1;
  return term(m, Rational(1));
}

Poly Poly::s_power(int nvars, int k) {
  Monomial m = Monomial::one(nvars);
  m.s = k;
  return term(m, Rational(1));
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) fail(ErrorKind::VariableMismatch, "add_term: variable count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.nvars_ != nvars_) fail(ErrorKind::VariableMismatch, "poly add: variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.nvars_ != nvars_) fail(ErrorKind::VariableMismatch, "poly sub: variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorKind::VariableMismatch, "poly mul: variable count mismatch");
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_hint(r.terms_.end(), mt * m, ct * c);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.x.at(var);
    if (e == 0) continue;
    Monomial d = m;
    d.x[var] -= 1;
    r.add_term(d, c * e);
  }
  return r;
}

Monomial Poly::lead(const MonomialOrder& order) const {
  if (terms_.empty()) fail(ErrorKind::InvariantViolation, "lead of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (cmp(order, it->first, best->first) > 0) best = it;
  return best->first;
}

Rational Poly::lead_coeff(const MonomialOrder& order) const { return coeff(lead(order)); }

int Poly::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::min_x_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int Poly::max_s_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.s);
  return d;
}

Poly Poly::truncate(int x_bound, int s_bound) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < x_bound && m.s < s_bound) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

std::vector<std::string> default_variable_names(int nvars) {
  static const char* xyz[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i)
    names.push_back(nvars <= 3 ? std::string(xyz[i]) : "x" + std::to_string(i));
  return names;
}

std::string Poly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  auto names = names_in.empty() ? default_variable_names(nvars_) : names_in;
  // Print in the local block order, leading term first.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return cmp(kBlockSX, a->first, b->first) > 0;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    Rational a = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    bool unit = m.is_one();
    if (a != 1 || unit) {
      out << a.get_str();
      if (!unit) out << "*";
    }
    bool need_star = false;
    if (m.s > 0) {
      out << "s";
      if (m.s > 1) out << "^" << m.s;
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m.x[i] == 0) continue;
      if (need_star) out << "*";
      out << names[i];
      if (m.x[i] > 1) out << "^" << m.x[i];
      need_star = true;
    }
  }
  return out.str();
}

int weighted_deg(const WeightedDegree& w, const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::InvariantViolation, "weighted degree of zero polynomial");
  int best = w.of(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms()) best = std::max(best, w.of(m));
  return best;
}

}  // namespace blk
