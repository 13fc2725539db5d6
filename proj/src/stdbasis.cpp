#include "blk/stdbasis.hpp"

#include <algorithm>

#include "blk/error.hpp"

namespace blk {

namespace {

struct Lifted {
  Poly p;
  std::vector<Poly> lift;
  Monomial lead;
  int ecart = 0;

  void refresh() {
    if (p.is_zero()) return;
    lead = p.lead(kLocalX);
    ecart = p.max_x_degree() - lead.degree();
  }
};

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = std::max(a.x[i], b.x[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.x.size(); ++i)
    if (a.x[i] > 0 && b.x[i] > 0) return false;
  return true;
}

// a := ca * a - cb * m * b, on polynomial and lift together.
void combine(Lifted& a, const Rational& ca, const Lifted& b, const Monomial& m, const Rational& cb) {
  if (ca != 1) {
    a.p *= ca;
    for (auto& l : a.lift) l *= ca;
  }
  a.p -= b.p.mul_term(m, cb);
  for (std::size_t i = 0; i < a.lift.size(); ++i) a.lift[i] -= b.lift[i].mul_term(m, cb);
  a.refresh();
}

Lifted spoly(const Lifted& a, const Lifted& b) {
  Monomial l = lcm(a.lead, b.lead);
  Lifted r;
  r.p = a.p.mul_term(l / a.lead, Rational(1));
  for (const auto& x : a.lift) r.lift.push_back(x.mul_term(l / a.lead, Rational(1)));
  r.refresh();
  combine(r, b.p.coeff(b.lead), b, l / b.lead, a.p.coeff(a.lead));
  return r;
}

// Weak normal form with ecart control; the result is a unit multiple of h
// modulo the ideal, expressed through its lift.
Lifted nf_mora(Lifted h, const std::vector<Lifted>& basis) {
  std::vector<Lifted> extra;
  while (!h.p.is_zero()) {
    const Lifted* best = nullptr;
    auto consider = [&](const Lifted& g) {
      if (!g.lead.divides(h.lead)) return;
      if (!best || g.ecart < best->ecart) best = &g;
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (!best) break;
    Lifted g = *best;
    if (g.ecart > h.ecart) extra.push_back(h);
    Rational hc = h.p.coeff(h.lead);
    combine(h, g.p.coeff(g.lead), g, h.lead / g.lead, hc);
  }
  return h;
}

}  // namespace

StdWithTransform std_with_transform(const std::vector<Poly>& gens) {
  if (gens.empty()) fail(ErrorKind::InvariantViolation, "std_with_transform: no generators");
  const int nv = gens.front().nvars();
  const std::size_t k = gens.size();

  std::vector<Lifted> basis;
  struct Pair {
    std::size_t i, j;
    int degree;
  };
  std::vector<Pair> pairs;

  auto add = [&](Lifted h) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coprime(basis[i].lead, h.lead)) continue;
      pairs.push_back({i, basis.size(), lcm(basis[i].lead, h.lead).degree()});
    }
    basis.push_back(std::move(h));
  };

  for (std::size_t g = 0; g < k; ++g) {
    if (gens[g].is_zero()) continue;
    Lifted h;
    h.p = gens[g];
    h.lift.assign(k, Poly(nv));
    h.lift[g] = Poly::constant(nv, Rational(1));
    h.refresh();
    h = nf_mora(h, basis);
    if (!h.p.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *it;
    pairs.erase(it);
    Lifted h = nf_mora(spoly(basis[pr.i], basis[pr.j]), basis);
    if (!h.p.is_zero()) add(std::move(h));
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead.divides(basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return cmp(kLocalX, basis[a].lead, basis[b].lead) > 0;
  });

  StdWithTransform out;
  out.transform.assign(k, {});
  for (std::size_t i : keep) {
    Lifted& g = basis[i];
    Rational inv = 1 / g.p.coeff(g.lead);
    out.basis.gens.push_back(g.p * inv);
    out.basis.leads.push_back(g.lead);
    for (std::size_t r = 0; r < k; ++r) out.transform[r].push_back(g.lift[r] * inv);
  }
  return out;
}

Poly mora_nf(const Poly& p, const StdBasis& G, int degree_bound) {
  Poly rest = p.truncate(degree_bound);
  Poly result(p.nvars());
  while (!rest.is_zero()) {
    Monomial m = rest.lead(kLocalX);
    Rational c = rest.coeff(m);
    std::size_t j = 0;
    while (j < G.leads.size() && !G.leads[j].divides(m)) ++j;
    if (j == G.leads.size()) {
      result.add_term(m, c);
      rest.add_term(m, -c);
      continue;
    }
    rest -= G.gens[j].mul_term(m / G.leads[j], c).truncate(degree_bound);
  }
  return result;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, int nvars) {
  std::vector<int> bound(nvars, -1);
  for (const auto& l : leads) {
    int nonzero = 0, var = -1;
    for (int i = 0; i < nvars; ++i)
      if (l.x[i] > 0) ++nonzero, var = i;
    if (nonzero == 1 && (bound[var] < 0 || l.x[var] < bound[var])) bound[var] = l.x[var];
    if (nonzero == 0) return {};  // unit ideal
  }
  for (int i = 0; i < nvars; ++i)
    if (bound[i] < 0) fail(ErrorKind::NonIsolatedSingularity, "singularity is not isolated");

  std::vector<Monomial> out;
  Monomial m = Monomial::one(nvars);
  while (true) {
    bool in_ideal = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!in_ideal) out.push_back(m);
    int i = 0;
    while (i < nvars && ++m.x[i] >= bound[i]) m.x[i++] = 0;
    if (i == nvars) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return cmp(kLocalX, a, b) > 0; });
  return out;
}

MilnorData milnor_data(const Poly& f) {
  MilnorData md;
  md.f = f;
  const int nv = f.nvars();
  for (int i = 0; i < nv; ++i) md.jacobian.push_back(f.derivative(i));
  if (std::all_of(md.jacobian.begin(), md.jacobian.end(), [](const Poly& p) { return p.is_zero(); }))
    fail(ErrorKind::NonIsolatedSingularity, "f has no nonzero partial derivative");

  auto st = std_with_transform(md.jacobian);
  md.jacobian_std = std::move(st.basis);
  md.transform = std::move(st.transform);
  md.basis = standard_monomials(md.jacobian_std.leads, nv);
  if (md.basis.empty()) fail(ErrorKind::NotSingular, "origin is not a critical point");
  md.mu = static_cast<int>(md.basis.size());
  for (int i = 0; i < md.mu; ++i) md.basis_index.emplace(md.basis[i], i);
  int top = 0;
  for (const auto& m : md.basis) top = std::max(top, m.degree());
  md.nf_bound = top + 1;
  return md;
}

}  // namespace blk
