#include "blk/brieskorn.hpp"

#include <algorithm>

#include "blk/error.hpp"

namespace blk {

BrieskornReducer::BrieskornReducer(const MilnorData& md) : md_(md) {
  int top = 0;
  for (const auto& m : md.basis) top = std::max(top, m.degree());
  d_ = top + 2;
  const int nv = md.nvars();
  for (std::size_t j = 0; j < md.jacobian_std.gens.size(); ++j) {
    Poly div(nv);
    for (int i = 0; i < nv; ++i) div += md.transform[i][j].derivative(i);
    div_b_.push_back(std::move(div));
  }
}

Poly BrieskornReducer::generator(std::size_t j, const Monomial& beta) const {
  const int nv = md_.nvars();
  Poly xb = Poly::term(beta, 1);
  Poly rel(nv);
  for (int i = 0; i < nv; ++i) rel += (md_.transform[i][j] * xb).derivative(i);
  return md_.jacobian_std.gens[j] * xb - Poly::s_power(nv, 1) * rel;
}

void BrieskornReducer::insert(NfState& st, const Monomial& m, const Rational& c) const {
  if (c == 0) return;
  if (!in_window(m, st.K)) {
    st.deferred.add_term(m, c);
    return;
  }
  auto [it, inserted] = st.rest.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) st.rest.erase(it);
  }
}

NfState BrieskornReducer::start(const Poly& p) const {
  NfState st;
  st.deferred = p;
  return st;
}

void BrieskornReducer::advance(NfState& st, int K) const {
  if (K <= st.K) return;
  st.K = K;
  st.coeffs.resize(K, Vector(md_.mu));
  Poly still(md_.nvars());
  for (const auto& [m, c] : st.deferred.terms()) {
    if (in_window(m, K)) insert(st, m, c);
    else still.add_term(m, c);
  }
  st.deferred = std::move(still);

  const auto& g = md_.jacobian_std;
  while (!st.rest.empty()) {
    auto node = st.rest.extract(st.rest.begin());
    const Monomial& m = node.key();
    const Rational c = node.mapped();
    Monomial x_part = m;
    x_part.s = 0;
    auto basis_it = md_.basis_index.find(x_part);
    if (basis_it != md_.basis_index.end()) {
      st.coeffs[m.s][basis_it->second] += c;
      continue;
    }
    std::size_t j = 0;
    while (j < g.leads.size() && !g.leads[j].divides(x_part)) ++j;
    if (j == g.leads.size()) fail(ErrorKind::InvariantViolation, "brieskorn nf: irreducible non-basis monomial");

    // Subtract c s^k h_{j,beta}; the lead term cancels by construction.
    Monomial beta = x_part / g.leads[j];
    Monomial shift = beta;
    shift.s = m.s;
    for (const auto& [t, a] : g.gens[j].terms()) {
      if (t == g.leads[j]) continue;
      insert(st, t * shift, -c * a);
    }
    Monomial shift1 = shift;
    shift1.s += 1;
    for (const auto& [t, a] : div_b_[j].terms()) insert(st, t * shift1, c * a);
    for (int i = 0; i < md_.nvars(); ++i) {
      if (beta.x[i] == 0) continue;
      Monomial lowered = shift1;
      lowered.x[i] -= 1;
      const Rational bi = c * beta.x[i];
      for (const auto& [t, a] : md_.transform[i][j].terms()) insert(st, t * lowered, bi * a);
    }
  }
}

SeriesVector BrieskornReducer::nf(const Poly& p, int K) const {
  NfState st = start(p);
  advance(st, K);
  SeriesVector v(md_.mu, K);
  for (int k = 0; k < K; ++k) v.coeff(k) = st.coeffs[k];
  return v;
}

TMatrixJet::TMatrixJet(const MilnorData& md) : md_(md), reducer_(md) {
  for (const auto& m : md.basis) columns_.push_back(reducer_.start(md.f * Poly::term(m, 1)));
}

void TMatrixJet::extend(int D, bool parallel) {
  const int K = D + 1;
  const int mu = md_.mu;
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < mu; ++b) reducer_.advance(columns_[b], K);
  } else {
    for (int b = 0; b < mu; ++b) reducer_.advance(columns_[b], K);
  }
}

SeriesMatrix TMatrixJet::collect(int D) const {
  SeriesMatrix a(md_.mu, md_.mu, D + 1);
  for (int b = 0; b < md_.mu; ++b)
    for (int k = 0; k <= D; ++k)
      for (int i = 0; i < md_.mu; ++i) a.coeff(k)(i, b) = columns_[b].coeffs[k][i];
  return a;
}

SeriesMatrix TMatrixJet::jet(int D) {
  extend(D, true);
  return collect(D);
}

SeriesMatrix TMatrixJet::jet_serial(int D) {
  extend(D, false);
  return collect(D);
}

SeriesMatrix t_matrix_jet(const MilnorData& md, int D) { return TMatrixJet(md).jet(D); }

SeriesMatrix t_matrix_jet_serial(const MilnorData& md, int D) { return TMatrixJet(md).jet_serial(D); }

}  // namespace blk
