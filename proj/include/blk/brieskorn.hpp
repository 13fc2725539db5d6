#pragma once

#include <map>
#include <vector>

#include "blk/series.hpp"
#include "blk/stdbasis.hpp"

namespace blk {

// Block ordering (<_s, <_x) as a strict weak order: leading terms first.
struct BlockLeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp(kBlockSX, a, b) > 0; }
};

// Resumable reduction state of one element of Q[s,x].
struct NfState {
  int K = 0;
  std::map<Monomial, Rational, BlockLeadingFirst> rest;  // terms still to reduce
  Poly deferred;                                         // terms in V_K, kept for later
  std::vector<Vector> coeffs;                            // coeffs[k][beta], k < K
};

// The generators h_{j,beta} = g_j x^beta - s sum_i d_i(B_ij x^beta) of the
// relation module, produced on demand, and the normal form modulo them.
class BrieskornReducer {
public:
  explicit BrieskornReducer(const MilnorData& md);

  const MilnorData& milnor() const { return md_; }
  int deg_s() const { return -d_; }

  // h_{j,beta} as an explicit polynomial (for tests; reduction inlines it).
  Poly generator(std::size_t j, const Monomial& beta) const;

  NfState start(const Poly& p) const;
  // Continue the reduction so that coeffs is exact for all k < K.
  void advance(NfState& state, int K) const;

  // Coefficients c_{k,beta}, k < K, with p = sum c_{k,beta} s^k [m_beta] mod s^K.
  SeriesVector nf(const Poly& p, int K) const;

private:
  bool in_window(const Monomial& m, int K) const {
    return m.s < K && m.degree() <= (K - m.s) * d_ - 2;
  }
  void insert(NfState& st, const Monomial& m, const Rational& c) const;

  const MilnorData& md_;
  int d_ = 0;                                   // -deg(s)
  std::vector<Poly> div_b_;                     // sum_i d_i B_ij
};

// Lazily extended jet of the [m]-matrix A of t, with A e_beta = nf(f m_beta).
class TMatrixJet {
public:
  explicit TMatrixJet(const MilnorData& md);

  int mu() const { return md_.mu; }
  // A_0 .. A_D (precision D + 1). Columns are reduced concurrently.
  SeriesMatrix jet(int D);
  // Same result with a sequential column loop.
  SeriesMatrix jet_serial(int D);

private:
  void extend(int D, bool parallel);
  SeriesMatrix collect(int D) const;

  const MilnorData& md_;
  BrieskornReducer reducer_;
  std::vector<NfState> columns_;
};

// Fresh computation of the D-jet of A (parallel and sequential variants).
SeriesMatrix t_matrix_jet(const MilnorData& md, int D);
SeriesMatrix t_matrix_jet_serial(const MilnorData& md, int D);

}  // namespace blk
