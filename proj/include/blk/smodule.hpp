#pragma once

#include <optional>
#include <vector>

#include "blk/series.hpp"

namespace blk {

// Minimal standard basis of a submodule of Q[[s]]^mu for the ordering
// (<_s, >_mu). Column i has lead s^{nu[i]} e_i with coefficient 1. All
// vectors are known modulo s^precision.
struct SBasis {
  std::vector<SeriesVector> cols;
  std::vector<int> nu;
  int precision = 0;

  std::size_t mu() const { return cols.size(); }
  int max_nu() const;
  int sum_nu() const;
  SeriesMatrix matrix() const { return SeriesMatrix::from_columns(cols, cols.size(), precision); }
};

// Gaussian elimination over the valuation ring with lowest-valuation pivots.
// Throws RankDeficient if some e_i never appears as a lead below precision.
SBasis std_s(const std::vector<SeriesVector>& gens, int precision);
SBasis std_s(const SeriesMatrix& H);

// Strong normal form: no term of the result is divisible by a lead of H.
SeriesVector reduce_s(const SeriesVector& v, const SBasis& H);

// As reduce_s, also returning q with v = H q + r. q_i is exact modulo
// s^{precision - nu_i}.
std::pair<SeriesVector, SeriesVector> reduce_s_with_quotient(const SeriesVector& v, const SBasis& H);

// Tail-reduces every column against all leads, including its own (a unit
// multiple). The result is unique given the module.
SBasis reduced_min_std(const SBasis& H);
SBasis reduced_min_std(const std::vector<SeriesVector>& gens, int precision);

bool contains(const SBasis& H, const std::vector<SeriesVector>& Q);
bool contains(const SBasis& H, const SeriesMatrix& Q);

// s^d H^{-1} modulo s^{jet + 1}, via reduction of s^d e_j. Requires
// s^d E in <H> and H.precision >= jet + 1 + max nu.
SeriesMatrix invert_jet(const SBasis& H, int d, int jet);

// Generators of a lattice s^{-offset} <gens, s^kappa E> with <gens> in <E>.
struct Lattice {
  std::vector<SeriesVector> gens;
  int kappa = 0;
  int offset = 0;

  // gens together with s^kappa e_i, at precision kappa + 1.
  std::vector<SeriesVector> generators() const;
  SBasis std_basis() const;
};

}  // namespace blk
