#pragma once

#include <functional>

#include "blk/smodule.hpp"

namespace blk {

// Returns the jet A_0 .. A_D (precision D + 1) of a t-matrix.
using JetProvider = std::function<SeriesMatrix(int D)>;

// Provider backed by a fixed jet; asking beyond it is an invariant violation.
JetProvider fixed_jet(SeriesMatrix A);

struct SaturationResult {
  int kappa = 0;
  SBasis H_inf;         // minimal standard basis of <H_kappa>, polynomial of degree <= kappa
  SeriesMatrix H_rep;   // s^kappa H_inf^{-1} mod s^{kappa+1}: the original lattice in the new basis
};

// Iterates H_{k+1} = (s H_k | Q_k), Q_k = (A + s^2 d/ds) Q_{k-1}, until
// <Q_k> lies in <s H_k>. Throws SaturationDiverged after max_steps steps.
SaturationResult saturate(const JetProvider& A, int mu, int max_steps);

// Default safety valve mu (n + 1), overridable by BLK_MAX_SATURATION_STEPS.
int default_saturation_steps(int mu, int nvars);

// jet_D of H^{-1} (A - kappa s + s^2 d/ds) H; needs A to degree kappa + D.
SeriesMatrix transport(const SaturationResult& sat, const SeriesMatrix& A, int D);

// s-degree extension of a polynomial standard basis by zero coefficients.
SBasis with_precision(const SBasis& H, int precision);

}  // namespace blk
