#pragma once

#include <vector>

#include "blk/matrix.hpp"
#include "blk/smodule.hpp"
#include "blk/upoly.hpp"

namespace blk {

// Similar upper Hessenberg matrix, by exact elimination with row pivoting.
Matrix hessenberg(Matrix a);
UPoly characteristic_polynomial(const Matrix& a);

// Rational roots of p with multiplicity, ascending. Throws
// IrrationalEigenvalue unless p splits over Q.
std::vector<Rational> rational_roots(const UPoly& p);

// Eigenvalues of a with multiplicity, ascending.
std::vector<Rational> rational_eigen(const Matrix& a);

struct EigenBlock {
  Rational alpha;
  std::size_t start = 0;
  std::size_t dim = 0;
};

// S^{-1} a S = diag(alphas) + N, with S built from the generalized eigenspaces
// in ascending eigenvalue order; N is nilpotent and block diagonal.
struct EigenDecomposition {
  std::vector<Rational> alphas;
  std::vector<EigenBlock> blocks;
  Matrix S, S_inv, N;
};

EigenDecomposition jordan_chevalley(const Matrix& a);

// Record of one basis change of the stage: new basis = old basis * factor.
struct BasisChange {
  SeriesMatrix factor;
  std::string what;
};

// t-matrix jet together with the representation of the lattice.
struct VState {
  SeriesMatrix A;  // A_0 = 0
  Lattice lattice;
  std::vector<BasisChange> changes;
};

// Repeats: block-diagonalize A_1, and while the eigenvalue spread is >= 1
// multiply the low block of the basis by s. At most n shifts.
// Returns the final decomposition of A_1 (block diagonal, spread < 1).
EigenDecomposition v_shift_loop(VState& st, int n);

// Solves (a_j - a_i - k) X + X N_j - N_i X = R for block-diagonal A_1.
Matrix solve_commutator(const EigenDecomposition& ed, int k, const Matrix& R);

// U with U A_1 s = (A + s^2 d/ds) U, to degree D. Requires A to degree D + 1.
SeriesMatrix v_split_u(const EigenDecomposition& ed, const SeriesMatrix& A, int D);

// Applies the canonical V-splitting: afterwards the t-matrix is exactly A_1 s.
// U is computed to degree max(kappa, extra_degree).
void v_split_transform(VState& st, const EigenDecomposition& ed, int extra_degree);

}  // namespace blk
