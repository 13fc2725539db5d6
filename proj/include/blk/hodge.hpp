#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "blk/vstructure.hpp"

namespace blk {

// Subspace of Q^d given by a basis in reduced row echelon form.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);

// One generalized eigenspace of A_1 in the c-basis, with the filtration
// Phi_0 <= ... <= Phi_kappa spanned by the s^j parts of the standard basis
// columns with lead in the block. F_k C^{lambda - 1 + q} = Phi_{k + q + offset}.
struct HodgeBlock {
  Rational lambda;
  std::size_t start = 0;
  std::size_t dim = 0;
  Matrix N;
  std::vector<std::vector<Vector>> phi;

  // Phi_j, clamped: 0 below 0 and everything above kappa.
  std::vector<Vector> Phi(int j) const;
};

struct HodgeFiltration {
  std::vector<HodgeBlock> blocks;
  int kappa = 0;
  int offset = 0;

  // F_k C^alpha in block coordinates; empty if alpha is not in any class.
  std::vector<Vector> F(const Rational& alpha, int k) const;
};

// H is a standard basis of the lattice s^offset H'' in c-coordinates, where
// ed describes A_1 (block diagonal, ascending eigenvalues).
HodgeFiltration hodge_filtration(const SBasis& H, const EigenDecomposition& ed, int offset);

// Increasing filtration of a nilpotent N centered at `center`:
// W_{center+k} = sum_{j >= max(0,-k)} ker N^{k+j+1} cap im N^j.
struct WeightFiltration {
  int center = 0;
  int depth = 0;  // W_{center-depth-1} = 0, W_{center+depth} = everything
  std::size_t dim = 0;
  std::vector<std::vector<Vector>> levels;  // levels[i] = W_{center-depth+i}

  std::vector<Vector> W(int l) const;
};

WeightFiltration weight_filtration(const Matrix& N, int center);

// Pieces C_0 .. C_kappa with Phi_k = C_0 + ... + C_k (direct) and
// N C_k <= C_{k+1}. The basis of C_k starts with the nonzero images N b of the
// basis of C_{k-1}.
std::vector<std::vector<Vector>> hodge_splitting(const HodgeBlock& block);

enum class FOrder { LambdaAscKDesc, LambdaAscKAsc, LambdaDescKDesc, LambdaDescKAsc };

struct BasisTag {
  Rational lambda;  // A_1 eigenvalue block in the c-basis
  int piece = 0;    // index of the Hodge splitting piece
};

struct SaitoBasisResult {
  Matrix A0, A1;
  Matrix A2;                     // s^2 coefficient of the computed jet, zero
  std::vector<BasisTag> tags;   // per final basis vector
  Matrix F;                     // f-basis in c-coordinates (columns)
  SBasis R;                     // reduced minimal standard basis in f-coordinates
  std::vector<std::size_t> order;  // final index -> index in the R basis
};

// Needs the lattice and t-matrix A_1 s in c-coordinates, ed for A_1.
SaitoBasisResult saito_basis(const Lattice& lattice, const EigenDecomposition& ed, const HodgeFiltration& hf,
                             FOrder order = FOrder::LambdaAscKDesc);

struct SpectralPair {
  Rational alpha;
  int l = 0;
  int mult = 0;
  auto operator<=>(const SpectralPair&) const = default;
};

struct MonodromyClass {
  Rational alpha_class;  // in (-1, 0]
  std::vector<int> jordan_blocks;  // descending
};

struct SpectralData {
  std::vector<SpectralPair> pairs;                 // ascending (alpha, l)
  std::vector<std::pair<Rational, int>> numbers;   // ascending alpha
  std::map<std::tuple<Rational, int, int>, int> hodge_numbers;  // (class, p, q)
  std::vector<MonodromyClass> monodromy;           // ascending class
};

// n is the number of variables. Throws SymmetryViolation.
SpectralData spectral_data(const HodgeFiltration& hf, int n);

// The symmetry checks, returned as a list of failures (empty when all hold).
std::vector<std::string> symmetry_failures(const SpectralData& sd, int n, int mu);

// Jordan block sizes of a nilpotent matrix, descending.
std::vector<int> jordan_sizes(const Matrix& N);

}  // namespace blk
