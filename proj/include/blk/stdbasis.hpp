#pragma once

#include <map>
#include <vector>

#include "blk/poly.hpp"

namespace blk {

// Standard basis of an ideal of the local ring Q[x]_<x> with respect to the
// local degree ordering. gens are monic and minimal.
struct StdBasis {
  std::vector<Poly> gens;
  std::vector<Monomial> leads;
};

struct StdWithTransform {
  StdBasis basis;
  // transform[i][j]: g_j = sum_i input_i * transform[i][j], exactly.
  std::vector<std::vector<Poly>> transform;
};

// Mora's tangent cone algorithm; every intermediate polynomial carries its
// expression in the input generators.
StdWithTransform std_with_transform(const std::vector<Poly>& gens);

// Truncated strong normal form: terms of degree >= degree_bound are dropped
// and no remaining term is divisible by a lead of G.
Poly mora_nf(const Poly& p, const StdBasis& G, int degree_bound);

// Monomials outside <leads>, descending in the local order (1 first).
// Throws NonIsolatedSingularity if some variable has no pure power among leads.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, int nvars);

struct MilnorData {
  Poly f;
  std::vector<Poly> jacobian;  // d f / d x_i
  StdBasis jacobian_std;
  std::vector<std::vector<Poly>> transform;  // g = jacobian * transform
  std::vector<Monomial> basis;               // the monomial basis m
  std::map<Monomial, int> basis_index;
  int mu = 0;
  int nf_bound = 0;  // mora_nf with this bound is exact in the Milnor algebra

  int nvars() const { return f.nvars(); }
};

MilnorData milnor_data(const Poly& f);

}  // namespace blk
