#include <numeric>
#include <random>

#include "blk/error.hpp"
#include "blk/smodule.hpp"
#include "doctest.h"

using namespace blk;

namespace {

// Column vector from per-entry coefficient lists (entry i, power k).
SeriesVector vec(const std::vector<std::vector<int>>& entries, int precision) {
  SeriesVector v(entries.size(), precision);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t k = 0; k < entries[i].size() && static_cast<int>(k) < precision; ++k) v.at(k, i) = entries[i][k];
  return v;
}

// U * diag(s^d_i) * V with random unimodular constant-term U, V.
SeriesMatrix random_lattice(std::mt19937& rng, int mu, int precision, std::vector<int>& ds) {
  std::uniform_int_distribution<int> c(-3, 3), dd(0, 3);
  auto unit = [&] {
    SeriesMatrix u(mu, mu, precision);
    for (int k = 0; k < std::min(precision, 3); ++k)
      for (int i = 0; i < mu; ++i)
        for (int j = 0; j < mu; ++j) u.coeff(k)(i, j) = (k == 0 && i > j) ? 0 : c(rng);
    for (int i = 0; i < mu; ++i) u.coeff(0)(i, i) = 1 + (i % 2);
    return u;
  };
  SeriesMatrix d(mu, mu, precision);
  ds.clear();
  for (int i = 0; i < mu; ++i) {
    ds.push_back(dd(rng));
    d.coeff(ds.back())(i, i) = 1;
  }
  SeriesMatrix u = unit(), v = unit();
  // Mix rows and columns so the leads are not in place.
  Matrix perm(mu, mu);
  for (int i = 0; i < mu; ++i) perm((i + 1) % mu, i) = 1;
  return multiply(multiply(SeriesMatrix::constant(perm, precision), multiply(u, d)), v);
}

}  // namespace

TEST_CASE("std_s examples") {
  auto e = std_s(SeriesMatrix::identity(3, 4));
  CHECK(e.nu == std::vector<int>{0, 0, 0});
  CHECK(e.matrix() == SeriesMatrix::identity(3, 4));

  // Columns (0, s) and (1, 1); e_1 leads e_2 on equal s-power.
  std::vector<SeriesVector> h{vec({{}, {0, 1}}, 4), vec({{1}, {1}}, 4)};
  auto b = std_s(h, 4);
  CHECK(b.nu == std::vector<int>{0, 1});
  CHECK(b.sum_nu() == 1);
  CHECK(b.cols[0] == vec({{1}, {1}}, 4));
  CHECK(b.cols[1] == vec({{}, {0, 1}}, 4));

  std::vector<SeriesVector> deficient{vec({{1}, {1}}, 3), vec({{2}, {2}}, 3)};
  CHECK_THROWS_AS(std_s(deficient, 3), Error);
}

TEST_CASE("reduce_s and contains examples") {
  auto H = std_s(std::vector<SeriesVector>{vec({{0, 1}, {}}, 5), vec({{}, {1}}, 5)}, 5);
  CHECK(reduce_s(H.cols[0], H).is_zero());
  CHECK(reduce_s(vec({{1}, {}}, 5), H) == vec({{1}, {}}, 5));
  CHECK(reduce_s(vec({{0, 0, 1}, {1}}, 5), H).is_zero());
  auto mixed = std_s(std::vector<SeriesVector>{vec({{}, {0, 1}}, 5), vec({{1}, {1}}, 5)}, 5);
  CHECK(reduce_s(vec({{2, 3}, {2, 1}}, 5), mixed).is_zero());
  CHECK(reduce_s(vec({{0, 1}, {}}, 5), mixed).is_zero());
  CHECK(reduce_s(vec({{}, {1}}, 5), mixed) == vec({{}, {1}}, 5));
  CHECK(contains(std_s(SeriesMatrix::identity(2, 5)), std::vector<SeriesVector>{vec({{1, 2}, {3}}, 5)}));
  CHECK_FALSE(contains(H, std::vector<SeriesVector>{vec({{1}, {}}, 5)}));
  CHECK(contains(H, std::vector<SeriesVector>{vec({{0, 0, 0, 1}, {0, 1}}, 5)}));
}

TEST_CASE("reduced minimal standard basis examples") {
  auto e = reduced_min_std(std_s(SeriesMatrix::identity(2, 3)));
  CHECK(e.matrix() == SeriesMatrix::identity(2, 3));
  // The e_1-entry 1 of (1, 1) is not divisible by the lead s e_2; it stays.
  auto b = reduced_min_std(std::vector<SeriesVector>{vec({{}, {0, 1}}, 4), vec({{1}, {1}}, 4)}, 4);
  CHECK(b.cols[0] == vec({{1}, {1}}, 4));
  CHECK(b.cols[1] == vec({{}, {0, 1}}, 4));
  // Tail terms reducible by another lead are removed.
  auto c = reduced_min_std(std::vector<SeriesVector>{vec({{}, {0, 1}}, 4), vec({{1}, {1, 1, 2}}, 4)}, 4);
  CHECK(c.cols[0] == vec({{1}, {1}}, 4));
  auto again = reduced_min_std(b);
  CHECK(again.cols == b.cols);
}

TEST_CASE("invert_jet examples") {
  auto e = std_s(SeriesMatrix::identity(2, 4));
  CHECK(invert_jet(e, 0, 3) == SeriesMatrix::identity(2, 4));
  auto d = std_s(std::vector<SeriesVector>{vec({{0, 1}, {}}, 5), vec({{}, {1}}, 5)}, 5);
  SeriesMatrix expect(2, 2, 4);
  expect.coeff(0)(0, 0) = 1;
  expect.coeff(1)(1, 1) = 1;
  CHECK(invert_jet(d, 1, 3) == expect);
}

TEST_CASE("random lattices: invariants") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int mu = 2 + trial % 4, P = 10;
    std::vector<int> ds;
    SeriesMatrix H = random_lattice(rng, mu, P, ds);
    SBasis b = std_s(H);
    // Elementary divisors are invariants of the module.
    auto sorted_nu = b.nu, sorted_d = ds;
    std::sort(sorted_nu.begin(), sorted_nu.end());
    std::sort(sorted_d.begin(), sorted_d.end());
    CHECK(sorted_nu == sorted_d);
    CHECK(b.sum_nu() == std::accumulate(ds.begin(), ds.end(), 0));
    // Mutual containment at degrees where s^{max nu} E is inside.
    CHECK(contains(b, H));
    SBasis hb = std_s(H.columns(), P);
    CHECK(contains(hb, b.cols));
    // Permuting and mixing generators leaves nu unchanged.
    auto cols = H.columns();
    std::reverse(cols.begin(), cols.end());
    cols[0].axpy(3, 1, cols[1]);
    CHECK(std_s(cols, P).nu == b.nu);
    // Reduction is linear and idempotent.
    SeriesVector v = H.column(0), w(mu, P);
    w.at(1, 0) = 5;
    w.at(0, mu - 1) = -2;
    auto rv = reduce_s(v, b), rw = reduce_s(w, b);
    CHECK(reduce_s(rw, b) == rw);
    SeriesVector sum = v;
    sum.axpy(frac(2, 3), 0, w);
    SeriesVector rsum = rv;
    rsum.axpy(frac(2, 3), 0, rw);
    CHECK(reduce_s(sum, b) == rsum);
    // Reduced basis: unique and idempotent.
    auto red = reduced_min_std(b);
    CHECK(reduced_min_std(cols, P).cols == red.cols);
    CHECK(reduced_min_std(red).cols == red.cols);
    // s^d H^{-1} really inverts H up to the requested jet.
    const int d = b.max_nu(), jet = P - 1 - d;
    SeriesMatrix X = invert_jet(b, d, jet);
    SeriesMatrix prod = multiply(b.matrix().truncated(jet + 1), X);
    SeriesMatrix sd(mu, mu, jet + 1);
    sd.coeff(d) = Matrix::identity(mu);
    CHECK(prod == sd);
  }
}
