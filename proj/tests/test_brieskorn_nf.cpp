#include <random>

#include "blk/brieskorn.hpp"
#include "blk/parse.hpp"
#include "doctest.h"

using namespace blk;

namespace {

Poly P(const std::string& s) { return parse_poly("0*x+0*y+" + s).f; }

SeriesVector unit_at(int mu, int beta, int K) { return SeriesVector::unit(mu, beta, 0, K); }

// Multiplication by f on the Milnor algebra, from the local normal form.
Matrix milnor_multiplication(const MilnorData& md) {
  Matrix m(md.mu, md.mu);
  for (int b = 0; b < md.mu; ++b) {
    Poly r = mora_nf(md.f * Poly::term(md.basis[b], 1), md.jacobian_std, md.nf_bound);
    for (const auto& [t, c] : r.terms()) m(md.basis_index.at(t), b) = c;
  }
  return m;
}

}  // namespace

TEST_CASE("generators h_{j,beta}") {
  auto md = milnor_data(P("x^2+y^2"));
  BrieskornReducer red(md);
  CHECK(red.generator(0, Monomial({0, 0})) == P("x"));
  CHECK(red.generator(1, Monomial({2, 0})) == P("y*x^2"));
  // The relation differentiates the full product B x^beta.
  CHECK(red.generator(1, Monomial({2, 1})) == P("y^2*x^2") - Poly::s_power(2, 1) * P("1/2*x^2"));
  CHECK(red.generator(0, Monomial({1, 0})) == P("x^2") - Poly::s_power(2, 1) * Poly::constant(2, frac(1, 2)));

  auto md3 = milnor_data(parse_poly("x^3").f);
  BrieskornReducer red3(md3);
  CHECK(red3.generator(0, Monomial({0})) == parse_poly("x^2").f);

  auto mdt = milnor_data(P("x^2*y^2+x^5+y^5"));
  BrieskornReducer redt(mdt);
  for (std::size_t j = 0; j < mdt.jacobian_std.gens.size(); ++j) {
    Monomial beta({1, 2});
    Poly h = redt.generator(j, beta);
    CHECK(h.max_s_degree() <= 1);
    CHECK(h.lead(kBlockSX) == mdt.jacobian_std.leads[j] * beta);
  }
}

TEST_CASE("nf_brieskorn examples") {
  auto md = milnor_data(P("x^2+y^2"));
  BrieskornReducer red(md);
  auto v = red.nf(P("x^2"), 2);
  CHECK(v.at(0, 0) == 0);
  CHECK(v.at(1, 0) == frac(1, 2));
  v = red.nf(md.f, 2);
  CHECK(v.at(1, 0) == 1);

  auto mdt = milnor_data(P("x^2*y^2+x^5+y^5"));
  BrieskornReducer redt(mdt);
  for (int b = 0; b < mdt.mu; ++b) CHECK(redt.nf(Poly::term(mdt.basis[b], 1), 4) == unit_at(mdt.mu, b, 4));
}

TEST_CASE("t-matrix of quasihomogeneous singularities") {
  // A = diag(deg_w(m) + |w|) s for x^a + y^b with w = (1/a, 1/b).
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 4}, {2, 5}}) {
    auto md = milnor_data(P("x^" + std::to_string(a) + "+y^" + std::to_string(b)));
    auto A = t_matrix_jet(md, 4);
    Rational wa(1, a), wb(1, b);
    for (int k = 0; k <= 4; ++k) {
      if (k == 1) continue;
      CHECK(A.coeff(k).is_zero());
    }
    Matrix expect(md.mu, md.mu);
    for (int i = 0; i < md.mu; ++i)
      expect(i, i) = md.basis[i].x[0] * wa + md.basis[i].x[1] * wb + wa + wb;
    CHECK(A.coeff(1) == expect);
  }
  auto md = milnor_data(P("x^3+y^3"));
  CHECK(t_matrix_jet(md, 1).coeff(1) ==
        Matrix::diagonal(std::vector<Rational>{frac(2, 3), 1, 1, frac(4, 3)}));
}

TEST_CASE("normal form invariants") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 5), c(-4, 4);
  for (const char* f : {"x^2*y^2+x^5+y^5", "x^3+x*y^4", "x^4+y^5+x^2*y^3", "x^3+y^7+x*y^5"}) {
    auto md = milnor_data(P(f));
    BrieskornReducer red(md);
    INFO("f = " << f);
    for (int trial = 0; trial < 6; ++trial) {
      Poly p(2), q(2);
      for (int t = 0; t < 4; ++t) {
        p.add_term(Monomial({e(rng), e(rng)}, e(rng) % 2), c(rng));
        q.add_term(Monomial({e(rng), e(rng)}, e(rng) % 2), c(rng));
      }
      const int K = 4;
      Rational a = frac(3, 7), b = -2;
      auto lhs = red.nf(p * a + q * b, K);
      auto rhs = red.nf(p, K);
      rhs *= a;
      rhs.axpy(b, 0, red.nf(q, K));
      CHECK(lhs == rhs);
      for (int k2 = 1; k2 < K; ++k2) CHECK(red.nf(p, K).truncated(k2) == red.nf(p, k2));
      SeriesVector shifted(md.mu, K);
      shifted.axpy(1, 1, red.nf(p, K - 1));
      CHECK(red.nf(Poly::s_power(2, 1) * p, K) == shifted);
      // Resuming a partial reduction equals a fresh one.
      NfState st = red.start(p);
      red.advance(st, 2);
      red.advance(st, K);
      for (int k = 0; k < K; ++k) CHECK(st.coeffs[k] == red.nf(p, K).coeff(k));
    }
    TMatrixJet jet(md);
    auto A3 = jet.jet(3);
    auto A6 = jet.jet(6);
    CHECK(A6.truncated(4) == A3);
    CHECK(A6 == t_matrix_jet_serial(md, 6));
    CHECK(A3.coeff(0) == milnor_multiplication(md));
  }
}
