#include "blk/brieskorn.hpp"
#include "blk/error.hpp"
#include "blk/parse.hpp"
#include "blk/saturation.hpp"
#include "doctest.h"

using namespace blk;

namespace {

struct Run {
  MilnorData md;
  SaturationResult sat;
  SeriesMatrix A, Ah;
};

Run run(const std::string& f, int D = 4) {
  Run r;
  r.md = milnor_data(parse_poly(f).f);
  TMatrixJet jet(r.md);
  r.sat = saturate([&](int d) { return jet.jet(d); }, r.md.mu, default_saturation_steps(r.md.mu, 2));
  r.A = jet.jet(r.sat.kappa + D);
  r.Ah = transport(r.sat, r.A, D);
  return r;
}

}  // namespace

TEST_CASE("quasihomogeneous input is already saturated") {
  for (const char* f : {"x^2+y^2", "x^3+y^3", "x^3+y^4", "x^2+y^5"}) {
    auto r = run(f);
    CHECK(r.sat.kappa == 0);
    CHECK(r.sat.H_rep == SeriesMatrix::identity(r.md.mu, 1));
    CHECK(r.Ah == r.A.truncated(5));
  }
  auto r = run("x^2+y^2");
  CHECK(r.Ah.coeff(1) == Matrix::identity(1));
}

TEST_CASE("saturation of non-quasihomogeneous singularities") {
  for (const char* f : {"x^2*y^2+x^5+y^5", "x^3+x*y^4+y^5", "x^2*y^2+x^6+y^7", "x^4+y^5+x^2*y^3"}) {
    INFO("f = " << f);
    auto r = run(f);
    const auto mu = static_cast<std::size_t>(r.md.mu);
    CHECK(r.Ah.coeff(0).is_zero());
    // s^kappa E lies in the representation of the original lattice, which lies in E.
    SBasis rep = std_s(r.sat.H_rep.columns(), r.sat.kappa + 1);
    CHECK(rep.max_nu() <= r.sat.kappa);
    // Transporting back reproduces the original jet: A H + s^2 H' - kappa s H = H A_h.
    const int P = 5;
    SeriesMatrix H = r.sat.H_inf.matrix().truncated(P);
    SeriesMatrix shifted = r.A.truncated(P);
    shifted.coeff(1) -= Matrix::identity(mu) * Rational(r.sat.kappa);
    CHECK(apply_t(shifted, H) == multiply(H, r.Ah.truncated(P)));
    // Re-saturating the saturated jet is a no-op.
    auto again = saturate(fixed_jet(r.Ah), r.md.mu, 10);
    CHECK(again.kappa == 0);
    CHECK(again.H_rep == SeriesMatrix::identity(mu, 1));
    CHECK(again.H_inf.matrix() == SeriesMatrix::identity(mu, 1));
  }
  CHECK(run("x^2*y^2+x^5+y^5").sat.kappa >= 1);
}

TEST_CASE("safety valve") {
  auto md = milnor_data(parse_poly("x^2*y^2+x^5+y^5").f);
  TMatrixJet jet(md);
  try {
    saturate([&](int d) { return jet.jet(d); }, md.mu, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SaturationDiverged);
  }
}
