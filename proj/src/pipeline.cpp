#include "blk/pipeline.hpp"

#include "blk/error.hpp"

namespace blk {

ParsedPoly parse_input(std::string_view src) {
  ParsedPoly p = parse_poly(src);
  require_singular(p);
  return p;
}

SaturationStage run_saturation(const ParsedPoly& p, const PipelineOptions& opt, int extra_degree) {
  SaturationStage st;
  st.md = milnor_data(p.f);
  TMatrixJet jet(st.md);
  const int steps = opt.max_saturation_steps ? *opt.max_saturation_steps
                                             : default_saturation_steps(st.md.mu, st.md.nvars());
  st.sat = saturate([&](int d) { return jet.jet(d); }, st.md.mu, steps);
  st.A_h = transport(st.sat, jet.jet(st.sat.kappa + extra_degree), extra_degree);
  return st;
}

namespace {

SeriesMatrix permutation(const std::vector<std::size_t>& order, int precision) {
  Matrix P(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) P(order[i], i) = 1;
  return SeriesMatrix::constant(P, precision);
}

Audit build_audit(const PipelineResult& r, const SeriesMatrix& A_m, int D) {
  Audit a;
  a.degree = D;
  a.exponent = r.sat.kappa + r.hf.offset;
  const int P = D + 1;
  const std::size_t mu = static_cast<std::size_t>(r.md.mu);
  SeriesMatrix T = r.sat.H_inf.matrix().truncated(P);
  a.steps.push_back("saturation");
  for (const auto& c : r.v.changes) {
    T = multiply(T, c.factor.truncated(P));
    a.steps.push_back(c.what);
  }
  T = multiply(T, SeriesMatrix::constant(r.sb.F, P));
  a.steps.push_back("Hodge splitting");
  T = multiply(T, with_precision(r.sb.R, P).matrix().truncated(P));
  a.steps.push_back("reduced standard basis");
  T = multiply(T, permutation(r.sb.order, P));
  a.steps.push_back("eigenvalue order");
  a.P = T;

  SeriesMatrix Afin(mu, mu, P);
  Afin.coeff(0) = r.sb.A0;
  if (P > 1) Afin.coeff(1) = r.sb.A1;
  SeriesMatrix shifted = A_m.truncated(P);
  if (P > 1) shifted.coeff(1) -= Matrix::identity(mu) * Rational(a.exponent);
  a.conjugation_ok = apply_t(shifted, T) == multiply(T, Afin);
  a.s2_zero = r.sb.A2.is_zero();
  return a;
}

}  // namespace

PipelineResult run_pipeline(std::string_view src, const PipelineOptions& opt) {
  PipelineResult r;
  r.input = parse_input(src);
  r.n = static_cast<int>(r.input.names.size()) - 1;
  r.md = milnor_data(r.input.f);
  TMatrixJet jet(r.md);
  const int steps = opt.max_saturation_steps ? *opt.max_saturation_steps
                                             : default_saturation_steps(r.md.mu, r.md.nvars());
  r.sat = saturate([&](int d) { return jet.jet(d); }, r.md.mu, steps);

  // Each shift uses one degree, U needs one more than its own degree, and
  // the audit looks two degrees past kappa.
  const int D_h = r.sat.kappa + 2 * r.n + 4;
  SeriesMatrix A_m = jet.jet(r.sat.kappa + D_h);
  r.v.A = transport(r.sat, A_m, D_h);
  r.v.lattice = {r.sat.H_rep.columns(), r.sat.kappa, 0};
  r.ed = v_shift_loop(r.v, r.n);

  const int D_audit = r.v.lattice.kappa + 2;
  v_split_transform(r.v, r.ed, D_audit);

  r.hf = hodge_filtration(r.v.lattice.std_basis(), r.ed, r.v.lattice.offset);
  r.sb = saito_basis(r.v.lattice, r.ed, r.hf, opt.order);
  r.sd = spectral_data(r.hf, r.n);
  r.audit = build_audit(r, A_m, D_audit);
  if (!r.audit->conjugation_ok) fail(ErrorKind::InvariantViolation, "audit: conjugation mismatch");
  if (!r.audit->s2_zero) fail(ErrorKind::InvariantViolation, "audit: s^2 coefficient is nonzero");
  return r;
}

}  // namespace blk
