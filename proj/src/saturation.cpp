#include "blk/saturation.hpp"

#include <cstdlib>
#include <string>

#include "blk/error.hpp"

namespace blk {

JetProvider fixed_jet(SeriesMatrix A) {
  return [A = std::move(A)](int D) {
    if (D + 1 > A.precision())
      fail(ErrorKind::InvariantViolation, "fixed jet of degree " + std::to_string(A.precision() - 1) +
                                              " asked for degree " + std::to_string(D));
    return A.truncated(D + 1);
  };
}

SBasis with_precision(const SBasis& H, int precision) {
  SBasis out = H;
  out.precision = precision;
  for (auto& c : out.cols) c = c.truncated(precision);
  return out;
}

int default_saturation_steps(int mu, int nvars) {
  if (const char* env = std::getenv("BLK_MAX_SATURATION_STEPS")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::SyntaxError, std::string("BLK_MAX_SATURATION_STEPS is not a non-negative integer: ") + env);
  }
  return mu * nvars;
}

SaturationResult saturate(const JetProvider& provider, int mu, int max_steps) {
  const auto n = static_cast<std::size_t>(mu);
  SBasis H = std_s(SeriesMatrix::identity(n, 1));
  for (int k = 0;; ++k) {
    const int P = k + 2;
    SeriesMatrix A = provider(k + 1);
    // Q_k = (A + s^2 d/ds)^{k+1} E, recomputed at the current precision.
    SeriesMatrix Q = SeriesMatrix::identity(n, P);
    for (int j = 0; j <= k; ++j) Q = apply_t(A, Q);

    SBasis sH;
    sH.precision = P;
    for (std::size_t i = 0; i < n; ++i) {
      SeriesVector c(n, P);
      c.axpy(1, 1, H.cols[i]);
      sH.cols.push_back(std::move(c));
      sH.nu.push_back(H.nu[i] + 1);
    }
    if (contains(sH, Q)) {
      SaturationResult r;
      r.kappa = k;
      r.H_inf = H;
      r.H_rep = invert_jet(with_precision(H, 2 * k + 1), k, k);
      return r;
    }
    if (k >= max_steps)
      fail(ErrorKind::SaturationDiverged, "saturation did not stabilize within " + std::to_string(max_steps) + " steps");
    auto gens = sH.cols;
    for (auto& q : Q.columns()) gens.push_back(std::move(q));
    H = std_s(gens, P);
  }
}

SeriesMatrix transport(const SaturationResult& sat, const SeriesMatrix& A, int D) {
  const int kappa = sat.kappa;
  const int P = kappa + D + 1;
  if (A.precision() < P) fail(ErrorKind::InvariantViolation, "transport: t-matrix jet too short");
  const std::size_t n = sat.H_inf.mu();
  SBasis Hx = with_precision(sat.H_inf, P + sat.H_inf.max_nu());
  SeriesMatrix X = invert_jet(Hx, kappa, kappa + D);
  SeriesMatrix H = sat.H_inf.matrix().truncated(P);
  SeriesMatrix shifted = A.truncated(P);
  if (P > 1) shifted.coeff(1) -= Matrix::identity(n) * Rational(kappa);
  SeriesMatrix XM = multiply(X, apply_t(shifted, H));
  for (int j = 0; j < kappa; ++j)
    if (!XM.coeff(j).is_zero()) fail(ErrorKind::InvariantViolation, "transport: lattice is not t-stable");
  SeriesMatrix out(n, n, D + 1);
  for (int j = 0; j <= D; ++j) out.coeff(j) = XM.coeff(kappa + j);
  return out;
}

}  // namespace blk
