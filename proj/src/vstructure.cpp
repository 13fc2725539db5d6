#include "blk/vstructure.hpp"

#include <algorithm>

#include "blk/error.hpp"

namespace blk {

Matrix hessenberg(Matrix h) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
    }
    for (std::size_t r = k + 2; r < n; ++r) {
      if (h(r, k) == 0) continue;
      Rational m = h(r, k) / h(k + 1, k);
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= m * h(k + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, k + 1) += m * h(i, r);
    }
  }
  return h;
}

UPoly characteristic_polynomial(const Matrix& a) {
  Matrix h = hessenberg(a);
  const std::size_t n = h.rows();
  auto H = [&](std::size_t i, std::size_t j) -> const Rational& { return h(i - 1, j - 1); };
  std::vector<UPoly> p{UPoly({Rational(1)})};
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly pm = UPoly::linear(H(m, m)) * p[m - 1];
    Rational prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod *= H(i + 1, i);
      if (prod == 0) break;
      pm = pm - p[i - 1] * Rational(H(i, m) * prod);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

namespace {

int sign(const Rational& q) { return sgn(q); }

std::vector<UPoly> sturm_sequence(const UPoly& g) {
  std::vector<UPoly> seq{g, g.derivative()};
  while (seq.back().degree() > 0) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r * Rational(-1));
  }
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Squarefree part with integer coefficients, content 1, positive lead.
UPoly primitive_squarefree(const UPoly& p) {
  UPoly g = UPoly::divmod(p, UPoly::gcd(p, p.derivative())).first;
  Integer den = 1;
  for (const auto& c : g.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Rational> ints;
  Integer content = 0;
  for (const auto& c : g.coeffs()) {
    Rational v = c * den;
    ints.push_back(v);
    content = gcd(content, Integer(v.get_num()));
  }
  if (g.lead() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return UPoly(std::move(ints));
}

// The unique rational root in (lo, hi] of a squarefree integer polynomial g
// with leading coefficient q_bound.
Rational isolate_rational(const UPoly& g, const std::vector<UPoly>& seq, Rational lo, Rational hi,
                          const Integer& q_bound) {
  if (g(hi) == 0) return hi;
  // Two rationals with denominators at most Q differ by at least 1/Q^2.
  const Rational tiny = Rational(1) / Rational(2 * q_bound * q_bound);
  while (true) {
    Rational cand = simplest_between(lo, hi);
    if (g(cand) == 0) return cand;
    if (hi - lo < tiny)
      fail(ErrorKind::IrrationalEigenvalue, "characteristic polynomial has an irrational root");
    Rational mid = (lo + hi) / 2;
    for (const auto& m : {cand, mid}) {
      if (!(lo < m && m < hi)) continue;
      if (g(m) == 0) return m;
      if (sign_changes(seq, lo) - sign_changes(seq, m) == 1) hi = m;
      else lo = m;
    }
  }
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.degree() <= 0) return {};
  UPoly g = primitive_squarefree(p);
  auto seq = sturm_sequence(g);

  Rational bound = 0;
  for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, Rational(abs(g.coeffs()[i] / g.lead())));
  bound += 1;
  if (sign_changes(seq, -bound) - sign_changes(seq, bound) != g.degree())
    fail(ErrorKind::IrrationalEigenvalue, "characteristic polynomial has non-real roots");

  const Integer q_bound = g.lead().get_num();
  std::vector<Rational> distinct;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int count = sign_changes(seq, lo) - sign_changes(seq, hi);
    if (count == 0) continue;
    if (count == 1) {
      distinct.push_back(isolate_rational(g, seq, lo, hi, q_bound));
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.push_back({lo, mid});
    work.push_back({mid, hi});
  }

  std::vector<Rational> roots;
  UPoly rest = p;
  for (const auto& r : distinct) {
    UPoly lin = UPoly::linear(r);
    while (true) {
      auto [q, rem] = UPoly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      roots.push_back(r);
      rest = q;
    }
  }
  if (static_cast<int>(roots.size()) != p.degree())
    fail(ErrorKind::IrrationalEigenvalue, "characteristic polynomial does not split over Q");
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_eigen(const Matrix& a) { return rational_roots(characteristic_polynomial(a)); }

EigenDecomposition jordan_chevalley(const Matrix& a) {
  const std::size_t n = a.rows();
  EigenDecomposition ed;
  ed.alphas = rational_eigen(a);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && ed.alphas[j] == ed.alphas[i]) ++j;
    const Rational alpha = ed.alphas[i];
    Matrix shifted = a - Matrix::identity(n) * alpha;
    auto ker = kernel(power(shifted, static_cast<int>(j - i)));
    if (ker.size() != j - i) fail(ErrorKind::InvariantViolation, "generalized eigenspace has wrong dimension");
    ed.blocks.push_back({alpha, i, j - i});
    for (auto& v : ker) basis.push_back(std::move(v));
    i = j;
  }
  ed.S = Matrix::from_columns(basis, n);
  auto inv = inverse(ed.S);
  if (!inv) fail(ErrorKind::InvariantViolation, "generalized eigenvectors are dependent");
  ed.S_inv = std::move(*inv);
  ed.N = ed.S_inv * a * ed.S - Matrix::diagonal(ed.alphas);
  if (!is_nilpotent(ed.N)) fail(ErrorKind::NotNilpotent, "Jordan-Chevalley nilpotent part is not nilpotent");
  return ed;
}

namespace {

void apply_constant(VState& st, const Matrix& S, const Matrix& S_inv, const std::string& what) {
  st.A = conjugate_constant(st.A, S, S_inv);
  for (auto& g : st.lattice.gens) {
    SeriesVector out(g.dim(), g.precision());
    for (int k = 0; k < g.precision(); ++k) out.coeff(k) = S_inv * g.coeff(k);
    g = std::move(out);
  }
  st.changes.push_back({SeriesMatrix::constant(S, 1), what});
}

}  // namespace

EigenDecomposition v_shift_loop(VState& st, int n) {
  const std::size_t mu = st.A.rows();
  for (int shifts = 0;; ++shifts) {
    if (st.A.precision() < 2 || !st.A.coeff(0).is_zero())
      fail(ErrorKind::InvariantViolation, "v_shift_loop: need A_0 = 0 and A_1 known");
    EigenDecomposition ed = jordan_chevalley(st.A.coeff(1));
    apply_constant(st, ed.S, ed.S_inv, "eigenspaces");
    if (ed.alphas.back() - ed.alphas.front() < 1) {
      // Express N and the blocks in the new coordinates.
      ed.S = Matrix::identity(mu);
      ed.S_inv = Matrix::identity(mu);
      return ed;
    }
    if (shifts >= n) fail(ErrorKind::SpreadNotClosing, "eigenvalue spread still >= 1 after n shifts");

    std::size_t low = 0;
    while (low < mu && ed.alphas[low] < ed.alphas.front() + 1) ++low;
    const SeriesMatrix& A = st.A;
    const int P = A.precision() - 1;
    SeriesMatrix B(mu, mu, P);
    for (int k = 0; k < P; ++k) {
      for (std::size_t i = 0; i < mu; ++i) {
        for (std::size_t j = 0; j < mu; ++j) {
          const bool il = i < low, jl = j < low;
          Rational v;
          if (il == jl) v = A.coeff(k)(i, j);
          else if (il) v = A.coeff(k + 1)(i, j);       // A12 / s
          else v = k > 0 ? A.coeff(k - 1)(i, j) : 0;  // s A21
          if (il && jl && i == j && k == 1) v += 1;    // A11 + s
          B.coeff(k)(i, j) = v;
        }
      }
    }
    for (std::size_t i = 0; i < low; ++i)
      for (std::size_t j = low; j < mu; ++j)
        if (A.coeff(0)(i, j) != 0 || A.coeff(1)(i, j) != 0)
          fail(ErrorKind::InvariantViolation, "v_shift_loop: A_1 is not block diagonal");
    st.A = std::move(B);

    Lattice& L = st.lattice;
    for (auto& g : L.gens) {
      SeriesVector out(mu, L.kappa + 2);
      for (int k = 0; k < std::min(g.precision(), L.kappa + 1); ++k)
        for (std::size_t i = 0; i < mu; ++i) out.at(i < low ? k : k + 1, i) = g.at(k, i);
      g = std::move(out);
    }
    // s^kappa e_i of the low block is no longer covered by s^{kappa+1} E.
    for (std::size_t i = 0; i < low; ++i) L.gens.push_back(SeriesVector::unit(mu, i, L.kappa, L.kappa + 2));
    L.kappa += 1;
    L.offset += 1;

    SeriesMatrix D(mu, mu, 2);
    for (std::size_t i = 0; i < mu; ++i) D.coeff(i < low ? 1 : 0)(i, i) = 1;
    st.changes.push_back({D, "shift"});
  }
}

Matrix solve_commutator(const EigenDecomposition& ed, int k, const Matrix& R) {
  const std::size_t mu = R.rows();
  Matrix X(mu, mu);
  for (const auto& bi : ed.blocks) {
    Matrix Ni = ed.N.block(bi.start, bi.start, bi.dim, bi.dim);
    for (const auto& bj : ed.blocks) {
      Matrix Nj = ed.N.block(bj.start, bj.start, bj.dim, bj.dim);
      const Rational c = bj.alpha - bi.alpha - k;
      if (c == 0) fail(ErrorKind::SingularCommutator, "commutator operator is singular");
      // c X + L(X) = R with L(X) = X N_j - N_i X nilpotent: X = sum_t (-L)^t R / c^{t+1}.
      Matrix term = R.block(bi.start, bj.start, bi.dim, bj.dim) * Rational(1 / c);
      Matrix acc = term;
      for (std::size_t t = 0; t < bi.dim + bj.dim && !term.is_zero(); ++t) {
        term = (term * Nj - Ni * term) * Rational(-1 / c);
        acc += term;
      }
      for (std::size_t r = 0; r < bi.dim; ++r)
        for (std::size_t s = 0; s < bj.dim; ++s) X(bi.start + r, bj.start + s) = acc(r, s);
    }
  }
  return X;
}

SeriesMatrix v_split_u(const EigenDecomposition& ed, const SeriesMatrix& A, int D) {
  const std::size_t mu = A.rows();
  if (A.precision() < D + 2) fail(ErrorKind::InvariantViolation, "v_split_u: t-matrix jet too short");
  SeriesMatrix U(mu, mu, D + 1);
  U.coeff(0) = Matrix::identity(mu);
  for (int k = 1; k <= D; ++k) {
    Matrix R(mu, mu);
    for (int j = 0; j < k; ++j)
      if (!A.coeff(k + 1 - j).is_zero()) R += A.coeff(k + 1 - j) * U.coeff(j);
    U.coeff(k) = solve_commutator(ed, k, R);
  }
  return U;
}

void v_split_transform(VState& st, const EigenDecomposition& ed, int extra_degree) {
  const std::size_t mu = st.A.rows();
  Lattice& L = st.lattice;
  const int D = std::max(L.kappa, extra_degree);
  SeriesMatrix U = v_split_u(ed, st.A, D);
  SeriesMatrix U_inv = inverse_unit(U.truncated(L.kappa + 1));
  for (auto& g : L.gens) {
    SeriesMatrix col = SeriesMatrix::from_columns({g}, mu, L.kappa + 1);
    g = multiply(U_inv, col).column(0);
  }
  SeriesMatrix A1s(mu, mu, 2);
  A1s.coeff(1) = st.A.coeff(1);
  st.A = std::move(A1s);
  st.changes.push_back({U, "canonical V-splitting"});
}

}  // namespace blk
