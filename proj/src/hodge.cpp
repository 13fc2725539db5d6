#include "blk/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blk/error.hpp"
#include "blk/saturation.hpp"

namespace blk {

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty() || dim == 0) return {};
  Echelon e = rref(Matrix::from_rows(vectors));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  std::vector<Vector> cols = a;
  for (const auto& v : b) {
    Vector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    cols.push_back(std::move(neg));
  }
  std::vector<Vector> common;
  for (const auto& x : kernel(Matrix::from_columns(cols, dim))) {
    Vector v(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (x[i] != 0)
        for (std::size_t r = 0; r < dim; ++r) v[r] += x[i] * a[i][r];
    common.push_back(std::move(v));
  }
  return span_basis(common, dim);
}

namespace {

std::size_t dim_of(const std::vector<Vector>& vectors, std::size_t dim) { return span_basis(vectors, dim).size(); }

std::vector<Vector> join(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool in_span(const Vector& v, const std::vector<Vector>& basis, std::size_t dim) {
  return dim_of(join(basis, {v}), dim) == dim_of(basis, dim);
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Vector> image(const Matrix& m) { return span_basis(m.columns(), m.rows()); }

int nilpotency_index(const Matrix& N) {
  if (!is_nilpotent(N)) fail(ErrorKind::NotNilpotent, "operator is not nilpotent");
  int m = 0;
  for (Matrix p = Matrix::identity(N.rows()); !p.is_zero(); p = p * N) ++m;
  return m;
}

Rational class_of(const Rational& a) { return a - Rational(ceil(a)); }

}  // namespace

std::vector<Vector> HodgeBlock::Phi(int j) const {
  if (j < 0) return {};
  if (j >= static_cast<int>(phi.size())) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  return phi[static_cast<std::size_t>(j)];
}

std::vector<Vector> HodgeFiltration::F(const Rational& alpha, int k) const {
  for (const auto& b : blocks) {
    Rational q = alpha - (b.lambda - 1);
    if (!is_integer(q)) continue;
    return b.Phi(k + static_cast<int>(q.get_num().get_si()) + offset);
  }
  return {};
}

HodgeFiltration hodge_filtration(const SBasis& H, const EigenDecomposition& ed, int offset) {
  HodgeFiltration hf;
  hf.kappa = H.max_nu();
  hf.offset = offset;
  for (const auto& blk : ed.blocks) {
    HodgeBlock hb;
    hb.lambda = blk.alpha;
    hb.start = blk.start;
    hb.dim = blk.dim;
    hb.N = ed.N.block(blk.start, blk.start, blk.dim, blk.dim);
    for (int j = 0; j <= hf.kappa; ++j) {
      std::vector<Vector> gens;
      for (std::size_t i = blk.start; i < blk.start + blk.dim; ++i) {
        if (H.nu[i] > j) continue;
        Vector v(blk.dim);
        for (std::size_t r = 0; r < blk.dim; ++r) v[r] = H.cols[i].at(H.nu[i], blk.start + r);
        gens.push_back(std::move(v));
      }
      hb.phi.push_back(span_basis(gens, blk.dim));
    }
    hf.blocks.push_back(std::move(hb));
  }
  return hf;
}

std::vector<Vector> WeightFiltration::W(int l) const {
  const int i = l - (center - depth);
  if (i < 0) return {};
  if (i >= static_cast<int>(levels.size())) return levels.empty() ? std::vector<Vector>{} : levels.back();
  return levels[static_cast<std::size_t>(i)];
}

WeightFiltration weight_filtration(const Matrix& N, int center) {
  WeightFiltration wf;
  wf.center = center;
  wf.dim = N.rows();
  const int m = nilpotency_index(N);
  wf.depth = m;
  std::vector<std::vector<Vector>> ker(static_cast<std::size_t>(2 * m + 2)), im(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= 2 * m + 1; ++j) ker[static_cast<std::size_t>(j)] = span_basis(kernel(power(N, j)), wf.dim);
  for (int j = 0; j <= m; ++j) im[static_cast<std::size_t>(j)] = image(power(N, j));
  for (int k = -m; k <= m; ++k) {
    std::vector<Vector> gens;
    for (int j = std::max(0, -k); j <= m; ++j) {
      const int kp = k + j + 1;
      if (kp <= 0) continue;
      gens = join(gens, intersect(ker[static_cast<std::size_t>(std::min(kp, 2 * m + 1))],
                                  im[static_cast<std::size_t>(j)], wf.dim));
    }
    wf.levels.push_back(span_basis(gens, wf.dim));
  }
  return wf;
}

std::vector<std::vector<Vector>> hodge_splitting(const HodgeBlock& block) {
  const std::size_t d = block.dim;
  const int m = nilpotency_index(block.N);
  const int top = static_cast<int>(block.phi.size()) - 1;
  std::vector<std::vector<Vector>> pieces;
  std::vector<std::vector<Vector>> kerN(static_cast<std::size_t>(m + 1));
  for (int j = 1; j <= m; ++j) kerN[static_cast<std::size_t>(j)] = span_basis(kernel(power(block.N, j)), d);

  for (int k = 0; k <= top; ++k) {
    const std::vector<Vector> phi_prev = block.Phi(k - 1);
    const std::vector<Vector> phi_k = block.Phi(k);
    std::vector<Vector> candidates;
    if (k > 0)
      for (const auto& b : pieces.back()) {
        Vector nb = block.N * b;
        if (!is_zero_vector(nb)) candidates.push_back(std::move(nb));
      }
    std::vector<Vector> span = phi_prev, chosen;
    std::vector<bool> used(candidates.size(), false);
    auto take = [&](const Vector& v) {
      if (in_span(v, span, d)) return false;
      span.push_back(v);
      chosen.push_back(v);
      return true;
    };
    for (int j = 1; j <= m; ++j) {
      std::vector<Vector> Zj = intersect(kerN[static_cast<std::size_t>(j)], phi_k, d);
      std::vector<Vector> Bj = join(phi_prev, Zj);
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (!used[c] && in_span(candidates[c], Bj, d)) {
          take(candidates[c]);
          used[c] = true;
        }
      for (const auto& z : Zj) take(z);
      if (dim_of(span, d) != dim_of(Bj, d))
        fail(ErrorKind::StrictnessViolation, "Hodge splitting: kernel filtration not reached");
    }
    if (dim_of(span, d) != phi_k.size())
      fail(ErrorKind::StrictnessViolation, "Hodge splitting: pieces do not span the filtration step");
    for (const auto& c : candidates)
      if (!in_span(c, chosen, d)) fail(ErrorKind::StrictnessViolation, "Hodge splitting: N is not strict");
    pieces.push_back(std::move(chosen));
  }
  return pieces;
}

SaitoBasisResult saito_basis(const Lattice& lattice, const EigenDecomposition& ed, const HodgeFiltration& hf,
                             FOrder order) {
  const std::size_t mu = ed.alphas.size();
  struct Entry {
    std::size_t block;
    int piece;
    Vector v;
  };
  std::vector<Entry> entries;
  for (std::size_t b = 0; b < hf.blocks.size(); ++b) {
    const HodgeBlock& hb = hf.blocks[b];
    auto pieces = hodge_splitting(hb);
    for (int j = 0; j < static_cast<int>(pieces.size()); ++j)
      for (const auto& w : pieces[static_cast<std::size_t>(j)]) {
        Vector v(mu);
        for (std::size_t r = 0; r < hb.dim; ++r) v[hb.start + r] = w[r];
        entries.push_back({b, j, std::move(v)});
      }
  }
  const bool lambda_asc = order == FOrder::LambdaAscKDesc || order == FOrder::LambdaAscKAsc;
  const bool k_desc = order == FOrder::LambdaAscKDesc || order == FOrder::LambdaDescKDesc;
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.block != b.block) return lambda_asc ? a.block < b.block : a.block > b.block;
    if (a.piece != b.piece) return k_desc ? a.piece > b.piece : a.piece < b.piece;
    return false;
  });

  SaitoBasisResult sb;
  std::vector<Vector> fcols;
  for (const auto& e : entries) {
    fcols.push_back(e.v);
    sb.tags.push_back({hf.blocks[e.block].lambda, e.piece});
  }
  sb.F = Matrix::from_columns(fcols, mu);
  auto Finv = inverse(sb.F);
  if (!Finv) fail(ErrorKind::InvariantViolation, "Hodge splitting is not a basis");

  const int kappa = lattice.kappa;
  std::vector<SeriesVector> gens;
  for (const auto& g : lattice.generators()) {
    SeriesVector out(mu, g.precision());
    for (int k = 0; k < g.precision(); ++k) out.coeff(k) = *Finv * g.coeff(k);
    gens.push_back(std::move(out));
  }
  sb.R = reduced_min_std(gens, kappa + 1);

  const int P = kappa + 4;
  SBasis Rp = with_precision(sb.R, P + sb.R.max_nu());
  SeriesMatrix X = invert_jet(Rp, kappa, P - 1);
  SeriesMatrix T(mu, mu, P);
  T.coeff(1) = *Finv * (Matrix::diagonal(ed.alphas) + ed.N) * sb.F - Matrix::identity(mu) * Rational(hf.offset);
  SeriesMatrix M = apply_t(T, Rp.matrix().truncated(P));
  SeriesMatrix XM = multiply(X, M);
  sb.A2 = XM.coeff(kappa + 2);
  for (int k = 0; k < P; ++k) {
    if (k == kappa || k == kappa + 1) continue;
    if (!XM.coeff(k).is_zero()) {
      if (k < kappa) fail(ErrorKind::InvariantViolation, "Saito basis: t-matrix has a pole");
      fail(ErrorKind::DegreeNotOne, "t-matrix in the Hodge-split basis has degree > 1");
    }
  }
  Matrix A0 = XM.coeff(kappa), A1 = XM.coeff(kappa + 1);

  sb.order.resize(mu);
  std::iota(sb.order.begin(), sb.order.end(), 0);
  std::stable_sort(sb.order.begin(), sb.order.end(),
                   [&](std::size_t a, std::size_t b) { return A1(a, a) < A1(b, b); });
  sb.A0 = Matrix(mu, mu);
  sb.A1 = Matrix(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      sb.A0(i, j) = A0(sb.order[i], sb.order[j]);
      sb.A1(i, j) = A1(sb.order[i], sb.order[j]);
    }
  std::vector<BasisTag> tags;
  for (std::size_t i = 0; i < mu; ++i) tags.push_back(sb.tags[sb.order[i]]);
  sb.tags = std::move(tags);
  return sb;
}

std::vector<int> jordan_sizes(const Matrix& N) {
  const int m = nilpotency_index(N);
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= m + 1; ++k) ranks.push_back(rank(power(N, k)));
  std::vector<int> sizes;
  for (int k = 1; k <= m; ++k) {
    // blocks of size >= k minus blocks of size >= k + 1
    const long ge_k = static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]);
    const long ge_k1 = static_cast<long>(ranks[k]) - static_cast<long>(ranks[k + 1]);
    for (long c = 0; c < ge_k - ge_k1; ++c) sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

SpectralData spectral_data(const HodgeFiltration& hf, int n) {
  SpectralData sd;
  std::map<std::pair<Rational, int>, int> pairs;
  std::map<Rational, int> numbers;
  int mu = 0;
  for (const auto& hb : hf.blocks) {
    mu += static_cast<int>(hb.dim);
    WeightFiltration wf = weight_filtration(hb.N, n);
    const std::size_t d = hb.dim;
    for (int j = 0; j <= static_cast<int>(hb.phi.size()); ++j) {
      const std::vector<Vector> F0 = hb.Phi(j), F1 = hb.Phi(j - 1);
      if (F0.size() == F1.size()) continue;
      const Rational alpha = hb.lambda - 1 + j - hf.offset;
      numbers[alpha] += static_cast<int>(F0.size() - F1.size());
      auto g = [&](int l) {
        auto W = wf.W(l);
        return intersect(W, F0, d).size() + F1.size() - intersect(W, F1, d).size();
      };
      for (int l = n - wf.depth - 1; l <= n + wf.depth; ++l) {
        const long dl = static_cast<long>(g(l)) - static_cast<long>(g(l - 1));
        if (dl < 0) fail(ErrorKind::InvariantViolation, "negative spectral pair multiplicity");
        if (dl > 0) pairs[{alpha, l}] += static_cast<int>(dl);
      }
    }
    MonodromyClass mc{class_of(hb.lambda - 1), jordan_sizes(hb.N)};
    sd.monodromy.push_back(std::move(mc));
  }
  for (const auto& [key, mult] : pairs) {
    sd.pairs.push_back({key.first, key.second, mult});
    const Rational& a = key.first;
    const int l = key.second;
    if (is_integer(a)) {
      const int p = static_cast<int>(a.get_num().get_si());
      sd.hodge_numbers[{Rational(0), n - p, l + 1 - n + p}] += mult;
    } else {
      const int p = static_cast<int>(ceil(a).get_si());
      sd.hodge_numbers[{a - p, n - p, l - n + p}] += mult;
    }
  }
  for (const auto& [a, m] : numbers) sd.numbers.push_back({a, m});
  std::sort(sd.monodromy.begin(), sd.monodromy.end(),
            [](const MonodromyClass& a, const MonodromyClass& b) { return a.alpha_class < b.alpha_class; });
  auto failures = symmetry_failures(sd, n, mu);
  if (!failures.empty()) fail(ErrorKind::SymmetryViolation, failures.front());
  return sd;
}

std::vector<std::string> symmetry_failures(const SpectralData& sd, int n, int mu) {
  std::vector<std::string> out;
  std::map<std::pair<Rational, int>, int> d;
  std::map<Rational, int> da;
  for (const auto& p : sd.pairs) d[{p.alpha, p.l}] += p.mult;
  for (const auto& [a, m] : sd.numbers) da[a] += m;
  auto get = [](const auto& map, const auto& key) {
    auto it = map.find(key);
    return it == map.end() ? 0 : it->second;
  };
  Rational total = 0;
  int count = 0;
  for (const auto& [a, m] : da) {
    total += a * m;
    count += m;
    if (get(da, Rational(n - 1 - a)) != m) out.push_back("d^a != d^(n-1-a) at a = " + to_string(a));
    if (!(a > -1 && a < n)) out.push_back("spectral number out of (-1, n): " + to_string(a));
  }
  for (const auto& [key, m] : d) {
    const auto& [a, l] = key;
    if (get(d, std::make_pair(Rational(a - n + l), 2 * n - l)) != m)
      out.push_back("d^a_l != d^(a-n+l)_(2n-l) at (" + to_string(a) + ", " + std::to_string(l) + ")");
    if (get(d, std::make_pair(Rational(n - 1 - a), 2 * n - l)) != m)
      out.push_back("d^a_l != d^(n-1-a)_(2n-l) at (" + to_string(a) + ", " + std::to_string(l) + ")");
  }
  if (count != mu) out.push_back("spectral multiplicities do not sum to mu");
  if (total != frac(mu * (n - 1), 2)) out.push_back("sum of spectral numbers != mu (n - 1) / 2");
  for (const auto& mc : sd.monodromy)
    for (int s : mc.jordan_blocks) {
      if (s > n + 1) out.push_back("Jordan block larger than n + 1");
      if (mc.alpha_class == 0 && s > n) out.push_back("eigenvalue 1 Jordan block larger than n");
    }
  return out;
}

}  // namespace blk
