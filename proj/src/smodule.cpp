#include "blk/smodule.hpp"

#include <algorithm>
#include <numeric>

#include "blk/error.hpp"

namespace blk {

int SBasis::max_nu() const { return nu.empty() ? 0 : *std::max_element(nu.begin(), nu.end()); }

int SBasis::sum_nu() const { return std::accumulate(nu.begin(), nu.end(), 0); }

namespace {

void make_monic(SeriesVector& v, ModuleTerm lead) {
  Rational c = v.at(lead.s, lead.index);
  if (c != 1) v *= 1 / c;
}

}  // namespace

SBasis std_s(const std::vector<SeriesVector>& gens, int precision) {
  if (gens.empty()) fail(ErrorKind::RankDeficient, "std_s: no generators");
  const std::size_t mu = gens.front().dim();
  std::vector<std::optional<SeriesVector>> slot(mu);
  std::vector<int> nu(mu, 0);

  for (const auto& g : gens) {
    SeriesVector v = g.truncated(precision);
    while (auto lead = v.lead()) {
      const auto i = static_cast<std::size_t>(lead->index);
      if (!slot[i]) {
        make_monic(v, *lead);
        slot[i] = std::move(v);
        nu[i] = lead->s;
        break;
      }
      if (nu[i] > lead->s) {
        // The new vector has the lower valuation: it takes the slot and the
        // old occupant continues the reduction.
        make_monic(v, *lead);
        std::swap(v, *slot[i]);
        std::swap(nu[i], lead->s);
      }
      v.axpy(-v.at(lead->s, i), lead->s - nu[i], *slot[i]);
    }
  }

  SBasis out;
  out.precision = precision;
  for (std::size_t i = 0; i < mu; ++i) {
    if (!slot[i]) fail(ErrorKind::RankDeficient, "std_s: no lead in e_" + std::to_string(i + 1));
    out.cols.push_back(std::move(*slot[i]));
    out.nu.push_back(nu[i]);
  }
  return out;
}

SBasis std_s(const SeriesMatrix& H) { return std_s(H.columns(), H.precision()); }

std::pair<SeriesVector, SeriesVector> reduce_s_with_quotient(const SeriesVector& v, const SBasis& H) {
  SeriesVector r = v.truncated(H.precision);
  SeriesVector q(H.mu(), H.precision);
  for (int k = 0; k < H.precision; ++k) {
    for (std::size_t i = 0; i < H.mu(); ++i) {
      if (H.nu[i] > k) continue;
      Rational c = r.at(k, i);
      if (c == 0) continue;
      // Later terms only: the column's lead is its first term in this order.
      r.axpy(-c, k - H.nu[i], H.cols[i]);
      q.at(k - H.nu[i], i) += c;
    }
  }
  return {r, q};
}

SeriesVector reduce_s(const SeriesVector& v, const SBasis& H) { return reduce_s_with_quotient(v, H).first; }

SBasis reduced_min_std(const SBasis& H) {
  SBasis out = H;
  for (std::size_t col = 0; col < out.mu(); ++col) {
    SeriesVector& v = out.cols[col];
    for (int k = out.nu[col]; k < out.precision; ++k) {
      for (std::size_t i = 0; i < out.mu(); ++i) {
        if (out.nu[i] > k) continue;
        if (i == col && k == out.nu[col]) continue;
        Rational c = v.at(k, i);
        if (c == 0) continue;
        if (i == col) {
          // v <- (1 - c s^{k - nu}) v: a unit multiple with the same lead.
          SeriesVector self = v;
          v.axpy(-c, k - out.nu[col], self);
        } else {
          v.axpy(-c, k - out.nu[i], out.cols[i]);
        }
      }
    }
  }
  return out;
}

SBasis reduced_min_std(const std::vector<SeriesVector>& gens, int precision) {
  return reduced_min_std(std_s(gens, precision));
}

bool contains(const SBasis& H, const std::vector<SeriesVector>& Q) {
  return std::all_of(Q.begin(), Q.end(), [&](const SeriesVector& v) { return reduce_s(v, H).is_zero(); });
}

bool contains(const SBasis& H, const SeriesMatrix& Q) { return contains(H, Q.columns()); }

SeriesMatrix invert_jet(const SBasis& H, int d, int jet) {
  if (H.precision < jet + 1 + H.max_nu())
    fail(ErrorKind::InvariantViolation, "invert_jet: basis precision too low");
  const std::size_t mu = H.mu();
  SeriesMatrix X(mu, mu, jet + 1);
  for (std::size_t j = 0; j < mu; ++j) {
    auto [r, q] = reduce_s_with_quotient(SeriesVector::unit(mu, j, d, H.precision), H);
    if (!r.is_zero()) fail(ErrorKind::RankDeficient, "invert_jet: s^d e_j is not in the module");
    X.set_column(j, q.truncated(jet + 1));
  }
  return X;
}

std::vector<SeriesVector> Lattice::generators() const {
  std::vector<SeriesVector> out;
  for (const auto& g : gens) out.push_back(g.truncated(kappa + 1));
  const std::size_t mu = gens.empty() ? 0 : gens.front().dim();
  for (std::size_t i = 0; i < mu; ++i) out.push_back(SeriesVector::unit(mu, i, kappa, kappa + 1));
  return out;
}

SBasis Lattice::std_basis() const { return std_s(generators(), kappa + 1); }

}  // namespace blk
