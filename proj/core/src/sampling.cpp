#include "gsp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/SVD>

#include "format.hpp"
#include "gsp/error.hpp"

namespace gsp {

using Eigen::Index;

namespace {

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Smallest singular value of block relative to the largest of the matrix it
// was cut from, so a 1x1 block near zero still reads as singular.
double sigma_ratio(const CMatrix& block, const CMatrix& parent) {
  if (block.size() == 0) return 1.0;
  const double smin = Eigen::JacobiSVD<CMatrix>(block).singularValues().minCoeff();
  const double smax = Eigen::JacobiSVD<CMatrix>(parent).singularValues()(0);
  return smax == 0.0 ? 0.0 : smin / smax;
}

IndexList sorted_unique(IndexList ids, std::size_t n, const char* what) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end() || (!ids.empty() && ids.back() >= n))
    throw Error(ErrorCode::BadSize, std::string(what) + " must hold distinct indices below " +
                                        std::to_string(n));
  return ids;
}

// Gauss elimination with partial pivoting on the rows of m. Near-ties prefer
// rows flagged in `prefer`, then the lowest index. Returns rows in pivot order.
IndexList pivot_rows(CMatrix m, const Indicator& prefer, double tol) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  const double thr = tol * max_abs(m);
  std::vector<bool> used(static_cast<std::size_t>(rows), false);
  IndexList out;
  for (Index c = 0; c < cols; ++c) {
    double best = 0.0;
    for (Index r = 0; r < rows; ++r)
      if (!used[static_cast<std::size_t>(r)]) best = std::max(best, std::abs(m(r, c)));
    if (best <= thr || best == 0.0)
      throw Error(ErrorCode::Infeasible, "no independent row left for column " + std::to_string(c));
    Index pick = -1;
    for (Index r = 0; r < rows; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (used[ur] || std::abs(m(r, c)) < best * (1.0 - 1e-9)) continue;
      if (pick < 0) pick = r;
      if (prefer[ur] && !prefer[static_cast<std::size_t>(pick)]) pick = r;
    }
    used[static_cast<std::size_t>(pick)] = true;
    out.push_back(static_cast<std::size_t>(pick));
    for (Index r = 0; r < rows; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      const Complex f = m(r, c) / m(pick, c);
      if (f != Complex(0.0)) m.row(r) -= f * m.row(pick);
    }
  }
  return out;
}

}  // namespace

BandSpec BandSpec::first(std::size_t k) {
  BandSpec b;
  b.support.resize(k);
  std::iota(b.support.begin(), b.support.end(), std::size_t{0});
  return b;
}

BandSpec BandSpec::all(std::size_t n) { return first(n); }

void validate_band(const BandSpec& band, std::size_t n) {
  if (band.support.empty() || band.support.size() > n)
    throw Error(ErrorCode::BadSize, "band size " + std::to_string(band.support.size()) +
                                        " outside 1.." + std::to_string(n));
  for (std::size_t i = 0; i < band.support.size(); ++i) {
    if (band.support[i] >= n || (i > 0 && band.support[i] <= band.support[i - 1]))
      throw Error(ErrorCode::BadSize, "band support must be ascending, unique and below " +
                                          std::to_string(n));
  }
}

Indicator indicator_from(const IndexList& samples, std::size_t n) {
  Indicator d(n, 0);
  for (auto s : samples) {
    if (s >= n) throw Error(ErrorCode::BadSize, "sample index " + std::to_string(s) + " out of range");
    d[s] = 1;
  }
  return d;
}

IndexList support_of(const Indicator& delta) {
  IndexList out;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] != 0 && delta[i] != 1)
      throw Error(ErrorCode::BadSize, "sampling indicator entries must be 0 or 1");
    if (delta[i]) out.push_back(i);
  }
  return out;
}

CVector band_project(const GraphSignal& x_hat, const BandSpec& band, double tol) {
  if (x_hat.domain != Domain::Spectral)
    throw Error(ErrorCode::DomainMismatch, "band projection expects a spectral signal");
  validate_band(band, x_hat.size());
  const IndexList out = complement(band.support, x_hat.size());
  double worst = 0.0;
  std::size_t where = 0;
  for (auto i : out) {
    const double mag = std::abs(x_hat.values(idx(i)));
    if (mag > worst) {
      worst = mag;
      where = i;
    }
  }
  if (worst > tol)
    throw Error(ErrorCode::NotBandlimited, "out-of-band magnitude " + detail::num(worst) +
                                               " at index " + std::to_string(where));
  return select(x_hat.values, band.support);
}

SamplingPlan vertex_plan(const SpectralBasis& basis, const BandSpec& band,
                         std::optional<IndexList> forced, double tol) {
  const std::size_t n = basis.n();
  validate_band(band, n);
  const std::size_t k = band.k();
  SamplingPlan plan;
  plan.domain = Domain::Vertex;
  plan.band = band;

  const CMatrix g_out = select_rows(basis.gft, complement(band.support, n));
  if (forced) {
    plan.free_idx = sorted_unique(*forced, n, "forced samples");
    if (plan.free_idx.size() != k)
      throw Error(ErrorCode::SizeMismatch, "forced sample set has " +
                                               std::to_string(plan.free_idx.size()) +
                                               " entries, band needs " + std::to_string(k));
    plan.pivot_idx = complement(plan.free_idx, n);
  } else if (k < n) {
    const RowReduction rr = row_reduce(g_out, tol);
    if (rr.rank != n - k)
      throw Error(ErrorCode::Infeasible, "out-of-band GFT rows have rank " +
                                             std::to_string(rr.rank) + ", expected " +
                                             std::to_string(n - k));
    plan.free_idx = rr.free_cols;
    plan.pivot_idx = rr.pivot_cols;
    plan.S = -select_cols(CMatrix(rr.rref.topRows(idx(n - k))), plan.free_idx);
  } else {
    plan.free_idx = band.support;
  }

  plan.delta = indicator_from(plan.free_idx, n);
  if (k == n) {
    plan.S = CMatrix::Zero(0, idx(n));
    return plan;
  }
  // G_p x_p + G_f x_f = 0  =>  x_p = -G_p^-1 G_f x_f.
  const CMatrix g_p = select_cols(g_out, plan.pivot_idx);
  if (forced) {
    try {
      plan.S = -solve(g_p, select_cols(g_out, plan.free_idx), tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
      throw Error(ErrorCode::Infeasible, "sample set leaves a singular pivot block");
    }
  }
  plan.condition = condition_number(g_p);
  return plan;
}

GraphSignal vertex_recover(const SamplingPlan& plan, const CVector& x_s) {
  if (plan.domain != Domain::Vertex)
    throw Error(ErrorCode::DomainMismatch, "vertex recovery needs a vertex plan");
  if (static_cast<std::size_t>(x_s.size()) != plan.free_idx.size())
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(plan.free_idx.size()) +
                                             " samples, got " + std::to_string(x_s.size()));
  CVector x = CVector::Zero(idx(plan.n()));
  for (std::size_t i = 0; i < plan.free_idx.size(); ++i) x(idx(plan.free_idx[i])) = x_s(idx(i));
  if (!plan.pivot_idx.empty()) {
    const CVector x_p = plan.S * x_s;
    for (std::size_t i = 0; i < plan.pivot_idx.size(); ++i)
      x(idx(plan.pivot_idx[i])) = x_p(idx(i));
  }
  return vertex_signal(std::move(x));
}

CMatrix sampling_operator(const SpectralBasis& basis, const Indicator& delta) {
  if (delta.size() != basis.n())
    throw Error(ErrorCode::SizeMismatch, "indicator length does not match the basis");
  CVector d(idx(delta.size()));
  for (std::size_t i = 0; i < delta.size(); ++i) d(idx(i)) = static_cast<double>(delta[i]);
  return basis.gft * d.asDiagonal() * basis.igft;
}

SamplingPlan spectral_plan(const SpectralBasis& basis, const BandSpec& band,
                           const SpectralPlanOptions& opts) {
  const std::size_t n = basis.n();
  validate_band(band, n);
  const std::size_t k = band.k();
  const CMatrix b = select_cols(basis.igft, band.support);

  auto independent = [&](const IndexList& rows) {
    return row_reduce(select_rows(b, rows), opts.tol).rank == k;
  };

  IndexList rows;
  if (opts.forced) {
    rows = sorted_unique(*opts.forced, n, "forced samples");
    if (rows.size() != k)
      throw Error(ErrorCode::SizeMismatch, "forced sample set has " + std::to_string(rows.size()) +
                                               " entries, band needs " + std::to_string(k));
    if (!independent(rows))
      throw Error(ErrorCode::Infeasible, "forced sample rows of the band eigenvectors are dependent");
  } else {
    if (opts.selection == RowSelection::FreeVariables) {
      try {
        rows = vertex_plan(basis, band, std::nullopt, opts.tol).free_idx;
        if (!independent(rows)) rows.clear();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Infeasible) throw;
        rows.clear();
      }
    }
    if (rows.empty()) {
      rows = row_reduce(b.transpose(), opts.tol).pivot_cols;
      if (rows.size() != k)
        throw Error(ErrorCode::Infeasible, "band eigenvectors have rank " +
                                               std::to_string(rows.size()) + " < " +
                                               std::to_string(k));
    }
  }

  SamplingPlan plan;
  plan.domain = Domain::Spectral;
  plan.band = band;
  plan.delta = indicator_from(rows, n);
  plan.gft = basis.gft;
  plan.igft = basis.igft;
  const CMatrix pk = select_cols(sampling_operator(basis, plan.delta), band.support);
  plan.selected_rows = pivot_rows(pk, plan.delta, opts.tol);
  plan.pmkk = select_rows(pk, plan.selected_rows);
  plan.condition = condition_number(plan.pmkk);
  return plan;
}

CVector sample(const GraphSignal& x, const Indicator& delta) {
  if (x.size() != delta.size())
    throw Error(ErrorCode::SizeMismatch, "signal and indicator differ in length");
  return select(x.values, support_of(delta));
}

GraphSignal upsample(const CVector& x_s, const Indicator& delta) {
  const IndexList s = support_of(delta);
  if (static_cast<std::size_t>(x_s.size()) != s.size())
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(s.size()) +
                                             " samples, got " + std::to_string(x_s.size()));
  CVector x = CVector::Zero(idx(delta.size()));
  for (std::size_t i = 0; i < s.size(); ++i) x(idx(s[i])) = x_s(idx(i));
  return vertex_signal(std::move(x));
}

SpectralRecovery spectral_recover_steps(const SamplingPlan& plan, const CVector& x_s) {
  if (plan.domain != Domain::Spectral)
    throw Error(ErrorCode::DomainMismatch, "spectral recovery needs a spectral plan");
  SpectralRecovery out;
  out.x_spl_hat = plan.gft * upsample(x_s, plan.delta).values;
  out.x_hat_k = solve(plan.pmkk, select(out.x_spl_hat, plan.selected_rows));
  CVector x_hat = CVector::Zero(idx(plan.n()));
  for (std::size_t i = 0; i < plan.band.k(); ++i)
    x_hat(idx(plan.band.support[i])) = out.x_hat_k(idx(i));
  out.x = vertex_signal(plan.igft * x_hat);
  return out;
}

GraphSignal spectral_recover(const SamplingPlan& plan, const CVector& x_s) {
  return spectral_recover_steps(plan, x_s).x;
}

GraphSignal recover(const SamplingPlan& plan, const CVector& x_s) {
  return plan.domain == Domain::Vertex ? vertex_recover(plan, x_s) : spectral_recover(plan, x_s);
}

PlanEquivalence plan_equivalent(const SpectralBasis& basis, const Indicator& delta,
                                const BandSpec& band, double ratio_tol) {
  const std::size_t n = basis.n();
  validate_band(band, n);
  if (delta.size() != n)
    throw Error(ErrorCode::SizeMismatch, "indicator length does not match the basis");
  const IndexList s = support_of(delta);
  PlanEquivalence eq;
  if (s.size() != band.k()) return eq;
  const IndexList out_band = complement(band.support, n);
  eq.vertex_ratio = sigma_ratio(select(basis.gft, out_band, complement(s, n)),
                                select_rows(basis.gft, out_band));
  eq.spectral_ratio = sigma_ratio(select(basis.igft, s, band.support),
                                  select_cols(basis.igft, band.support));
  eq.vertex_ok = eq.vertex_ratio > ratio_tol;
  eq.spectral_ok = eq.spectral_ratio > ratio_tol;
  return eq;
}

}  // namespace gsp
