#pragma once

// Sampling-set selection and perfect recovery of bandlimited graph signals,
// in the vertex domain (free variables of the out-of-band GFT rows) and in
// the spectral domain (K independent rows of the sampled spectral operator).

#include <optional>
#include <vector>

#include "gsp/spectral.hpp"

namespace gsp {

/// Ascending spectral indices carrying the signal.
struct BandSpec {
  IndexList support;

  std::size_t k() const noexcept { return support.size(); }
  static BandSpec first(std::size_t k);
  static BandSpec all(std::size_t n);
};

/// Throws BadSize unless 1 <= K <= n and the support is ascending, unique, < n.
void validate_band(const BandSpec& band, std::size_t n);

/// 0/1 sampling indicator.
using Indicator = std::vector<int>;

Indicator indicator_from(const IndexList& samples, std::size_t n);
IndexList support_of(const Indicator& delta);

struct SamplingPlan {
  Domain domain = Domain::Vertex;
  Indicator delta;
  BandSpec band;
  // Vertex: x_pivot = S * x_free.
  IndexList free_idx;
  IndexList pivot_idx;
  CMatrix S;
  // Spectral: PMKK = P(M)_K restricted to selected_rows (in pivot order).
  IndexList selected_rows;
  CMatrix pmkk;
  CMatrix gft;
  CMatrix igft;
  /// Condition number of the matrix inverted during recovery.
  double condition = 1.0;

  std::size_t n() const noexcept { return delta.size(); }
  std::size_t k() const noexcept { return band.k(); }
};

/// In-band entries of x_hat in support order. NotBandlimited if any
/// out-of-band magnitude exceeds tol; DomainMismatch for vertex signals.
CVector band_project(const GraphSignal& x_hat, const BandSpec& band, double tol = 1e-8);

/// Gauss-Jordan on the GFT rows outside the band; free columns become the
/// sampling set. A forced sample set replaces the free columns (Infeasible if
/// the complementary pivot block is singular).
SamplingPlan vertex_plan(const SpectralBasis& basis, const BandSpec& band,
                         std::optional<IndexList> forced = std::nullopt,
                         double tol = kDefaultTol);

/// x_s in ascending sample order. SizeMismatch if |x_s| != K.
GraphSignal vertex_recover(const SamplingPlan& plan, const CVector& x_s);

enum class RowSelection {
  /// Sample the free-variable rows of the vertex plan (falls back to
  /// GaussPivot if they are not independent).
  FreeVariables,
  /// First K independent rows of igft restricted to the band columns.
  GaussPivot,
};

struct SpectralPlanOptions {
  RowSelection selection = RowSelection::FreeVariables;
  std::optional<IndexList> forced;  // caller-chosen sample set
  double tol = kDefaultTol;
};

SamplingPlan spectral_plan(const SpectralBasis& basis, const BandSpec& band,
                           const SpectralPlanOptions& opts = {});

/// gft * diag(delta) * igft.
CMatrix sampling_operator(const SpectralBasis& basis, const Indicator& delta);

struct SpectralRecovery {
  CVector x_spl_hat;  // gft of the upsampled samples
  CVector x_hat_k;    // recovered in-band coefficients
  GraphSignal x;      // recovered vertex signal
};

SpectralRecovery spectral_recover_steps(const SamplingPlan& plan, const CVector& x_s);
GraphSignal spectral_recover(const SamplingPlan& plan, const CVector& x_s);

/// Dispatches on plan.domain.
GraphSignal recover(const SamplingPlan& plan, const CVector& x_s);

/// Entries of x at the ones of delta, ascending.
CVector sample(const GraphSignal& x, const Indicator& delta);
/// Scatters x_s to the ones of delta, zero elsewhere.
GraphSignal upsample(const CVector& x_s, const Indicator& delta);

struct PlanEquivalence {
  bool vertex_ok = false;
  bool spectral_ok = false;
  double vertex_ratio = 0.0;    // sigma_min(block) / sigma_max(out-of-band gft rows)
  double spectral_ratio = 0.0;  // sigma_min(block) / sigma_max(band igft columns)
};

/// Whether delta is a valid sampling set for band in each domain; a block
/// counts as invertible when its ratio exceeds ratio_tol.
PlanEquivalence plan_equivalent(const SpectralBasis& basis, const Indicator& delta,
                                const BandSpec& band, double ratio_tol = 1e-9);

}  // namespace gsp
