#pragma once

// Graph Fourier transform pairs, the spectral shift M = GFT * conj(Lambda) *
// GFT^-1, eigenvector rescaling, and structural comparison of spectral graphs.

#include <optional>

#include "gsp/graphs.hpp"
#include "gsp/numkit.hpp"

namespace gsp {

enum class BasisSource { Computed, Explicit };

/// A diagonalization A = igft * diag(lambda) * gft. Immutable once built.
struct SpectralBasis {
  CMatrix gft;
  CMatrix igft;
  CVector lambda;
  BasisSource source = BasisSource::Computed;
  /// ordering[k] is the raw eigensolver index placed at frequency slot k.
  IndexList ordering;

  std::size_t n() const noexcept { return static_cast<std::size_t>(lambda.size()); }
};

/// How computed eigenvalues are laid out in frequency order. The default sorts
/// by descending real part, ties by descending imaginary part. An explicit
/// permutation (slot k <- raw index permutation[k]) overrides it.
struct OrderingRule {
  std::optional<IndexList> permutation;

  static OrderingRule descending_real() { return {}; }
  static OrderingRule explicit_order(IndexList perm) { return {std::move(perm)}; }
};

/// Eigendecomposition of the adjacency. Throws RepeatedEigenvalues when the
/// smallest eigenvalue gap is <= tol, NotConverged when the eigensolver fails
/// or the resulting basis does not reconstruct A to 1e-8.
SpectralBasis basis_from_graph(const Graph& g, const OrderingRule& rule = {},
                               double tol = 1e-8);

/// Wraps a caller-supplied GFT. The inverse is computed by solve and the pair
/// must reconstruct A to 1e-6 * ||A||_inf (ReconstructionMismatch otherwise).
/// Repeated eigenvalues are allowed here.
SpectralBasis basis_explicit(const CMatrix& gft, const CVector& lambda, const Graph& g,
                             double tol = kDefaultTol);

GraphSignal gft_apply(const SpectralBasis& basis, const GraphSignal& x);
GraphSignal igft_apply(const SpectralBasis& basis, const GraphSignal& x_hat);

/// M = gft * diag(conj(lambda)) * igft.
CMatrix spectral_shift(const SpectralBasis& basis);

/// M' = gft * diag(lambda) * igft (the unconjugated alternative).
CMatrix spectral_shift_variant(const SpectralBasis& basis);

/// gft' = diag(c)^-1 * gft and igft' = igft * diag(c). Throws ZeroScale.
SpectralBasis rescale_basis(const SpectralBasis& basis, const CVector& c);

/// Permutes frequency slots: slot k of the result is slot perm[k] of basis.
SpectralBasis reorder_basis(const SpectralBasis& basis, const IndexList& perm);

/// Reorders and phase-aligns a basis so its igft columns best match the
/// columns of a reference (e.g. a printed, rounded eigenvector matrix). Each
/// column is multiplied by a unit-modulus scalar, so norms are preserved.
SpectralBasis match_reference(const SpectralBasis& basis, const CMatrix& reference_igft);

/// True iff the zero/nonzero patterns agree, "nonzero" meaning |entry| > tol.
/// Default tol is 1e-9 * the largest entry magnitude of either matrix.
/// Throws DimensionMismatch.
bool structural_equal(const CMatrix& m1, const CMatrix& m2,
                      std::optional<double> tol = std::nullopt);

/// Reconstruction residual ||igft * diag(lambda) * gft - A||_inf.
double reconstruction_error(const SpectralBasis& basis, const CMatrix& a);

}  // namespace gsp
