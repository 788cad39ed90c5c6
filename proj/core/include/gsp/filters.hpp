#pragma once

// Polynomial filters in the graph shift A or the spectral shift M, their
// frequency/vertex responses, modulation, and convolution of two signals by
// fitting filter coefficients to an impulse response.

#include <optional>

#include "gsp/impulses.hpp"

namespace gsp {

enum class ShiftDomain { VertexA, SpectralM };

std::string_view to_string(ShiftDomain d);

/// P(S) = p_0 I + p_1 S + ... with S = A (VertexA) or M (SpectralM).
struct PolynomialFilter {
  CVector coeffs;
  ShiftDomain shift_domain = ShiftDomain::VertexA;
};

/// Horner evaluation of P(S) * s. VertexA needs a vertex signal, SpectralM a
/// spectral one (DomainMismatch otherwise). Throws BadSize for empty coeffs.
GraphSignal apply(const PolynomialFilter& f, const Graph& g, const SpectralBasis& basis,
                  const GraphSignal& s);

/// Dense matrix P(S), built by Horner on matrices.
CMatrix filter_matrix(const PolynomialFilter& f, const Graph& g, const SpectralBasis& basis);

/// VertexA: spectral signal P(lambda). SpectralM: vertex signal P(conj(lambda)).
GraphSignal response(const PolynomialFilter& f, const SpectralBasis& basis);

enum class ResponseDirection { FreqResponseToPA, VertexResponseToPM };

/// FreqResponseToPA: igft * diag(r) * gft. VertexResponseToPM: gft * diag(r) * igft.
CMatrix matrix_from_response(const SpectralBasis& basis, const GraphSignal& r,
                             ResponseDirection direction);

/// Entrywise product. DomainMismatch / SizeMismatch on incompatible inputs.
GraphSignal modulate(const GraphSignal& a, const GraphSignal& b);

enum class FitMethod { Dense, DenseSpectral, L1 };

struct IstaOptions {
  std::optional<double> gamma;  // default 1e-3 * ||D^H y||_inf
  double step_tol = 1e-10;
  std::size_t max_iter = 100000;
};

struct IstaResult {
  CVector z;
  double gamma = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// argmin_z ||y - D z||_2^2 + gamma |z|_1 by iterative soft thresholding,
/// step 1 / sigma_max(D)^2.
IstaResult ista(const CMatrix& d, const CVector& y, const IstaOptions& opts = {});

/// Finds p with P(S) delta_0 = target for the family's impulse.
///   Dense:         D * p = target.
///   DenseSpectral: D_hat * p = target carried to the opposite domain.
///   L1:            ISTA on D * z = target.
/// target must live in the family's domain (DomainMismatch). Singular errors
/// name the violated assumption.
PolynomialFilter fit_filter(const GraphSignal& target, const ImpulseFamily& fam,
                            const SpectralBasis& basis, FitMethod method = FitMethod::Dense,
                            const IstaOptions& opts = {});

/// y * x: fits the filter whose impulse response is y (family `kind`), then
/// applies it to x. x, y and home_domain(kind) must all equal `domain`.
GraphSignal convolve(const GraphSignal& x, const GraphSignal& y, const Graph& g,
                     const SpectralBasis& basis, Domain domain, ImpulseKind kind,
                     FitMethod method = FitMethod::Dense, PolynomialFilter* fitted = nullptr);

}  // namespace gsp
