#pragma once

// Graph impulses and their shifted copies, stacked column-wise as impulse
// matrices, plus the normalized Vandermonde matrix of the graph frequencies.

#include "gsp/graphs.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// VertexImpulsive: delta_0 = e_0 in the vertex domain, shifted by A.
/// SpectralFlat: delta_0 = igft * (1/sqrt N) 1, shifted by A.
/// SpectralDomainImpulsive: spectral delta e_0, shifted by M.
/// SpectralDomainFlat: spectral image of the flat vertex signal (1/sqrt N) 1,
/// shifted by M.
enum class ImpulseKind { VertexImpulsive, SpectralFlat, SpectralDomainImpulsive, SpectralDomainFlat };

std::string_view to_string(ImpulseKind kind);

/// Domain in which the family's D lives (and the filter's shift acts).
Domain home_domain(ImpulseKind kind);

struct ImpulseFamily {
  ImpulseKind kind = ImpulseKind::VertexImpulsive;
  CMatrix D;      // column n = n-th shifted impulse, in home_domain(kind)
  CMatrix D_hat;  // D carried into the opposite domain
  CVector y0;     // first column of the gft

  Domain domain() const { return home_domain(kind); }
};

ImpulseFamily impulse_family(const Graph& g, const SpectralBasis& basis, ImpulseKind kind);

/// (1/sqrt N) [lambda_i^n], rows by eigenvalue, columns by power 0..N-1.
CMatrix vandermonde(const CVector& lambda);

struct AssumptionReport {
  bool distinct = false;
  bool y0_nonzero = false;
  double min_gap = 0.0;
  double min_abs_y0 = 0.0;
};

/// distinct: min_gap > tol. y0_nonzero: every |y0_i| > tol * max|y0|.
AssumptionReport check_assumptions(const SpectralBasis& basis, double tol = 1e-8);

}  // namespace gsp
