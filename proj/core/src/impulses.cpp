#include "gsp/impulses.hpp"

#include <cmath>

namespace gsp {

using Eigen::Index;

std::string_view to_string(ImpulseKind kind) {
  switch (kind) {
    case ImpulseKind::VertexImpulsive: return "vertex_impulsive";
    case ImpulseKind::SpectralFlat: return "spectral_flat";
    case ImpulseKind::SpectralDomainImpulsive: return "spectral_domain_impulsive";
    case ImpulseKind::SpectralDomainFlat: return "spectral_domain_flat";
  }
  return "unknown";
}

Domain home_domain(ImpulseKind kind) {
  return kind == ImpulseKind::VertexImpulsive || kind == ImpulseKind::SpectralFlat
             ? Domain::Vertex
             : Domain::Spectral;
}

CMatrix vandermonde(const CVector& lambda) {
  const Index n = lambda.size();
  CMatrix v(n, n);
  for (Index i = 0; i < n; ++i) {
    Complex p = 1.0;
    for (Index k = 0; k < n; ++k) {
      v(i, k) = p;
      p *= lambda(i);
    }
  }
  return v / std::sqrt(static_cast<double>(n));
}

namespace {

CMatrix krylov(const CMatrix& shift, CVector start) {
  const Index n = shift.rows();
  CMatrix d(n, n);
  for (Index k = 0; k < n; ++k) {
    d.col(k) = start;
    start = shift * start;
  }
  return d;
}

}  // namespace

ImpulseFamily impulse_family(const Graph& g, const SpectralBasis& basis, ImpulseKind kind) {
  const Index n = static_cast<Index>(g.n());
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  ImpulseFamily fam;
  fam.kind = kind;
  fam.y0 = basis.gft.col(0);
  switch (kind) {
    case ImpulseKind::VertexImpulsive:
      fam.D = krylov(g.adjacency(), CVector::Unit(n, 0));
      fam.D_hat = basis.gft * fam.D;
      break;
    case ImpulseKind::SpectralFlat:
      fam.D_hat = vandermonde(basis.lambda);
      fam.D = basis.igft * fam.D_hat;
      break;
    case ImpulseKind::SpectralDomainImpulsive:
      fam.D = krylov(spectral_shift(basis), CVector::Unit(n, 0));
      fam.D_hat = basis.igft * fam.D;
      break;
    case ImpulseKind::SpectralDomainFlat:
      fam.D = krylov(spectral_shift(basis),
                     basis.gft * CVector::Constant(n, Complex(inv_sqrt_n)));
      fam.D_hat = basis.igft * fam.D;
      break;
  }
  return fam;
}

AssumptionReport check_assumptions(const SpectralBasis& basis, double tol) {
  AssumptionReport r;
  r.min_gap = min_pairwise_gap(basis.lambda);
  r.distinct = r.min_gap > tol;
  const CVector y0 = basis.gft.col(0);
  r.min_abs_y0 = y0.size() ? y0.cwiseAbs().minCoeff() : 0.0;
  r.y0_nonzero = r.min_abs_y0 > tol * norm_inf(y0);
  return r;
}

}  // namespace gsp
