#include "gsp/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "gsp/error.hpp"

namespace gsp {

using Eigen::Index;

std::string_view to_string(ShiftDomain d) { return d == ShiftDomain::VertexA ? "A" : "M"; }

namespace {

CMatrix shift_of(const PolynomialFilter& f, const Graph& g, const SpectralBasis& basis) {
  return f.shift_domain == ShiftDomain::VertexA ? g.adjacency() : spectral_shift(basis);
}

void require_coeffs(const PolynomialFilter& f) {
  if (f.coeffs.size() == 0) throw Error(ErrorCode::BadSize, "filter has no coefficients");
}

std::string assumption_hint(ImpulseKind kind) {
  switch (kind) {
    case ImpulseKind::VertexImpulsive:
    case ImpulseKind::SpectralDomainImpulsive:
      return "requires distinct eigenvalues and every entry of y0 nonzero";
    case ImpulseKind::SpectralFlat:
    case ImpulseKind::SpectralDomainFlat:
      return "requires distinct eigenvalues";
  }
  return "";
}

}  // namespace

GraphSignal apply(const PolynomialFilter& f, const Graph& g, const SpectralBasis& basis,
                  const GraphSignal& s) {
  require_coeffs(f);
  const Domain want = f.shift_domain == ShiftDomain::VertexA ? Domain::Vertex : Domain::Spectral;
  if (s.domain != want)
    throw Error(ErrorCode::DomainMismatch, "filter in " + std::string(to_string(f.shift_domain)) +
                                               " expects a " + std::string(to_string(want)) +
                                               " signal");
  if (s.size() != g.n()) throw Error(ErrorCode::SizeMismatch, "signal length does not match graph");
  const CMatrix shift = shift_of(f, g, basis);
  const Index deg = f.coeffs.size();
  CVector y = f.coeffs(deg - 1) * s.values;
  for (Index k = deg - 2; k >= 0; --k) y = shift * y + f.coeffs(k) * s.values;
  return {y, s.domain};
}

CMatrix filter_matrix(const PolynomialFilter& f, const Graph& g, const SpectralBasis& basis) {
  require_coeffs(f);
  const CMatrix shift = shift_of(f, g, basis);
  const Index n = shift.rows();
  const Index deg = f.coeffs.size();
  CMatrix p = f.coeffs(deg - 1) * CMatrix::Identity(n, n);
  for (Index k = deg - 2; k >= 0; --k) {
    p = shift * p;
    p.diagonal().array() += f.coeffs(k);
  }
  return p;
}

GraphSignal response(const PolynomialFilter& f, const SpectralBasis& basis) {
  require_coeffs(f);
  const bool vertex = f.shift_domain == ShiftDomain::VertexA;
  const CVector x = vertex ? basis.lambda : CVector(basis.lambda.conjugate());
  const Index deg = f.coeffs.size();
  CVector r = CVector::Constant(x.size(), f.coeffs(deg - 1));
  for (Index k = deg - 2; k >= 0; --k) r = r.cwiseProduct(x).array() + f.coeffs(k);
  return {r, vertex ? Domain::Spectral : Domain::Vertex};
}

CMatrix matrix_from_response(const SpectralBasis& basis, const GraphSignal& r,
                             ResponseDirection direction) {
  if (r.size() != basis.n())
    throw Error(ErrorCode::SizeMismatch, "response length does not match the basis");
  if (direction == ResponseDirection::FreqResponseToPA)
    return basis.igft * r.values.asDiagonal() * basis.gft;
  return basis.gft * r.values.asDiagonal() * basis.igft;
}

GraphSignal modulate(const GraphSignal& a, const GraphSignal& b) {
  if (a.domain != b.domain)
    throw Error(ErrorCode::DomainMismatch, "cannot modulate a " + std::string(to_string(a.domain)) +
                                               " signal by a " + std::string(to_string(b.domain)) +
                                               " signal");
  if (a.size() != b.size())
    throw Error(ErrorCode::SizeMismatch, "modulated signals differ in length");
  return {a.values.cwiseProduct(b.values), a.domain};
}

IstaResult ista(const CMatrix& d, const CVector& y, const IstaOptions& opts) {
  if (d.rows() != y.size())
    throw Error(ErrorCode::DimensionMismatch, "ISTA system and target differ in length");
  IstaResult out;
  out.z = CVector::Zero(d.cols());
  const CVector dhy = d.adjoint() * y;
  out.gamma = opts.gamma.value_or(1e-3 * norm_inf(dhy));
  const double smax = Eigen::JacobiSVD<CMatrix>(d).singularValues()(0);
  if (smax == 0.0) {
    out.converged = true;
    return out;
  }
  // ||y - Dz||^2 + gamma|z|_1 has the minimizer of 0.5||y - Dz||^2 + 0.5 gamma|z|_1.
  const double step = 1.0 / (smax * smax);
  const double thresh = 0.5 * out.gamma * step;
  const CMatrix gram = d.adjoint() * d;
  for (out.iterations = 0; out.iterations < opts.max_iter; ++out.iterations) {
    CVector next = out.z - step * (gram * out.z - dhy);
    for (Index i = 0; i < next.size(); ++i) {
      const double mag = std::abs(next(i));
      next(i) = mag > thresh ? next(i) * ((mag - thresh) / mag) : Complex(0.0);
    }
    const double change = norm_inf(CVector(next - out.z));
    out.z = std::move(next);
    if (change < opts.step_tol) {
      out.converged = true;
      ++out.iterations;
      break;
    }
  }
  return out;
}

PolynomialFilter fit_filter(const GraphSignal& target, const ImpulseFamily& fam,
                            const SpectralBasis& basis, FitMethod method,
                            const IstaOptions& opts) {
  const Domain home = fam.domain();
  if (target.domain != home)
    throw Error(ErrorCode::DomainMismatch, "impulse family " + std::string(to_string(fam.kind)) +
                                               " fits " + std::string(to_string(home)) +
                                               " impulse responses");
  if (target.size() != static_cast<std::size_t>(fam.D.rows()))
    throw Error(ErrorCode::SizeMismatch, "target length does not match the impulse matrix");

  PolynomialFilter f;
  f.shift_domain = home == Domain::Vertex ? ShiftDomain::VertexA : ShiftDomain::SpectralM;
  try {
    switch (method) {
      case FitMethod::Dense:
        f.coeffs = solve(fam.D, target.values);
        break;
      case FitMethod::DenseSpectral: {
        const CVector rhs = home == Domain::Vertex ? CVector(basis.gft * target.values)
                                                   : CVector(basis.igft * target.values);
        f.coeffs = solve(fam.D_hat, rhs);
        break;
      }
      case FitMethod::L1:
        f.coeffs = ista(fam.D, target.values, opts).z;
        break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::Singular, std::string("impulse matrix of ") +
                                         std::string(to_string(fam.kind)) +
                                         " is singular; this family " +
                                         assumption_hint(fam.kind) + " (" + e.what() + ")");
  }
  return f;
}

GraphSignal convolve(const GraphSignal& x, const GraphSignal& y, const Graph& g,
                     const SpectralBasis& basis, Domain domain, ImpulseKind kind,
                     FitMethod method, PolynomialFilter* fitted) {
  if (x.domain != domain || y.domain != domain || home_domain(kind) != domain)
    throw Error(ErrorCode::DomainMismatch,
                "convolution in the " + std::string(to_string(domain)) +
                    " domain needs both signals and the impulse family in that domain");
  const ImpulseFamily fam = impulse_family(g, basis, kind);
  PolynomialFilter f = fit_filter(y, fam, basis, method);
  GraphSignal out = apply(f, g, basis, x);
  if (fitted) *fitted = std::move(f);
  return out;
}

}  // namespace gsp
