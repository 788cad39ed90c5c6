#include "gsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "format.hpp"
#include "gsp/error.hpp"

namespace gsp {

namespace {

using Eigen::Index;

constexpr double kBasisCheckTol = 1e-8;
constexpr double kExplicitReconstructionTol = 1e-6;

IndexList default_order(const CVector& lambda) {
  // Quantize so that round-off (e.g. +-1e-17 real parts of +-j) cannot flip ties.
  auto key = [&](std::size_t k) {
    const auto z = lambda(static_cast<Index>(k));
    return std::make_tuple(-std::llround(z.real() * 1e9), -std::llround(z.imag() * 1e9), k);
  };
  IndexList order(static_cast<std::size_t>(lambda.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

void check_permutation(const IndexList& perm, std::size_t n) {
  if (perm.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "ordering has " + std::to_string(perm.size()) +
                                                  " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p])
      throw Error(ErrorCode::DimensionMismatch, "ordering is not a permutation of 0..n-1");
    seen[p] = true;
  }
}

}  // namespace

double reconstruction_error(const SpectralBasis& basis, const CMatrix& a) {
  return norm_inf(CMatrix(basis.igft * basis.lambda.asDiagonal() * basis.gft - a));
}

SpectralBasis basis_from_graph(const Graph& g, const OrderingRule& rule, double tol) {
  const EigPair ep = eig(g.adjacency());
  if (ep.min_gap <= tol)
    throw Error(ErrorCode::RepeatedEigenvalues,
                "smallest eigenvalue gap " + detail::num(ep.min_gap) +
                    " is within tolerance " + detail::num(tol));

  const std::size_t n = g.n();
  IndexList order = rule.permutation ? *rule.permutation : default_order(ep.values);
  check_permutation(order, n);

  SpectralBasis basis;
  basis.source = BasisSource::Computed;
  basis.lambda = select(ep.values, order);
  basis.igft = select_cols(ep.vectors, order);
  basis.ordering = std::move(order);
  try {
    basis.gft = inverse(basis.igft);
  } catch (const Error&) {
    throw Error(ErrorCode::NotConverged, "eigenvector matrix is numerically singular");
  }

  const auto N = static_cast<Index>(n);
  const double inv_err = norm_inf(CMatrix(basis.gft * basis.igft - CMatrix::Identity(N, N)));
  const double rec_err = reconstruction_error(basis, g.adjacency());
  const double scale = std::max(1.0, norm_inf(g.adjacency()));
  if (inv_err > kBasisCheckTol || rec_err > kBasisCheckTol * scale)
    throw Error(ErrorCode::NotConverged,
                "eigenbasis too ill-conditioned: ||gft*igft - I|| = " + detail::num(inv_err) +
                    ", reconstruction error " + detail::num(rec_err));
  return basis;
}

SpectralBasis basis_explicit(const CMatrix& gft, const CVector& lambda, const Graph& g,
                             double tol) {
  if (gft.rows() != gft.cols() || gft.rows() != lambda.size() ||
      static_cast<std::size_t>(gft.rows()) != g.n())
    throw Error(ErrorCode::DimensionMismatch, "explicit basis dimensions do not match the graph");

  SpectralBasis basis;
  basis.source = BasisSource::Explicit;
  basis.gft = gft;
  basis.lambda = lambda;
  basis.igft = inverse(gft, tol);
  basis.ordering.resize(g.n());
  std::iota(basis.ordering.begin(), basis.ordering.end(), std::size_t{0});

  const double a_norm = norm_inf(g.adjacency());
  const double err = reconstruction_error(basis, g.adjacency());
  const double bound = kExplicitReconstructionTol * (a_norm > 0.0 ? a_norm : 1.0);
  if (err > bound)
    throw Error(ErrorCode::ReconstructionMismatch,
                "||igft*diag(lambda)*gft - A||_inf = " + detail::num(err) + " exceeds " +
                    detail::num(bound));
  return basis;
}

GraphSignal gft_apply(const SpectralBasis& basis, const GraphSignal& x) {
  if (x.domain != Domain::Vertex)
    throw Error(ErrorCode::DomainMismatch, "gft expects a vertex-domain signal");
  if (x.size() != basis.n())
    throw Error(ErrorCode::SizeMismatch, "signal length does not match the basis");
  return spectral_signal(basis.gft * x.values);
}

GraphSignal igft_apply(const SpectralBasis& basis, const GraphSignal& x_hat) {
  if (x_hat.domain != Domain::Spectral)
    throw Error(ErrorCode::DomainMismatch, "inverse gft expects a spectral-domain signal");
  if (x_hat.size() != basis.n())
    throw Error(ErrorCode::SizeMismatch, "signal length does not match the basis");
  return vertex_signal(basis.igft * x_hat.values);
}

CMatrix spectral_shift(const SpectralBasis& basis) {
  return basis.gft * CVector(basis.lambda.conjugate()).asDiagonal() * basis.igft;
}

CMatrix spectral_shift_variant(const SpectralBasis& basis) {
  return basis.gft * basis.lambda.asDiagonal() * basis.igft;
}

SpectralBasis rescale_basis(const SpectralBasis& basis, const CVector& c) {
  if (static_cast<std::size_t>(c.size()) != basis.n())
    throw Error(ErrorCode::DimensionMismatch, "scaling vector length does not match the basis");
  for (Index k = 0; k < c.size(); ++k)
    if (c(k) == Complex(0.0))
      throw Error(ErrorCode::ZeroScale, "scale entry " + std::to_string(k) + " is zero");

  SpectralBasis out = basis;
  out.gft = CVector(c.cwiseInverse()).asDiagonal() * basis.gft;
  out.igft = basis.igft * c.asDiagonal();
  return out;
}

SpectralBasis reorder_basis(const SpectralBasis& basis, const IndexList& perm) {
  check_permutation(perm, basis.n());
  SpectralBasis out = basis;
  out.lambda = select(basis.lambda, perm);
  out.igft = select_cols(basis.igft, perm);
  out.gft = select_rows(basis.gft, perm);
  for (std::size_t k = 0; k < perm.size(); ++k) out.ordering[k] = basis.ordering[perm[k]];
  return out;
}

SpectralBasis match_reference(const SpectralBasis& basis, const CMatrix& reference_igft) {
  const std::size_t n = basis.n();
  if (static_cast<std::size_t>(reference_igft.cols()) != n ||
      reference_igft.rows() != basis.igft.rows())
    throw Error(ErrorCode::DimensionMismatch, "reference matrix does not match the basis");

  IndexList perm(n);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto ref = reference_igft.col(static_cast<Index>(k));
    double best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const auto v = basis.igft.col(static_cast<Index>(j));
      const double score = std::abs(v.dot(ref)) / (v.norm() * ref.norm());
      if (score > best) {
        best = score;
        perm[k] = j;
      }
    }
    used[perm[k]] = true;
  }

  SpectralBasis ordered = reorder_basis(basis, perm);
  const Index N = static_cast<Index>(n);
  CVector z(N);
  for (Index k = 0; k < N; ++k) z(k) = ordered.igft.col(k).dot(reference_igft.col(k));
  // Columns that are exact conjugates of each other keep that symmetry: the
  // pair shares one phase estimate.
  std::vector<bool> done(n, false);
  for (Index k = 0; k < N; ++k) {
    if (done[static_cast<std::size_t>(k)]) continue;
    const auto vk = ordered.igft.col(k);
    for (Index m = k + 1; m < N; ++m) {
      if (done[static_cast<std::size_t>(m)]) continue;
      if ((ordered.igft.col(m) - vk.conjugate()).norm() <= 1e-8 * vk.norm() &&
          (vk - vk.conjugate()).norm() > 1e-8 * vk.norm()) {
        z(k) += std::conj(z(m));
        z(m) = std::conj(z(k));
        done[static_cast<std::size_t>(m)] = true;
        break;
      }
    }
  }
  CVector c(N);
  for (Index k = 0; k < N; ++k) c(k) = std::abs(z(k)) > 0.0 ? z(k) / std::abs(z(k)) : Complex(1.0);
  return rescale_basis(ordered, c);
}

bool structural_equal(const CMatrix& m1, const CMatrix& m2, std::optional<double> tol) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrices have different shapes");
  const double t = tol.value_or(1e-9 * std::max(max_abs(m1), max_abs(m2)));
  for (Index j = 0; j < m1.cols(); ++j)
    for (Index i = 0; i < m1.rows(); ++i)
      if ((std::abs(m1(i, j)) > t) != (std::abs(m2(i, j)) > t)) return false;
  return true;
}

}  // namespace gsp
