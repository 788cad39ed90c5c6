#include "gsp/dspcompat.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "format.hpp"
#include "gsp/error.hpp"

namespace gsp {

using Eigen::Index;

namespace {

void require_divides(std::size_t n, std::size_t k, const char* what) {
  if (k == 0 || n == 0 || n % k != 0)
    throw Error(ErrorCode::NotDivisible, std::string(what) + " " + std::to_string(k) +
                                             " does not divide N = " + std::to_string(n));
}

}  // namespace

SpectralBasis dft_basis(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadSize, "DFT size must be positive");
  const Index N = static_cast<Index>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  SpectralBasis b;
  b.source = BasisSource::Explicit;
  b.gft.resize(N, N);
  b.lambda.resize(N);
  for (Index k = 0; k < N; ++k) {
    b.lambda(k) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / N);
    for (Index m = 0; m < N; ++m)
      b.gft(k, m) = std::polar(scale, -2.0 * std::numbers::pi * static_cast<double>((k * m) % N) / N);
  }
  b.igft = b.gft.adjoint();
  b.ordering.resize(n);
  std::iota(b.ordering.begin(), b.ordering.end(), std::size_t{0});
  return b;
}

RingReport verify_ring(std::size_t n, double tol) {
  const Graph ring = build(GraphKind::Ring, n);
  const SpectralBasis b = dft_basis(n);
  const CMatrix& a = ring.adjacency();
  const CMatrix m = spectral_shift(b);
  const CMatrix mv = spectral_shift_variant(b);
  RingReport r;
  r.m_minus_a = norm_inf(CMatrix(m - a));
  r.variant_minus_at = norm_inf(CMatrix(mv - a.transpose()));
  r.variant_minus_a = norm_inf(CMatrix(mv - a));
  r.variant_is_transpose = r.variant_minus_at <= tol;
  return r;
}

Indicator even_delta(std::size_t n, std::size_t k) {
  require_divides(n, k, "sample count");
  Indicator d(n, 0);
  for (std::size_t i = 0; i < n; i += n / k) d[i] = 1;
  return d;
}

CMatrix block_identity_grid(std::size_t n, std::size_t k) {
  require_divides(n, k, "block size");
  const Index N = static_cast<Index>(n);
  const Index K = static_cast<Index>(k);
  CMatrix g = CMatrix::Zero(N, N);
  const double w = static_cast<double>(k) / static_cast<double>(n);
  for (Index i = 0; i < N; ++i)
    for (Index j = i % K; j < N; j += K) g(i, j) = w;
  return g;
}

CMatrix dsp_sampling_operator(std::size_t n, std::size_t k) {
  const CMatrix p = sampling_operator(dft_basis(n), even_delta(n, k));
  const double err = norm_inf(CMatrix(p - block_identity_grid(n, k)));
  if (err > 1e-10)
    throw Error(ErrorCode::ReconstructionMismatch,
                "even-train P(M) deviates from the block grid by " + detail::num(err));
  return p;
}

GraphSignal ideal_lowpass(const GraphSignal& x_hat, std::size_t k, double gain) {
  if (x_hat.domain != Domain::Spectral)
    throw Error(ErrorCode::DomainMismatch, "low-pass filtering expects a spectral signal");
  if (k > x_hat.size()) throw Error(ErrorCode::BadSize, "pass band wider than the signal");
  CVector out = CVector::Zero(x_hat.values.size());
  out.head(static_cast<Index>(k)) = gain * x_hat.values.head(static_cast<Index>(k));
  return spectral_signal(std::move(out));
}

GraphSignal nyquist_recover(const GraphSignal& x_spl_hat, std::size_t k) {
  require_divides(x_spl_hat.size(), k, "bandwidth");
  return ideal_lowpass(x_spl_hat, k,
                       static_cast<double>(x_spl_hat.size()) / static_cast<double>(k));
}

CVector circulant_convolve(const CVector& x, const CVector& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::SizeMismatch, "circular convolution needs equal lengths");
  const Index n = x.size();
  CVector out = CVector::Zero(n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) out(i) += y((i - k + n) % n) * x(k);
  return out;
}

ReplicationReport tanaka_compare(const SpectralBasis& basis, const GraphSignal& x_hat,
                                 std::size_t factor) {
  if (x_hat.domain != Domain::Spectral)
    throw Error(ErrorCode::DomainMismatch, "replication expects a spectral signal");
  const std::size_t n = basis.n();
  if (x_hat.size() != n) throw Error(ErrorCode::SizeMismatch, "signal length does not match basis");
  require_divides(n, factor, "replication factor");
  const Index block = static_cast<Index>(n / factor);

  ReplicationReport r;
  r.freq_sampled.resize(static_cast<Index>(n));
  for (std::size_t f = 0; f < factor; ++f)
    r.freq_sampled.segment(static_cast<Index>(f) * block, block) = x_hat.values.head(block);
  r.vertex_image_via_gft = basis.igft * r.freq_sampled;
  r.vertex_image_via_dft = dft_basis(n).igft * r.freq_sampled;
  const double thr = 1e-6 * norm_inf(r.vertex_image_via_gft);
  for (Index i = 0; i < r.vertex_image_via_gft.size(); ++i)
    if (std::abs(r.vertex_image_via_gft(i)) < thr) ++r.zero_count;
  return r;
}

}  // namespace gsp
