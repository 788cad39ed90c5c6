#pragma once

// The directed ring as classical DSP: analytic DFT basis, ring shift checks,
// the block-identity sampling operator of even delta trains, ideal low-pass
// recovery, a circulant convolution oracle, and frequency-domain replication
// compared against vertex-domain sampling.

#include "gsp/sampling.hpp"

namespace gsp {

/// Unitary DFT with lambda_k = exp(-j 2 pi k / N), k = 0..N-1, and
/// igft = gft^H. Diagonalizes build(Ring, N). Throws BadSize for N < 1.
SpectralBasis dft_basis(std::size_t n);

struct RingReport {
  double m_minus_a = 0.0;          // ||M - A||_inf
  double variant_minus_at = 0.0;   // ||M' - A^T||_inf
  double variant_minus_a = 0.0;    // ||M' - A||_inf
  bool variant_is_transpose = false;
};

RingReport verify_ring(std::size_t n, double tol = 1e-10);

/// Evenly spaced delta train with K ones (spacing N/K). NotDivisible.
Indicator even_delta(std::size_t n, std::size_t k);

/// (K/N) times the (N/K) x (N/K) grid of I_K blocks. NotDivisible.
CMatrix block_identity_grid(std::size_t n, std::size_t k);

/// P(M) of the even delta train on the ring, checked against
/// block_identity_grid to 1e-10 (ReconstructionMismatch otherwise).
CMatrix dsp_sampling_operator(std::size_t n, std::size_t k);

/// Keeps entries 0..K-1 multiplied by gain, zeroes the rest.
GraphSignal ideal_lowpass(const GraphSignal& x_hat, std::size_t k, double gain = 1.0);

/// Low-pass with gain N/K, undoing the K/N factor of the even-train P(M).
/// Expects a spectral signal; NotDivisible unless K | N.
GraphSignal nyquist_recover(const GraphSignal& x_spl_hat, std::size_t k);

/// (x * y)_n = sum_k y_{(n-k) mod N} x_k.
CVector circulant_convolve(const CVector& x, const CVector& y);

struct ReplicationReport {
  CVector freq_sampled;
  CVector vertex_image_via_gft;
  CVector vertex_image_via_dft;
  std::size_t zero_count = 0;  // |entry| < 1e-6 * max in the gft image
};

/// Replicates the first N/factor spectral entries `factor` times (no
/// decimation) and maps the result back through igft and through the ring
/// DFT^-1. NotDivisible unless factor | N.
ReplicationReport tanaka_compare(const SpectralBasis& basis, const GraphSignal& x_hat,
                                 std::size_t factor);

}  // namespace gsp
