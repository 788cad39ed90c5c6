#pragma once

// Published numbers for the small worked examples (3-digit rounding where
// the source rounds), and the explicit bases they are built from. Demos,
// tests and the acceptance suite compare against these.

#include "gsp/sampling.hpp"

namespace gsp::worked {

// Star graph, N = 5.
CMatrix star5_gft();
CVector star5_lambda();
CMatrix star5_printed_m();

// The 4-node digraph build(GraphKind::PaperExample4, 4).
CMatrix example4_printed_gft();
CMatrix example4_printed_igft();
/// Computed eigenbasis aligned (order and unit-modulus column phases) to the
/// printed inverse GFT, at full precision.
SpectralBasis example4_basis();
BandSpec example4_band();
CVector example4_x();
CVector example4_x_hat();
Indicator example4_delta();
CMatrix example4_rref();
CMatrix example4_s();
CVector example4_samples();
CVector example4_x_spl_hat();
CMatrix example4_pmk();
CMatrix example4_pmkk();

// Frequency-domain replication on the 4-node digraph.
CVector replication_freq_sampled();
CVector replication_gft_image();
CVector replication_dft_image();

// Circular convolution on the 4-node ring.
CVector ring_conv_x();
CVector ring_conv_y();
CVector ring_conv_result();
CVector ring_spec_x_hat();
CVector ring_spec_y_hat();
/// Value as printed for the spectral ring convolution.
CVector ring_spec_printed_result();
CMatrix ring_conv_circulant();

}  // namespace gsp::worked
