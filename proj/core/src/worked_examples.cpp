#include "gsp/worked_examples.hpp"

namespace gsp::worked {

namespace {

using C = Complex;
constexpr C j{0.0, 1.0};

CVector vec(std::initializer_list<C> v) {
  CVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& z : v) out(i++) = z;
  return out;
}

}  // namespace

CMatrix star5_gft() {
  CMatrix g(5, 5);
  g << 1, .5, .5, .5, .5,
      -1, .5, .5, .5, .5,
       0, -1, -1, 3, -1,
       0, -1, 3, -1, -1,
       0, -1, -1, -1, 3;
  return g / 4.0;
}

CVector star5_lambda() { return vec({2, -2, 0, 0, 0}); }

CMatrix star5_printed_m() {
  CMatrix m(5, 5);
  m << 1.5, -2.5, .5, .5, .5,
      -2.5, 1.5, .5, .5, .5,
       1, 1, -1, -1, -1,
       1, 1, -1, -1, -1,
       1, 1, -1, -1, -1;
  return m / 2.0;
}

CMatrix example4_printed_gft() {
  CMatrix g(4, 4);
  g << -.582, -.582, -.317, -.489,
       -1.414, 0, 0, 1.414,
       .58 + .29 * j, .58 + .29 * j, -.124 - .871 * j, -1.0 - .06 * j,
       .58 - .29 * j, .58 - .29 * j, -.124 + .871 * j, -1.0 + .06 * j;
  return g;
}

CMatrix example4_printed_igft() {
  CMatrix v(4, 4);
  v << -.577, -.707, -.369 - .158 * j, -.369 + .158 * j,
       -.485, .707, .619, .619,
       -.314, 0, .109 + .533 * j, .11 - .533 * j,
       -.577, 0, -.369 - .158 * j, -.369 + .158 * j;
  return v;
}

SpectralBasis example4_basis() {
  return match_reference(basis_from_graph(build(GraphKind::PaperExample4, 4)),
                         example4_printed_igft());
}

BandSpec example4_band() { return BandSpec::first(2); }
CVector example4_x() { return vec({-1.992, .93, -.314, -.577}); }
CVector example4_x_hat() { return vec({1, 2, 0, 0}); }
Indicator example4_delta() { return {0, 1, 0, 1}; }

CMatrix example4_rref() {
  CMatrix r(2, 4);
  r << 1, 1, 0, -1.839,
       0, 0, 1, -.544;
  return r;
}

CMatrix example4_s() {
  CMatrix s(2, 2);
  s << -1, 1.839,
        0, .544;
  return s;
}

CVector example4_samples() { return vec({.93, -.577}); }

CVector example4_x_spl_hat() {
  return vec({-.259, -.817, 1.116 + .305 * j, 1.116 - .305 * j});
}

CMatrix example4_pmk() {
  CMatrix p(4, 2);
  p << .564, -.412,
       -.817, 0,
       .296 - .106 * j, .41 + .205 * j,
       .296 + .106 * j, .41 - .205 * j;
  return p;
}

CMatrix example4_pmkk() {
  CMatrix p(2, 2);
  p << -.817, 0,
       .296 + .106 * j, .41 - .205 * j;
  return p;
}

CVector replication_freq_sampled() { return vec({1, 2, 1, 2}); }

CVector replication_gft_image() {
  return vec({-3.098 + .158 * j, 2.786, .013 - .533 * j, -1.68 + .158 * j});
}

CVector replication_dft_image() { return vec({3, 0, -1, 0}); }

CVector ring_conv_x() { return vec({1, 2, 3, 4}); }
CVector ring_conv_y() { return vec({-1, 1, 2, 4}); }
CVector ring_conv_result() { return vec({17, 19, 17, 7}); }
CVector ring_spec_x_hat() { return vec({1, 2, 3, 4}); }
CVector ring_spec_y_hat() { return vec({6, -3.0 + 3.0 * j, -4, -3.0 - 3.0 * j}); }

CVector ring_spec_printed_result() {
  return vec({-24.0 - 6.0 * j, -16.0 + 6.0 * j, -4.0 + 6.0 * j, 4.0 - 6.0 * j});
}

CMatrix ring_conv_circulant() {
  CMatrix c(4, 4);
  c << -1, 4, 2, 1,
        1, -1, 4, 2,
        2, 1, -1, 4,
        4, 2, 1, -1;
  return c;
}

}  // namespace gsp::worked
