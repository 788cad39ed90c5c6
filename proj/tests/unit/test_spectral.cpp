#include <algorithm>
#include <cmath>
#include <numbers>

#include "checks.hpp"
#include "doctest.h"
#include "random_graphs.hpp"

using namespace gsp;
using gsp::testing::Rng;

namespace {

double inv_residual(const SpectralBasis& b) {
  const auto n = static_cast<Eigen::Index>(b.n());
  return norm_inf(CMatrix(b.gft * b.igft - CMatrix::Identity(n, n)));
}

// Multiset equality by greedy nearest matching.
bool same_multiset(CVector a, const CVector& b, double tol) {
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    bool hit = false;
    for (Eigen::Index j = 0; j < b.size() && !hit; ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(a(i) - b(j)) <= tol) {
        used[static_cast<std::size_t>(j)] = true;
        hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("computed basis of the 4-node example") {
    const Graph g = build(GraphKind::PaperExample4, 4);
    const SpectralBasis b = basis_from_graph(g);
    CHECK(b.source == BasisSource::Computed);
    CHECK(inv_residual(b) <= 1e-8);
    CHECK(reconstruction_error(b, g.adjacency()) <= 1e-8);
    for (Eigen::Index k = 1; k < 4; ++k) {
      const Complex prev = b.lambda(k - 1), cur = b.lambda(k);
      CHECK((prev.real() > cur.real() + 1e-9 ||
             (std::abs(prev.real() - cur.real()) <= 1e-9 && prev.imag() >= cur.imag())));
    }
  }

  TEST_CASE("gft of the worked signal is [1, 2, 0, 0]") {
    const SpectralBasis b = worked::example4_basis();
    const GraphSignal x_hat = gft_apply(b, vertex_signal(worked::example4_x()));
    CHECK(x_hat.domain == Domain::Spectral);
    CHECK((x_hat.values - worked::example4_x_hat()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK((b.gft - worked::example4_printed_gft()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK((b.igft - worked::example4_printed_igft()).cwiseAbs().maxCoeff() < 5e-3);
  }

  TEST_CASE("DFT of e_0 is flat") {
    const SpectralBasis b = dft_basis(6);
    const GraphSignal flat = gft_apply(b, vertex_signal(CVector::Unit(6, 0)));
    CHECK((flat.values - CVector::Constant(6, 1.0 / std::sqrt(6.0))).norm() < 1e-12);
  }

  TEST_CASE("gft and igft invert each other") {
    Rng rng(2);
    const auto drawn = testing::diagonalizable_graph(rng, 7);
    const CVector x = testing::random_vector(rng, 7);
    const GraphSignal back = igft_apply(drawn.basis, gft_apply(drawn.basis, vertex_signal(x)));
    CHECK(back.domain == Domain::Vertex);
    CHECK((back.values - x).cwiseAbs().maxCoeff() <= 1e-10);
  }

  TEST_CASE("transform domain and size errors") {
    const SpectralBasis b = dft_basis(4);
    CHECK_GSP_ERROR(gft_apply(b, spectral_signal(CVector::Ones(4))), ErrorCode::DomainMismatch);
    CHECK_GSP_ERROR(igft_apply(b, vertex_signal(CVector::Ones(4))), ErrorCode::DomainMismatch);
    CHECK_GSP_ERROR(gft_apply(b, vertex_signal(CVector::Ones(3))), ErrorCode::SizeMismatch);
    CHECK_GSP_ERROR(igft_apply(b, spectral_signal(CVector::Ones(5))), ErrorCode::SizeMismatch);
  }

  TEST_CASE("basis_from_graph rejects repeated eigenvalues") {
    CHECK_GSP_ERROR(basis_from_graph(build(GraphKind::Star, 5)), ErrorCode::RepeatedEigenvalues);
    CHECK_GSP_ERROR(basis_from_graph(Graph(CMatrix::Identity(3, 3))),
                    ErrorCode::RepeatedEigenvalues);
  }

  TEST_CASE("explicit ordering overrides the default") {
    const Graph g = build(GraphKind::PaperExample4, 4);
    const SpectralBasis def = basis_from_graph(g);
    const SpectralBasis raw = basis_from_graph(g, OrderingRule::explicit_order({0, 1, 2, 3}));
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(def.lambda(static_cast<Eigen::Index>(k)) ==
            raw.lambda(static_cast<Eigen::Index>(def.ordering[k])));
    CHECK_GSP_ERROR(basis_from_graph(g, OrderingRule::explicit_order({0, 1, 1, 3})),
                    ErrorCode::DimensionMismatch);
    CHECK_GSP_ERROR(basis_from_graph(g, OrderingRule::explicit_order({0, 1})),
                    ErrorCode::DimensionMismatch);
  }

  TEST_CASE("explicit basis checks the reconstruction") {
    const Graph star = build(GraphKind::Star, 5);
    const SpectralBasis b = basis_explicit(worked::star5_gft(), worked::star5_lambda(), star);
    CHECK(b.source == BasisSource::Explicit);
    CHECK(reconstruction_error(b, star.adjacency()) <= 1e-9);

    CVector wrong = worked::star5_lambda();
    wrong(0) = 3.0;
    CHECK_GSP_ERROR(basis_explicit(worked::star5_gft(), wrong, star),
                    ErrorCode::ReconstructionMismatch);
    CHECK_GSP_ERROR(basis_explicit(CMatrix::Identity(4, 4), CVector::Zero(4), star),
                    ErrorCode::DimensionMismatch);
  }

  TEST_CASE("spectral shift of the ring equals the adjacency") {
    for (std::size_t n : {4u, 8u, 16u, 64u}) {
      const Graph g = build(GraphKind::Ring, n);
      const SpectralBasis b = dft_basis(n);
      CHECK(norm_inf(CMatrix(spectral_shift(b) - g.adjacency())) <= 1e-10);
      CHECK(norm_inf(CMatrix(spectral_shift_variant(b) - g.adjacency().transpose())) <= 1e-10);
    }
    const SpectralBasis b4 = dft_basis(4);
    CHECK(norm_inf(CMatrix(spectral_shift_variant(b4) - build(GraphKind::Ring, 4).adjacency())) >
          0.5);
  }

  TEST_CASE("spectral shift of the star matches the printed matrix") {
    const SpectralBasis b =
        basis_explicit(worked::star5_gft(), worked::star5_lambda(), build(GraphKind::Star, 5));
    const CMatrix m = spectral_shift(b);
    CHECK((m - worked::star5_printed_m()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK(structural_equal(m, worked::star5_printed_m()));
    CHECK(spectral_shift_variant(b).isApprox(m));
  }

  TEST_CASE("diagonal shift with identity gft") {
    CMatrix a = CMatrix::Zero(3, 3);
    a.diagonal() << Complex(1, 2), -3.0, Complex(0, 1);
    const SpectralBasis b = basis_explicit(CMatrix::Identity(3, 3), a.diagonal(), Graph(a));
    CHECK(spectral_shift(b) == CMatrix(a.conjugate()));
    CHECK(spectral_shift_variant(b) == a);
  }

  TEST_CASE("real symmetric shift has M equal to M'") {
    const SpectralBasis b = basis_from_graph(build(GraphKind::Path, 6));
    CHECK(norm_inf(CMatrix(spectral_shift(b) - spectral_shift_variant(b))) <= 1e-10);
  }

  TEST_CASE("rescaling conjugates M by a diagonal matrix") {
    Rng rng(17);
    std::uniform_real_distribution<double> mag(0.5, 2.0), ph(-std::numbers::pi, std::numbers::pi);
    int checked = 0, regenerated = 0;
    while (checked < 100) {
      const std::size_t n = 2 + static_cast<std::size_t>(checked) % 9;
      const auto drawn = testing::diagonalizable_graph(rng, n);
      const auto N = static_cast<Eigen::Index>(n);
      CVector c(N);
      for (Eigen::Index k = 0; k < N; ++k) c(k) = std::polar(mag(rng), ph(rng));

      const CMatrix m = spectral_shift(drawn.basis);
      const double scale = max_abs(m);
      const double zero_tol = 1e-9 * scale;
      const bool ambiguous = ((m.cwiseAbs().array() > zero_tol) &&
                              (m.cwiseAbs().array() <= 10 * zero_tol)).any();
      if (ambiguous) {
        ++regenerated;
        continue;
      }

      const SpectralBasis rb = rescale_basis(drawn.basis, c);
      const CMatrix mc = spectral_shift(rb);
      const CMatrix want = CVector(c.cwiseInverse()).asDiagonal() * m * c.asDiagonal();
      CHECK(norm_inf(CMatrix(mc - want)) <= 1e-9 * std::max(1.0, norm_inf(m)));
      CHECK(reconstruction_error(rb, drawn.graph.adjacency()) <= 1e-8);
      CHECK(inv_residual(rb) <= 1e-8);
      CHECK(structural_equal(m, mc));
      ++checked;
    }
    MESSAGE("regenerated " << regenerated);
  }

  TEST_CASE("unit rescaling leaves the basis unchanged") {
    const SpectralBasis b = dft_basis(5);
    const SpectralBasis same = rescale_basis(b, CVector::Ones(5));
    CHECK(same.gft == b.gft);
    CHECK(same.igft == b.igft);
    CVector c = CVector::Ones(5);
    c(3) = 0.0;
    CHECK_GSP_ERROR(rescale_basis(b, c), ErrorCode::ZeroScale);
    CHECK_GSP_ERROR(rescale_basis(b, CVector::Ones(4)), ErrorCode::DimensionMismatch);
  }

  TEST_CASE("M has the conjugate spectrum of A") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
      const auto drawn = testing::diagonalizable_graph(rng, 3 + t % 8);
      const EigPair ep = eig(spectral_shift(drawn.basis));
      CHECK(same_multiset(ep.values, drawn.basis.lambda.conjugate(), 1e-8));
    }
  }

  TEST_CASE("structural_equal") {
    const CMatrix m = spectral_shift(worked::example4_basis());
    CHECK(structural_equal(m, m));
    CVector c(4);
    c << 2.0, Complex(0, 1), -0.5, Complex(1, 1);
    CHECK(structural_equal(m, CMatrix(CVector(c.cwiseInverse()).asDiagonal() * m * c.asDiagonal())));

    const SpectralBasis star =
        basis_explicit(worked::star5_gft(), worked::star5_lambda(), build(GraphKind::Star, 5));
    CHECK_FALSE(structural_equal(build(GraphKind::Ring, 5).adjacency(), spectral_shift(star)));
    CHECK_GSP_ERROR(structural_equal(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)),
                    ErrorCode::DimensionMismatch);
  }

  TEST_CASE("match_reference recovers a permuted, rephased basis") {
    const SpectralBasis b = dft_basis(6);
    const IndexList perm{3, 0, 5, 1, 4, 2};
    CVector c(6);
    for (Eigen::Index k = 0; k < 6; ++k) c(k) = std::polar(1.0, 0.3 * double(k + 1));
    const SpectralBasis scrambled = rescale_basis(reorder_basis(b, perm), c);
    const SpectralBasis back = match_reference(scrambled, b.igft);
    CHECK((back.igft - b.igft).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((back.lambda - b.lambda).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("aligned 4-node basis keeps conjugate symmetry") {
    const SpectralBasis b = worked::example4_basis();
    CHECK((b.igft.col(2) - b.igft.col(3).conjugate()).norm() < 1e-12);
    CHECK(reconstruction_error(b, build(GraphKind::PaperExample4, 4).adjacency()) <= 1e-8);
  }
}
