#include <cmath>

#include "checks.hpp"
#include "doctest.h"
#include "random_graphs.hpp"

using namespace gsp;
using gsp::testing::Rng;
using gsp::testing::rel_err;

namespace {

CVector bandlimited(Rng& rng, const SpectralBasis& b, const BandSpec& band) {
  CVector x_hat = CVector::Zero(static_cast<Eigen::Index>(b.n()));
  const CVector coeffs = testing::random_vector(rng, band.k());
  for (std::size_t i = 0; i < band.k(); ++i)
    x_hat(static_cast<Eigen::Index>(band.support[i])) = coeffs(static_cast<Eigen::Index>(i));
  return b.igft * x_hat;
}

}  // namespace

TEST_SUITE("sampling") {
  TEST_CASE("band helpers") {
    CHECK(BandSpec::first(3).support == IndexList{0, 1, 2});
    CHECK(BandSpec::all(2).support == IndexList{0, 1});
    CHECK_GSP_ERROR(validate_band(BandSpec{}, 4), ErrorCode::BadSize);
    CHECK_GSP_ERROR(validate_band(BandSpec{{0, 4}}, 4), ErrorCode::BadSize);
    CHECK_GSP_ERROR(validate_band(BandSpec{{2, 1}}, 4), ErrorCode::BadSize);
    CHECK(indicator_from({1, 3}, 4) == Indicator{0, 1, 0, 1});
    CHECK(support_of({0, 1, 0, 1}) == IndexList{1, 3});
  }

  TEST_CASE("band_project") {
    CHECK(band_project(spectral_signal(worked::example4_x_hat()), BandSpec::first(2)) ==
          CVector(worked::example4_x_hat().head(2)));
    Rng rng(1);
    const CVector v = testing::random_vector(rng, 5);
    CHECK(band_project(spectral_signal(v), BandSpec::all(5)) == v);
    CVector leak(4);
    leak << 1, 2, 0.5, 0;
    try {
      band_project(spectral_signal(leak), BandSpec::first(2), 1e-6);
      FAIL_CHECK("expected NotBandlimited");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBandlimited);
      CHECK(std::string(e.what()).find("5.000e-01") != std::string::npos);
    }
    CHECK_GSP_ERROR(band_project(vertex_signal(leak), BandSpec::first(2)), ErrorCode::DomainMismatch);
  }

  TEST_CASE("vertex plan of the 4-node example") {
    const SamplingPlan p = vertex_plan(worked::example4_basis(), worked::example4_band());
    CHECK(p.domain == Domain::Vertex);
    CHECK(p.delta == worked::example4_delta());
    CHECK(p.free_idx == IndexList{1, 3});
    CHECK(p.pivot_idx == IndexList{0, 2});
    CHECK((p.S - worked::example4_s()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK(std::isfinite(p.condition));

    const GraphSignal x = vertex_recover(p, worked::example4_samples());
    CHECK((x.values - worked::example4_x()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK_GSP_ERROR(vertex_recover(p, CVector::Ones(3)), ErrorCode::SizeMismatch);
  }

  TEST_CASE("full band samples everything") {
    const SpectralBasis b = worked::example4_basis();
    const SamplingPlan v = vertex_plan(b, BandSpec::all(4));
    CHECK(v.delta == Indicator{1, 1, 1, 1});
    CHECK(v.S.size() == 0);
    const CVector x = worked::example4_x();
    CHECK(vertex_recover(v, x).values == x);

    const SamplingPlan s = spectral_plan(b, BandSpec::all(4));
    CHECK(s.delta == Indicator{1, 1, 1, 1});
    CHECK((s.pmkk - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((spectral_recover(s, x).values - x).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("forced vertex sample sets") {
    const SpectralBasis b = worked::example4_basis();
    const SamplingPlan p = vertex_plan(b, worked::example4_band(), IndexList{1, 3});
    CHECK((p.S - worked::example4_s()).cwiseAbs().maxCoeff() < 5e-3);
    // Columns 0 and 1 of the out-of-band rows coincide, so {2, 3} leaves a singular pivot block.
    CHECK_GSP_ERROR(vertex_plan(b, worked::example4_band(), IndexList{2, 3}), ErrorCode::Infeasible);
    CHECK_GSP_ERROR(vertex_plan(b, worked::example4_band(), IndexList{1}), ErrorCode::SizeMismatch);
  }

  TEST_CASE("spectral plan of the 4-node example") {
    const SamplingPlan p = spectral_plan(worked::example4_basis(), worked::example4_band());
    CHECK(p.domain == Domain::Spectral);
    CHECK(p.delta == worked::example4_delta());
    CHECK(p.selected_rows == IndexList{1, 3});
    CHECK((p.pmkk - worked::example4_pmkk()).cwiseAbs().maxCoeff() < 5e-3);

    const SpectralRecovery r = spectral_recover_steps(p, worked::example4_samples());
    CHECK((r.x_spl_hat - worked::example4_x_spl_hat()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK((r.x_hat_k - worked::example4_x_hat().head(2)).cwiseAbs().maxCoeff() < 5e-3);
    CHECK((r.x.values - worked::example4_x()).cwiseAbs().maxCoeff() < 5e-3);
    CHECK_GSP_ERROR(spectral_recover(p, CVector::Ones(1)), ErrorCode::SizeMismatch);
  }

  TEST_CASE("spectral plan by Gauss pivoting") {
    SpectralPlanOptions opts;
    opts.selection = RowSelection::GaussPivot;
    const SamplingPlan p = spectral_plan(worked::example4_basis(), worked::example4_band(), opts);
    CHECK(p.delta == Indicator{1, 1, 0, 0});
    const CVector x = worked::example4_basis().igft.leftCols(2) * worked::example4_x_hat().head(2);
    CHECK((spectral_recover(p, sample(vertex_signal(x), p.delta)).values - x).norm() < 1e-10);
  }

  TEST_CASE("sampling operator") {
    const SpectralBasis b = worked::example4_basis();
    CHECK((sampling_operator(b, {1, 1, 1, 1}) - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    const CMatrix pm = sampling_operator(b, worked::example4_delta());
    CHECK((pm.leftCols(2) - worked::example4_pmk()).cwiseAbs().maxCoeff() < 5e-3);

    const CMatrix ring = sampling_operator(dft_basis(4), {1, 0, 1, 0});
    CMatrix blocks(4, 4);
    blocks << 1, 0, 1, 0,
              0, 1, 0, 1,
              1, 0, 1, 0,
              0, 1, 0, 1;
    CHECK((ring - 0.5 * blocks).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("sample and upsample") {
    const GraphSignal x = vertex_signal(worked::example4_x());
    const Indicator d = worked::example4_delta();
    CHECK(sample(x, d) == worked::example4_samples());
    const GraphSignal up = upsample(sample(x, d), d);
    CVector want(4);
    want << 0, .93, 0, -.577;
    CHECK(up.values == want);
    CHECK(sample(x, {1, 1, 1, 1}) == x.values);
    CHECK(upsample(x.values, {1, 1, 1, 1}).values == x.values);

    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t) % 9;
      const IndexList s = testing::random_subset(rng, n, 1 + static_cast<std::size_t>(t) % n);
      const Indicator delta = indicator_from(s, n);
      const GraphSignal v = vertex_signal(testing::random_vector(rng, n));
      std::vector<Complex> dv(delta.begin(), delta.end());
      const GraphSignal dsig = vertex_signal(Eigen::Map<CVector>(dv.data(), static_cast<Eigen::Index>(n)));
      const CVector round = upsample(sample(v, delta), delta).values;
      CHECK(round == modulate(dsig, v).values);
      for (std::size_t i : s) CHECK(round(static_cast<Eigen::Index>(i)) == v.values(static_cast<Eigen::Index>(i)));
    }
  }

  TEST_CASE("ring lowpass round-trip") {
    Rng rng(13);
    const SpectralBasis b = dft_basis(8);
    const BandSpec band = BandSpec::first(4);
    const CVector x = bandlimited(rng, b, band);
    const SamplingPlan v = vertex_plan(b, band);
    CHECK(rel_err(vertex_recover(v, sample(vertex_signal(x), v.delta)).values, x) <= 1e-10);
    const SamplingPlan s = spectral_plan(b, band);
    CHECK(rel_err(spectral_recover(s, sample(vertex_signal(x), s.delta)).values, x) <= 1e-10);
  }

  TEST_CASE("perfect recovery on random graphs") {
    Rng rng(1234);
    int regenerated = 0, agreed = 0;
    for (int t = 0; t < 500;) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng() % 11);
      const auto drawn = testing::diagonalizable_graph(rng, n);
      const std::size_t k = 1 + static_cast<std::size_t>(rng() % (n / 2));
      const BandSpec band{testing::random_subset(rng, n, k)};
      const SamplingPlan vp = vertex_plan(drawn.basis, band);
      const SamplingPlan sp = spectral_plan(drawn.basis, band);
      if (vp.condition > 1e8 || sp.condition > 1e8) {
        ++regenerated;
        continue;
      }
      const GraphSignal x = vertex_signal(bandlimited(rng, drawn.basis, band));
      const CVector xv = vertex_recover(vp, sample(x, vp.delta)).values;
      const CVector xs = spectral_recover(sp, sample(x, sp.delta)).values;
      CHECK(rel_err(xv, x.values) <= 1e-8);
      CHECK(rel_err(xs, x.values) <= 1e-8);
      if (vp.delta == sp.delta) {
        CHECK((xv - xs).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, norm_inf(x.values)));
        ++agreed;
      }
      ++t;
    }
    MESSAGE("regenerated " << regenerated << ", matching deltas " << agreed);
  }

  TEST_CASE("plan invariants") {
    Rng rng(88);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 3 + static_cast<std::size_t>(t) % 8;
      const auto drawn = testing::diagonalizable_graph(rng, n);
      const BandSpec band{testing::random_subset(rng, n, 1 + static_cast<std::size_t>(t) % (n - 1))};
      const SamplingPlan vp = vertex_plan(drawn.basis, band);
      CHECK(support_of(vp.delta) == vp.free_idx);
      CHECK(vp.free_idx.size() == band.k());
      CHECK(vp.S.rows() == static_cast<Eigen::Index>(n - band.k()));

      const SamplingPlan sp = spectral_plan(drawn.basis, band);
      CHECK(support_of(sp.delta).size() == band.k());
      CHECK(std::isfinite(sp.condition));
      const CMatrix pk = select_cols(sampling_operator(drawn.basis, sp.delta), band.support);
      CHECK((select_rows(pk, sp.selected_rows) - sp.pmkk).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("any four ring samples recover a lowpass signal") {
    Rng rng(12);
    const SpectralBasis b = dft_basis(12);
    const BandSpec band = BandSpec::first(4);
    const CVector x = bandlimited(rng, b, band);
    int subsets = 0;
    testing::for_each_subset(12, 4, [&](const IndexList& s) {
      ++subsets;
      const SamplingPlan vp = vertex_plan(b, band, s);
      CHECK(rel_err(vertex_recover(vp, sample(vertex_signal(x), vp.delta)).values, x) <= 1e-6);
      SpectralPlanOptions opts;
      opts.forced = s;
      const SamplingPlan sp = spectral_plan(b, band, opts);
      CHECK(std::abs(testing::determinant(sp.pmkk)) > 0.0);
      CHECK(rel_err(spectral_recover(sp, sample(vertex_signal(x), sp.delta)).values, x) <= 1e-6);
    });
    CHECK(subsets == 495);
  }

  TEST_CASE("plan equivalence") {
    const PlanEquivalence ex =
        plan_equivalent(worked::example4_basis(), worked::example4_delta(), worked::example4_band());
    CHECK(ex.vertex_ok);
    CHECK(ex.spectral_ok);

    // Rows 1 and 2 of the band columns of the igft coincide.
    CMatrix igft(3, 3);
    igft << 1, 0, 0,
            0, 1, 1,
            0, 1, -1;
    const SpectralBasis sym =
        basis_explicit(inverse(igft), CVector::Zero(3), Graph(CMatrix::Zero(3, 3)));
    const BandSpec band{{0, 1}};
    const PlanEquivalence dup = plan_equivalent(sym, {0, 1, 1}, band);
    CHECK_FALSE(dup.vertex_ok);
    CHECK_FALSE(dup.spectral_ok);

    const SpectralBasis ring = dft_basis(6);
    int subsets = 0;
    testing::for_each_subset(6, 3, [&](const IndexList& s) {
      const PlanEquivalence r = plan_equivalent(ring, indicator_from(s, 6), BandSpec::first(3));
      CHECK(r.vertex_ok == r.spectral_ok);
      ++subsets;
    });
    CHECK(subsets == 20);
  }

  TEST_CASE("plan equivalence brute force on random digraphs") {
    Rng rng(99);
    for (int t = 0; t < 12; ++t) {
      const std::size_t n = 3 + static_cast<std::size_t>(t) % 6;
      const auto drawn = testing::diagonalizable_graph(rng, n);
      for (std::size_t k = 1; k < n; ++k) {
        const BandSpec band = BandSpec::first(k);
        testing::for_each_subset(n, k, [&](const IndexList& s) {
          const PlanEquivalence r = plan_equivalent(drawn.basis, indicator_from(s, n), band);
          CHECK_MESSAGE(r.vertex_ok == r.spectral_ok, "ratios " << r.vertex_ratio << " " << r.spectral_ratio << " n " << n << " k " << k);
        });
      }
    }
  }
}
