#include "demos.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <random>

namespace gsp::cli {

namespace {

using Eigen::Index;

class Writer {
 public:
  Writer(std::filesystem::path dir, Report& report) : dir_(std::move(dir)), report_(report) {}

  void text(const std::string& name, const std::string& body) {
    write_text_atomic(dir_ / name, body);
    files_.push_back(name);
  }
  void signal(const std::string& name, const CVector& v) { text(name, signal_plot_csv(v)); }
  void matrix(const std::string& name, const CMatrix& m) { text(name, matrix_csv(m)); }
  void finish() {
    files_.push_back("report.json");
    report_.set("files", files_);
    write_text_atomic(dir_ / "report.json", report_.to_json().dump(2) + "\n");
  }

 private:
  std::filesystem::path dir_;
  Report& report_;
  std::vector<std::string> files_;
};

using DemoFn = std::function<void(Report&, Writer&, const GlobalOptions&, const DemoOptions&)>;

CVector delta_vector(const Indicator& d) {
  CVector v(static_cast<Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Index>(i)) = static_cast<double>(d[i]);
  return v;
}

void ring_shift(Report& r, Writer& w, const GlobalOptions&, const DemoOptions& o) {
  const std::size_t n = o.n ? o.n : 4;
  const Graph ring = build(GraphKind::Ring, n);
  const Index N = static_cast<Index>(n);
  CVector x(N);
  for (Index i = 0; i < N; ++i) x(i) = static_cast<double>(i + 1);
  const CVector y = ring.adjacency() * x;
  CVector expect(N);
  for (Index i = 0; i < N; ++i) expect(i) = x((i + N - 1) % N);
  r.check("A x moves x_(n-1) to node n", max_dev(y, expect), 0.0);
  const RingReport rr = verify_ring(n);
  r.check("ring M equals A", rr.m_minus_a, 1e-10);
  r.check_true("variant shift is the transpose", rr.variant_is_transpose);
  r.set("n", n);
  r.set("x", to_json(x));
  r.set("shifted", to_json(y));
  w.signal("x.csv", x);
  w.signal("shifted.csv", y);
}

void star_m(Report& r, Writer& w, const GlobalOptions&, const DemoOptions&) {
  const Graph star = build(GraphKind::Star, 5);
  const SpectralBasis b = basis_explicit(worked::star5_gft(), worked::star5_lambda(), star);
  const CMatrix m = spectral_shift(b);
  r.check("explicit basis reconstructs A", reconstruction_error(b, star.adjacency()), 1e-9);
  r.check("M matches the published matrix", max_dev(m, worked::star5_printed_m()), 5e-3);
  r.check_true("M has the published zero pattern", structural_equal(m, worked::star5_printed_m()));
  bool repeated = false;
  try {
    basis_from_graph(star);
  } catch (const Error& e) {
    repeated = e.code() == ErrorCode::RepeatedEigenvalues;
  }
  r.check_true("computed basis rejects the repeated eigenvalue", repeated);
  const AssumptionReport a = check_assumptions(b);
  r.check_true("eigenvalues flagged as repeated", !a.distinct);
  r.check_true("y0 flagged as having zero entries", !a.y0_nonzero);
  const ImpulseFamily fam = impulse_family(star, b, ImpulseKind::VertexImpulsive);
  r.check_true("vertex impulse matrix is rank deficient", row_reduce(fam.D).rank < 5);
  r.set("M", to_json(m));
  r.set("min_gap", a.min_gap);
  w.matrix("A.csv", star.adjacency());
  w.matrix("M.csv", m);
}

void example_vertex(Report& r, Writer& w, const GlobalOptions& g, const DemoOptions&) {
  const SpectralBasis b = worked::example4_basis();
  const BandSpec band = worked::example4_band();
  const SamplingPlan plan = vertex_plan(b, band, std::nullopt, g.tol);
  const RowReduction rr = row_reduce(select_rows(b.gft, complement(band.support, b.n())), g.tol);
  r.check_true("delta is [0,1,0,1]", plan.delta == worked::example4_delta());
  r.check_true("pivots are {0,2}", plan.pivot_idx == IndexList{0, 2});
  r.check("row-reduced out-of-band GFT", max_dev(rr.rref, worked::example4_rref()), 5e-3);
  r.check("S matrix", max_dev(plan.S, worked::example4_s()), 5e-3);
  const GraphSignal x = vertex_recover(plan, worked::example4_samples());
  r.check("recovered x from the published samples", max_dev(x.values, worked::example4_x()), 5e-3);
  const CVector exact = b.igft * worked::example4_x_hat();
  const GraphSignal x2 = vertex_recover(plan, sample(vertex_signal(exact), plan.delta));
  r.check("exact round trip", max_dev(x2.values, exact), 1e-10);
  r.set("delta", plan.delta);
  r.set("S", to_json(plan.S));
  r.set("condition", plan.condition);
  r.set("x", to_json(x.values));
  w.signal("recovered.csv", x.values);
  w.text("plan.json", plan_to_json(plan));
}

void example_spectral(Report& r, Writer& w, const GlobalOptions& g, const DemoOptions&) {
  const SpectralBasis b = worked::example4_basis();
  const BandSpec band = worked::example4_band();
  SpectralPlanOptions po;
  po.tol = g.tol;
  const SamplingPlan plan = spectral_plan(b, band, po);
  r.check_true("delta is [0,1,0,1]", plan.delta == worked::example4_delta());
  const CMatrix pmk = select_cols(sampling_operator(b, plan.delta), band.support);
  r.check("P(M)_K", max_dev(pmk, worked::example4_pmk()), 5e-3);
  const CMatrix from_response = matrix_from_response(
      b, vertex_signal(delta_vector(plan.delta)), ResponseDirection::VertexResponseToPM);
  r.check("P(M) from the vertex response", max_dev(select_cols(from_response, band.support), pmk),
          1e-12);
  r.check_true("selected rows are {1,3}", plan.selected_rows == IndexList{1, 3});
  r.check("P(M)_KK", max_dev(plan.pmkk, worked::example4_pmkk()), 5e-3);
  const SpectralRecovery st = spectral_recover_steps(plan, worked::example4_samples());
  r.check("spectrum of the upsampled samples", max_dev(st.x_spl_hat, worked::example4_x_spl_hat()),
          5e-3);
  r.check("recovered in-band coefficients", max_dev(st.x_hat_k, CVector(worked::example4_x_hat().head(2))),
          5e-3);
  r.check("recovered x", max_dev(st.x.values, worked::example4_x()), 5e-3);
  const PlanEquivalence eq = plan_equivalent(b, plan.delta, band);
  r.check_true("delta is valid in both domains", eq.vertex_ok && eq.spectral_ok);
  SpectralPlanOptions gp;
  gp.selection = RowSelection::GaussPivot;
  r.set("gauss_pivot_delta", spectral_plan(b, band, gp).delta);
  r.set("delta", plan.delta);
  r.set("x_spl_hat", to_json(st.x_spl_hat));
  r.set("pmkk", to_json(plan.pmkk));
  r.set("x_hat_k", to_json(st.x_hat_k));
  r.set("condition", plan.condition);
  w.signal("x_spl_hat.csv", st.x_spl_hat);
  w.signal("recovered.csv", st.x.values);
  w.text("plan.json", plan_to_json(plan));
}

void dsp_theorem5(Report& r, Writer& w, const GlobalOptions&, const DemoOptions& o) {
  const std::size_t nmax = o.n ? o.n : 32;
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= nmax; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (n % k) continue;
      const CMatrix p = sampling_operator(dft_basis(n), even_delta(n, k));
      worst = std::max(worst, max_dev(p, block_identity_grid(n, k)));
      ++cases;
    }
  }
  r.check("P(M) equals the K/N block-identity grid", worst, 1e-10);
  r.set("cases", cases);

  const SpectralBasis b4 = dft_basis(4);
  const CVector x_hat = worked::example4_x_hat();
  const CVector spl = sampling_operator(b4, even_delta(4, 2)) * x_hat;
  r.check("low-pass recovers [1,2,0,0]",
          max_dev(nyquist_recover(spectral_signal(spl), 2).values, x_hat), 1e-12);
  r.check("unit-gain low-pass of [1,2,1,2]",
          max_dev(ideal_lowpass(spectral_signal(worked::replication_freq_sampled()), 2).values, x_hat),
          0.0);

  const std::size_t n = 12, k = 4;
  const SpectralBasis b = dft_basis(n);
  SpectralPlanOptions po;
  po.forced = support_of(even_delta(n, k));
  const SamplingPlan plan = spectral_plan(b, BandSpec::first(k), po);
  const Index K = static_cast<Index>(k);
  r.check("(N/K) P(M)_KK is the identity",
          max_dev(CMatrix(plan.pmkk * (double(n) / double(k))), CMatrix::Identity(K, K)), 1e-10);
  CVector lp = CVector::Zero(static_cast<Index>(n));
  lp.head(K) << 1.0, Complex(-2.0, 0.5), 0.25, Complex(0.0, 3.0);
  const CVector x = b.igft * lp;
  const CVector xs = sample(vertex_signal(x), plan.delta);
  const CVector via_solve = b.gft * spectral_recover(plan, xs).values;
  const CVector via_lowpass =
      nyquist_recover(spectral_signal(b.gft * upsample(xs, plan.delta).values), k).values;
  r.check("low-pass agrees with the general recovery", max_dev(via_lowpass, via_solve), 1e-10);
  w.matrix("P_4_2.csv", sampling_operator(b4, even_delta(4, 2)));
}

void replication(Report& r, Writer& w, const GlobalOptions&, const DemoOptions&) {
  const SpectralBasis b = worked::example4_basis();
  const ReplicationReport t = tanaka_compare(b, spectral_signal(worked::example4_x_hat()), 2);
  r.check("replicated spectrum", max_dev(t.freq_sampled, worked::replication_freq_sampled()), 0.0);
  r.check("image through the graph inverse GFT",
          max_dev(t.vertex_image_via_gft, worked::replication_gft_image()), 5e-3);
  r.check_true("graph image has no zeros", t.zero_count == 0);
  r.check("image through the inverse DFT",
          max_dev(t.vertex_image_via_dft, worked::replication_dft_image()), 5e-3);
  const std::size_t n = 8;
  CVector lp = CVector::Zero(8);
  lp.head(4) << 1.0, 2.0, Complex(0.5, -1.0), 3.0;
  const ReplicationReport ring = tanaka_compare(dft_basis(n), spectral_signal(lp), 2);
  r.check_true("ring image has N/2 zeros", ring.zero_count == n / 2);
  r.set("gft_image", to_json(t.vertex_image_via_gft));
  r.set("dft_image", to_json(t.vertex_image_via_dft));
  r.set("zero_count", t.zero_count);
  r.set("ring_zero_count", ring.zero_count);
  w.signal("freq_sampled.csv", t.freq_sampled);
  w.signal("gft_image.csv", t.vertex_image_via_gft);
  w.signal("dft_image.csv", t.vertex_image_via_dft);
}

void path_figure(Report& r, Writer& w, const GlobalOptions& g, const DemoOptions& o) {
  const std::size_t n = o.n ? o.n : 100;
  if (n % 2) throw Error(ErrorCode::NotDivisible, "path_figure needs an even node count");
  const Graph path = build(GraphKind::Path, n);
  const SpectralBasis b = basis_from_graph(path);
  const Index N = static_cast<Index>(n);
  std::mt19937_64 rng(g.seed);
  std::normal_distribution<double> normal;
  CVector x_hat = CVector::Zero(N);
  for (Index i = 0; i < N / 2; ++i) x_hat(i) = normal(rng);
  const CVector x = b.igft * x_hat;
  Indicator delta(n, 0);
  for (std::size_t i = 0; i < n; i += 2) delta[i] = 1;
  const CVector sampled = upsample(sample(vertex_signal(x), delta), delta).values;
  const CVector pm = sampling_operator(b, delta) * x_hat;
  const ReplicationReport t = tanaka_compare(b, spectral_signal(x_hat), 2);
  r.check("P(M) x_hat is the spectrum of the sampled signal",
          max_dev(pm, CVector(b.gft * sampled)) / std::max(1.0, norm_inf(x_hat)), 1e-8);
  r.check("inverse GFT of P(M) x_hat is the sampled signal",
          max_dev(CVector(b.igft * pm), sampled) / std::max(1.0, norm_inf(x)), 1e-8);
  r.set("n", n);
  r.set("band", n / 2);
  r.set("replication_vs_sampled", max_dev(t.vertex_image_via_gft, sampled));
  w.signal("original_vertex.csv", x);
  w.signal("original_spectral.csv", x_hat);
  w.signal("sampled_vertex.csv", sampled);
  w.signal("sampled_spectral.csv", b.gft * sampled);
  w.signal("pm_vertex.csv", b.igft * pm);
  w.signal("pm_spectral.csv", pm);
  w.signal("replication_vertex.csv", t.vertex_image_via_gft);
  w.signal("replication_spectral.csv", t.freq_sampled);
}

void convolution(Report& r, Writer& w, const GlobalOptions& g, const DemoOptions&) {
  const Graph ring = build(GraphKind::Ring, 4);
  const SpectralBasis b = dft_basis(4);
  PolynomialFilter fv;
  const GraphSignal yv = convolve(vertex_signal(worked::ring_conv_x()),
                                  vertex_signal(worked::ring_conv_y()), ring, b, Domain::Vertex,
                                  ImpulseKind::VertexImpulsive, FitMethod::Dense, &fv);
  r.check("vertex convolution", max_dev(yv.values, worked::ring_conv_result()), 1e-6);
  r.check("fitted vertex filter", max_dev(fv.coeffs, worked::ring_conv_y()), 1e-9);
  const GraphSignal y_hat = response(fv, b);
  r.check("frequency response is the spectral impulse",
          max_dev(y_hat.values, worked::ring_spec_y_hat()), 1e-9);
  r.check("P(A) from the frequency response is the circulant",
          max_dev(matrix_from_response(b, y_hat, ResponseDirection::FreqResponseToPA),
                  worked::ring_conv_circulant()),
          1e-9);

  PolynomialFilter fs;
  const GraphSignal ys = convolve(spectral_signal(worked::ring_spec_x_hat()),
                                  spectral_signal(worked::ring_spec_y_hat()), ring, b,
                                  Domain::Spectral, ImpulseKind::SpectralDomainImpulsive,
                                  FitMethod::Dense, &fs);
  const CVector oracle = circulant_convolve(worked::ring_spec_x_hat(), worked::ring_spec_y_hat());
  r.check("spectral convolution equals the circulant oracle", max_dev(ys.values, oracle), 1e-6);
  const CMatrix mv = spectral_shift_variant(b);
  CVector variant = fs.coeffs(fs.coeffs.size() - 1) * worked::ring_spec_x_hat();
  for (Index k = fs.coeffs.size() - 2; k >= 0; --k)
    variant = mv * variant + fs.coeffs(k) * worked::ring_spec_x_hat();
  r.set("spectral_result", to_json(ys.values));
  r.set("spectral_published", to_json(worked::ring_spec_printed_result()));
  r.set("spectral_published_deviation", max_dev(ys.values, worked::ring_spec_printed_result()));
  r.set("spectral_with_variant_shift", to_json(variant));
  r.set("variant_vs_published", max_dev(variant, worked::ring_spec_printed_result()));

  std::mt19937_64 rng(g.seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 15);
    const Index N = static_cast<Index>(n);
    CVector x(N), y(N);
    for (Index i = 0; i < N; ++i) {
      x(i) = Complex(normal(rng), normal(rng));
      y(i) = Complex(normal(rng), normal(rng));
    }
    const Graph rn = build(GraphKind::Ring, n);
    const GraphSignal c = convolve(vertex_signal(x), vertex_signal(y), rn, dft_basis(n),
                                   Domain::Vertex, ImpulseKind::VertexImpulsive);
    const CVector o = circulant_convolve(x, y);
    worst = std::max(worst, max_dev(c.values, o) / std::max(1.0, norm_inf(o)));
  }
  r.check("ring convolution equals the oracle on 100 random pairs", worst, 1e-8);
  w.signal("vertex_result.csv", yv.values);
  w.signal("spectral_result.csv", ys.values);
}

const std::map<std::string, DemoFn>& registry() {
  static const std::map<std::string, DemoFn> demos = {
      {"ring_shift", ring_shift},
      {"star_M", star_m},
      {"paper_example_vertex", example_vertex},
      {"paper_example_spectral", example_spectral},
      {"dsp_theorem5", dsp_theorem5},
      {"tanaka", replication},
      {"path_figure", path_figure},
      {"convolution", convolution},
  };
  return demos;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

int run_demo(const std::string& name, const GlobalOptions& global, const DemoOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    std::cerr << "unknown demo '" << name << "'\n";
    return 2;
  }
  Report report(name);
  Writer writer(global.out_dir / name, report);
  it->second(report, writer, global, opts);
  writer.finish();
  const json doc = report.to_json();
  for (const auto& line : doc["checks"]) {
    std::cout << (line["pass"].get<bool>() ? "ok   " : "FAIL ") << line["name"].get<std::string>();
    if (line.contains("error")) std::cout << "  (error " << line["error"].get<double>() << ")";
    std::cout << "\n";
  }
  if (!report.passed()) {
    std::cerr << name << ": assertion failed: " << report.failures().front() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gsp::cli
