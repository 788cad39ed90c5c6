#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"

#include "demos.hpp"
#include "support.hpp"

namespace {

using namespace gsp;
using namespace gsp::cli;

std::filesystem::path or_default(const std::string& given, const GlobalOptions& g,
                                 const std::string& name) {
  return given.empty() ? g.out_dir / name : std::filesystem::path(given);
}

struct SampleArgs {
  std::string graph, signal, domain = "vertex", band, delta, basis = "computed";
  std::string plan_out, samples_out;
  double bandlimit_tol = 1e-8;
};

int cmd_sample(const SampleArgs& a, const GlobalOptions& g) {
  const Graph graph = read_graph(a.graph);
  const SpectralBasis basis = load_basis(a.basis, graph);
  const GraphSignal s = read_signal(a.signal);
  if (s.size() != graph.n()) throw Error(ErrorCode::SizeMismatch, "signal length does not match graph");
  const GraphSignal x = s.domain == Domain::Vertex ? s : igft_apply(basis, s);
  const GraphSignal x_hat = s.domain == Domain::Spectral ? s : gft_apply(basis, s);
  BandSpec band{parse_index_list(a.band, graph.n())};
  std::sort(band.support.begin(), band.support.end());
  band_project(x_hat, band, a.bandlimit_tol * std::max(1.0, norm_inf(x_hat.values)));

  std::optional<IndexList> forced;
  if (!a.delta.empty()) forced = parse_index_list(a.delta, graph.n());
  SamplingPlan plan;
  if (a.domain == "vertex") {
    plan = vertex_plan(basis, band, forced, g.tol);
  } else if (a.domain == "spectral") {
    SpectralPlanOptions po;
    po.forced = forced;
    po.tol = g.tol;
    plan = spectral_plan(basis, band, po);
  } else {
    throw Error(ErrorCode::ParseError, "--domain must be vertex or spectral");
  }
  const CVector xs = sample(x, plan.delta);
  write_plan(plan, or_default(a.plan_out, g, "plan.json"));
  write_signal(vertex_signal(xs), or_default(a.samples_out, g, "samples.json"));

  std::cout << "K " << plan.k() << "\ndelta";
  for (int d : plan.delta) std::cout << ' ' << d;
  std::cout << "\ncondition " << plan.condition << "\n";
  return 0;
}

struct RecoverArgs {
  std::string plan, samples, out, truth;
};

int cmd_recover(const RecoverArgs& a, const GlobalOptions& g) {
  const SamplingPlan plan = read_plan(a.plan);
  const GraphSignal xs = read_signal(a.samples);
  const GraphSignal x = recover(plan, xs.values);
  write_signal(x, or_default(a.out, g, "recovered.json"));
  if (!a.truth.empty()) {
    const GraphSignal t = read_signal(a.truth);
    std::cout << "max residual " << std::scientific << std::setprecision(3)
              << max_dev(x.values, t.values) << "\n";
  }
  return 0;
}

struct ConvolveArgs {
  std::string graph, x, y, domain = "vertex", impulse = "vertex", method = "dense",
                          basis = "computed", out, filter_out;
};

int cmd_convolve(const ConvolveArgs& a, const GlobalOptions& g) {
  const Graph graph = read_graph(a.graph);
  const SpectralBasis basis = load_basis(a.basis, graph);
  const GraphSignal x = read_signal(a.x);
  const GraphSignal y = read_signal(a.y);
  const Domain domain = a.domain == "spectral" ? Domain::Spectral : Domain::Vertex;
  if (a.domain != "vertex" && a.domain != "spectral")
    throw Error(ErrorCode::ParseError, "--domain must be vertex or spectral");
  const bool flat = a.impulse == "flat";
  if (!flat && a.impulse != "vertex" && a.impulse != "impulsive")
    throw Error(ErrorCode::ParseError, "--impulse must be vertex, impulsive or flat");
  ImpulseKind kind;
  if (domain == Domain::Vertex)
    kind = flat ? ImpulseKind::SpectralFlat : ImpulseKind::VertexImpulsive;
  else
    kind = flat ? ImpulseKind::SpectralDomainFlat : ImpulseKind::SpectralDomainImpulsive;
  FitMethod method;
  if (a.method == "dense") method = FitMethod::Dense;
  else if (a.method == "dense-spectral") method = FitMethod::DenseSpectral;
  else if (a.method == "l1") method = FitMethod::L1;
  else throw Error(ErrorCode::ParseError, "--method must be dense, dense-spectral or l1");

  PolynomialFilter f;
  const GraphSignal out = convolve(x, y, graph, basis, domain, kind, method, &f);
  write_signal(out, or_default(a.out, g, "convolution.json"));
  write_filter(f, or_default(a.filter_out, g, "filter.json"));
  std::cout << "result";
  for (Eigen::Index i = 0; i < out.values.size(); ++i)
    std::cout << ' ' << format_complex_token(out.values(i));
  std::cout << "\ncoeffs";
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
    std::cout << ' ' << format_complex_token(f.coeffs(i));
  std::cout << "\n";
  return 0;
}

int cmd_gft(const std::string& graph_path, const std::string& signal_path, const std::string& basis_spec,
            const std::string& out, const GlobalOptions& g) {
  const Graph graph = read_graph(graph_path);
  const SpectralBasis basis = load_basis(basis_spec, graph);
  const GraphSignal s = read_signal(signal_path);
  const GraphSignal t = s.domain == Domain::Vertex ? gft_apply(basis, s) : igft_apply(basis, s);
  write_signal(t, or_default(out, g, "transform.json"));
  return 0;
}

int cmd_shift(const std::string& graph_path, const std::string& basis_spec, bool variant,
              const std::string& out, const GlobalOptions& g) {
  const Graph graph = read_graph(graph_path);
  const SpectralBasis basis = load_basis(basis_spec, graph);
  const CMatrix m = variant ? spectral_shift_variant(basis) : spectral_shift(basis);
  write_text_atomic(or_default(out, g, "spectral_shift.csv"), matrix_csv(m));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph signal processing toolkit: spectral shift, filtering and sampling"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::string out_dir = "gsp_out";
  app.add_option("--tol", g.tol, "Zero threshold for eliminations (relative)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--out-dir", out_dir, "Output root")->envname("GSP_OUT_DIR")->capture_default_str();

  std::string demo_name;
  DemoOptions demo_opts;
  auto* demo = app.add_subcommand("demo", "Reproduce a worked example and check it");
  demo->add_option("name", demo_name, "Demo name")->required()->check(CLI::IsMember(demo_names()));
  demo->add_option("--n", demo_opts.n, "Problem size where the demo has one");

  SampleArgs sa;
  auto* samp = app.add_subcommand("sample", "Build a sampling plan and sample a signal");
  samp->add_option("graph", sa.graph)->required()->check(CLI::ExistingFile);
  samp->add_option("signal", sa.signal)->required()->check(CLI::ExistingFile);
  samp->add_option("--domain", sa.domain, "vertex | spectral")
      ->check(CLI::IsMember({"vertex", "spectral"}))
      ->capture_default_str();
  samp->add_option("--band", sa.band, "Band indices, e.g. 0,1 or all")->required();
  samp->add_option("--delta", sa.delta, "Force the sample set, e.g. 1,3");
  samp->add_option("--basis", sa.basis, "computed | dft | basis JSON path")->capture_default_str();
  samp->add_option("--bandlimit-tol", sa.bandlimit_tol, "Out-of-band tolerance relative to max|x_hat|")
      ->capture_default_str();
  samp->add_option("--plan-out", sa.plan_out, "Plan JSON path (default <out-dir>/plan.json)");
  samp->add_option("--samples-out", sa.samples_out, "Samples JSON path (default <out-dir>/samples.json)");

  RecoverArgs ra;
  auto* rec = app.add_subcommand("recover", "Recover a signal from a plan and its samples");
  rec->add_option("plan", ra.plan)->required()->check(CLI::ExistingFile);
  rec->add_option("samples", ra.samples)->required()->check(CLI::ExistingFile);
  rec->add_option("--out", ra.out, "Signal JSON path (default <out-dir>/recovered.json)");
  rec->add_option("--truth", ra.truth, "Reference signal for the residual report")->check(CLI::ExistingFile);

  ConvolveArgs ca;
  auto* conv = app.add_subcommand("convolve", "Convolve two signals through a fitted polynomial filter");
  conv->add_option("graph", ca.graph)->required()->check(CLI::ExistingFile);
  conv->add_option("x", ca.x)->required()->check(CLI::ExistingFile);
  conv->add_option("y", ca.y, "Impulse response")->required()->check(CLI::ExistingFile);
  conv->add_option("--domain", ca.domain, "vertex | spectral")
      ->check(CLI::IsMember({"vertex", "spectral"}))
      ->capture_default_str();
  conv->add_option("--impulse", ca.impulse, "vertex (impulsive) | flat")->capture_default_str();
  conv->add_option("--method", ca.method, "dense | dense-spectral | l1")->capture_default_str();
  conv->add_option("--basis", ca.basis, "computed | dft | basis JSON path")->capture_default_str();
  conv->add_option("--out", ca.out, "Result JSON path (default <out-dir>/convolution.json)");
  conv->add_option("--filter-out", ca.filter_out, "Filter JSON path (default <out-dir>/filter.json)");

  std::string gft_graph, gft_signal, gft_basis = "computed", gft_out;
  auto* gft = app.add_subcommand("gft", "Graph Fourier transform (inverse for spectral input)");
  gft->add_option("graph", gft_graph)->required()->check(CLI::ExistingFile);
  gft->add_option("signal", gft_signal)->required()->check(CLI::ExistingFile);
  gft->add_option("--basis", gft_basis, "computed | dft | basis JSON path")->capture_default_str();
  gft->add_option("--out", gft_out, "Output JSON path (default <out-dir>/transform.json)");

  std::string sh_graph, sh_basis = "computed", sh_out;
  bool sh_variant = false;
  auto* shift = app.add_subcommand("spectral-shift", "Write the spectral shift M as CSV");
  shift->add_option("graph", sh_graph)->required()->check(CLI::ExistingFile);
  shift->add_option("--basis", sh_basis, "computed | dft | basis JSON path")->capture_default_str();
  shift->add_flag("--variant", sh_variant, "Use lambda instead of conj(lambda)");
  shift->add_option("--out", sh_out, "CSV path (default <out-dir>/spectral_shift.csv)");

  CLI11_PARSE(app, argc, argv);
  g.out_dir = out_dir;

  try {
    if (*demo) return run_demo(demo_name, g, demo_opts);
    if (*samp) return cmd_sample(sa, g);
    if (*rec) return cmd_recover(ra, g);
    if (*conv) return cmd_convolve(ca, g);
    if (*gft) return cmd_gft(gft_graph, gft_signal, gft_basis, gft_out, g);
    if (*shift) return cmd_shift(sh_graph, sh_basis, sh_variant, sh_out, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
