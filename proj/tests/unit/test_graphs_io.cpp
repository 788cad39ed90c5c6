#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "checks.hpp"
#include "doctest.h"
#include "random_graphs.hpp"

using namespace gsp;
namespace fs = std::filesystem;

namespace {

fs::path data_file(const std::string& name) { return fs::path(GSP_DATA_DIR) / name; }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "gsp_unit_io";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("ring shifts every sample forward") {
    const Graph g = build(GraphKind::Ring, 5);
    CVector x(5);
    x << 1, 2, 3, 4, 5;
    CVector want(5);
    want << 5, 1, 2, 3, 4;
    CHECK(g.adjacency() * x == want);
    CHECK(g.adjacency()(1, 0) == Complex(1.0));
    CHECK(g.adjacency()(0, 4) == Complex(1.0));
    CHECK(g.adjacency().sum() == Complex(5.0));
  }

  TEST_CASE("star, path and the 4-node example") {
    const CMatrix star = build(GraphKind::Star, 5).adjacency();
    CHECK(star == star.transpose());
    CHECK(star.row(0).sum() == Complex(4.0));
    CHECK(star.block(1, 1, 4, 4).isZero());

    const CMatrix path = build(GraphKind::Path, 4).adjacency();
    CHECK(path == path.transpose());
    CHECK(path.sum() == Complex(6.0));
    CHECK(path(0, 3) == Complex(0.0));

    const CMatrix ex = build(GraphKind::PaperExample4, 4).adjacency();
    CMatrix want(4, 4);
    want << 0, 1, 0, 1,
            1, 0, 1, 0,
            0, 0, 0, 1,
            1, 1, 0, 0;
    CHECK(ex == want);
  }

  TEST_CASE("ring adjacency is a permutation of order N") {
    for (std::size_t n : {2u, 3u, 7u, 12u}) {
      const CMatrix a = build(GraphKind::Ring, n).adjacency();
      const auto N = static_cast<Eigen::Index>(n);
      CHECK(a.rowwise().sum() == CVector::Ones(N));
      CHECK(a.colwise().sum() == CVector::Ones(N).transpose());
      CMatrix p = CMatrix::Identity(N, N);
      for (std::size_t k = 0; k < n; ++k) p = a * p;
      CHECK(p == CMatrix::Identity(N, N));
    }
  }

  TEST_CASE("star adjacency is symmetric with 2(N-1) edges") {
    for (std::size_t n : {2u, 5u, 9u}) {
      const CMatrix a = build(GraphKind::Star, n).adjacency();
      CHECK(a == a.transpose());
      CHECK((a.array() != Complex(0.0)).count() == static_cast<Eigen::Index>(2 * (n - 1)));
    }
  }

  TEST_CASE("build and Graph reject bad input") {
    CHECK_GSP_ERROR(build(GraphKind::Ring, 1), ErrorCode::BadSize);
    CHECK_GSP_ERROR(build(GraphKind::Star, 0), ErrorCode::BadSize);
    CHECK_GSP_ERROR(build(GraphKind::PaperExample4, 5), ErrorCode::BadSize);
    CHECK_GSP_ERROR(Graph(CMatrix(2, 3)), ErrorCode::BadSize);
    CHECK_GSP_ERROR(Graph(CMatrix(0, 0)), ErrorCode::BadSize);
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(1, 0) = std::numeric_limits<double>::infinity();
    CHECK_GSP_ERROR(Graph(bad), ErrorCode::ParseError);
  }
}

TEST_SUITE("io") {
  TEST_CASE("complex tokens") {
    CHECK(parse_complex_token("1.5") == Complex(1.5, 0));
    CHECK(parse_complex_token("-2") == Complex(-2, 0));
    CHECK(parse_complex_token("0.58+0.29j") == Complex(0.58, 0.29));
    CHECK(parse_complex_token("1e-3-2e+1j") == Complex(1e-3, -20));
    CHECK(parse_complex_token("3j") == Complex(0, 3));
    CHECK(parse_complex_token("-j") == Complex(0, -1));
    CHECK(parse_complex_token(" 2 ") == Complex(2, 0));
    for (const char* bad : {"", "abc", "1+", "1+2", "1+2jj", "j1", "1..2"})
      CHECK_GSP_ERROR(parse_complex_token(bad), ErrorCode::ParseError);
  }

  TEST_CASE("complex tokens round-trip exactly") {
    testing::Rng rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int t = 0; t < 500; ++t) {
      const Complex z(u(rng) / 7.0, t % 3 == 0 ? 0.0 : u(rng) / 3.0);
      CHECK(parse_complex_token(format_complex_token(z)) == z);
    }
    CHECK(format_complex_token(Complex(1, 0)) == "1");
    CHECK(format_complex_token(Complex(0.5, -2)) == "0.5-2j");
  }

  TEST_CASE("graph JSON and CSV round-trip bit-exactly") {
    testing::Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      const Graph g = testing::erdos_renyi(rng, 2 + t % 7, 0.5);
      CHECK(parse_graph_json(graph_to_json(g)) == g);
      CHECK(parse_graph_csv(graph_to_csv(g)) == g);
    }
    CMatrix complex_weights = CMatrix::Zero(2, 2);
    complex_weights(0, 1) = Complex(0.1, -1.0 / 3.0);
    const Graph g(complex_weights);
    CHECK(parse_graph_json(graph_to_json(g)) == g);
    CHECK(parse_graph_csv(graph_to_csv(g)) == g);
  }

  TEST_CASE("graph parse errors name the location") {
    CHECK_GSP_ERROR(parse_graph_json("{"), ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_graph_json(R"({"edges": []})"), ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_graph_json(R"({"n": 2, "edges": [[0, 2, 1, 0]]})"),
                    ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_graph_json(R"({"n": 2, "edges": [[0, 1, 1, 0], [0, 1, 2, 0]]})"),
                    ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_graph_json(R"({"n": 0, "edges": []})"), ErrorCode::ParseError);
    try {
      parse_graph_csv("0,1\n1,x\n");
      FAIL_CHECK("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      const std::string what = e.what();
      CHECK(what.find("line 2") != std::string::npos);
    }
    CHECK_GSP_ERROR(parse_graph_csv("0,1\n1\n"), ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_graph_csv("0,1,0\n1,0,0\n"), ErrorCode::ParseError);
  }

  TEST_CASE("signal, basis and filter files round-trip") {
    const fs::path dir = scratch_dir();
    testing::Rng rng(21);

    const GraphSignal s = spectral_signal(testing::random_vector(rng, 6));
    write_signal(s, dir / "s.json");
    const GraphSignal s2 = read_signal(dir / "s.json");
    CHECK(s2.domain == Domain::Spectral);
    CHECK(s2.values == s.values);

    const auto drawn = testing::diagonalizable_graph(rng, 5);
    write_basis(drawn.basis, dir / "b.json");
    const BasisData b = read_basis(dir / "b.json");
    CHECK(b.gft == drawn.basis.gft);
    CHECK(b.lambda == drawn.basis.lambda);

    const PolynomialFilter f{testing::random_vector(rng, 3), ShiftDomain::SpectralM};
    write_filter(f, dir / "f.json");
    const PolynomialFilter f2 = read_filter(dir / "f.json");
    CHECK(f2.coeffs == f.coeffs);
    CHECK(f2.shift_domain == ShiftDomain::SpectralM);

    write_graph(drawn.graph, dir / "g.csv");
    CHECK(read_graph(dir / "g.csv") == drawn.graph);
    for (const auto& entry : fs::directory_iterator(dir))
      CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }

  TEST_CASE("vertex signal file round-trip") {
    const fs::path path = scratch_dir() / "x.json";
    write_signal(vertex_signal(worked::example4_x()), path);
    const GraphSignal x = read_signal(path);
    CHECK(x.domain == Domain::Vertex);
    CHECK(x.values == worked::example4_x());

    std::ofstream(scratch_dir() / "empty.json").close();
    CHECK_GSP_ERROR(read_signal(scratch_dir() / "empty.json"), ErrorCode::ParseError);
    CHECK_GSP_ERROR(read_graph(scratch_dir() / "empty.json"), ErrorCode::ParseError);
  }

  TEST_CASE("signal parse errors") {
    CHECK_GSP_ERROR(parse_signal_json(R"({"domain": "time", "values": [[1, 0]]})"),
                    ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_signal_json(R"({"domain": "vertex", "values": [[1]]})"),
                    ErrorCode::ParseError);
    CHECK_GSP_ERROR(parse_signal_json(R"({"domain": "vertex"})"), ErrorCode::ParseError);
    CHECK_GSP_ERROR(read_signal(scratch_dir() / "missing.json"), ErrorCode::ParseError);
  }

  TEST_CASE("bundled data files") {
    CHECK(read_graph(data_file("example4_graph.csv")) == build(GraphKind::PaperExample4, 4));
    CHECK(read_graph(data_file("example4_graph.json")) == build(GraphKind::PaperExample4, 4));
    CHECK(read_graph(data_file("ring4_graph.json")) == build(GraphKind::Ring, 4));
    CHECK(read_graph(data_file("star5_graph.json")) == build(GraphKind::Star, 5));

    const BasisData star = read_basis(data_file("star5_basis.json"));
    CHECK(star.gft == worked::star5_gft());
    CHECK(star.lambda == worked::star5_lambda());

    const BasisData ex = read_basis(data_file("example4_basis.json"));
    const SpectralBasis built = worked::example4_basis();
    CHECK((ex.gft - built.gft).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ex.lambda - built.lambda).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(read_signal(data_file("example4_x_hat.json")).values == worked::example4_x_hat());
    CHECK(read_signal(data_file("ring4_x.json")).values == worked::ring_conv_x());
    CHECK(read_signal(data_file("ring4_y.json")).values == worked::ring_conv_y());
  }

  TEST_CASE("plot csv") {
    CVector v(2);
    v << Complex(3, 4), -1.0;
    const std::string csv = signal_plot_csv(v);
    CHECK(csv.rfind("index,re,im,abs\n", 0) == 0);
    CHECK(csv.find("0,3,4,5") != std::string::npos);
    CHECK(csv.find("1,-1,0,1") != std::string::npos);
  }
}
