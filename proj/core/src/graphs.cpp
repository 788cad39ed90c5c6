#include "gsp/graphs.hpp"

#include <string>
#include <utility>

#include "gsp/error.hpp"

namespace gsp {

std::string_view to_string(Domain d) {
  return d == Domain::Vertex ? "vertex" : "spectral";
}

Graph::Graph(CMatrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() == 0 || adjacency_.rows() != adjacency_.cols())
    throw Error(ErrorCode::BadSize, "adjacency must be square and non-empty, got " +
                                        std::to_string(adjacency_.rows()) + "x" +
                                        std::to_string(adjacency_.cols()));
  if (!adjacency_.allFinite())
    throw Error(ErrorCode::ParseError, "adjacency has non-finite entries");
}

GraphSignal vertex_signal(CVector values) { return {std::move(values), Domain::Vertex}; }
GraphSignal spectral_signal(CVector values) { return {std::move(values), Domain::Spectral}; }

Graph build(GraphKind kind, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadSize, "graph families need n >= 2, got " + std::to_string(n));
  const auto N = static_cast<Eigen::Index>(n);
  CMatrix a = CMatrix::Zero(N, N);
  switch (kind) {
    case GraphKind::Ring:
      for (Eigen::Index i = 0; i < N; ++i) a(i, (i + N - 1) % N) = 1.0;
      break;
    case GraphKind::Star:
      for (Eigen::Index i = 1; i < N; ++i) {
        a(0, i) = 1.0;
        a(i, 0) = 1.0;
      }
      break;
    case GraphKind::Path:
      for (Eigen::Index i = 0; i + 1 < N; ++i) {
        a(i, i + 1) = 1.0;
        a(i + 1, i) = 1.0;
      }
      break;
    case GraphKind::PaperExample4:
      if (n != 4) throw Error(ErrorCode::BadSize, "PaperExample4 requires n == 4");
      a << 0, 1, 0, 1,
           1, 0, 1, 0,
           0, 0, 0, 1,
           1, 1, 0, 0;
      break;
  }
  return Graph(std::move(a));
}

}  // namespace gsp
