#pragma once

// Graph and graph-signal data model plus the canonical graph families.
//
// Adjacency convention: entry (i, j) holds the weight of the edge j -> i, so
// (A * x)_i aggregates the in-neighbours of node i. For the directed ring this
// moves sample x_n to node n + 1.

#include <cstddef>
#include <string_view>

#include "gsp/numkit.hpp"

namespace gsp {

enum class Domain { Vertex, Spectral };

std::string_view to_string(Domain d);

class Graph {
 public:
  /// Throws BadSize for a non-square or empty matrix, ParseError for
  /// non-finite entries.
  explicit Graph(CMatrix adjacency);

  std::size_t n() const noexcept { return static_cast<std::size_t>(adjacency_.rows()); }
  const CMatrix& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  CMatrix adjacency_;
};

struct GraphSignal {
  CVector values;
  Domain domain = Domain::Vertex;

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
};

GraphSignal vertex_signal(CVector values);
GraphSignal spectral_signal(CVector values);

enum class GraphKind { Ring, Star, Path, PaperExample4 };

/// Ring: directed cycle. Star: hub 0 linked both ways to every leaf.
/// Path: undirected path. PaperExample4: the fixed 4-node digraph used by the
/// worked sampling example (requires n == 4). Throws BadSize for n < 2.
Graph build(GraphKind kind, std::size_t n);

}  // namespace gsp
