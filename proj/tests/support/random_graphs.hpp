#pragma once

#include <cstdint>
#include <random>

#include "gsp/gsp.hpp"

namespace gsp::testing {

using Rng = std::mt19937_64;

/// Directed Erdos-Renyi graph: each ordered pair (no self loops) is an edge
/// with probability p and weight uniform in [0.5, 1.5].
Graph erdos_renyi(Rng& rng, std::size_t n, double p);

/// Draws ER digraphs until the eigenbasis is usable: eigenvalue gap above
/// min_gap and igft condition number below max_cond. Counts redraws.
struct DrawnGraph {
  Graph graph;
  SpectralBasis basis;
  int redraws = 0;
};

DrawnGraph diagonalizable_graph(Rng& rng, std::size_t n, double min_gap = 1e-3,
                                double max_cond = 1e4);

CVector random_vector(Rng& rng, std::size_t n);

/// Uniformly random size-k subset of 0..n-1, ascending.
IndexList random_subset(Rng& rng, std::size_t n, std::size_t k);

/// Calls f(subset) for every ascending k-subset of 0..n-1.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  IndexList s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    f(static_cast<const IndexList&>(s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Direct sum_k p_k S^k with explicit matrix powers.
CMatrix polynomial_by_powers(const CVector& p, const CMatrix& s);

/// Determinant by cofactor-free Gaussian elimination with complete pivoting.
Complex determinant(CMatrix m);

double rel_err(const CVector& got, const CVector& want);

}  // namespace gsp::testing
