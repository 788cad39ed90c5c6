#pragma once

// Dense complex linear algebra kernel: Gauss-Jordan elimination with pivot
// tracking, linear solves, and eigendecomposition of general square matrices.
// Everything here is a pure function of its arguments.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gsp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using IndexList = std::vector<std::size_t>;

inline constexpr double kDefaultTol = 1e-10;

/// Result of Gauss-Jordan elimination. Pivot and free column lists are
/// ascending and partition 0..cols-1.
struct RowReduction {
  CMatrix rref;
  IndexList pivot_cols;
  IndexList free_cols;
  std::size_t rank = 0;
};

/// Right eigenvectors (unit columns) and eigenvalues of a general matrix.
struct EigPair {
  CVector values;
  CMatrix vectors;
  double min_gap = 0.0;  // smallest pairwise |lambda_i - lambda_j|
};

/// Reduced row echelon form under partial pivoting (largest magnitude, ties
/// to the lowest row). Entries with magnitude <= tol * max|A_ij| count as zero.
RowReduction row_reduce(const CMatrix& a, double tol = kDefaultTol);

/// Solves a * x = b by LU with partial pivoting. Throws Singular when a pivot
/// falls to tol * max|a_ij| or below.
CVector solve(const CMatrix& a, const CVector& b, double tol = kDefaultTol);
CMatrix solve(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);
CMatrix inverse(const CMatrix& a, double tol = kDefaultTol);

/// Eigendecomposition of a general square matrix. Columns are normalized to
/// unit Euclidean norm with the first nonzero entry on the positive real axis.
/// Throws NotConverged if the QR iteration fails or the residual check
/// ||A v - lambda v||_inf <= tol * ||A||_inf does not hold.
EigPair eig(const CMatrix& a, double tol = 1e-9);

/// Max absolute row sum.
double norm_inf(const CMatrix& a);
double norm_inf(const CVector& v);
double max_abs(const CMatrix& a);

/// 2-norm condition number (sigma_max / sigma_min); infinity when singular.
double condition_number(const CMatrix& a);

/// Smallest pairwise distance between entries of v (infinity for size < 2).
double min_pairwise_gap(const CVector& v);

CMatrix select_rows(const CMatrix& a, const IndexList& rows);
CMatrix select_cols(const CMatrix& a, const IndexList& cols);
CMatrix select(const CMatrix& a, const IndexList& rows, const IndexList& cols);
CVector select(const CVector& v, const IndexList& idx);

/// Indices 0..n-1 not contained in the ascending list idx.
IndexList complement(const IndexList& idx, std::size_t n);

}  // namespace gsp
