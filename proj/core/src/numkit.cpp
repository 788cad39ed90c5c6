#include "gsp/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "format.hpp"
#include "gsp/error.hpp"

namespace gsp {

namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

}  // namespace

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double norm_inf(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

double norm_inf(const CVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

RowReduction row_reduce(const CMatrix& a, double tol) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  const double thr = tol * max_abs(a);

  RowReduction out;
  CMatrix m = a;
  Index r = 0;
  for (Index c = 0; c < cols; ++c) {
    if (r == rows) {
      out.free_cols.push_back(static_cast<std::size_t>(c));
      continue;
    }
    Index p = r;
    double best = std::abs(m(r, c));
    for (Index i = r + 1; i < rows; ++i) {
      const double mag = std::abs(m(i, c));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (best <= thr || best == 0.0) {
      for (Index i = r; i < rows; ++i) m(i, c) = 0.0;
      out.free_cols.push_back(static_cast<std::size_t>(c));
      continue;
    }
    if (p != r) m.row(p).swap(m.row(r));
    const Complex pivot = m(r, c);
    m.row(r) /= pivot;
    m(r, c) = 1.0;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Complex f = m(i, c);
      if (f == Complex(0.0)) continue;
      m.row(i) -= f * m.row(r);
      m(i, c) = 0.0;
    }
    out.pivot_cols.push_back(static_cast<std::size_t>(c));
    ++r;
  }
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      if (std::abs(m(i, j)) <= thr) m(i, j) = 0.0;

  out.rank = out.pivot_cols.size();
  out.rref = std::move(m);
  return out;
}

CMatrix solve(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "solve requires a square matrix");
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                    std::to_string(a.rows()));
  const Index n = a.rows();
  const double thr = tol * max_abs(a);
  CMatrix lu = a;
  CMatrix x = b;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    double best = std::abs(lu(k, k));
    for (Index i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    if (best <= thr || best == 0.0)
      throw Error(ErrorCode::Singular,
                  "matrix is singular at tolerance " + detail::num(tol) + " (column " +
                      std::to_string(k) + ")");
    if (p != k) {
      lu.row(p).swap(lu.row(k));
      x.row(p).swap(x.row(k));
    }
    for (Index i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      if (f == Complex(0.0)) continue;
      lu.row(i).tail(n - k) -= f * lu.row(k).tail(n - k);
      x.row(i) -= f * x.row(k);
    }
  }
  for (Index k = n - 1; k >= 0; --k) {
    for (Index j = k + 1; j < n; ++j) x.row(k) -= lu(k, j) * x.row(j);
    x.row(k) /= lu(k, k);
  }
  return x;
}

CVector solve(const CMatrix& a, const CVector& b, double tol) {
  return solve(a, CMatrix(b), tol).col(0);
}

CMatrix inverse(const CMatrix& a, double tol) {
  return solve(a, CMatrix(CMatrix::Identity(a.rows(), a.cols())), tol);
}

double min_pairwise_gap(const CVector& v) {
  double gap = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < v.size(); ++i)
    for (Index j = i + 1; j < v.size(); ++j) gap = std::min(gap, std::abs(v(i) - v(j)));
  return gap;
}

EigPair eig(const CMatrix& a, double tol) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "eig requires a square matrix");
  if (!a.allFinite()) throw Error(ErrorCode::NotConverged, "matrix has non-finite entries");

  Eigen::ComplexEigenSolver<CMatrix> solver(a, true);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NotConverged, "complex Schur iteration did not converge");

  EigPair out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  for (Index k = 0; k < out.vectors.cols(); ++k) {
    auto col = out.vectors.col(k);
    col.normalize();
    const double cutoff = 1e-8 * col.cwiseAbs().maxCoeff();
    for (Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) > cutoff) {
        col *= std::conj(col(i)) / std::abs(col(i));
        col(i) = std::abs(col(i));
        break;
      }
    }
  }
  out.min_gap = min_pairwise_gap(out.values);

  const double bound = tol * norm_inf(a);
  for (Index k = 0; k < out.values.size(); ++k) {
    const double residual =
        norm_inf(CVector(a * out.vectors.col(k) - out.values(k) * out.vectors.col(k)));
    if (residual > bound && residual > 0.0)
      throw Error(ErrorCode::NotConverged,
                  "eigenpair " + std::to_string(k) + " residual " + detail::num(residual) +
                      " exceeds bound " + detail::num(bound));
  }
  return out;
}

double condition_number(const CMatrix& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

CMatrix select_rows(const CMatrix& a, const IndexList& rows) {
  CMatrix out(idx(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(idx(i)) = a.row(idx(rows[i]));
  return out;
}

CMatrix select_cols(const CMatrix& a, const IndexList& cols) {
  CMatrix out(a.rows(), idx(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(idx(j)) = a.col(idx(cols[j]));
  return out;
}

CMatrix select(const CMatrix& a, const IndexList& rows, const IndexList& cols) {
  return select_cols(select_rows(a, rows), cols);
}

CVector select(const CVector& v, const IndexList& ids) {
  CVector out(idx(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) out(idx(i)) = v(idx(ids[i]));
  return out;
}

IndexList complement(const IndexList& ids, std::size_t n) {
  IndexList out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < ids.size() && ids[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace gsp
