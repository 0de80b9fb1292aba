#include "srcloc/sparse.hpp"

#include <cmath>

#include "srcloc/rng.hpp"

namespace srcloc {

void CsrMatrix::multiply(const double* x, double* y) const {
  for (int i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) acc += val[k] * x[col_idx[k]];
    y[i] = acc;
  }
}

Vec CsrMatrix::multiply(const Vec& x) const {
  Vec y(rows, 0.0);
  multiply(x.data(), y.data());
  return y;
}

Mat CsrMatrix::multiply_dense(const Mat& x) const {
  Mat y(rows, x.cols);
  const int m = x.cols;
  for (int i = 0; i < rows; ++i) {
    double* yi = y.data() + static_cast<std::size_t>(i) * m;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      const double w = val[k];
      const double* xj = x.data() + static_cast<std::size_t>(col_idx[k]) * m;
      for (int c = 0; c < m; ++c) yi[c] += w * xj[c];
    }
  }
  return y;
}

Mat CsrMatrix::multiply_dense_transposed(const Mat& x) const {
  Mat y(cols, x.cols);
  const int m = x.cols;
  for (int i = 0; i < rows; ++i) {
    const double* xi = x.data() + static_cast<std::size_t>(i) * m;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      const double w = val[k];
      double* yj = y.data() + static_cast<std::size_t>(col_idx[k]) * m;
      for (int c = 0; c < m; ++c) yj[c] += w * xi[c];
    }
  }
  return y;
}

CsrMatrix csr_from_rows(int rows, int cols, const std::vector<std::vector<std::pair<int, double>>>& row_entries) {
  CsrMatrix a;
  a.rows = rows;
  a.cols = cols;
  a.row_ptr.resize(rows + 1, 0);
  std::size_t nnz = 0;
  for (int i = 0; i < rows; ++i) nnz += row_entries[i].size();
  a.col_idx.reserve(nnz);
  a.val.reserve(nnz);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [j, w] : row_entries[i]) {
      a.col_idx.push_back(j);
      a.val.push_back(w);
    }
    a.row_ptr[i + 1] = static_cast<int>(a.col_idx.size());
  }
  return a;
}

double spectral_radius_estimate(const CsrMatrix& a, int iters, std::uint64_t seed) {
  Rng rng(seed);
  Vec x(a.rows);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  for (auto& v : x) v /= norm;

  double lambda = 0.0;
  Vec y(a.rows);
  for (int it = 0; it < iters; ++it) {
    a.multiply(x.data(), y.data());
    double yn = 0.0;
    for (double v : y) yn += v * v;
    yn = std::sqrt(yn);
    if (yn == 0.0) return 0.0;
    lambda = yn;  // |x| = 1, so |Ax| estimates the dominant eigenvalue
    for (int i = 0; i < a.rows; ++i) x[i] = y[i] / yn;
  }
  return lambda;
}

}  // namespace srcloc
