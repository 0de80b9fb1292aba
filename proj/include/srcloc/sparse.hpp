#pragma once

#include <vector>

#include "srcloc/mat.hpp"

namespace srcloc {

// Compressed sparse row matrix. Column indices are sorted within each row,
// which fixes the summation order and keeps products bit-reproducible.
struct CsrMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ptr;  // size rows + 1
  std::vector<int> col_idx;
  std::vector<double> val;

  int nnz() const { return static_cast<int>(col_idx.size()); }

  // y = A x
  void multiply(const double* x, double* y) const;
  Vec multiply(const Vec& x) const;

  // Y = A X for dense row-major X (cols(A) x m)
  Mat multiply_dense(const Mat& x) const;
  // Y = A^T X, computed by row-wise scatter (no transposed copy)
  Mat multiply_dense_transposed(const Mat& x) const;
};

// Builds a CSR matrix from coordinate entries; entries for each row must be
// supplied column-sorted with no duplicates.
CsrMatrix csr_from_rows(int rows, int cols, const std::vector<std::vector<std::pair<int, double>>>& row_entries);

// Power-iteration estimate of the spectral radius (largest |eigenvalue|) of a
// symmetric matrix. Deterministic for a fixed seed.
double spectral_radius_estimate(const CsrMatrix& a, int iters = 200, std::uint64_t seed = 1);

}  // namespace srcloc
