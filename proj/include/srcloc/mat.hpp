#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace srcloc {

// Node-indexed column vector.
using Vec = std::vector<double>;

// Dense row-major matrix.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
  double* data() { return v.data(); }
  const double* data() const { return v.data(); }
  std::size_t size() const { return v.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  static Mat zeros_like(const Mat& m) { return Mat(m.rows, m.cols); }
};

inline Mat col_mat(const Vec& x) {
  Mat m(static_cast<int>(x.size()), 1);
  m.v = x;
  return m;
}

inline Vec to_vec(const Mat& m) {
  assert(m.cols == 1);
  return m.v;
}

}  // namespace srcloc
