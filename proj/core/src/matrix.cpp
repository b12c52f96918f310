#include "weyl/matrix.hpp"

#include <cassert>

namespace weyl {

Mat Mat::identity(std::size_t k) {
  Mat m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  assert(a.cols_ == b.rows_);
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        swap(m.at(pivot, j), m.at(row, j));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Mat m) { return echelon(m).size(); }

Scalar det(const Mat& m) {
  assert(m.rows() == m.cols());
  Mat w = m;
  Scalar d(1);
  for (std::size_t col = 0; col < w.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < w.rows() && is_zero(w.at(pivot, col))) ++pivot;
    if (pivot == w.rows()) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < w.cols(); ++j)
        swap(w.at(pivot, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    Scalar inv = Scalar(1) / w.at(col, col);
    for (std::size_t i = col + 1; i < w.rows(); ++i) {
      if (is_zero(w.at(i, col))) continue;
      Scalar f = w.at(i, col) * inv;
      for (std::size_t j = col; j < w.cols(); ++j)
        w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

std::optional<std::vector<Scalar>> solve(const Mat& a,
                                         const std::vector<Scalar>& b) {
  assert(b.size() == a.rows());
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;  // pivot in the constant column: inconsistent
  std::vector<Scalar> x(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::vector<std::vector<Scalar>> null_space(const Mat& a) {
  Mat w = a;
  std::vector<std::size_t> pivots = echelon(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -w.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace weyl
