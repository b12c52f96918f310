#ifndef WEYL_MATRIX_HPP
#define WEYL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "weyl/scalar.hpp"

namespace weyl {

// Dense matrix of exact rationals; just enough linear algebra for the
// classification and coordinate-search routines.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Mat identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Mat transpose() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

std::size_t rank(Mat m);  // exact Gaussian elimination

Scalar det(const Mat& m);  // square matrices

// One exact solution of A x = b with free variables pinned to zero;
// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& a,
                                         const std::vector<Scalar>& b);

// Basis of the null space of A, free variables enumerated in column order.
std::vector<std::vector<Scalar>> null_space(const Mat& a);

}  // namespace weyl

#endif
