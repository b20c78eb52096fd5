#ifndef OPQUAD_BIGMATRIX_HPP
#define OPQUAD_BIGMATRIX_HPP

#include <cstddef>
#include <vector>

#include "opquad/bigfloat.hpp"

namespace opquad {

/// Dense matrix of BigFloat entries, row-major. All entries share one
/// precision, fixed at construction.
class BigMatrix {
 public:
  BigMatrix() : rows_(0), cols_(0), prec_(kDefaultPrecision) {}
  BigMatrix(size_t rows, size_t cols, mpfr_prec_t prec);

  static BigMatrix identity(size_t n, mpfr_prec_t prec);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  mpfr_prec_t precision() const { return prec_; }

  BigFloat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const BigFloat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  BigMatrix transpose() const;
  BigMatrix operator+(const BigMatrix& o) const;
  BigMatrix operator-(const BigMatrix& o) const;
  BigMatrix operator*(const BigMatrix& o) const;
  BigMatrix scaled(const BigFloat& c) const;

  /// (A + Aᵀ)/2; requires a square matrix.
  BigMatrix symmetrized() const;

  BigFloat frobenius_norm() const;
  /// max_ij |a_ij - a_ji|
  BigFloat max_asymmetry() const;

  std::vector<double> to_double() const;  // row-major

 private:
  size_t rows_, cols_;
  mpfr_prec_t prec_;
  std::vector<BigFloat> a_;
};

}  // namespace opquad

#endif
