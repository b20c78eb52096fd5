#include "opquad/bigmatrix.hpp"

#include <stdexcept>

namespace opquad {

BigMatrix::BigMatrix(size_t rows, size_t cols, mpfr_prec_t prec)
    : rows_(rows), cols_(cols), prec_(prec) {
  a_.assign(rows * cols, BigFloat(0.0, prec));
}

BigMatrix BigMatrix::identity(size_t n, mpfr_prec_t prec) {
  BigMatrix m(n, n, prec);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = BigFloat(1.0, prec);
  return m;
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix r(cols_, rows_, prec_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

BigMatrix BigMatrix::operator+(const BigMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("BigMatrix: size mismatch in addition");
  BigMatrix r(rows_, cols_, std::max(prec_, o.prec_));
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

BigMatrix BigMatrix::operator-(const BigMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("BigMatrix: size mismatch in subtraction");
  BigMatrix r(rows_, cols_, std::max(prec_, o.prec_));
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("BigMatrix: size mismatch in product");
  const mpfr_prec_t p = std::max(prec_, o.prec_);
  BigMatrix r(rows_, o.cols_, p);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < o.cols_; ++j) {
      BigFloat s(0.0, p);
      for (size_t k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(s);
    }
  }
  return r;
}

BigMatrix BigMatrix::scaled(const BigFloat& c) const {
  BigMatrix r(rows_, cols_, prec_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

BigMatrix BigMatrix::symmetrized() const {
  if (rows_ != cols_)
    throw std::invalid_argument("BigMatrix: symmetrized requires a square matrix");
  const BigFloat half(0.5, prec_);
  BigMatrix r(rows_, cols_, prec_);
  for (size_t i = 0; i < rows_; ++i) {
    r.at(i, i) = at(i, i);
    for (size_t j = i + 1; j < cols_; ++j) {
      BigFloat m = (at(i, j) + at(j, i)) * half;
      r.at(i, j) = m;
      r.at(j, i) = std::move(m);
    }
  }
  return r;
}

BigFloat BigMatrix::frobenius_norm() const {
  BigFloat s(0.0, prec_);
  for (const auto& x : a_) s += x * x;
  return s.sqrt();
}

BigFloat BigMatrix::max_asymmetry() const {
  BigFloat m(0.0, prec_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j) {
      BigFloat d = (at(i, j) - at(j, i)).abs();
      if (m < d) m = std::move(d);
    }
  return m;
}

std::vector<double> BigMatrix::to_double() const {
  std::vector<double> out(a_.size());
  for (size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].to_double();
  return out;
}

}  // namespace opquad
