#include "tsg/matrix.hpp"

namespace tsg {

RatMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, cols, Rational(0));
}

RatMatrix identity_matrix(std::size_t n) {
  return RatMatrix::identity(n, Rational(0), Rational(1));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix out = zero_matrix(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  RatVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

bool is_zero(const RatMatrix& m) {
  for (const auto& e : m.entries())
    if (sgn(e) != 0) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& e : v)
    if (sgn(e) != 0) return false;
  return true;
}

bool is_skew_symmetric(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(m(i, i)) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

}  // namespace tsg
