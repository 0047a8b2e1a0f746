#pragma once

#include <optional>
#include <vector>

#include "tsg/matrix.hpp"
#include "tsg/poly.hpp"

namespace tsg {

using PolyMatrix = DenseMatrix<Poly>;

/// Row-reduced echelon form of `m` with its pivot columns.
struct Echelon {
  RatMatrix reduced;                 // rank rows, leading 1 in each pivot column
  std::vector<std::size_t> pivots;   // increasing pivot column indices
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free forward elimination on integer-scaled rows, followed by
/// normalisation to reduced echelon form.
Echelon row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column f (increasing f), with
/// v_f = 1, v_g = 0 for the other free columns, so the output is
/// deterministic.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Some solution of m x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational determinant(const RatMatrix& m);

/// Inverse, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

namespace detail {

inline bool entry_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool entry_is_zero(const Poly& p) { return p.is_zero(); }
inline bool entry_is_zero(double) { return false; }

template <class T>
T pfaffian_rec(const DenseMatrix<T>& m, std::vector<std::size_t>& idx,
               const T& zero, const T& one) {
  if (idx.empty()) return one;
  const std::size_t first = idx.front();
  T total = zero;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const T& a = m(first, idx[k]);
    if (entry_is_zero(a)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != k) rest.push_back(idx[q]);
    T sub = pfaffian_rec(m, rest, zero, one);
    if (k % 2 == 1)
      total = total + a * sub;
    else
      total = total - a * sub;
  }
  return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row. The caller
/// guarantees an even-sized square matrix; no skew check is performed.
template <class T>
T pfaffian_expand(const DenseMatrix<T>& m, const T& zero, const T& one) {
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m, idx, zero, one);
}

/// Exact Pfaffian. Throws OddDimension or NotSkewSymmetric.
Rational pfaffian(const RatMatrix& m);

/// Polynomial Pfaffian; entries share a variable count. A vanishing result
/// is returned as the zero polynomial. Throws OddDimension or
/// NotSkewSymmetric.
Poly poly_pfaffian(const PolyMatrix& m);

/// Skew-symmetric check on polynomial matrices.
bool is_skew_symmetric(const PolyMatrix& m);

}  // namespace tsg
