#include "tsg/linalg.hpp"

#include <utility>

namespace tsg {

namespace {

// Scales a rational row to a primitive integer row (content removed).
std::vector<Integer> integer_row(std::span<const Rational> row) {
  Integer lcm = 1;
  for (const auto& r : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& r : row) {
    Integer v = r.get_num() * (lcm / r.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row) v /= g;
}

}  // namespace

Echelon row_echelon(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) a.push_back(integer_row(m.row(r)));

  Echelon out;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r)
      if (sgn(a[r][c]) != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[prow], a[sel]);
    const Integer piv = a[prow][c];
    for (std::size_t r = prow + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Integer f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = piv * a[r][k] - f * a[prow][k];
      make_primitive(a[r]);
    }
    out.pivots.push_back(c);
    ++prow;
  }

  // Back substitution in exact rationals.
  const std::size_t rk = out.pivots.size();
  out.reduced = zero_matrix(rk, cols);
  for (std::size_t r = 0; r < rk; ++r) {
    const Integer& piv = a[r][out.pivots[r]];
    for (std::size_t k = 0; k < cols; ++k) {
      Rational v(a[r][k], piv);
      v.canonicalize();
      out.reduced(r, k) = v;
    }
  }
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = out.pivots[r];
    for (std::size_t up = 0; up < r; ++up) {
      const Rational f = out.reduced(up, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t k = pc; k < cols; ++k) out.reduced(up, k) -= f * out.reduced(r, k);
    }
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).rank(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  RatMatrix aug = zero_matrix(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t r = c; r < n; ++r)
      if (sgn(a(r, c)) != 0) {
        sel = r;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(sel, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = zero_matrix(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv = zero_matrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Rational pfaffian(const RatMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw Error(ErrorKind::OddDimension, "Pfaffian needs an even square matrix");
  if (!is_skew_symmetric(m))
    throw Error(ErrorKind::NotSkewSymmetric, "Pfaffian of a non-skew matrix");
  return pfaffian_expand(m, Rational(0), Rational(1));
}

bool is_skew_symmetric(const PolyMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) + m(j, i)).is_zero()) return false;
  }
  return true;
}

Poly poly_pfaffian(const PolyMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw Error(ErrorKind::OddDimension, "Pfaffian needs an even square matrix");
  if (!is_skew_symmetric(m))
    throw Error(ErrorKind::NotSkewSymmetric, "Pfaffian of a non-skew matrix");
  const std::size_t nv = m.rows() == 0 ? 0 : m(0, 0).num_vars();
  return pfaffian_expand(m, Poly(nv), Poly::constant(nv, Rational(1)));
}

}  // namespace tsg
