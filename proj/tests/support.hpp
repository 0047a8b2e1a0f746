#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"
#include "tsg/linalg.hpp"
#include "tsg/poly.hpp"

namespace tsg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// p/q with |p| <= 9, q in 1..5.
  Rational rational() { return make_rational(integer(-9, 9), integer(1, 5)); }

  RatMatrix skew(std::size_t n) {
    RatMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = integer(0, 3) == 0 ? Rational(0) : rational();
        m(j, i) = -m(i, j);
      }
    return m;
  }

  RatMatrix matrix(std::size_t r, std::size_t c, int zero_weight = 1) {
    RatMatrix m = zero_matrix(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(0, zero_weight) == 0 ? Rational(0) : rational();
    return m;
  }

  /// Up to `terms` monomials of total degree <= max_degree.
  Poly poly(std::size_t vars, int terms, int max_degree) {
    Poly p(vars);
    const int count = static_cast<int>(integer(0, terms));
    for (int t = 0; t < count; ++t) {
      Exponent e(vars, 0);
      int budget = static_cast<int>(integer(0, max_degree));
      for (std::size_t v = 0; v < vars && budget > 0; ++v) {
        const int k = static_cast<int>(integer(0, budget));
        e[v] = static_cast<std::uint32_t>(k);
        budget -= k;
      }
      std::shuffle(e.begin(), e.end(), rng_);
      p.add_term(e, rational());
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Pfaffian as a signed sum over perfect matchings, sign = (-1)^crossings.
inline Rational matching_pfaffian(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n % 2) return 0;
  Rational total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      int crossings = 0;
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          const auto [i, j] = pairs[a];
          const auto [k, l] = pairs[b];
          if (i < k && k < j && j < l) ++crossings;
        }
      Rational prod = 1;
      for (const auto& [i, j] : pairs) prod *= m(i, j);
      total += crossings % 2 ? -prod : prod;
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return total;
}

/// Leibniz determinant (n! terms).
inline Rational leibniz_determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational prod = 1;
    for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= m(i, perm[i]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank by plain Gaussian elimination with rational pivots.
inline std::size_t naive_rank(RatMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Matrix of d on Lambda^k built as an antiderivation from
/// d e^m = -sum_{i<j} c^m_ij e^i ^ e^j, independently of the evaluation
/// formula used by the library.
inline RatMatrix antiderivation_matrix(const LieAlgebra& g, int k) {
  const int n = g.dim();
  const auto src = increasing_tuples(n, k);
  const auto dst = increasing_tuples(n, k + 1);
  RatMatrix out = zero_matrix(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const IndexTuple& t = src[col];
    for (int r = 0; r < k; ++r) {
      const int sign_r = r % 2 ? -1 : 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Rational c = g.structure_constant(i, j, t[r]);
          if (sgn(c) == 0) continue;
          IndexTuple word;
          for (int q = 0; q < r; ++q) word.push_back(t[q]);
          word.push_back(i);
          word.push_back(j);
          for (int q = r + 1; q < k; ++q) word.push_back(t[q]);
          const int s = sort_with_sign(word);
          if (s == 0) continue;
          out(tuple_rank(word, n), col) += Rational(-sign_r * s) * c;
        }
    }
  }
  return out;
}

inline bool dd_zero(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() == 0 || b.rows() == 0 || a.cols() != b.rows()) return true;
  return is_zero(a * b);
}

}  // namespace tsg::testing
