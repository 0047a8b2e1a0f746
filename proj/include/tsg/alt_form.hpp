#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsg/matrix.hpp"
#include "tsg/rational.hpp"

namespace tsg {

using IndexTuple = std::vector<int>;

/// Alternating k-form on an n-dimensional Lie algebra, stored by its values
/// on increasing tuples of basis vectors (0-based). e^1 ^ e^2 takes the value
/// 1 on (e_1, e_2).
class AltForm {
 public:
  AltForm() = default;
  AltForm(int algebra_dim, int degree);

  /// 2-form with the given skew matrix as Gram matrix. Throws
  /// NotSkewSymmetric.
  static AltForm from_matrix(const RatMatrix& m);
  /// Dual basis 1-form e^i.
  static AltForm dual(int algebra_dim, int index);

  int algebra_dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  const std::map<IndexTuple, Rational>& coeffs() const noexcept { return coeffs_; }

  /// Sets the value on a strictly increasing tuple.
  void set(const IndexTuple& tuple, const Rational& value);
  /// Adds to the value on a strictly increasing tuple.
  void add(const IndexTuple& tuple, const Rational& value);

  /// Value on an arbitrary tuple of basis indices, using the alternating rule.
  Rational evaluate(const IndexTuple& tuple) const;
  /// Value on arbitrary coordinate vectors (multilinear extension).
  Rational evaluate_vectors(const std::vector<RatVector>& vectors) const;

  /// Gram matrix of a 2-form.
  RatMatrix matrix() const;

  bool is_zero() const noexcept { return coeffs_.empty(); }

  AltForm& operator+=(const AltForm& other);
  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator*(const Rational& c, const AltForm& f);
  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "e1^e3 + 2*e2^e4"; "0" for the zero form.
  std::string to_string() const;

 private:
  void check_tuple(const IndexTuple& tuple) const;

  int dim_ = 0;
  int degree_ = 0;
  std::map<IndexTuple, Rational> coeffs_;
};

/// All strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> increasing_tuples(int n, int k);

/// Position of an increasing tuple in `increasing_tuples(n, k)`.
std::size_t tuple_rank(const IndexTuple& tuple, int n);

/// Sorts `tuple` in place, returning the permutation sign, or 0 when an index
/// repeats.
int sort_with_sign(IndexTuple& tuple);

}  // namespace tsg
