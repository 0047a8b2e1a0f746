#include "tsg/alt_form.hpp"

#include <algorithm>
#include <sstream>

#include "tsg/error.hpp"
#include "tsg/linalg.hpp"

namespace tsg {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

void gen_tuples(int n, int k, int start, IndexTuple& cur, std::vector<IndexTuple>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    gen_tuples(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexTuple> increasing_tuples(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple cur;
  gen_tuples(n, k, 0, cur, out);
  return out;
}

std::size_t tuple_rank(const IndexTuple& tuple, int n) {
  const int k = static_cast<int>(tuple.size());
  std::size_t r = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < tuple[i]; ++v) r += binomial(n - 1 - v, k - 1 - i);
    prev = tuple[i];
  }
  return r;
}

int sort_with_sign(IndexTuple& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] == tuple[i]) return 0;
  return sign;
}

AltForm::AltForm(int algebra_dim, int degree) : dim_(algebra_dim), degree_(degree) {
  if (algebra_dim < 0 || degree < 0 || degree > algebra_dim)
    throw Error(ErrorKind::DimensionMismatch,
                "form degree " + std::to_string(degree) + " on a " +
                    std::to_string(algebra_dim) + "-dimensional algebra");
}

AltForm AltForm::from_matrix(const RatMatrix& m) {
  if (!is_skew_symmetric(m))
    throw Error(ErrorKind::NotSkewSymmetric, "2-form Gram matrix must be skew");
  const int n = static_cast<int>(m.rows());
  AltForm f(n, n >= 2 ? 2 : 0);
  if (n < 2) return f;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.set({i, j}, m(i, j));
  return f;
}

AltForm AltForm::dual(int algebra_dim, int index) {
  AltForm f(algebra_dim, 1);
  f.set({index}, Rational(1));
  return f;
}

void AltForm::check_tuple(const IndexTuple& tuple) const {
  if (static_cast<int>(tuple.size()) != degree_)
    throw Error(ErrorKind::DimensionMismatch, "tuple length differs from form degree");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= dim_)
      throw Error(ErrorKind::DimensionMismatch, "form index out of range");
    if (i > 0 && tuple[i - 1] >= tuple[i])
      throw Error(ErrorKind::MalformedInput, "form tuple must be strictly increasing");
  }
}

void AltForm::set(const IndexTuple& tuple, const Rational& value) {
  check_tuple(tuple);
  if (sgn(value) == 0)
    coeffs_.erase(tuple);
  else
    coeffs_[tuple] = value;
}

void AltForm::add(const IndexTuple& tuple, const Rational& value) {
  check_tuple(tuple);
  if (sgn(value) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(tuple, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

Rational AltForm::evaluate(const IndexTuple& tuple) const {
  IndexTuple t = tuple;
  const int sign = sort_with_sign(t);
  if (sign == 0) return 0;
  auto it = coeffs_.find(t);
  if (it == coeffs_.end()) return 0;
  return sign > 0 ? it->second : Rational(-it->second);
}

Rational AltForm::evaluate_vectors(const std::vector<RatVector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw Error(ErrorKind::DimensionMismatch, "wrong number of arguments for form");
  Rational total = 0;
  for (const auto& [tuple, c] : coeffs_) {
    RatMatrix minor = zero_matrix(degree_, degree_);
    for (int r = 0; r < degree_; ++r)
      for (int col = 0; col < degree_; ++col) minor(r, col) = vectors[col][tuple[r]];
    total += c * determinant(minor);
  }
  return total;
}

RatMatrix AltForm::matrix() const {
  if (degree_ != 2) throw Error(ErrorKind::DimensionMismatch, "Gram matrix needs a 2-form");
  RatMatrix m = zero_matrix(dim_, dim_);
  for (const auto& [t, c] : coeffs_) {
    m(t[0], t[1]) = c;
    m(t[1], t[0]) = -c;
  }
  return m;
}

AltForm& AltForm::operator+=(const AltForm& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw Error(ErrorKind::DimensionMismatch, "adding forms of different shape");
  for (const auto& [t, c] : other.coeffs_) add(t, c);
  return *this;
}

AltForm operator*(const Rational& c, const AltForm& f) {
  AltForm out(f.dim_, f.degree_);
  if (sgn(c) == 0) return out;
  for (const auto& [t, v] : f.coeffs_) out.coeffs_[t] = c * v;
  return out;
}

std::string AltForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : coeffs_) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (t.empty()) {
      os << format_rational(mag);
      continue;
    }
    if (mag != 1) os << format_rational(mag) << "*";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "^" : "") << "e" << (t[i] + 1);
  }
  return os.str();
}

}  // namespace tsg
