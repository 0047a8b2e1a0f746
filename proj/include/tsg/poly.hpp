#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/rational.hpp"

namespace tsg {

using Exponent = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent tuples of length `num_vars()`; zero
/// coefficients are never stored, so the zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const Rational& c);
  static Poly variable(std::size_t num_vars, std::size_t var);
  static Poly monomial(const Exponent& exps, const Rational& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  std::uint32_t total_degree() const;

  /// Adds c * x^exps to the polynomial.
  void add_term(const Exponent& exps, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Human-readable form, variables named `<prefix>1..<prefix>n`.
  std::string to_string(std::string_view prefix = "x") const;

 private:
  std::size_t num_vars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Formal partial derivative with respect to variable `var` (0-based).
Poly poly_diff(const Poly& p, std::size_t var);

/// Parses expressions such as "2*x1^2*x2 - 3/4*x3 + 1" over `num_vars`
/// variables named `<prefix>1..<prefix>n`. Supports + - * ^ and parentheses.
Poly parse_poly(std::string_view text, std::size_t num_vars,
                std::string_view prefix = "x");

}  // namespace tsg
