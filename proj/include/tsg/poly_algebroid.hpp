#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"
#include "tsg/linalg.hpp"
#include "tsg/poly.hpp"

namespace tsg {

/// Polynomial vector field on an affine chart R^n: sum_i V^i d/dx_i.
struct PolyVectorField {
  std::vector<Poly> components;

  std::size_t chart_dim() const noexcept { return components.size(); }
  static PolyVectorField zero(std::size_t n);
  /// V(f) = sum_i V^i df/dx_i.
  Poly apply(const Poly& f) const;
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;
};

/// [V, W]^i = V(W^i) - W(V^i).
PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);

/// A section of a rank-r algebroid: r polynomial coefficients on the basis
/// sections eps_1..eps_r.
using Section = std::vector<Poly>;

/// Rank-r Lie algebroid over an affine chart with polynomial data: anchor
/// rows rho(eps_a) and structure functions [eps_a, eps_b] = sum_c f^c_ab eps_c.
class PolyAlgebroid {
 public:
  PolyAlgebroid() = default;
  PolyAlgebroid(std::size_t rank, std::size_t chart_dim);

  /// Tangent algebroid of R^n: identity anchor, zero brackets.
  static PolyAlgebroid tangent(std::size_t n);
  /// g as an algebroid over a point (chart dimension 0).
  static PolyAlgebroid point(const LieAlgebra& g);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t chart_dim() const noexcept { return chart_dim_; }

  const Poly& anchor(std::size_t a, std::size_t i) const { return anchor_(a, i); }
  void set_anchor(std::size_t a, std::size_t i, Poly p);
  PolyVectorField anchor_field(std::size_t a) const;

  /// Coefficients of [eps_a, eps_b], antisymmetric in (a, b).
  Section structure(std::size_t a, std::size_t b) const;
  /// [eps_a, eps_b] += p eps_c, for a != b.
  void add_structure(std::size_t a, std::size_t b, std::size_t c, const Poly& p);

  Poly zero() const { return Poly(chart_dim_); }
  Poly one() const { return Poly::constant(chart_dim_, Rational(1)); }
  Section basis_section(std::size_t a) const;

  /// rho(X) as a vector field.
  PolyVectorField anchor_of(const Section& x) const;
  /// General section bracket, extended from basis sections by the Leibniz
  /// rule: [X, Y] = sum X^a Y^b [eps_a, eps_b] + rho(X)(Y^b) eps_b - rho(Y)(X^a) eps_a.
  Section bracket(const Section& x, const Section& y) const;

 private:
  std::size_t pair_index(std::size_t a, std::size_t b) const;

  std::size_t rank_ = 0;
  std::size_t chart_dim_ = 0;
  PolyMatrix anchor_;
  std::vector<Section> structure_;  // per pair a < b
};

/// Alternating k-form on an algebroid with polynomial coefficients, stored on
/// increasing tuples of basis sections.
class PolyAlgebroidForm {
 public:
  PolyAlgebroidForm() = default;
  PolyAlgebroidForm(std::size_t rank, std::size_t chart_dim, int degree);

  /// Promotes a constant form on a Lie algebra (rank = algebra_dim).
  static PolyAlgebroidForm from_alt_form(const AltForm& f, std::size_t chart_dim);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t chart_dim() const noexcept { return chart_dim_; }
  int degree() const noexcept { return degree_; }
  const std::map<IndexTuple, Poly>& coeffs() const noexcept { return coeffs_; }

  void set(const IndexTuple& tuple, const Poly& p);
  Poly evaluate(const IndexTuple& tuple) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  PolyMatrix matrix() const;

  friend bool operator==(const PolyAlgebroidForm&, const PolyAlgebroidForm&) = default;
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::size_t chart_dim_ = 0;
  int degree_ = 0;
  std::map<IndexTuple, Poly> coeffs_;
};

enum class MatrixActionKind {
  Linear,  // N = n, p -> g p
  Affine,  // N = n + 1, p -> first n entries of g (p, 1)
};

/// Vector fields x_M(p) = d/dt exp(-t x) p at t = 0, i.e. x_M(p) = -x p, for
/// each Lie algebra basis matrix x.
std::vector<PolyVectorField> induced_action_fields(const std::vector<RatMatrix>& basis,
                                                   std::size_t chart_dim, MatrixActionKind kind);

/// Action algebroid g x R^n. Throws NotAnAction (witness (a, b) 1-based,
/// detail = defect polynomial) unless [x_M, y_M] = [x, y]_M on basis pairs.
PolyAlgebroid action_algebroid(const LieAlgebra& g, const std::vector<PolyVectorField>& action);

/// d_A on basis sections, both sums (anchor derivatives and brackets).
PolyAlgebroidForm algebroid_differential(const PolyAlgebroid& a, const PolyAlgebroidForm& form);

/// Anchor homomorphism and Jacobi identity as exact polynomial identities.
Verdict algebroid_validate(const PolyAlgebroid& a);

struct QFAlgebroidReport {
  Verdict verdict;
  bool closed = false;
  Poly pfaffian;
  bool generically_nondegenerate = false;
  std::vector<Rational> sample_values;     // Pfaffian at each sample point
  std::vector<std::size_t> sample_failures;  // indices where it vanishes
};

/// Closedness exactly, nondegeneracy generically plus at sample points.
/// Throws OddRank for odd rank.
QFAlgebroidReport qf_algebroid_check(const PolyAlgebroid& a, const PolyAlgebroidForm& omega,
                                     const std::vector<std::vector<Rational>>& sample_points);

/// phi: A -> A' given by the r' x r matrix with phi(eps_a) = sum phi(a', a) eps'_a'.
Verdict algebroid_morphism_check(const PolyAlgebroid& a, const PolyAlgebroid& a_prime,
                                 const PolyMatrix& phi);

}  // namespace tsg
