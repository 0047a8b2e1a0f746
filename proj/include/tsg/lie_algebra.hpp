#pragma once

#include <string>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/error.hpp"
#include "tsg/matrix.hpp"

namespace tsg {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c^k_ij e_k. Only i < j is stored; the rest follows by
/// antisymmetry. Indices are 0-based in the API and 1-based in files and
/// reports.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim, std::vector<std::string> basis_names = {});

  int dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// [e_i, e_j] += c e_k. Passing i > j adds -c to [e_j, e_i]; i == j throws.
  void add_bracket(int i, int j, int k, const Rational& c);

  /// c^k_ij with full antisymmetry.
  Rational structure_constant(int i, int j, int k) const;
  /// Coordinates of [e_i, e_j].
  RatVector bracket_basis(int i, int j) const;
  /// Bracket of two coordinate vectors.
  RatVector bracket(const RatVector& x, const RatVector& y) const;

  /// Every nonzero bracket as (i, j, k, c) with i < j (0-based).
  struct Entry {
    int i, j, k;
    Rational c;
  };
  std::vector<Entry> entries() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t pair_index(int i, int j) const;

  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<RatVector> c_;  // one coordinate vector per pair i < j
};

/// Square matrix acting on basis coordinates; column j is the image of e_j.
using LinearMap = RatMatrix;

/// Jacobi identity checked exactly on every i < j < k; the witness is the
/// first failing (i, j, k, l), 1-based.
Verdict validate(const LieAlgebra& g);

/// Named algebras: "abelian(n)", "aff(1)", "heisenberg3", "h3_plus_R",
/// "so(3)", "sl(2)", "so3_plus_so3", "oscillator4". Throws UnknownName.
///
/// Bracket conventions:
///   aff(1)       [e1,e2] = e2
///   heisenberg3  [e1,e2] = e3
///   h3_plus_R    [e1,e2] = e3, e4 central
///   so(3)        [e_i,e_j] = eps_ijk e_k
///   sl(2)        e1 = h, e2 = e, e3 = f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
///   so3_plus_so3 two commuting copies of so(3) on e1..e3 and e4..e6
///   oscillator4  [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e4
LieAlgebra catalog(const std::string& name);

/// The eight names used when a check runs "over the whole catalog"
/// (abelian(n) appears once, as abelian(3)).
std::vector<std::string> catalog_names();

/// Direct sum g + h with the basis of g first.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// Basis of Der(g): all D with D[x,y] = [Dx,y] + [x,Dy].
std::vector<LinearMap> derivations(const LieAlgebra& g);

/// Basis of derivations that also satisfy beta(Dx,y) + beta(x,Dy) = 0.
/// Throws DegenerateForm when beta has zero Pfaffian.
std::vector<LinearMap> symplectic_derivations(const LieAlgebra& g, const AltForm& beta);

/// Membership of A in Aut(g, beta): A[x,y] = [Ax,Ay], beta(Ax,Ay) = beta(x,y)
/// on all basis pairs, and det A != 0.
Verdict automorphism_check(const LieAlgebra& g, const AltForm& beta, const LinearMap& a);

/// Residual D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] for every i < j, flattened.
RatVector derivation_defect(const LieAlgebra& g, const LinearMap& d);

/// Span of all brackets, i.e. the derived algebra [g, g], as a matrix whose
/// columns are the bracket vectors.
RatMatrix derived_algebra_generators(const LieAlgebra& g);

}  // namespace tsg
