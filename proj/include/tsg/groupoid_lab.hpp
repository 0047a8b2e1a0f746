#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"

namespace tsg {

// Floating-point realizations of t-symplectic groupoids over affine charts.
// Everything here samples; the algebraic modules stay exact.

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// A matrix Lie group: an exact basis of its Lie algebra inside gl(N) and a
/// membership predicate.
struct MatrixGroupModel {
  std::string name;
  std::size_t embed_dim = 0;
  std::vector<RatMatrix> lie_basis;
  double tolerance = 1e-9;
  std::function<bool(const Mat&, double)> membership;

  std::size_t dim() const noexcept { return lie_basis.size(); }
  /// Structure constants of the basis, computed exactly. Throws
  /// DegenerateInput when the basis is dependent or not bracket-closed.
  LieAlgebra algebra() const;
  std::vector<Mat> basis_double() const;
  bool contains(const Mat& g) const;
  /// exp(sum_a c_a X_a).
  Mat exp_of(const Vec& coeffs) const;
};

/// "aff(1)" ([[a,b],[0,1]], a > 0), "abelian(n)" (unipotent translations in
/// dimension n+1), "heisenberg3", "h3_plus_R" (blockdiag(unipotent 3x3, e^w)),
/// "so(3)" ((L_a)_jk = -eps_ajk), "sl(2)" (h, e, f). Throws UnknownName.
MatrixGroupModel matrix_group(const std::string& name);
std::vector<std::string> matrix_group_names();

enum class RealizationKind { Action, Pair, MGM };
enum class GroupAction {
  Trivial,  // g . p = p
  Linear,   // g . p = g p, N = n
  Affine,   // g . p = first n entries of g (p, 1), N = n + 1
};

std::string_view to_string(RealizationKind k);
std::string_view to_string(GroupAction a);

/// Arrow target <- source with a group label. Action groupoid arrows are
/// (g, p) with target p and source g^-1 p; pair arrows leave g empty;
/// M x G x M arrows are (q, g, p).
struct Arrow {
  Vec target;
  Mat g;
  Vec source;
};

/// Tangent vector at an arrow lying in ker t_*. For the action groupoid ds is
/// determined by dg.
struct FiberVector {
  Mat dg;
  Vec ds;
};

class GroupoidRealization {
 public:
  static GroupoidRealization action(MatrixGroupModel group, std::size_t chart_dim, GroupAction act);
  static GroupoidRealization pair(std::size_t chart_dim);
  static GroupoidRealization mgm(std::size_t chart_dim, MatrixGroupModel group);

  RealizationKind kind() const noexcept { return kind_; }
  GroupAction group_action() const noexcept { return act_; }
  std::size_t chart_dim() const noexcept { return n_; }
  const MatrixGroupModel* group() const noexcept { return group_ ? &*group_ : nullptr; }
  std::size_t group_dim() const noexcept { return group_ ? group_->dim() : 0; }

  std::size_t base_dim() const noexcept { return n_; }
  std::size_t total_dim() const noexcept;
  /// Dimension of each t-fiber, equal to the rank of the Lie algebroid.
  std::size_t fiber_dim() const noexcept { return total_dim() - base_dim(); }
  /// Exact Lie algebra whose 2-cocycles define t-symplectic forms: g,
  /// abelian(n) or g + abelian(n).
  const LieAlgebra& fiber_algebra() const noexcept { return fiber_algebra_; }

  Vec act(const Mat& g, const Vec& p) const;

  /// Action groupoid arrow (g, p), target p.
  Arrow action_arrow(const Mat& g, const Vec& target) const;
  /// Pair or M x G x M arrow.
  Arrow arrow(const Vec& target, const Mat& g, const Vec& source) const;
  Arrow unit(const Vec& p) const;
  Arrow inverse(const Arrow& a) const;
  /// a b, defined when s(a) = t(b) to within 1e-9; throws DimensionMismatch
  /// otherwise.
  Arrow multiply(const Arrow& a, const Arrow& b) const;
  /// Max-norm distance between arrows.
  double distance(const Arrow& a, const Arrow& b) const;
  bool contains(const Arrow& a) const;

  /// Tangent vector (dg, ds) at `a`; ds is ignored (derived) for the
  /// action groupoid.
  FiberVector tangent(const Arrow& a, const Mat& dg, const Vec& ds) const;
  /// Value at `a` of the left-invariant field extending the algebroid vector
  /// with coordinates `coords`.
  FiberVector left_invariant(const Arrow& a, const Vec& coords) const;
  /// Value at `a` of the right-invariant frame X_a g (and e_i on the base part).
  FiberVector right_frame(const Arrow& a, std::size_t index) const;
  /// (l_a)_* : T t^-1(s(a)) at b -> T t^-1(t(a)) at ab.
  FiberVector push_left(const Arrow& a, const FiberVector& u) const;
  /// Algebroid coordinates of a fiber vector at a unit arrow.
  Vec unit_coords(const FiberVector& u) const;

  Vec sample_base(std::mt19937_64& rng) const;
  Mat sample_group(std::mt19937_64& rng) const;
  /// Random arrow, with the given target when supplied.
  Arrow sample_arrow(std::mt19937_64& rng, const Vec* target = nullptr) const;
  Vec sample_coords(std::mt19937_64& rng) const;

  /// Associativity, unit, inverse and source/target compatibility on seeded
  /// composable triples.
  Verdict self_test(std::uint64_t seed, std::size_t count, double tol = 1e-10) const;

  /// First coordinate of the arrow in its native chart: g(0,0) for action
  /// groupoids, the target's first entry otherwise.
  double native_first_coordinate(const Arrow& a) const;

 private:
  GroupoidRealization() = default;
  void finish();
  Vec lie_coords(const Mat& x) const;
  Vec differential_source(const Arrow& a, const Mat& dg) const;

  RealizationKind kind_ = RealizationKind::Pair;
  GroupAction act_ = GroupAction::Trivial;
  std::size_t n_ = 0;
  std::optional<MatrixGroupModel> group_;
  std::vector<Mat> basis_;
  Mat coord_solver_;  // pseudo-inverse of the flattened basis
  LieAlgebra fiber_algebra_;
};

/// Closure computing w~_g(u, v) for u, v in ker t_* at g.
struct TSymplecticEvaluator {
  std::function<double(const Arrow&, const FiberVector&, const FiberVector&)> eval;

  double operator()(const Arrow& a, const FiberVector& u, const FiberVector& v) const {
    return eval(a, u, v);
  }
};

/// w~_g(u, v) = w_{s(g)}((l_{g^-1})_* u, (l_{g^-1})_* v) from a 2-form on the
/// fiber algebra. Throws FiberAlgebraMismatch when beta (or the declared
/// algebra, if given) does not fit the realization, DegenerateInput when beta
/// is not a nondegenerate 2-cocycle.
TSymplecticEvaluator build_t_symplectic(const GroupoidRealization& r, const AltForm& beta,
                                        const LieAlgebra* declared = nullptr);

/// Same pullback without the cocycle and nondegeneracy checks; used by
/// falsification probes.
TSymplecticEvaluator t_form_from_beta(const GroupoidRealization& r, const AltForm& beta);

/// w~ multiplied by (1 + native first coordinate of the arrow).
TSymplecticEvaluator corrupted_evaluator(const GroupoidRealization& r, TSymplecticEvaluator w);

/// max |w~_{gh}((l_g)_* u, (l_g)_* v) - w~_h(u, v)| over seeded samples.
double left_invariance_defect(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                              std::uint64_t seed, std::size_t count);

/// max |d w~| on coordinate frames at seeded points of t^-1(p), by central
/// differences (step 1e-5) in the chart xi -> (g0 exp(sum xi_a X_a), s0 + xi_M).
double fiber_closedness_defect(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                               const Vec& p, std::uint64_t seed, std::size_t count);

/// w~ at the unit over `p` (origin by default) on the algebroid basis,
/// rounded to rationals with denominator <= 1e6. Throws RoundingUnstable.
AltForm unit_restriction(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                         const std::optional<Vec>& p = std::nullopt);

/// Pfaffian of w~ at `a` in the right-invariant frame.
double fiber_pfaffian(const GroupoidRealization& r, const TSymplecticEvaluator& w, const Arrow& a);
/// min |fiber_pfaffian| over seeded arrows.
double min_fiber_pfaffian(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                          std::uint64_t seed, std::size_t count);

struct WeinsteinReport {
  double min_defect = 0;
  double max_defect = 0;
};

/// G as a groupoid over a point; the evaluator must come from
/// GroupoidRealization::action(G, 0, Trivial).
GroupoidRealization group_over_point(const MatrixGroupModel& g);

/// |w_{gh}(x h + g y, x' h + g y') - w_g(x, x') - w_h(y, y')| for tangent
/// vectors x, x' at g and y, y' at h.
double weinstein_defect_at(const GroupoidRealization& over_point, const TSymplecticEvaluator& w,
                           const Mat& g, const Mat& h, const Mat& x, const Mat& xp, const Mat& y,
                           const Mat& yp);

WeinsteinReport weinstein_defect(const MatrixGroupModel& g, const TSymplecticEvaluator& w,
                                 std::uint64_t seed, std::size_t count);

/// dim of total space minus dim of base is even.
Verdict parity_check(const GroupoidRealization& r);

}  // namespace tsg
