#include "tsg/groupoid_lab.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <unsupported/Eigen/MatrixFunctions>

#include "tsg/linalg.hpp"
#include "tsg/qf_search.hpp"

namespace tsg {

namespace {

RatMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, long value = 1) {
  RatMatrix m = zero_matrix(n, n);
  m(i, j) = make_rational(value);
  return m;
}

Mat to_eigen(const RatMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool near_identity_pattern(const Mat& g, double tol, const std::function<bool(Eigen::Index, Eigen::Index)>& free) {
  for (Eigen::Index r = 0; r < g.rows(); ++r)
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      if (free(r, c)) continue;
      const double expected = r == c ? 1.0 : 0.0;
      if (std::abs(g(r, c) - expected) > tol) return false;
    }
  return true;
}

Vec uniform_vec(std::mt19937_64& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

// d/de exp(A + eE) at e = 0, as the top-right block of exp([[A, E], [0, A]]).
Mat exp_derivative(const Mat& a, const Mat& e) {
  const Eigen::Index n = a.rows();
  Mat block = Mat::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a;
  block.topRightCorner(n, n) = e;
  block.bottomRightCorner(n, n) = a;
  const Mat ex = block.exp();
  return ex.topRightCorner(n, n);
}

}  // namespace

LieAlgebra MatrixGroupModel::algebra() const {
  const std::size_t d = dim();
  const std::size_t nn = embed_dim * embed_dim;
  RatMatrix flat = zero_matrix(nn, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (lie_basis[a].rows() != embed_dim || lie_basis[a].cols() != embed_dim)
      throw Error(ErrorKind::DegenerateInput, "basis matrix of the wrong size");
    for (std::size_t k = 0; k < nn; ++k) flat(k, a) = lie_basis[a].entries()[k];
  }
  if (rank(flat) != d) throw Error(ErrorKind::DegenerateInput, name + ": basis matrices are dependent");
  LieAlgebra g(static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatMatrix c = lie_basis[i] * lie_basis[j] - lie_basis[j] * lie_basis[i];
      const auto x = solve(flat, c.entries());
      if (!x) throw Error(ErrorKind::DegenerateInput, name + ": basis is not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k)
        if (sgn((*x)[k]) != 0) g.add_bracket(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), (*x)[k]);
    }
  return g;
}

std::vector<Mat> MatrixGroupModel::basis_double() const {
  std::vector<Mat> out;
  for (const auto& x : lie_basis) out.push_back(to_eigen(x));
  return out;
}

bool MatrixGroupModel::contains(const Mat& g) const {
  if (g.rows() != static_cast<Eigen::Index>(embed_dim) || g.cols() != g.rows()) return false;
  if (!g.allFinite()) return false;
  return membership(g, tolerance * std::max(1.0, max_abs(g)));
}

Mat MatrixGroupModel::exp_of(const Vec& coeffs) const {
  Mat a = Mat::Zero(embed_dim, embed_dim);
  const auto basis = basis_double();
  for (std::size_t i = 0; i < basis.size(); ++i) a += coeffs(i) * basis[i];
  return a.exp();
}

MatrixGroupModel matrix_group(const std::string& name) {
  MatrixGroupModel m;
  m.name = name;
  std::smatch match;
  static const std::regex abelian_re(R"(abelian\((\d+)\))");
  if (name == "aff(1)") {
    m.embed_dim = 2;
    m.lie_basis = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)};
    m.membership = [](const Mat& g, double tol) {
      return std::abs(g(1, 0)) <= tol && std::abs(g(1, 1) - 1) <= tol && g(0, 0) > 0;
    };
  } else if (std::regex_match(name, match, abelian_re)) {
    const std::size_t n = std::stoul(match[1]);
    if (n == 0) throw Error(ErrorKind::UnknownName, "abelian(0) is not a modeled group");
    m.embed_dim = n + 1;
    for (std::size_t i = 0; i < n; ++i) m.lie_basis.push_back(unit_matrix(n + 1, i, n));
    m.membership = [n](const Mat& g, double tol) {
      return near_identity_pattern(g, tol, [n](Eigen::Index r, Eigen::Index c) {
        return c == static_cast<Eigen::Index>(n) && r < static_cast<Eigen::Index>(n);
      });
    };
  } else if (name == "heisenberg3") {
    m.embed_dim = 3;
    m.lie_basis = {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)};
    m.membership = [](const Mat& g, double tol) {
      return near_identity_pattern(g, tol, [](Eigen::Index r, Eigen::Index c) { return c > r; });
    };
  } else if (name == "h3_plus_R") {
    m.embed_dim = 4;
    m.lie_basis = {unit_matrix(4, 0, 1), unit_matrix(4, 1, 2), unit_matrix(4, 0, 2), unit_matrix(4, 3, 3)};
    m.membership = [](const Mat& g, double tol) {
      return g(3, 3) > 0 && near_identity_pattern(g, tol, [](Eigen::Index r, Eigen::Index c) {
               return (c > r && c < 3) || (r == 3 && c == 3);
             });
    };
  } else if (name == "so(3)") {
    m.embed_dim = 3;
    // (L_a)_jk = -eps_ajk, so [L_1, L_2] = L_3
    for (int a = 0; a < 3; ++a) {
      RatMatrix l = zero_matrix(3, 3);
      const int j = (a + 1) % 3, k = (a + 2) % 3;
      l(j, k) = -1;
      l(k, j) = 1;
      m.lie_basis.push_back(l);
    }
    m.membership = [](const Mat& g, double tol) {
      return max_abs(Mat(g.transpose() * g - Mat::Identity(3, 3))) <= tol && g.determinant() > 0;
    };
  } else if (name == "sl(2)") {
    m.embed_dim = 2;
    RatMatrix h = zero_matrix(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    m.lie_basis = {h, unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)};
    m.membership = [](const Mat& g, double tol) { return std::abs(g.determinant() - 1) <= tol; };
  } else {
    throw Error(ErrorKind::UnknownName, "unknown matrix group '" + name + "'");
  }
  return m;
}

std::vector<std::string> matrix_group_names() {
  return {"aff(1)", "abelian(2)", "heisenberg3", "h3_plus_R", "so(3)", "sl(2)"};
}

std::string_view to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::Action: return "action";
    case RealizationKind::Pair: return "pair";
    case RealizationKind::MGM: return "mgm";
  }
  return "?";
}

std::string_view to_string(GroupAction a) {
  switch (a) {
    case GroupAction::Trivial: return "trivial";
    case GroupAction::Linear: return "linear";
    case GroupAction::Affine: return "affine";
  }
  return "?";
}

GroupoidRealization GroupoidRealization::action(MatrixGroupModel group, std::size_t chart_dim,
                                                GroupAction act) {
  const std::size_t N = group.embed_dim;
  if (act == GroupAction::Linear && N != chart_dim)
    throw Error(ErrorKind::DimensionMismatch, "linear action needs N = chart dimension");
  if (act == GroupAction::Affine) {
    if (N != chart_dim + 1) throw Error(ErrorKind::DimensionMismatch, "affine action needs N = chart dimension + 1");
    for (const auto& x : group.lie_basis)
      for (std::size_t c = 0; c < N; ++c)
        if (sgn(x(N - 1, c)) != 0)
          throw Error(ErrorKind::DimensionMismatch, "affine action needs a zero last row in every basis matrix");
  }
  GroupoidRealization r;
  r.kind_ = RealizationKind::Action;
  r.act_ = act;
  r.n_ = chart_dim;
  r.group_ = std::move(group);
  r.finish();
  return r;
}

GroupoidRealization GroupoidRealization::pair(std::size_t chart_dim) {
  GroupoidRealization r;
  r.kind_ = RealizationKind::Pair;
  r.n_ = chart_dim;
  r.finish();
  return r;
}

GroupoidRealization GroupoidRealization::mgm(std::size_t chart_dim, MatrixGroupModel group) {
  GroupoidRealization r;
  r.kind_ = RealizationKind::MGM;
  r.n_ = chart_dim;
  r.group_ = std::move(group);
  r.finish();
  return r;
}

void GroupoidRealization::finish() {
  const LieAlgebra flat_part(static_cast<int>(n_));
  if (group_) {
    const LieAlgebra g = group_->algebra();
    basis_ = group_->basis_double();
    const Eigen::Index nn = static_cast<Eigen::Index>(group_->embed_dim * group_->embed_dim);
    Mat flat(nn, static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t a = 0; a < basis_.size(); ++a)
      flat.col(a) = Eigen::Map<const Vec>(basis_[a].data(), nn);
    coord_solver_ = flat.completeOrthogonalDecomposition().pseudoInverse();
    fiber_algebra_ = kind_ == RealizationKind::Action ? g : direct_sum(g, flat_part);
  } else {
    fiber_algebra_ = flat_part;
  }
  const Verdict v = self_test(0x5EED, 16);
  if (!v) throw Error(ErrorKind::DegenerateInput, "groupoid axioms fail: " + v.condition, {}, v.detail);
}

std::size_t GroupoidRealization::total_dim() const noexcept {
  switch (kind_) {
    case RealizationKind::Action: return group_dim() + n_;
    case RealizationKind::Pair: return 2 * n_;
    case RealizationKind::MGM: return 2 * n_ + group_dim();
  }
  return 0;
}

Vec GroupoidRealization::act(const Mat& g, const Vec& p) const {
  switch (act_) {
    case GroupAction::Trivial: return p;
    case GroupAction::Linear: return g * p;
    case GroupAction::Affine: {
      Vec ph(n_ + 1);
      ph << p, 1.0;
      return (g * ph).head(n_);
    }
  }
  return p;
}

Vec GroupoidRealization::differential_source(const Arrow& a, const Mat& dg) const {
  const Mat ginv = a.g.inverse();
  const Mat m = -ginv * dg * ginv;
  switch (act_) {
    case GroupAction::Trivial: return Vec::Zero(n_);
    case GroupAction::Linear: return m * a.target;
    case GroupAction::Affine: {
      Vec ph(n_ + 1);
      ph << a.target, 1.0;
      return (m * ph).head(n_);
    }
  }
  return Vec::Zero(n_);
}

Arrow GroupoidRealization::action_arrow(const Mat& g, const Vec& target) const {
  if (kind_ != RealizationKind::Action) throw Error(ErrorKind::DimensionMismatch, "not an action groupoid");
  return {target, g, act(g.inverse(), target)};
}

Arrow GroupoidRealization::arrow(const Vec& target, const Mat& g, const Vec& source) const {
  if (kind_ == RealizationKind::Action) return action_arrow(g, target);
  if (kind_ == RealizationKind::Pair) return {target, Mat(0, 0), source};
  return {target, g, source};
}

Arrow GroupoidRealization::unit(const Vec& p) const {
  const Mat e = group_ ? Mat(Mat::Identity(group_->embed_dim, group_->embed_dim)) : Mat(0, 0);
  return {p, e, p};
}

Arrow GroupoidRealization::inverse(const Arrow& a) const {
  return {a.source, group_ ? Mat(a.g.inverse()) : Mat(0, 0), a.target};
}

Arrow GroupoidRealization::multiply(const Arrow& a, const Arrow& b) const {
  const double gap = max_abs(Vec(a.source - b.target));
  if (gap > 1e-9 * (1.0 + max_abs(a.source)))
    throw Error(ErrorKind::DimensionMismatch, "arrows are not composable");
  return {a.target, group_ ? Mat(a.g * b.g) : Mat(0, 0), b.source};
}

double GroupoidRealization::distance(const Arrow& a, const Arrow& b) const {
  return std::max({max_abs(Vec(a.target - b.target)), max_abs(Mat(a.g - b.g)), max_abs(Vec(a.source - b.source))});
}

bool GroupoidRealization::contains(const Arrow& a) const {
  if (a.target.size() != static_cast<Eigen::Index>(n_) || a.source.size() != static_cast<Eigen::Index>(n_))
    return false;
  if (group_ && !group_->contains(a.g)) return false;
  if (kind_ == RealizationKind::Action) {
    const Vec expected = act(a.g.inverse(), a.target);
    if (max_abs(Vec(expected - a.source)) > 1e-9 * (1.0 + max_abs(expected))) return false;
  }
  return true;
}

FiberVector GroupoidRealization::tangent(const Arrow& a, const Mat& dg, const Vec& ds) const {
  switch (kind_) {
    case RealizationKind::Action: return {dg, differential_source(a, dg)};
    case RealizationKind::Pair: return {Mat(0, 0), ds};
    case RealizationKind::MGM: return {dg, ds};
  }
  return {};
}

FiberVector GroupoidRealization::left_invariant(const Arrow& a, const Vec& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(fiber_dim()))
    throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  Mat dg(0, 0);
  if (group_) {
    Mat x = Mat::Zero(group_->embed_dim, group_->embed_dim);
    for (std::size_t i = 0; i < basis_.size(); ++i) x += coords(i) * basis_[i];
    dg = a.g * x;
  }
  const Eigen::Index dG = static_cast<Eigen::Index>(group_dim());
  return tangent(a, dg, coords.tail(coords.size() - dG));
}

FiberVector GroupoidRealization::right_frame(const Arrow& a, std::size_t index) const {
  const std::size_t dG = group_dim();
  Mat dg = group_ ? Mat(Mat::Zero(group_->embed_dim, group_->embed_dim)) : Mat(0, 0);
  Vec ds = Vec::Zero(fiber_dim() - dG);
  if (index < dG)
    dg = basis_[index] * a.g;
  else
    ds(index - dG) = 1.0;
  return tangent(a, dg, ds);
}

FiberVector GroupoidRealization::push_left(const Arrow& a, const FiberVector& u) const {
  return {group_ ? Mat(a.g * u.dg) : Mat(0, 0), u.ds};
}

Vec GroupoidRealization::lie_coords(const Mat& x) const {
  const Eigen::Index nn = x.size();
  return coord_solver_ * Eigen::Map<const Vec>(x.data(), nn);
}

Vec GroupoidRealization::unit_coords(const FiberVector& u) const {
  Vec out(fiber_dim());
  const Eigen::Index dG = static_cast<Eigen::Index>(group_dim());
  if (dG > 0) out.head(dG) = lie_coords(u.dg);
  if (kind_ != RealizationKind::Action) out.tail(n_) = u.ds;
  return out;
}

Vec GroupoidRealization::sample_base(std::mt19937_64& rng) const { return uniform_vec(rng, n_, -1.0, 1.0); }

Mat GroupoidRealization::sample_group(std::mt19937_64& rng) const {
  if (!group_) return Mat(0, 0);
  return group_->exp_of(uniform_vec(rng, group_dim(), -2.0, 2.0));
}

Arrow GroupoidRealization::sample_arrow(std::mt19937_64& rng, const Vec* target) const {
  const Vec t = target ? *target : sample_base(rng);
  const Mat g = sample_group(rng);
  if (kind_ == RealizationKind::Action) return action_arrow(g, t);
  return arrow(t, g, sample_base(rng));
}

Vec GroupoidRealization::sample_coords(std::mt19937_64& rng) const {
  return uniform_vec(rng, fiber_dim(), -1.0, 1.0);
}

Verdict GroupoidRealization::self_test(std::uint64_t seed, std::size_t count, double tol) const {
  std::mt19937_64 rng(seed);
  auto close = [&](const Arrow& x, const Arrow& y) {
    const double scale = 1.0 + std::max({max_abs(x.g), max_abs(x.target), max_abs(x.source)});
    return distance(x, y) <= tol * scale;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const Arrow a = sample_arrow(rng);
    const Arrow b = sample_arrow(rng, &a.source);
    const Arrow c = sample_arrow(rng, &b.source);
    const int idx = static_cast<int>(i + 1);
    if (!contains(a) || !contains(b) || !contains(c)) return Verdict::fail("membership", {idx});
    const Arrow ab = multiply(a, b);
    if (!contains(ab)) return Verdict::fail("closure", {idx});
    if (max_abs(Vec(ab.target - a.target)) > tol || max_abs(Vec(ab.source - b.source)) > tol * (1 + max_abs(b.source)))
      return Verdict::fail("source-target", {idx});
    if (!close(multiply(ab, c), multiply(a, multiply(b, c)))) return Verdict::fail("associativity", {idx});
    if (!close(multiply(unit(a.target), a), a) || !close(multiply(a, unit(a.source)), a))
      return Verdict::fail("unit", {idx});
    const Arrow ai = inverse(a);
    if (!close(multiply(a, ai), unit(a.target)) || !close(multiply(ai, a), unit(a.source)))
      return Verdict::fail("inverse", {idx});
  }
  return Verdict::ok();
}

double GroupoidRealization::native_first_coordinate(const Arrow& a) const {
  if (kind_ == RealizationKind::Action || n_ == 0) return a.g.size() ? a.g(0, 0) : 0.0;
  return a.target(0);
}

TSymplecticEvaluator t_form_from_beta(const GroupoidRealization& r, const AltForm& beta) {
  if (beta.degree() != 2 || beta.algebra_dim() != static_cast<int>(r.fiber_dim()))
    throw Error(ErrorKind::FiberAlgebraMismatch,
                "2-form on a " + std::to_string(beta.algebra_dim()) + "-dimensional algebra, fiber has dimension " +
                    std::to_string(r.fiber_dim()));
  const Mat b = to_eigen(beta.matrix());
  return {[r, b](const Arrow& a, const FiberVector& u, const FiberVector& v) {
    const Arrow back = r.inverse(a);
    const Vec cu = r.unit_coords(r.push_left(back, u));
    const Vec cv = r.unit_coords(r.push_left(back, v));
    return cu.dot(b * cv);
  }};
}

TSymplecticEvaluator build_t_symplectic(const GroupoidRealization& r, const AltForm& beta,
                                        const LieAlgebra* declared) {
  if (declared && !(*declared == r.fiber_algebra()))
    throw Error(ErrorKind::FiberAlgebraMismatch, "declared algebra differs from the realization's fiber algebra");
  if (beta.degree() != 2 || beta.algebra_dim() != static_cast<int>(r.fiber_dim()))
    return t_form_from_beta(r, beta);  // throws FiberAlgebraMismatch
  const Verdict v = qf_validate(r.fiber_algebra(), beta);
  if (!v) throw Error(ErrorKind::DegenerateInput, "beta fails " + v.condition, v.witness, v.detail);
  return t_form_from_beta(r, beta);
}

TSymplecticEvaluator corrupted_evaluator(const GroupoidRealization& r, TSymplecticEvaluator w) {
  return {[r, w = std::move(w)](const Arrow& a, const FiberVector& u, const FiberVector& v) {
    return (1.0 + r.native_first_coordinate(a)) * w(a, u, v);
  }};
}

double left_invariance_defect(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                              std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Arrow g = r.sample_arrow(rng);
    const Arrow h = r.sample_arrow(rng, &g.source);
    const FiberVector u = r.left_invariant(h, r.sample_coords(rng));
    const FiberVector v = r.left_invariant(h, r.sample_coords(rng));
    const Arrow gh = r.multiply(g, h);
    const double d = std::abs(w(gh, r.push_left(g, u), r.push_left(g, v)) - w(h, u, v));
    worst = std::max(worst, d);
  }
  return worst;
}

double fiber_closedness_defect(const GroupoidRealization& r, const TSymplecticEvaluator& w,
                               const Vec& p, std::uint64_t seed, std::size_t count) {
  const std::size_t d = r.fiber_dim();
  if (d < 3) return 0.0;
  const std::size_t dG = r.group_dim();
  const std::vector<Mat> basis = r.group() ? r.group()->basis_double() : std::vector<Mat>{};
  constexpr double h = 1e-5;

  // W_ij(xi) = w~(d_i, d_j) in the chart around a0
  auto gram = [&](const Arrow& a0, const Vec& xi) {
    Mat g(0, 0);
    std::vector<Mat> dgs;
    if (dG > 0) {
      const std::size_t N = r.group()->embed_dim;
      Mat A = Mat::Zero(N, N);
      for (std::size_t a = 0; a < dG; ++a) A += xi(a) * basis[a];
      g = a0.g * A.exp();
      for (std::size_t a = 0; a < dG; ++a) dgs.push_back(a0.g * exp_derivative(A, basis[a]));
    }
    const Vec s = r.kind() == RealizationKind::Action ? Vec() : Vec(a0.source + xi.tail(d - dG));
    const Arrow at = r.arrow(a0.target, g, s);
    std::vector<FiberVector> frame;
    const Mat zero_g = dG > 0 ? Mat(Mat::Zero(g.rows(), g.cols())) : Mat(0, 0);
    for (std::size_t a = 0; a < d; ++a) {
      if (a < dG) {
        frame.push_back(r.tangent(at, dgs[a], Vec::Zero(d - dG)));
      } else {
        Vec e = Vec::Zero(d - dG);
        e(a - dG) = 1.0;
        frame.push_back(r.tangent(at, zero_g, e));
      }
    }
    Mat W(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) W(i, j) = w(at, frame[i], frame[j]);
    return W;
  };

  std::mt19937_64 rng(seed);
  double worst = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Arrow a0 = r.sample_arrow(rng, &p);
    std::vector<Mat> dW;
    for (std::size_t a = 0; a < d; ++a) {
      Vec e = Vec::Zero(d);
      e(a) = h;
      dW.push_back((gram(a0, e) - gram(a0, -e)) / (2 * h));
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = b + 1; c < d; ++c) {
          const double v = dW[a](b, c) + dW[b](c, a) + dW[c](a, b);
          worst = std::max(worst, std::abs(v));
        }
  }
  return worst;
}

AltForm unit_restriction(const GroupoidRealization& r, const TSymplecticEvaluator& w, const std::optional<Vec>& p) {
  const std::size_t d = r.fiber_dim();
  const Arrow u = r.unit(p ? *p : Vec(Vec::Zero(r.chart_dim())));
  AltForm out(static_cast<int>(d), 2);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const double v = w(u, r.left_invariant(u, Vec::Unit(d, a)), r.left_invariant(u, Vec::Unit(d, b)));
      const Rational q = best_rational_approximation(v, 1000000);
      if (std::abs(v - q.get_d()) > 1e-9)
        throw Error(ErrorKind::RoundingUnstable,
                    "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") is not near a small rational",
                    {static_cast<int>(a + 1), static_cast<int>(b + 1)});
      out.set({static_cast<int>(a), static_cast<int>(b)}, q);
    }
  return out;
}

double fiber_pfaffian(const GroupoidRealization& r, const TSymplecticEvaluator& w, const Arrow& a) {
  const std::size_t d = r.fiber_dim();
  if (d % 2 != 0) throw Error(ErrorKind::OddDimension, "fiber dimension is odd");
  std::vector<FiberVector> frame;
  for (std::size_t i = 0; i < d; ++i) frame.push_back(r.right_frame(a, i));
  DenseMatrix<double> m(d, d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = w(a, frame[i], frame[j]);
      m(j, i) = -m(i, j);
    }
  return pfaffian_expand(m, 0.0, 1.0);
}

double min_fiber_pfaffian(const GroupoidRealization& r, const TSymplecticEvaluator& w, std::uint64_t seed,
                          std::size_t count) {
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) best = std::min(best, std::abs(fiber_pfaffian(r, w, r.sample_arrow(rng))));
  return best;
}

GroupoidRealization group_over_point(const MatrixGroupModel& g) {
  return GroupoidRealization::action(g, 0, GroupAction::Trivial);
}

double weinstein_defect_at(const GroupoidRealization& over_point, const TSymplecticEvaluator& w, const Mat& g,
                           const Mat& h, const Mat& x, const Mat& xp, const Mat& y, const Mat& yp) {
  const Vec pt(0);
  const Arrow ag = over_point.action_arrow(g, pt);
  const Arrow ah = over_point.action_arrow(h, pt);
  const Arrow agh = over_point.action_arrow(g * h, pt);
  auto tv = [&](const Arrow& a, const Mat& m) { return over_point.tangent(a, m, pt); };
  const double lhs = w(agh, tv(agh, x * h + g * y), tv(agh, xp * h + g * yp));
  return std::abs(lhs - w(ag, tv(ag, x), tv(ag, xp)) - w(ah, tv(ah, y), tv(ah, yp)));
}

WeinsteinReport weinstein_defect(const MatrixGroupModel& g, const TSymplecticEvaluator& w, std::uint64_t seed,
                                 std::size_t count) {
  const GroupoidRealization r = group_over_point(g);
  std::mt19937_64 rng(seed);
  WeinsteinReport out;
  out.min_defect = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const Arrow a = r.sample_arrow(rng);
    const Arrow b = r.sample_arrow(rng);
    const Mat x = r.left_invariant(a, r.sample_coords(rng)).dg;
    const Mat xp = r.left_invariant(a, r.sample_coords(rng)).dg;
    const Mat y = r.left_invariant(b, r.sample_coords(rng)).dg;
    const Mat yp = r.left_invariant(b, r.sample_coords(rng)).dg;
    const double d = weinstein_defect_at(r, w, a.g, b.g, x, xp, y, yp);
    out.min_defect = std::min(out.min_defect, d);
    out.max_defect = std::max(out.max_defect, d);
  }
  if (count == 0) out.min_defect = 0;
  return out;
}

Verdict parity_check(const GroupoidRealization& r) {
  const std::size_t diff = r.total_dim() - r.base_dim();
  if (diff % 2 == 0) return Verdict::ok();
  return Verdict::fail("parity", {}, "dim G - dim M = " + std::to_string(diff) + " is odd");
}

}  // namespace tsg
