#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "tsg/io.hpp"
#include "tsg/slgb.hpp"

#include <algorithm>

using namespace tsg;
using tsg::testing::Gen;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string data(const std::string& name) { return std::string(TSG_DATA_DIR) + "/" + name; }

RatMatrix shear(const Rational& mu) {
  RatMatrix m = identity_matrix(2);
  m(1, 0) = mu;
  return m;
}

AltForm e12(int n = 2) {
  AltForm f(n, 2);
  f.set({0, 1}, q(1));
  return f;
}

// n opens, all pairs and triples, phi_ij = shear(c_i - c_j) at each point.
SLGBSpec shear_spec(Gen& gen, std::size_t n, std::size_t points) {
  SLGBSpec s;
  s.algebra = catalog("aff(1)");
  s.beta = e12();
  std::vector<Rational> c(n);
  for (auto& x : c) x = gen.rational();
  std::vector<std::string> pts;
  for (std::size_t p = 0; p < points; ++p) pts.push_back("p" + std::to_string(p));
  for (std::size_t i = 0; i < n; ++i) s.nerve.opens.push_back("U" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s.nerve.pairs.push_back({i, j, pts});
      for (const auto& p : pts) s.transitions.set(i, j, p, shear(c[i] - c[j]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) s.nerve.triples.push_back({i, j, k, pts});
  return s;
}

}  // namespace

TEST_CASE("trivial cover") {
  SLGBSpec s;
  s.algebra = catalog("aff(1)");
  s.beta = e12();
  s.nerve.opens = {"U"};
  CHECK(check_transitions(s).pass);
  CHECK(check_cocycle(s).pass);
  const QFLAB b = associated_qflab(s);
  CHECK(b.anchor_zero);
  CHECK(b.fiber_dim == 2);
  CHECK(b.fiber_dim_even);
  CHECK(b.fiber_algebra == catalog("aff(1)"));
  CHECK(b.fiber_form == e12());
  CHECK(b.transitions.empty());
  CHECK(b.caveat == kSimplyConnectedCaveat);
}

TEST_CASE("identity transitions pass on any nerve") {
  for (const std::string name : {"aff(1)", "h3_plus_R"}) {
    SLGBSpec s;
    s.algebra = catalog(name);
    s.beta = AltForm(s.algebra.dim(), 2);
    if (name == "aff(1)") {
      s.beta.set({0, 1}, q(1));
    } else {
      s.beta.set({0, 2}, q(1));
      s.beta.set({1, 3}, q(1));
    }
    s.nerve.opens = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        s.nerve.pairs.push_back({i, j, {"x", "y"}});
        for (const std::string p : {"x", "y"}) s.transitions.set(i, j, p, identity_matrix(s.algebra.dim()));
      }
    s.nerve.triples.push_back({0, 1, 2, {"x"}});
    CHECK(check_transitions(s).pass);
    CHECK(check_cocycle(s).pass);
    CHECK(associated_qflab(s).fiber_dim_even);
  }
}

TEST_CASE("shear cocycle from file") {
  const SLGBSpec s = io::load_slgb(data("slgb_shear.toml"));
  CHECK(s.nerve.opens.size() == 3);
  CHECK(check_transitions(s).pass);
  CHECK(check_cocycle(s).pass);
  const QFLAB b = associated_qflab(s);
  CHECK(b.anchor_zero);
  CHECK(b.fiber_dim_even);
  CHECK(b.transitions.size() == 3);
  for (const auto& t : b.transitions) CHECK(t.pass);
}

TEST_CASE("corrupted cocycle from file") {
  const SLGBSpec s = io::load_slgb(data("slgb_shear_bad_cocycle.toml"));
  CHECK(check_transitions(s).pass);
  const SLGBVerdict v = check_cocycle(s);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "cocycle");
  CHECK(v.opens == std::vector<std::size_t>{0, 1, 2});
  CHECK(v.point == "p");
  try {
    associated_qflab(s);
    FAIL("expected PreconditionNotVerified");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionNotVerified);
  }
}

TEST_CASE("a scaling transition breaks the form") {
  const SLGBSpec s = io::load_slgb(data("slgb_scaling.toml"));
  const SLGBVerdict v = check_transitions(s);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "automorphism:form");
  CHECK(v.opens == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(associated_qflab(s), Error);
}

TEST_CASE("transition consistency conditions") {
  Gen gen(61);
  SLGBSpec s = shear_spec(gen, 2, 1);
  s.transitions.set(1, 0, "p0", shear(q(5)));  // not the inverse of phi_01
  CHECK(check_transitions(s).condition == "inverse");

  SLGBSpec m = shear_spec(gen, 2, 1);
  m.nerve.pairs[0].points.push_back("extra");
  const SLGBVerdict missing = check_transitions(m);
  CHECK(missing.condition == "missing");
  CHECK(missing.point == "extra");

  SLGBSpec id = shear_spec(gen, 2, 1);
  id.transitions.set(0, 0, "p0", shear(q(1)));
  CHECK(check_transitions(id).condition == "identity");

  SLGBSpec n = shear_spec(gen, 3, 1);
  n.nerve.triples[0].points.push_back("elsewhere");
  CHECK(check_cocycle(n).condition == "nerve");

  SLGBSpec sing = shear_spec(gen, 2, 1);
  sing.transitions.set(0, 1, "p0", zero_matrix(2, 2));
  CHECK(check_transitions(sing).condition == "automorphism:invertible");
}

TEST_CASE("associated bundle requires a quasi-Frobenius fiber") {
  SLGBSpec s;
  s.algebra = catalog("h3_plus_R");
  s.beta = AltForm(4, 2);
  s.beta.set({0, 1}, q(1));
  s.beta.set({2, 3}, q(1));
  s.nerve.opens = {"U"};
  try {
    associated_qflab(s);
    FAIL("expected PreconditionNotVerified");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionNotVerified);
  }
}

TEST_CASE("random shear cocycles pass and single corruptions are caught") {
  Gen gen(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = gen.integer(3, 5);
    SLGBSpec s = shear_spec(gen, n, gen.integer(1, 3));
    REQUIRE(check_transitions(s).pass);
    REQUIRE(check_cocycle(s).pass);
    const QFLAB b = associated_qflab(s);
    CHECK(b.anchor_zero);
    CHECK(b.fiber_dim_even);
    for (const auto& t : b.transitions) CHECK(t.pass);
    for (const auto& [key, by_point] : s.transitions.entries())
      for (const auto& [p, m] : by_point) {
        CHECK(sgn(determinant(m)) != 0);
        CHECK(automorphism_check(s.algebra, s.beta, m).pass);
      }

    // order of triple overlaps does not change the verdict
    SLGBSpec shuffled = s;
    std::shuffle(shuffled.nerve.triples.begin(), shuffled.nerve.triples.end(), gen.engine());
    CHECK(check_cocycle(shuffled).pass);

    const auto& pair = s.nerve.pairs[gen.integer(0, static_cast<long>(s.nerve.pairs.size()) - 1)];
    const std::string& p = pair.points[gen.integer(0, static_cast<long>(pair.points.size()) - 1)];
    SLGBSpec bad = s;
    const LinearMap old = *bad.transitions.supplied(pair.i, pair.j, p);
    bad.transitions.set(pair.i, pair.j, p, old * shear(q(1)));
    CHECK(check_transitions(bad).pass);
    const SLGBVerdict v = check_cocycle(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.condition == "cocycle");
    CHECK(v.point == p);
    SLGBSpec bad_shuffled = bad;
    std::reverse(bad_shuffled.nerve.triples.begin(), bad_shuffled.nerve.triples.end());
    CHECK_FALSE(check_cocycle(bad_shuffled).pass);
  }
}

TEST_CASE("passing transitions are closed under products and inverses") {
  Gen gen(63);
  const LieAlgebra aff = catalog("aff(1)");
  const LieAlgebra ab = catalog("abelian(2)");
  for (int trial = 0; trial < 50; ++trial) {
    const RatMatrix a = shear(gen.rational()), b = shear(gen.rational());
    CHECK(automorphism_check(aff, e12(), a * b).pass);
    CHECK(automorphism_check(aff, e12(), *inverse(a)).pass);
    // SL(2) elements preserve e1^e2 on the abelian fiber
    RatMatrix up = identity_matrix(2), lo = identity_matrix(2);
    up(0, 1) = gen.rational();
    lo(1, 0) = gen.rational();
    const RatMatrix s = up * lo;
    REQUIRE(automorphism_check(ab, e12(), s).pass);
    CHECK(automorphism_check(ab, e12(), s * up * s).pass);
    CHECK(automorphism_check(ab, e12(), *inverse(s)).pass);
  }
}
