#include "tsg/slgb.hpp"

#include <algorithm>

#include "tsg/linalg.hpp"
#include "tsg/qf_search.hpp"

namespace tsg {

const char* const kSimplyConnectedCaveat =
    "membership in Aut(G, w) is decided through Aut(g, beta), which identifies the two only when G is simply "
    "connected";

namespace {

SLGBVerdict fail(std::string condition, std::vector<std::size_t> opens, std::string point, std::string detail = {}) {
  return {false, std::move(condition), std::move(opens), std::move(point), std::move(detail)};
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

const PairOverlap* find_pair(const CoverNerve& nerve, std::size_t a, std::size_t b) {
  for (const auto& p : nerve.pairs)
    if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return &p;
  return nullptr;
}

}  // namespace

void TransitionData::set(std::size_t i, std::size_t j, const std::string& point, LinearMap map) {
  maps_[{i, j}][point] = std::move(map);
}

const LinearMap* TransitionData::supplied(std::size_t i, std::size_t j, const std::string& point) const {
  const auto it = maps_.find({i, j});
  if (it == maps_.end()) return nullptr;
  const auto jt = it->second.find(point);
  return jt == it->second.end() ? nullptr : &jt->second;
}

std::optional<LinearMap> TransitionData::get(std::size_t i, std::size_t j, const std::string& point, int dim) const {
  if (const LinearMap* m = supplied(i, j, point)) return *m;
  if (i == j) return identity_matrix(dim);
  if (const LinearMap* m = supplied(j, i, point)) return inverse(*m);
  return std::nullopt;
}

SLGBVerdict check_transitions(const SLGBSpec& spec) {
  const int n = spec.algebra.dim();
  for (const auto& ov : spec.nerve.pairs)
    for (const auto& p : ov.points)
      if (!spec.transitions.supplied(ov.i, ov.j, p) && !spec.transitions.supplied(ov.j, ov.i, p) && ov.i != ov.j)
        return fail("missing", {ov.i, ov.j}, p, "no transition map at this overlap point");
  for (const auto& [key, by_point] : spec.transitions.entries()) {
    const auto [i, j] = key;
    for (const auto& [p, map] : by_point) {
      const Verdict v = automorphism_check(spec.algebra, spec.beta, map);
      if (!v) return fail("automorphism:" + v.condition, {i, j}, p, v.detail);
      if (i == j && !(map == identity_matrix(n)))
        return fail("identity", {i, j}, p, "phi_ii must be the identity");
      if (i < j) {
        if (const LinearMap* back = spec.transitions.supplied(j, i, p))
          if (!(map * *back == identity_matrix(n)))
            return fail("inverse", {i, j}, p, "phi_ij phi_ji is not the identity");
      }
    }
  }
  return {};
}

SLGBVerdict check_cocycle(const SLGBSpec& spec) {
  const int n = spec.algebra.dim();
  const auto& nerve = spec.nerve;
  for (const auto& t : nerve.triples) {
    const std::vector<std::size_t> ids{t.i, t.j, t.k};
    const std::pair<std::size_t, std::size_t> edges[] = {{t.i, t.j}, {t.j, t.k}, {t.i, t.k}};
    for (const auto& [a, b] : edges) {
      if (a == b) continue;
      const PairOverlap* ov = find_pair(nerve, a, b);
      for (const auto& p : t.points)
        if (!ov || !contains(ov->points, p))
          return fail("nerve", ids, p, "triple point missing from overlap of opens " + std::to_string(a) + " and " +
                                           std::to_string(b));
    }
    for (const auto& p : t.points) {
      const auto kj = spec.transitions.get(t.k, t.j, p, n);
      const auto ji = spec.transitions.get(t.j, t.i, p, n);
      const auto ki = spec.transitions.get(t.k, t.i, p, n);
      if (!kj || !ji || !ki) return fail("missing", ids, p, "transition map unavailable");
      if (!(*kj * *ji == *ki)) return fail("cocycle", ids, p, "phi_kj phi_ji != phi_ki");
    }
  }
  return {};
}

QFLAB associated_qflab(const SLGBSpec& spec) {
  const Verdict qf = qf_validate(spec.algebra, spec.beta);
  if (!qf) throw Error(ErrorKind::PreconditionNotVerified, "beta fails qf_validate (" + qf.condition + ")");
  const SLGBVerdict tr = check_transitions(spec);
  if (!tr) throw Error(ErrorKind::PreconditionNotVerified, "check_transitions failed (" + tr.condition + ")");
  const SLGBVerdict co = check_cocycle(spec);
  if (!co) throw Error(ErrorKind::PreconditionNotVerified, "check_cocycle failed (" + co.condition + ")");

  QFLAB out;
  out.anchor_zero = true;
  out.fiber_algebra = spec.algebra;
  out.fiber_form = spec.beta;
  out.fiber_dim = static_cast<std::size_t>(spec.algebra.dim());
  out.fiber_dim_even = out.fiber_dim % 2 == 0;
  for (const auto& [key, by_point] : spec.transitions.entries())
    for (const auto& [p, map] : by_point)
      out.transitions.push_back({key.first, key.second, p, automorphism_check(spec.algebra, spec.beta, map).pass});
  out.caveat = kSimplyConnectedCaveat;
  return out;
}

}  // namespace tsg
