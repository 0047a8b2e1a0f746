#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"

namespace tsg {

// Symplectic Lie group bundles presented by transition cocycles on an
// abstract cover. Opens are referred to by their 0-based position in
// `CoverNerve::opens`; sample points are opaque labels.

struct PairOverlap {
  std::size_t i = 0, j = 0;
  std::vector<std::string> points;
};

struct TripleOverlap {
  std::size_t i = 0, j = 0, k = 0;
  std::vector<std::string> points;
};

struct CoverNerve {
  std::vector<std::string> opens;
  std::vector<PairOverlap> pairs;
  std::vector<TripleOverlap> triples;
};

/// Transition maps phi_ij(p) from chart j to chart i on U_i n U_j, stored as
/// supplied. phi_ji defaults to the inverse of phi_ij and phi_ii to the
/// identity.
class TransitionData {
 public:
  void set(std::size_t i, std::size_t j, const std::string& point, LinearMap map);
  /// Supplied value only.
  const LinearMap* supplied(std::size_t i, std::size_t j, const std::string& point) const;
  /// phi_ij(p) with the defaults applied; nullopt when neither direction is
  /// supplied or the supplied map is singular.
  std::optional<LinearMap> get(std::size_t i, std::size_t j, const std::string& point, int dim) const;

  using Key = std::pair<std::size_t, std::size_t>;
  const std::map<Key, std::map<std::string, LinearMap>>& entries() const noexcept { return maps_; }

 private:
  std::map<Key, std::map<std::string, LinearMap>> maps_;
};

struct SLGBSpec {
  LieAlgebra algebra;
  AltForm beta;
  CoverNerve nerve;
  TransitionData transitions;
};

/// First failure of an SLGB check: the opens involved, the sample point and
/// what broke.
struct SLGBVerdict {
  bool pass = true;
  std::string condition;
  std::vector<std::size_t> opens;
  std::string point;
  std::string detail;

  explicit operator bool() const noexcept { return pass; }
};

/// Every supplied transition value is in Aut(g, beta); phi_ii = id and
/// phi_ij phi_ji = id where both are supplied; every overlap point carries a
/// map.
SLGBVerdict check_transitions(const SLGBSpec& spec);

/// phi_kj(p) phi_ji(p) = phi_ki(p) at each sampled point of every triple
/// overlap (i, j, k), after checking the triple points lie in the pairwise
/// overlaps.
SLGBVerdict check_cocycle(const SLGBSpec& spec);

struct TransitionRecheck {
  std::size_t i = 0, j = 0;
  std::string point;
  bool pass = false;
};

/// Lie algebroid data of the bundle: zero anchor, fiberwise (g, beta) and
/// transition maps that are quasi-Frobenius isomorphisms.
struct QFLAB {
  bool anchor_zero = true;
  LieAlgebra fiber_algebra;
  AltForm fiber_form;
  std::size_t fiber_dim = 0;
  bool fiber_dim_even = false;
  std::vector<TransitionRecheck> transitions;
  std::string caveat;
};

/// Throws PreconditionNotVerified unless beta passes qf_validate and both
/// checks pass.
QFLAB associated_qflab(const SLGBSpec& spec);

/// Caveat attached to every report: Aut(G, w) is identified with
/// Aut(g, beta) only for simply connected G.
extern const char* const kSimplyConnectedCaveat;

}  // namespace tsg
