#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsg/alt_form.hpp"
#include "tsg/lie_algebra.hpp"
#include "tsg/poly.hpp"

namespace tsg {

/// Exact check that beta is a nondegenerate 2-cocycle. The witness is the
/// first increasing triple where d beta is nonzero (1-based).
Verdict qf_validate(const LieAlgebra& g, const AltForm& beta);

enum class QFStatus { QuasiFrobenius, Frobenius, None };
enum class QFCertificate { None, OddDimension, GenericPfaffianZero };

std::string_view to_string(QFStatus s);
std::string_view to_string(QFCertificate c);

struct QFVerdict {
  QFStatus status = QFStatus::None;
  std::optional<AltForm> witness;    // set unless status == None
  std::optional<AltForm> potential;  // set iff status == Frobenius
  QFCertificate certificate = QFCertificate::None;
  std::optional<Poly> certificate_poly;  // generic Pfaffian, set unless OddDimension
  std::vector<AltForm> cocycle_basis;    // Z^2 basis used for the generic element
  std::size_t attempts = 0;              // rational samples drawn
};

/// Decides whether g carries a quasi-Frobenius structure.
///
/// Z^2 is parametrised exactly; the Pfaffian of the generic cocycle
/// sum t_a z_a is a polynomial P(t). P == 0 certifies impossibility.
/// Otherwise witnesses are drawn from a seeded stream of small rationals
/// until P(t) != 0, and a Frobenius potential is sought for the witness.
QFVerdict find_quasi_frobenius(const LieAlgebra& g, std::uint64_t seed);

/// theta with d theta = beta (free parameters set to zero), or nullopt when
/// beta is not exact.
std::optional<AltForm> frobenius_potential(const LieAlgebra& g, const AltForm& beta);

/// Generic element sum_a t_a z_a of the span of `basis` as a polynomial
/// matrix in m = basis.size() variables.
DenseMatrix<Poly> generic_two_form_matrix(const std::vector<AltForm>& basis, int dim);

/// Deterministic stream of small rationals used by the witness search:
/// a 64-bit LCG, values p/q with q in 1..4 and |p/q| <= box.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed);
  Rational next(std::int64_t box);

 private:
  std::uint64_t next_raw();
  std::uint64_t state_;
};

}  // namespace tsg
