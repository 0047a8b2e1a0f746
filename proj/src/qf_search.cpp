#include "tsg/qf_search.hpp"

#include <stdexcept>

#include "tsg/ce_complex.hpp"
#include "tsg/linalg.hpp"

namespace tsg {

std::string_view to_string(QFStatus s) {
  switch (s) {
    case QFStatus::QuasiFrobenius: return "QuasiFrobenius";
    case QFStatus::Frobenius: return "Frobenius";
    case QFStatus::None: return "None";
  }
  return "?";
}

std::string_view to_string(QFCertificate c) {
  switch (c) {
    case QFCertificate::None: return "None";
    case QFCertificate::OddDimension: return "OddDimension";
    case QFCertificate::GenericPfaffianZero: return "GenericPfaffianZero";
  }
  return "?";
}

Verdict qf_validate(const LieAlgebra& g, const AltForm& beta) {
  const int n = g.dim();
  if (beta.algebra_dim() != n || beta.degree() != 2)
    return Verdict::fail("shape", {}, "beta must be a 2-form on the algebra");
  if (n >= 3) {
    const AltForm d = ce_differential(g, beta);
    if (!d.is_zero()) {
      const auto& [t, v] = *d.coeffs().begin();
      return Verdict::fail("cocycle", {t[0] + 1, t[1] + 1, t[2] + 1},
                           "d beta = " + format_rational(v) + " on this triple");
    }
  }
  if (n % 2 != 0) return Verdict::fail("nondegenerate", {}, "odd dimension");
  const Rational pf = pfaffian(beta.matrix());
  if (sgn(pf) == 0) return Verdict::fail("nondegenerate", {}, "Pfaffian is 0");
  return Verdict::ok();
}

RationalSampler::RationalSampler(std::uint64_t seed) : state_(seed ^ 0x9E3779B97F4A7C15ULL) {
  next_raw();
}

std::uint64_t RationalSampler::next_raw() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_ >> 17;
}

Rational RationalSampler::next(std::int64_t box) {
  const std::int64_t q = 1 + static_cast<std::int64_t>(next_raw() % 4);
  const std::int64_t span = 2 * box * q + 1;
  const std::int64_t p = static_cast<std::int64_t>(next_raw() % static_cast<std::uint64_t>(span)) - box * q;
  return make_rational(p, q);
}

DenseMatrix<Poly> generic_two_form_matrix(const std::vector<AltForm>& basis, int dim) {
  const std::size_t m = basis.size();
  DenseMatrix<Poly> mat(dim, dim, Poly(m));
  for (std::size_t a = 0; a < m; ++a) {
    const Poly t = Poly::variable(m, a);
    for (const auto& [tuple, c] : basis[a].coeffs()) {
      mat(tuple[0], tuple[1]) += c * t;
      mat(tuple[1], tuple[0]) -= c * t;
    }
  }
  return mat;
}

std::optional<AltForm> frobenius_potential(const LieAlgebra& g, const AltForm& beta) {
  const int n = g.dim();
  if (beta.algebra_dim() != n || beta.degree() != 2)
    throw Error(ErrorKind::DimensionMismatch, "beta must be a 2-form on the algebra");
  const RatMatrix d1 = ce_differential_matrix(g, 1);
  const auto x = solve(d1, form_to_vector(beta));
  if (!x) return std::nullopt;
  return vector_to_form(n, 1, *x);
}

QFVerdict find_quasi_frobenius(const LieAlgebra& g, std::uint64_t seed) {
  QFVerdict out;
  const int n = g.dim();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "zero-dimensional algebra carries no 2-forms");
  if (n % 2 != 0) {
    out.certificate = QFCertificate::OddDimension;
    return out;
  }
  out.cocycle_basis = cocycle_space(g, 2);
  const std::size_t m = out.cocycle_basis.size();
  const Poly pf = poly_pfaffian(generic_two_form_matrix(out.cocycle_basis, n));
  out.certificate_poly = pf;
  if (pf.is_zero()) {
    out.certificate = QFCertificate::GenericPfaffianZero;
    return out;
  }

  RationalSampler sampler(seed);
  std::int64_t box = 8;
  std::size_t failures = 0;
  std::vector<Rational> t(m);
  for (;;) {
    for (auto& ti : t) ti = sampler.next(box);
    ++out.attempts;
    if (sgn(pf.evaluate(t)) != 0) break;
    if (++failures % 100 == 0) box *= 2;
    // P is a nonzero polynomial, so zeros cannot fill ever-wider boxes.
    if (out.attempts > 100000) throw std::logic_error("witness search did not terminate");
  }
  AltForm witness(n, 2);
  for (std::size_t a = 0; a < m; ++a) witness += t[a] * out.cocycle_basis[a];
  out.witness = witness;
  out.potential = frobenius_potential(g, witness);
  out.status = out.potential ? QFStatus::Frobenius : QFStatus::QuasiFrobenius;
  return out;
}

}  // namespace tsg
