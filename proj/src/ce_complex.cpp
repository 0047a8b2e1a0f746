#include "tsg/ce_complex.hpp"

#include "tsg/linalg.hpp"

namespace tsg {

namespace {

// Value of d(form) on the increasing tuple `j`, evaluated directly.
Rational differential_on(const LieAlgebra& g, const AltForm& form, const IndexTuple& j) {
  const int n = g.dim();
  const int len = static_cast<int>(j.size());
  Rational total = 0;
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b) {
      // positions are 1-based in the sign: (-1)^{(a+1)+(b+1)} = (-1)^{a+b}
      const int sign = ((a + b) % 2 == 0) ? 1 : -1;
      IndexTuple rest;
      for (int q = 0; q < len; ++q)
        if (q != a && q != b) rest.push_back(j[q]);
      for (int m = 0; m < n; ++m) {
        const Rational c = g.structure_constant(j[a], j[b], m);
        if (sgn(c) == 0) continue;
        IndexTuple args;
        args.push_back(m);
        args.insert(args.end(), rest.begin(), rest.end());
        const Rational v = form.evaluate(args);
        if (sgn(v) == 0) continue;
        if (sign > 0)
          total += c * v;
        else
          total -= c * v;
      }
    }
  return total;
}

}  // namespace

AltForm ce_differential(const LieAlgebra& g, const AltForm& form) {
  const int n = g.dim();
  const int k = form.degree();
  if (form.algebra_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "form lives on a different algebra");
  if (k >= n) throw Error(ErrorKind::DegreeOverflow, "degree " + std::to_string(k) + " is top degree");
  AltForm out(n, k + 1);
  for (const auto& tuple : increasing_tuples(n, k + 1)) out.set(tuple, differential_on(g, form, tuple));
  return out;
}

RatMatrix ce_differential_matrix(const LieAlgebra& g, int k) {
  const int n = g.dim();
  const auto src = increasing_tuples(n, k);
  const auto dst = increasing_tuples(n, k + 1);
  RatMatrix m = zero_matrix(dst.size(), src.size());
  if (dst.empty()) return m;
  for (std::size_t c = 0; c < src.size(); ++c) {
    AltForm basis(n, k);
    basis.set(src[c], Rational(1));
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = differential_on(g, basis, dst[r]);
  }
  return m;
}

RatVector form_to_vector(const AltForm& form) {
  const auto tuples = increasing_tuples(form.algebra_dim(), form.degree());
  RatVector v(tuples.size(), Rational(0));
  for (const auto& [t, c] : form.coeffs()) v[tuple_rank(t, form.algebra_dim())] = c;
  return v;
}

AltForm vector_to_form(int n, int k, const RatVector& v) {
  const auto tuples = increasing_tuples(n, k);
  if (tuples.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient vector length");
  AltForm f(n, k);
  for (std::size_t i = 0; i < tuples.size(); ++i) f.set(tuples[i], v[i]);
  return f;
}

std::vector<AltForm> cocycle_space(const LieAlgebra& g, int k) {
  const int n = g.dim();
  if (k < 0 || k > n) throw Error(ErrorKind::DimensionMismatch, "degree out of range");
  std::vector<AltForm> out;
  if (k == n) {
    for (const auto& t : increasing_tuples(n, k)) {
      AltForm f(n, k);
      f.set(t, Rational(1));
      out.push_back(std::move(f));
    }
    return out;
  }
  for (const auto& v : nullspace(ce_differential_matrix(g, k))) out.push_back(vector_to_form(n, k, v));
  return out;
}

std::vector<std::size_t> betti(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<std::size_t> ranks(n + 1, 0);  // rank of d on degree k
  for (int k = 0; k < n; ++k) ranks[k] = rank(ce_differential_matrix(g, k));
  std::vector<std::size_t> b(n + 1);
  for (int k = 0; k <= n; ++k) {
    const std::size_t chains = increasing_tuples(n, k).size();
    const std::size_t cocycles = chains - ranks[k];
    const std::size_t boundaries = k == 0 ? 0 : ranks[k - 1];
    b[k] = cocycles - boundaries;
  }
  return b;
}

}  // namespace tsg
