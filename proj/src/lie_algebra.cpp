#include "tsg/lie_algebra.hpp"

#include <regex>

#include "tsg/linalg.hpp"

namespace tsg {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)) {
  if (dim < 0) throw Error(ErrorKind::DimensionMismatch, "negative dimension");
  if (names_.empty())
    for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != dim)
    throw Error(ErrorKind::DimensionMismatch, "basis name count differs from dimension");
  c_.assign(static_cast<std::size_t>(dim) * (dim > 0 ? dim - 1 : 0) / 2,
            RatVector(dim, Rational(0)));
}

std::size_t LieAlgebra::pair_index(int i, int j) const {
  // i < j, row-major over the strict upper triangle.
  return static_cast<std::size_t>(i) * (2 * dim_ - i - 1) / 2 + (j - i - 1);
}

void LieAlgebra::add_bracket(int i, int j, int k, const Rational& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
  if (i == j) throw Error(ErrorKind::MalformedInput, "bracket [e_i, e_i] must vanish");
  if (i < j)
    c_[pair_index(i, j)][k] += c;
  else
    c_[pair_index(j, i)][k] -= c;
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i == j) return 0;
  if (i < j) return c_[pair_index(i, j)][k];
  return -c_[pair_index(j, i)][k];
}

RatVector LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return RatVector(dim_, Rational(0));
  if (i < j) return c_[pair_index(i, j)];
  RatVector v = c_[pair_index(j, i)];
  for (auto& x : v) x = -x;
  return v;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw Error(ErrorKind::DimensionMismatch, "bracket argument dimension");
  RatVector out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      const Rational s = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Rational c = structure_constant(i, j, k);
        if (sgn(c) != 0) out[k] += s * c;
      }
    }
  }
  return out;
}

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Rational& c = c_[pair_index(i, j)][k];
        if (sgn(c) != 0) out.push_back({i, j, k, c});
      }
  return out;
}

Verdict validate(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m) {
            s += g.structure_constant(i, j, m) * g.structure_constant(m, k, l);
            s += g.structure_constant(j, k, m) * g.structure_constant(m, i, l);
            s += g.structure_constant(k, i, m) * g.structure_constant(m, j, l);
          }
          if (sgn(s) != 0)
            return Verdict::fail("jacobi", {i + 1, j + 1, k + 1, l + 1},
                                 "cyclic sum component = " + format_rational(s));
        }
  return Verdict::ok();
}

namespace {

void add_so3(LieAlgebra& g, int off) {
  g.add_bracket(off + 0, off + 1, off + 2, Rational(1));
  g.add_bracket(off + 1, off + 2, off + 0, Rational(1));
  g.add_bracket(off + 2, off + 0, off + 1, Rational(1));
}

}  // namespace

LieAlgebra catalog(const std::string& name) {
  static const std::regex abelian_re(R"(abelian\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, abelian_re)) {
    const int n = std::stoi(m[1].str());
    if (n < 0 || n > 64) throw Error(ErrorKind::UnknownName, "abelian dimension out of range: " + name);
    return LieAlgebra(n);
  }
  if (name == "aff(1)") {
    LieAlgebra g(2);
    g.add_bracket(0, 1, 1, Rational(1));
    return g;
  }
  if (name == "heisenberg3") {
    LieAlgebra g(3);
    g.add_bracket(0, 1, 2, Rational(1));
    return g;
  }
  if (name == "h3_plus_R") {
    LieAlgebra g(4);
    g.add_bracket(0, 1, 2, Rational(1));
    return g;
  }
  if (name == "so(3)") {
    LieAlgebra g(3);
    add_so3(g, 0);
    return g;
  }
  if (name == "sl(2)") {
    LieAlgebra g(3, {"h", "e", "f"});
    g.add_bracket(0, 1, 1, Rational(2));
    g.add_bracket(0, 2, 2, Rational(-2));
    g.add_bracket(1, 2, 0, Rational(1));
    return g;
  }
  if (name == "so3_plus_so3") {
    LieAlgebra g(6);
    add_so3(g, 0);
    add_so3(g, 3);
    return g;
  }
  if (name == "oscillator4") {
    LieAlgebra g(4);
    g.add_bracket(0, 1, 2, Rational(1));
    g.add_bracket(0, 2, 1, Rational(-1));
    g.add_bracket(1, 2, 3, Rational(1));
    return g;
  }
  throw Error(ErrorKind::UnknownName, "no catalog algebra named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(3)", "aff(1)", "heisenberg3", "h3_plus_R",
          "so(3)",      "sl(2)",  "so3_plus_so3", "oscillator4"};
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  std::vector<std::string> names = g.basis_names();
  for (const auto& s : h.basis_names()) names.push_back(s);
  // Keep names unique when both sides use the default e1..en.
  bool default_names = true;
  for (int i = 0; i < g.dim(); ++i) default_names = default_names && g.basis_names()[i] == "e" + std::to_string(i + 1);
  for (int i = 0; i < h.dim(); ++i) default_names = default_names && h.basis_names()[i] == "e" + std::to_string(i + 1);
  LieAlgebra out = default_names ? LieAlgebra(g.dim() + h.dim()) : LieAlgebra(g.dim() + h.dim(), names);
  for (const auto& e : g.entries()) out.add_bracket(e.i, e.j, e.k, e.c);
  for (const auto& e : h.entries()) out.add_bracket(e.i + g.dim(), e.j + g.dim(), e.k + g.dim(), e.c);
  return out;
}

namespace {

// Rows: one per (a<b, l); columns: the n*n unknowns D(r,c) at r*n + c.
RatMatrix derivation_system(const LieAlgebra& g) {
  const int n = g.dim();
  const int pairs = n * (n - 1) / 2;
  RatMatrix sys = zero_matrix(static_cast<std::size_t>(pairs) * n, static_cast<std::size_t>(n) * n);
  std::size_t row = 0;
  auto u = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int l = 0; l < n; ++l, ++row)
        for (int m = 0; m < n; ++m) {
          // D[e_a,e_b]_l = sum_k c^k_ab D(l,k)
          sys(row, u(l, m)) += g.structure_constant(a, b, m);
          // -[De_a, e_b]_l = -sum_m D(m,a) c^l_mb
          sys(row, u(m, a)) -= g.structure_constant(m, b, l);
          // -[e_a, De_b]_l = -sum_m D(m,b) c^l_am
          sys(row, u(m, b)) -= g.structure_constant(a, m, l);
        }
  return sys;
}

std::vector<LinearMap> reshape_all(const std::vector<RatVector>& vs, int n) {
  std::vector<LinearMap> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    LinearMap d = zero_matrix(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) d(r, c) = v[static_cast<std::size_t>(r) * n + c];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::vector<LinearMap> derivations(const LieAlgebra& g) {
  const int n = g.dim();
  if (n == 0) return {};
  return reshape_all(nullspace(derivation_system(g)), n);
}

std::vector<LinearMap> symplectic_derivations(const LieAlgebra& g, const AltForm& beta) {
  const int n = g.dim();
  if (beta.algebra_dim() != n || beta.degree() != 2)
    throw Error(ErrorKind::DimensionMismatch, "beta must be a 2-form on the algebra");
  const RatMatrix b = beta.matrix();
  if (n % 2 != 0 || sgn(pfaffian(b)) == 0)
    throw Error(ErrorKind::DegenerateForm, "beta is degenerate");
  const RatMatrix der = derivation_system(g);
  const std::size_t extra = static_cast<std::size_t>(n) * (n - 1) / 2;
  RatMatrix sys = zero_matrix(der.rows() + extra, der.cols());
  for (std::size_t r = 0; r < der.rows(); ++r)
    for (std::size_t c = 0; c < der.cols(); ++c) sys(r, c) = der(r, c);
  std::size_t row = der.rows();
  auto u = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++row)
      for (int m = 0; m < n; ++m) {
        sys(row, u(m, i)) += b(m, j);  // beta(De_i, e_j)
        sys(row, u(m, j)) += b(i, m);  // beta(e_i, De_j)
      }
  return reshape_all(nullspace(sys), n);
}

RatVector derivation_defect(const LieAlgebra& g, const LinearMap& d) {
  const int n = g.dim();
  auto unit = [n](int i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    return e;
  };
  RatVector out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const RatVector lhs = d * g.bracket_basis(a, b);
      const RatVector r1 = g.bracket(d.column(a), unit(b));
      const RatVector r2 = g.bracket(unit(a), d.column(b));
      for (int l = 0; l < n; ++l) out.push_back(lhs[l] - r1[l] - r2[l]);
    }
  return out;
}

Verdict automorphism_check(const LieAlgebra& g, const AltForm& beta, const LinearMap& a) {
  const int n = g.dim();
  if (static_cast<int>(a.rows()) != n || static_cast<int>(a.cols()) != n)
    return Verdict::fail("shape", {}, "map is not " + std::to_string(n) + "x" + std::to_string(n));
  if (beta.algebra_dim() != n || beta.degree() != 2)
    throw Error(ErrorKind::DimensionMismatch, "beta must be a 2-form on the algebra");
  if (sgn(determinant(a)) == 0) return Verdict::fail("invertible", {}, "det = 0");
  const RatMatrix b = beta.matrix();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RatVector lhs = a * g.bracket_basis(i, j);
      const RatVector rhs = g.bracket(a.column(i), a.column(j));
      if (lhs != rhs) return Verdict::fail("bracket", {i + 1, j + 1}, "A[e_i,e_j] != [Ae_i,Ae_j]");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RatVector ci = a.column(i), cj = a.column(j);
      Rational v = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) v += ci[p] * b(p, q) * cj[q];
      if (v != b(i, j))
        return Verdict::fail("form", {i + 1, j + 1},
                             "beta(Ae_i,Ae_j) = " + format_rational(v) + " but beta(e_i,e_j) = " +
                                 format_rational(b(i, j)));
    }
  return Verdict::ok();
}

RatMatrix derived_algebra_generators(const LieAlgebra& g) {
  const int n = g.dim();
  const int pairs = n * (n - 1) / 2;
  RatMatrix m = zero_matrix(n, pairs);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col) {
      const RatVector v = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) m(k, col) = v[k];
    }
  return m;
}

}  // namespace tsg
