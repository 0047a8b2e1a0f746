#include "tsg/poly_algebroid.hpp"

#include <sstream>

namespace tsg {

namespace {

std::string field_to_string(const PolyVectorField& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (i) out += ", ";
    out += v.components[i].to_string();
  }
  return out + "]";
}

std::string section_to_string(const Section& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].to_string();
  }
  return out + "]";
}

bool is_zero_section(const Section& s) {
  for (const auto& p : s)
    if (!p.is_zero()) return false;
  return true;
}

bool is_zero_field(const PolyVectorField& v) {
  for (const auto& p : v.components)
    if (!p.is_zero()) return false;
  return true;
}

Section add(Section a, const Section& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Section scale(const Poly& f, Section s) {
  for (auto& p : s) p = f * p;
  return s;
}

}  // namespace

PolyVectorField PolyVectorField::zero(std::size_t n) {
  return {std::vector<Poly>(n, Poly(n))};
}

Poly PolyVectorField::apply(const Poly& f) const {
  Poly out(f.num_vars());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    out += components[i] * poly_diff(f, i);
  }
  return out;
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  if (v.chart_dim() != w.chart_dim())
    throw Error(ErrorKind::DimensionMismatch, "vector fields on different charts");
  PolyVectorField out = PolyVectorField::zero(v.chart_dim());
  for (std::size_t i = 0; i < v.chart_dim(); ++i)
    out.components[i] = v.apply(w.components[i]) - w.apply(v.components[i]);
  return out;
}

PolyAlgebroid::PolyAlgebroid(std::size_t rank, std::size_t chart_dim)
    : rank_(rank),
      chart_dim_(chart_dim),
      anchor_(rank, chart_dim, Poly(chart_dim)),
      structure_(rank * (rank > 0 ? rank - 1 : 0) / 2, Section(rank, Poly(chart_dim))) {}

PolyAlgebroid PolyAlgebroid::tangent(std::size_t n) {
  PolyAlgebroid a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.set_anchor(i, i, a.one());
  return a;
}

PolyAlgebroid PolyAlgebroid::point(const LieAlgebra& g) {
  PolyAlgebroid a(g.dim(), 0);
  for (const auto& e : g.entries()) a.add_structure(e.i, e.j, e.k, Poly::constant(0, e.c));
  return a;
}

void PolyAlgebroid::set_anchor(std::size_t a, std::size_t i, Poly p) {
  if (a >= rank_ || i >= chart_dim_ || p.num_vars() != chart_dim_)
    throw Error(ErrorKind::DimensionMismatch, "anchor entry out of range");
  anchor_(a, i) = std::move(p);
}

PolyVectorField PolyAlgebroid::anchor_field(std::size_t a) const {
  PolyVectorField v;
  v.components.assign(anchor_.row(a).begin(), anchor_.row(a).end());
  return v;
}

std::size_t PolyAlgebroid::pair_index(std::size_t a, std::size_t b) const {
  // a < b, row-major over the strict upper triangle
  return a * (2 * rank_ - a - 1) / 2 + (b - a - 1);
}

Section PolyAlgebroid::structure(std::size_t a, std::size_t b) const {
  if (a == b) return Section(rank_, zero());
  if (a < b) return structure_[pair_index(a, b)];
  Section s = structure_[pair_index(b, a)];
  for (auto& p : s) p = -p;
  return s;
}

void PolyAlgebroid::add_structure(std::size_t a, std::size_t b, std::size_t c, const Poly& p) {
  if (a >= rank_ || b >= rank_ || c >= rank_ || p.num_vars() != chart_dim_)
    throw Error(ErrorKind::DimensionMismatch, "structure entry out of range");
  if (a == b) throw Error(ErrorKind::MalformedInput, "bracket of a section with itself");
  if (a < b)
    structure_[pair_index(a, b)][c] += p;
  else
    structure_[pair_index(b, a)][c] -= p;
}

Section PolyAlgebroid::basis_section(std::size_t a) const {
  Section s(rank_, zero());
  s[a] = one();
  return s;
}

PolyVectorField PolyAlgebroid::anchor_of(const Section& x) const {
  PolyVectorField v = PolyVectorField::zero(chart_dim_);
  for (std::size_t a = 0; a < rank_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t i = 0; i < chart_dim_; ++i)
      if (!anchor_(a, i).is_zero()) v.components[i] += x[a] * anchor_(a, i);
  }
  return v;
}

Section PolyAlgebroid::bracket(const Section& x, const Section& y) const {
  if (x.size() != rank_ || y.size() != rank_)
    throw Error(ErrorKind::DimensionMismatch, "section length differs from rank");
  Section out(rank_, zero());
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = a + 1; b < rank_; ++b) {
      const Poly coeff = x[a] * y[b] - x[b] * y[a];
      if (coeff.is_zero()) continue;
      out = add(std::move(out), scale(coeff, structure_[pair_index(a, b)]));
    }
  const PolyVectorField rx = anchor_of(x);
  const PolyVectorField ry = anchor_of(y);
  for (std::size_t c = 0; c < rank_; ++c) out[c] += rx.apply(y[c]) - ry.apply(x[c]);
  return out;
}

PolyAlgebroidForm::PolyAlgebroidForm(std::size_t rank, std::size_t chart_dim, int degree)
    : rank_(rank), chart_dim_(chart_dim), degree_(degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) > rank)
    throw Error(ErrorKind::DimensionMismatch, "form degree exceeds rank");
}

PolyAlgebroidForm PolyAlgebroidForm::from_alt_form(const AltForm& f, std::size_t chart_dim) {
  PolyAlgebroidForm out(f.algebra_dim(), chart_dim, f.degree());
  for (const auto& [t, c] : f.coeffs()) out.set(t, Poly::constant(chart_dim, c));
  return out;
}

void PolyAlgebroidForm::set(const IndexTuple& tuple, const Poly& p) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw Error(ErrorKind::DimensionMismatch, "tuple length differs from degree");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || static_cast<std::size_t>(tuple[i]) >= rank_)
      throw Error(ErrorKind::DimensionMismatch, "section index out of range");
    if (i > 0 && tuple[i] <= tuple[i - 1])
      throw Error(ErrorKind::MalformedInput, "form keys must be strictly increasing");
  }
  if (p.num_vars() != chart_dim_) throw Error(ErrorKind::DimensionMismatch, "coefficient chart");
  if (p.is_zero())
    coeffs_.erase(tuple);
  else
    coeffs_[tuple] = p;
}

Poly PolyAlgebroidForm::evaluate(const IndexTuple& tuple) const {
  IndexTuple sorted = tuple;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Poly(chart_dim_);
  const auto it = coeffs_.find(sorted);
  if (it == coeffs_.end()) return Poly(chart_dim_);
  return sign > 0 ? it->second : -it->second;
}

PolyMatrix PolyAlgebroidForm::matrix() const {
  if (degree_ != 2) throw Error(ErrorKind::DimensionMismatch, "Gram matrix needs a 2-form");
  PolyMatrix m(rank_, rank_, Poly(chart_dim_));
  for (const auto& [t, p] : coeffs_) {
    m(t[0], t[1]) = p;
    m(t[1], t[0]) = -p;
  }
  return m;
}

std::string PolyAlgebroidForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, p] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << p.to_string() << ')';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "^" : "*") << 'e' << t[i] + 1;
  }
  return os.str();
}

std::vector<PolyVectorField> induced_action_fields(const std::vector<RatMatrix>& basis,
                                                   std::size_t chart_dim, MatrixActionKind kind) {
  const std::size_t size = kind == MatrixActionKind::Linear ? chart_dim : chart_dim + 1;
  std::vector<PolyVectorField> out;
  for (const auto& x : basis) {
    if (x.rows() != size || x.cols() != size)
      throw Error(ErrorKind::DimensionMismatch, "basis matrix does not match the chart");
    PolyVectorField v = PolyVectorField::zero(chart_dim);
    for (std::size_t i = 0; i < chart_dim; ++i) {
      Poly c(chart_dim);
      for (std::size_t j = 0; j < chart_dim; ++j)
        if (sgn(x(i, j)) != 0) c -= x(i, j) * Poly::variable(chart_dim, j);
      if (kind == MatrixActionKind::Affine && sgn(x(i, chart_dim)) != 0)
        c -= Poly::constant(chart_dim, x(i, chart_dim));
      v.components[i] = std::move(c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

PolyAlgebroid action_algebroid(const LieAlgebra& g, const std::vector<PolyVectorField>& action) {
  const int r = g.dim();
  if (static_cast<int>(action.size()) != r)
    throw Error(ErrorKind::DimensionMismatch, "need one vector field per basis element");
  const std::size_t n = r == 0 ? 0 : action.front().chart_dim();
  for (const auto& v : action) {
    if (v.chart_dim() != n) throw Error(ErrorKind::DimensionMismatch, "fields on different charts");
    for (const auto& p : v.components)
      if (p.num_vars() != n) throw Error(ErrorKind::DimensionMismatch, "component variable count");
  }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      PolyVectorField defect = lie_bracket(action[a], action[b]);
      for (int c = 0; c < r; ++c) {
        const Rational k = g.structure_constant(a, b, c);
        if (sgn(k) == 0) continue;
        for (std::size_t i = 0; i < n; ++i) defect.components[i] -= k * action[c].components[i];
      }
      if (!is_zero_field(defect))
        throw Error(ErrorKind::NotAnAction,
                    "[x_M, y_M] differs from [x, y]_M on basis pair (" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ")",
                    {a + 1, b + 1}, field_to_string(defect));
    }
  PolyAlgebroid out(r, n);
  for (int a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i) out.set_anchor(a, i, action[a].components[i]);
  for (const auto& e : g.entries()) out.add_structure(e.i, e.j, e.k, Poly::constant(n, e.c));
  return out;
}

PolyAlgebroidForm algebroid_differential(const PolyAlgebroid& a, const PolyAlgebroidForm& form) {
  const std::size_t r = a.rank();
  const std::size_t n = a.chart_dim();
  if (form.rank() != r || form.chart_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "form lives on a different algebroid");
  const int k = form.degree();
  if (static_cast<std::size_t>(k) >= r) return PolyAlgebroidForm(r, n, k);
  PolyAlgebroidForm out(r, n, k + 1);
  for (const auto& tuple : increasing_tuples(static_cast<int>(r), k + 1)) {
    const int len = k + 1;
    Poly total(n);
    // anchor terms: sum_i (-1)^i rho(eps_{j_i}) [w(.. ^i ..)]
    for (int i = 0; i < len; ++i) {
      IndexTuple rest;
      for (int q = 0; q < len; ++q)
        if (q != i) rest.push_back(tuple[q]);
      const Poly w = form.evaluate(rest);
      if (w.is_zero()) continue;
      const Poly term = a.anchor_field(tuple[i]).apply(w);
      if (i % 2 == 0)
        total += term;
      else
        total -= term;
    }
    // bracket terms: sum_{i<j} (-1)^{i+j} w([eps_i, eps_j], .. ^i ^j ..)
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        const Section br = a.structure(tuple[i], tuple[j]);
        IndexTuple rest;
        for (int q = 0; q < len; ++q)
          if (q != i && q != j) rest.push_back(tuple[q]);
        for (std::size_t c = 0; c < r; ++c) {
          if (br[c].is_zero()) continue;
          IndexTuple args{static_cast<int>(c)};
          args.insert(args.end(), rest.begin(), rest.end());
          const Poly w = form.evaluate(args);
          if (w.is_zero()) continue;
          const Poly term = br[c] * w;
          if ((i + j) % 2 == 0)
            total += term;
          else
            total -= term;
        }
      }
    out.set(tuple, total);
  }
  return out;
}

Verdict algebroid_validate(const PolyAlgebroid& a) {
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      PolyVectorField lhs = a.anchor_of(a.structure(i, j));
      const PolyVectorField rhs = lie_bracket(a.anchor_field(i), a.anchor_field(j));
      for (std::size_t q = 0; q < a.chart_dim(); ++q) lhs.components[q] -= rhs.components[q];
      if (!is_zero_field(lhs))
        return Verdict::fail("anchor", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                             "rho([e_a,e_b]) - [rho e_a, rho e_b] = " + field_to_string(lhs));
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        const Section ei = a.basis_section(i), ej = a.basis_section(j), ek = a.basis_section(k);
        Section jac = a.bracket(ei, a.bracket(ej, ek));
        jac = add(std::move(jac), a.bracket(ej, a.bracket(ek, ei)));
        jac = add(std::move(jac), a.bracket(ek, a.bracket(ei, ej)));
        if (!is_zero_section(jac))
          return Verdict::fail("jacobi",
                               {static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)},
                               "Jacobiator = " + section_to_string(jac));
      }
  return Verdict::ok();
}

QFAlgebroidReport qf_algebroid_check(const PolyAlgebroid& a, const PolyAlgebroidForm& omega,
                                     const std::vector<std::vector<Rational>>& sample_points) {
  const std::size_t r = a.rank();
  if (r % 2 != 0) throw Error(ErrorKind::OddRank, "rank " + std::to_string(r) + " is odd");
  if (omega.degree() != 2 || omega.rank() != r || omega.chart_dim() != a.chart_dim())
    throw Error(ErrorKind::DimensionMismatch, "omega must be a 2-form on the algebroid");
  for (const auto& p : sample_points)
    if (p.size() != a.chart_dim()) throw Error(ErrorKind::DimensionMismatch, "sample point length");

  QFAlgebroidReport out;
  const PolyAlgebroidForm d = algebroid_differential(a, omega);
  out.closed = d.is_zero();
  out.pfaffian = poly_pfaffian(omega.matrix());
  out.generically_nondegenerate = !out.pfaffian.is_zero();
  for (std::size_t s = 0; s < sample_points.size(); ++s) {
    out.sample_values.push_back(out.pfaffian.evaluate(sample_points[s]));
    if (sgn(out.sample_values.back()) == 0) out.sample_failures.push_back(s);
  }
  if (!out.closed) {
    const auto& [t, p] = *d.coeffs().begin();
    out.verdict = Verdict::fail("closed", {t[0] + 1, t[1] + 1, t[2] + 1}, "d_A omega = " + p.to_string());
  } else if (!out.generically_nondegenerate) {
    out.verdict = Verdict::fail("nondegenerate", {}, "Pfaffian is identically 0");
  } else {
    out.verdict = Verdict::ok();
    out.verdict.detail = "generically nondegenerate, Pf = " + out.pfaffian.to_string() + "; vanishes at " +
                         std::to_string(out.sample_failures.size()) + " of " +
                         std::to_string(sample_points.size()) + " sample points";
  }
  return out;
}

Verdict algebroid_morphism_check(const PolyAlgebroid& a, const PolyAlgebroid& a_prime,
                                 const PolyMatrix& phi) {
  const std::size_t r = a.rank();
  const std::size_t rp = a_prime.rank();
  if (a.chart_dim() != a_prime.chart_dim())
    throw Error(ErrorKind::DimensionMismatch, "algebroids live on different charts");
  if (phi.rows() != rp || phi.cols() != r)
    throw Error(ErrorKind::DimensionMismatch, "phi must be rank' x rank");
  auto image = [&](const Section& x) {
    Section out(rp, a_prime.zero());
    for (std::size_t b = 0; b < r; ++b) {
      if (x[b].is_zero()) continue;
      for (std::size_t q = 0; q < rp; ++q)
        if (!phi(q, b).is_zero()) out[q] += phi(q, b) * x[b];
    }
    return out;
  };
  for (std::size_t b = 0; b < r; ++b) {
    PolyVectorField lhs = a_prime.anchor_of(phi.column(b));
    const PolyVectorField rhs = a.anchor_field(b);
    for (std::size_t q = 0; q < a.chart_dim(); ++q) lhs.components[q] -= rhs.components[q];
    if (!is_zero_field(lhs))
      return Verdict::fail("anchor", {static_cast<int>(b + 1)},
                           "rho' phi(e_a) - rho(e_a) = " + field_to_string(lhs));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Section lhs = image(a.structure(i, j));
      const Section rhs = a_prime.bracket(phi.column(i), phi.column(j));
      for (std::size_t q = 0; q < rp; ++q) lhs[q] -= rhs[q];
      if (!is_zero_section(lhs))
        return Verdict::fail("bracket", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                             "phi[e_a,e_b] - [phi e_a, phi e_b] = " + section_to_string(lhs));
    }
  return Verdict::ok();
}

}  // namespace tsg
