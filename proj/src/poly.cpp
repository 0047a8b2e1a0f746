#include "tsg/poly.hpp"

#include <cctype>
#include <sstream>

#include "tsg/error.hpp"

namespace tsg {

namespace {

void require_same_vars(const Poly& a, const Poly& b) {
  if (a.num_vars() != b.num_vars())
    throw Error(ErrorKind::DimensionMismatch,
                "polynomials over " + std::to_string(a.num_vars()) + " and " +
                    std::to_string(b.num_vars()) + " variables");
}

}  // namespace

Poly Poly::constant(std::size_t num_vars, const Rational& c) {
  Poly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars)
    throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
  Exponent e(num_vars, 0);
  e[var] = 1;
  Poly p(num_vars);
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(const Exponent& exps, const Rational& c) {
  Poly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponent(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void Poly::add_term(const Exponent& exps, const Rational& c) {
  if (exps.size() != num_vars_)
    throw Error(ErrorKind::DimensionMismatch, "exponent tuple length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  Poly out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_)
    throw Error(ErrorKind::DimensionMismatch, "evaluation point dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

double Poly::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_)
    throw Error(ErrorKind::DimensionMismatch, "evaluation point dimension");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Poly::to_string(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool has_vars = false;
    for (auto x : e) has_vars = has_vars || x != 0;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!has_vars || mag != 1) {
      os << format_rational(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly poly_diff(const Poly& p, std::size_t var) {
  if (var >= p.num_vars())
    throw Error(ErrorKind::DimensionMismatch, "derivative variable out of range");
  Poly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, std::string_view prefix)
      : s_(text), n_(nvars), prefix_(prefix) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedInput,
                "polynomial '" + std::string(s_) + "': " + why + " at offset " +
                    std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (accept('*')) p = p * unary();
    return p;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      Integer e = digits();
      if (e > 64) fail("exponent too large");
      Poly out = Poly::constant(n_, Rational(1));
      for (long k = 0; k < e.get_si(); ++k) out = out * base;
      return out;
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) den = digits();
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return Poly::constant(n_, r);
    }
    if (s_.substr(pos_, prefix_.size()) == prefix_) {
      pos_ += prefix_.size();
      Integer idx = digits();
      if (idx < 1 || idx > static_cast<long>(n_)) fail("variable index out of range");
      return Poly::variable(n_, idx.get_ui() - 1);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t n_;
  std::string_view prefix_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t num_vars, std::string_view prefix) {
  return PolyParser(text, num_vars, prefix).parse();
}

}  // namespace tsg
