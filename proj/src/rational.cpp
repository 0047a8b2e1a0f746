#include "tsg/rational.hpp"

#include <cmath>
#include <string>

#include "tsg/error.hpp"

namespace tsg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::OddRank: return "OddRank";
    case ErrorKind::FiberAlgebraMismatch: return "FiberAlgebraMismatch";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::RoundingUnstable: return "RoundingUnstable";
    case ErrorKind::PreconditionNotVerified: return "PreconditionNotVerified";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::MalformedInput, "not a rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::MalformedInput, "zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(10); }

Rational best_rational_approximation(double value, std::int64_t max_den) {
  // Convergents p_k/q_k of the continued fraction; stop before q exceeds
  // max_den, then compare the last convergent with the best semiconvergent.
  if (!std::isfinite(value))
    throw Error(ErrorKind::RoundingUnstable, "non-finite value");
  const bool negative = value < 0;
  double x = std::fabs(value);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(frac);
    Integer a(a_d);
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) {
      Integer kmax = (Integer(max_den) - q0) / q1;
      Integer ps = kmax * p1 + p0, qs = kmax * q1 + q0;
      Rational conv(p1, q1), semi(ps, qs);
      conv.canonicalize();
      semi.canonicalize();
      const double dc = std::fabs(conv.get_d() - x);
      const double ds = std::fabs(semi.get_d() - x);
      Rational best = ds < dc ? semi : conv;
      return negative ? Rational(-best) : best;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double rem = frac - a_d;
    if (rem < 1e-300) break;
    frac = 1.0 / rem;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace tsg
