#include "toricfil/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "toricfil/error.hpp"

namespace toricfil {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NormalOutsideCone: return "NormalOutsideCone";
    case ErrorKind::PointOutsideDualCone: return "PointOutsideDualCone";
    case ErrorKind::NotCobounded: return "NotCobounded";
    case ErrorKind::ConeMismatch: return "ConeMismatch";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotInteriorValuation: return "NotInteriorValuation";
    case ErrorKind::NoCommonBound: return "NoCommonBound";
    case ErrorKind::OutOfRangeT: return "OutOfRangeT";
    case ErrorKind::ToleranceTooTight: return "ToleranceTooTight";
    case ErrorKind::NotQGorenstein: return "NotQGorenstein";
    case ErrorKind::NotKlt: return "NotKlt";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  return Integer(str, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

static long long checked_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::ValidationError, "integer out of machine range");
  return z.get_si();
}

long long floor_ll(const Rational& q) { return checked_ll(floor_q(q).get_num()); }
long long ceil_ll(const Rational& q) { return checked_ll(ceil_q(q).get_num()); }
double to_double(const Rational& q) { return q.get_d(); }

Vec to_vec(const IntVec& v) {
  Vec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * static_cast<long>(a[i]);
  return s;
}

Rational dot(const Vec& a, const IntVec& b) { return dot(b, a); }

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const Vec& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVec to_intvec(const Vec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw Error(ErrorKind::ValidationError, "non-integral coordinate");
    r.push_back(checked_ll(x.get_num()));
  }
  return r;
}

Rational primitive_factor(const Vec& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) throw Error(ErrorKind::ValidationError, "zero vector has no primitive form");
  Rational r(l, g);
  r.canonicalize();
  return r;
}

IntVec primitive(const Vec& v) { return to_intvec(scale(v, primitive_factor(v))); }

IntVec primitive(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw Error(ErrorKind::ValidationError, "zero vector has no primitive form");
  IntVec r(v);
  for (auto& x : r) x /= g;
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace toricfil
