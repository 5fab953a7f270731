#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toricfil {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
// Lattice points and primitive normals fit comfortably in machine integers.
using IntVec = std::vector<long long>;

// gmpxx has no long long overloads; long is 64-bit on the supported targets.
inline Rational rat(long long x) { return Rational(static_cast<long>(x)); }
// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(long long p, long long q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Rational floor_q(const Rational& q);
Rational ceil_q(const Rational& q);
long long floor_ll(const Rational& q);
long long ceil_ll(const Rational& q);
double to_double(const Rational& q);

Vec to_vec(const IntVec& v);
Rational dot(const Vec& a, const Vec& b);
Rational dot(const IntVec& a, const Vec& b);
Rational dot(const Vec& a, const IntVec& b);
long long dot(const IntVec& a, const IntVec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);

bool is_zero(const Vec& v);
bool is_zero(const IntVec& v);
bool is_integral(const Vec& v);
IntVec to_intvec(const Vec& v);

// Positive multiple of v that is a primitive integer vector; v must be nonzero.
IntVec primitive(const Vec& v);
IntVec primitive(const IntVec& v);
// Factor f with primitive(v) = f * v.
Rational primitive_factor(const Vec& v);

std::string to_string(const Vec& v);
std::string to_string(const IntVec& v);

}  // namespace toricfil
