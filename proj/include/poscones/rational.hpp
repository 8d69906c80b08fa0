#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"

namespace poscones {

// All arithmetic in the library is exact. Integer is arbitrary precision;
// Rational is kept in canonical form by the backend (gcd(num, den) = 1,
// den > 0), which is exactly the invariant the rest of the code assumes.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using ZVec    = std::vector<Integer>;
using QVec    = std::vector<Rational>;
using QMatrix = std::vector<QVec>;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// Serialized form is "p" or "p/q"; this is also the JSON encoding.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

// Parses "p" or "p/q" (optional leading '-'), q > 0. Anything else is a
// ParseError; in particular a zero denominator is rejected here rather than
// surfacing as a backend exception.
inline Rational parse_rational(const std::string& s) {
  auto fail = [&]() -> Rational {
    throw ParseError("invalid rational literal: '" + s + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = (s[i] == '-');
    ++i;
  }
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return fail();
  Integer num(s.substr(num_begin, i - num_begin));
  Integer den = 1;
  if (i < s.size()) {
    if (s[i] != '/') return fail();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) return fail();
    den = Integer(s.substr(den_begin));
    if (den == 0) return fail();
  }
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

inline Integer dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw DimMismatch("dot: vector sizes differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const ZVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimMismatch("dot: vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline bool is_zero(const ZVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Divides out the content. The zero vector is returned unchanged; the
// direction is never flipped.
inline ZVec primitive(ZVec v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Direction-preserving primitive integer form of a rational vector.
inline ZVec primitive_ray(const QVec& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  ZVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = numerator(v[i]) * (l / denominator(v[i]));
  return primitive(std::move(w));
}

inline QVec to_rational(const ZVec& v) {
  QVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rational(v[i]);
  return w;
}

}  // namespace poscones
