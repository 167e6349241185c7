#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "polestrata/error.hpp"

namespace polestrata {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  auto bad = [&] { return Error(Errc::MalformedDatum, "bad rational '" + text + "'"); };
  auto is_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw bad();
    return Rational(BigInt(s[0] == '+' ? s.substr(1) : s));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!is_int(a) || !is_int(b)) throw bad();
  BigInt den(b[0] == '+' ? b.substr(1) : b);
  if (den == 0) throw bad();
  return Rational(BigInt(a[0] == '+' ? a.substr(1) : a), den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

struct Cx {
  Rational re, im;

  Cx() = default;
  Cx(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Cx(long long r, long long i) : re(r), im(i) {}

  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator-() const { return {-re, -im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator*(const Rational& k) const { return {re * k, im * k}; }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  bool operator==(const Cx& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Cx& o) const { return !(*this == o); }
  bool operator<(const Cx& o) const { return re < o.re || (re == o.re && im < o.im); }

  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm2() const { return re * re + im * im; }
  double arg() const { return std::atan2(to_double(im), to_double(re)); }
  double abs() const { return std::sqrt(to_double(norm2())); }
};

inline Rational cross(const Cx& a, const Cx& b) { return a.re * b.im - a.im * b.re; }
inline Rational dot(const Cx& a, const Cx& b) { return a.re * b.re + a.im * b.im; }

inline std::string to_string(const Cx& z) { return "(" + to_string(z.re) + "," + to_string(z.im) + ")"; }

// Signed turning angle from direction a to direction b, in (-pi, pi].
inline double turn(const Cx& a, const Cx& b) {
  return std::atan2(to_double(cross(a, b)), to_double(dot(a, b)));
}

inline long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace polestrata
