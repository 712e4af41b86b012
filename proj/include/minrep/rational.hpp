#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minrep {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Parses "p", "-p/q" or "p/q" with arbitrary-size integers.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rat_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational: negative power of zero");
    return Rational(1) / rat_pow(base, -exponent);
  }
  Rational acc(1), b(base);
  long e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

/// Largest integer n with n <= q.
inline BigInt rat_floor(const Rational& q) {
  BigInt n = rat_num(q), d = rat_den(q);
  BigInt quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

/// Element of Q(i): re + i*im with exact rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("gaussian rational: division by zero");
    GaussianRational num = a * b.conj();
    return {num.re / n2, num.im / n2};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  if (z.re == 0) return to_string(z.im) + "*i";
  return to_string(z.re) + (z.im > 0 ? "+" : "") + to_string(z.im) + "*i";
}

}  // namespace minrep
