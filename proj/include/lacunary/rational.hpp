#ifndef LACUNARY_RATIONAL_HPP
#define LACUNARY_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lacunary {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical fractional part of a rational: q - floor(q), always in [0,1).
inline Rational frac(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

inline BigInt floor_of(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return fl;
}

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt two_pow(unsigned long exp) { return pow_ui(2, exp); }

/// Renders a double with 17 significant digits (round-trip precision).
inline std::string to_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_decimal(const Rational& q) { return to_decimal(q.get_d()); }

/// Parses "P/Q", an integer, or a plain decimal such as "0.125" / "-1.5e-3"
/// into an exact rational. Decimals are read as the exact base-10 value.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash), 10);
      BigInt den(s.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }

    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      exponent = std::stol(s.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    for (char c : mantissa) {
      if (c == '.') {
        if (seen_point) throw std::invalid_argument("malformed decimal '" + s + "'");
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point) ++scale;
      } else {
        throw std::invalid_argument("malformed number '" + s + "'");
      }
    }
    if (digits.empty()) throw std::invalid_argument("malformed number '" + s + "'");
    Rational q{BigInt(digits, 10)};
    long shift = exponent - scale;
    if (shift > 0) q *= Rational(pow_ui(10, static_cast<unsigned long>(shift)));
    if (shift < 0) q /= Rational(pow_ui(10, static_cast<unsigned long>(-shift)));
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + s + "'");
  }
}

/// A point of [0,1) held as a reduced fraction num/den, 0 <= num < den.
class UnitRational {
 public:
  UnitRational() = default;

  UnitRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den <= 0) throw std::invalid_argument("UnitRational: denominator must be positive");
    value_.canonicalize();
    check();
  }

  explicit UnitRational(const Rational& q) : value_(q) {
    value_.canonicalize();
    check();
  }

  static UnitRational parse(std::string_view text) { return UnitRational(parse_rational(text)); }

  /// Reduces any rational modulo 1.
  static UnitRational wrap(const Rational& q) { return UnitRational(frac(q)); }

  const Rational& value() const { return value_; }
  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const UnitRational& l, const UnitRational& r) { return l.value_ == r.value_; }
  friend bool operator<(const UnitRational& l, const UnitRational& r) { return l.value_ < r.value_; }

 private:
  void check() const {
    if (value_ < 0 || value_ >= 1)
      throw std::invalid_argument("UnitRational: " + value_.get_str() + " is outside [0,1)");
  }

  Rational value_{0};
};

}  // namespace lacunary

#endif  // LACUNARY_RATIONAL_HPP
