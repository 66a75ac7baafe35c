#pragma once

// Exact integer/rational scalars and closed rational intervals.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "drg/error.hpp"

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline BigInt floor_of(const Rational& r) {
  BigInt q = numerator_of(r) / denominator_of(r);  // truncates toward zero
  if (r < 0 && q * denominator_of(r) != numerator_of(r)) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

inline BigInt pow_big(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
  Rational out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

/// 10^-digits as an exact rational.
inline Rational decimal_tolerance(unsigned digits) {
  return Rational(BigInt(1), pow_big(BigInt(10), digits));
}

/// Floor of the square root for non-negative integers.
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw PreconditionError("isqrt of a negative number");
  return boost::multiprecision::sqrt(v);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Round-half-away decimal rendering with a fixed number of fraction digits.
inline std::string to_decimal(const Rational& r, unsigned digits) {
  const BigInt scale = pow_big(BigInt(10), digits);
  Rational scaled = (r < 0 ? -r : r) * scale + Rational(1, 2);
  BigInt q = floor_of(scaled);
  std::string s = q.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (r < 0 && q != 0) s.insert(0, "-");
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Closed interval [lo, hi] with rational endpoints. Degenerate when lo == hi.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(Rational v) : lo_(v), hi_(std::move(v)) {}  // NOLINT implicit
  RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) std::swap(lo_, hi_);
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  /// -1, 0 or +1 when the sign is constant over the interval; 0 also for the zero point.
  /// Returns 2 when the interval straddles zero.
  int sign() const {
    if (lo_ > 0) return 1;
    if (hi_ < 0) return -1;
    if (lo_ == 0 && hi_ == 0) return 0;
    return 2;
  }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    if (a.is_point() && b.is_point()) return RationalInterval(a.lo_ * b.lo_);
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw PrecisionError("interval division by an interval containing zero");
    RationalInterval inv(Rational(1) / b.hi_, Rational(1) / b.lo_);
    return a * inv;
  }
  RationalInterval& operator+=(const RationalInterval& o) { return *this = *this + o; }
  RationalInterval& operator-=(const RationalInterval& o) { return *this = *this - o; }
  RationalInterval& operator*=(const RationalInterval& o) { return *this = *this * o; }

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) {
  if (iv.is_point()) return os << to_string(iv.lo());
  return os << "[" << to_string(iv.lo()) << ", " << to_string(iv.hi()) << "]";
}

}  // namespace drg
