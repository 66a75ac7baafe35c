#pragma once

// Univariate polynomials over Q and Sturm-sequence root counting.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drg/exact.hpp"

namespace drg {

/// Dense polynomial, coefficients stored lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  /// x - root
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  bool has_integer_coeffs() const {
    for (const auto& v : c_)
      if (!is_integral(v)) return false;
    return true;
  }

  Rational operator()(const Rational& x) const {
    if (c_.empty()) return 0;
    BigInt den = pow_big(denominator_of(x), static_cast<unsigned>(degree())) * scale_;
    return make_rational(homogeneous(x), den);
  }

  /// Natural interval extension via Horner's scheme.
  RationalInterval operator()(const RationalInterval& x) const {
    if (x.is_point()) return RationalInterval((*this)(x.lo()));
    RationalInterval acc(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + RationalInterval(*it);
    return acc;
  }

  int sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const BigInt v = homogeneous(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> out = c_;
    Rational lead = c_.back();
    for (auto& v : out) v /= lead;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) - b.coeff(int(i));
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out = p.c_;
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(a.degree() - db + 1);
    const Rational lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
      Rational f = rem[i] / lead;
      quot[i - db] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Monic greatest common divisor.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    scale_ = 1;
    for (const auto& v : c_) scale_ = boost::multiprecision::lcm(scale_, denominator_of(v));
    ic_.clear();
    for (const auto& v : c_) ic_.push_back(numerator_of(v) * (scale_ / denominator_of(v)));
  }

  // scale * q^deg * p(x) at x = num/q, in integers only.
  BigInt homogeneous(const Rational& x) const {
    const BigInt num = numerator_of(x), q = denominator_of(x);
    BigInt acc = ic_.back(), qpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      qpow *= q;
      acc = acc * num + ic_[i] * qpow;
    }
    return acc;
  }

  std::vector<Rational> c_;
  std::vector<BigInt> ic_;  // c_ scaled to integers by scale_
  BigInt scale_{1};
};

inline std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    Rational mag = v < 0 ? Rational(-v) : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    bool show_coeff = (mag != 1) || i == 0;
    if (show_coeff) out += to_string(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

/// Sturm chain of a polynomial; counts distinct real roots in half-open
/// intervals (a, b].
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative());
    while (true) {
      Polynomial r = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  int variations_at(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : chain_) {
      int s = q.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace drg
