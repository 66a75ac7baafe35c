#pragma once

// Exact spectral data of an intersection array: the characteristic
// polynomial of the tridiagonal intersection matrix, its D+1 distinct
// eigenvalues (integers found exactly, irrational roots isolated by Sturm
// bisection over the rationals), standard sequences and multiplicities.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/exact.hpp"
#include "drg/polynomial.hpp"

namespace drg {

inline const Rational& default_tolerance() {
  static const Rational tol = decimal_tolerance(12);
  return tol;
}

inline const Rational& refinement_floor() {
  static const Rational floor = decimal_tolerance(30);
  return floor;
}

/// A real algebraic number that is either known exactly (integer or
/// rational) or given by an isolating interval (lo, hi) of a squarefree
/// integer polynomial with exactly one root there. Isolated roots are never
/// rational, so comparisons against rationals are always decidable.
class Eigenvalue {
 public:
  Eigenvalue() = default;

  static Eigenvalue exact(Rational v) {
    Eigenvalue e;
    e.exact_ = true;
    e.lo_ = e.hi_ = std::move(v);
    return e;
  }
  static Eigenvalue integer(const BigInt& v) { return exact(Rational(v)); }

  /// `poly` must be squarefree with no rational roots and exactly one root
  /// in the open interval (lo, hi).
  static Eigenvalue isolated(Polynomial poly, Rational lo, Rational hi) {
    Eigenvalue e;
    e.exact_ = false;
    e.poly_ = std::move(poly);
    e.lo_ = std::move(lo);
    e.hi_ = std::move(hi);
    return e;
  }

  bool is_exact() const { return exact_; }
  bool is_integer() const { return exact_ && drg::is_integral(lo_); }
  /// Exact value; throws for isolated roots.
  const Rational& value() const {
    if (!exact_) throw PreconditionError("eigenvalue is not known exactly");
    return lo_;
  }
  BigInt integer_value() const {
    if (!is_integer()) throw PreconditionError("eigenvalue is not an integer");
    return numerator_of(lo_);
  }
  RationalInterval interval() const { return {lo_, hi_}; }
  const Polynomial& defining_polynomial() const { return poly_; }
  double approx() const { return to_double((lo_ + hi_) / 2); }

  /// Narrows the isolating interval to width at most `width` (no-op when exact).
  Eigenvalue refined(const Rational& width) const {
    Eigenvalue e = *this;
    if (exact_) return e;
    const int slo = poly_.sign_at(e.lo_);
    while (e.hi_ - e.lo_ > width) e.bisect(slo);
    return e;
  }

  /// Exact sign of f(theta).
  int sign_of(const Polynomial& f) const {
    if (f.is_zero()) return 0;
    if (exact_) return f.sign_at(lo_);
    Polynomial g = Polynomial::gcd(poly_, f);
    if (g.degree() >= 1 && SturmChain(g).count(lo_, hi_) > 0) return 0;
    Eigenvalue e = *this;
    const int slo = poly_.sign_at(e.lo_);
    while (true) {
      int s = f(e.interval()).sign();
      if (s == 1 || s == -1) return s;
      if (e.hi_ - e.lo_ < refinement_floor())
        throw PrecisionError("sign unresolved at the refinement floor");
      e.bisect(slo);
    }
  }

  /// Sign of (theta - r).
  int compare(const Rational& r) const { return sign_of(Polynomial::linear_root(r)); }

  std::string str() const {
    if (exact_) return to_string(lo_);
    return "~" + to_decimal((lo_ + hi_) / 2, 12);
  }

 private:
  void bisect(int sign_at_lo) {
    Rational mid = (lo_ + hi_) / 2;
    if (poly_.sign_at(mid) == sign_at_lo)
      lo_ = mid;
    else
      hi_ = mid;
  }

  bool exact_ = true;
  Polynomial poly_;
  Rational lo_{0};
  Rational hi_{0};
};

/// A multiplicity: exact rational, or a rational enclosure when the
/// eigenvalue is irrational.
struct Multiplicity {
  RationalInterval value;

  bool exact() const { return value.is_point(); }
  /// Exact integer, or an interval narrower than 1e-6 containing exactly one integer.
  std::optional<BigInt> integer() const {
    if (exact()) {
      if (drg::is_integral(value.lo())) return numerator_of(value.lo());
      return std::nullopt;
    }
    if (value.width() >= decimal_tolerance(6)) return std::nullopt;
    BigInt lo = ceil_of(value.lo()), hi = floor_of(value.hi());
    if (lo == hi) return lo;
    return std::nullopt;
  }
  bool is_integral() const { return integer().has_value(); }
  /// False only when the enclosure provably contains no integer.
  bool may_be_integral() const { return ceil_of(value.lo()) <= floor_of(value.hi()); }
  std::string str() const {
    if (exact()) return to_string(value.lo());
    return "~" + to_decimal(value.midpoint(), 12);
  }
};

struct StandardSequence {
  Eigenvalue theta;
  std::vector<Polynomial> polys;     // u_i as polynomials in theta
  std::vector<RationalInterval> u;   // u_i(theta), points when theta is exact
};

struct Spectrum {
  Polynomial char_poly;
  std::vector<Eigenvalue> eigs;       // theta_0 > theta_1 > ... > theta_D
  std::vector<Multiplicity> mults;

  const Eigenvalue& theta_min() const { return eigs.back(); }
  bool all_integer() const {
    return std::all_of(eigs.begin(), eigs.end(), [](const Eigenvalue& e) { return e.is_integer(); });
  }
  bool integral_multiplicities() const {
    return std::all_of(mults.begin(), mults.end(), [](const Multiplicity& m) { return m.is_integral(); });
  }
};

/// The (D+1)x(D+1) tridiagonal matrix with row i equal to (c_i, a_i, b_i)
/// in columns i-1, i, i+1.
inline std::vector<std::vector<std::int64_t>> intersection_matrix(const IntersectionArray& ia) {
  const int D = ia.diameter();
  std::vector<std::vector<std::int64_t>> L(D + 1, std::vector<std::int64_t>(D + 1, 0));
  for (int i = 0; i <= D; ++i) {
    if (i > 0) L[i][i - 1] = ia.c(i);
    L[i][i] = ia.a(i);
    if (i < D) L[i][i + 1] = ia.b(i);
  }
  return L;
}

/// Characteristic polynomial of the intersection matrix. Monic with integer
/// coefficients.
inline Polynomial char_poly(const IntersectionArray& ia) {
  const int D = ia.diameter();
  Polynomial prev = Polynomial::constant(1);
  Polynomial cur = Polynomial::x();  // x - a_0
  for (int i = 1; i <= D; ++i) {
    Polynomial next = Polynomial::linear_root(Rational(ia.a(i))) * cur -
                      Rational(ia.b(i - 1) * ia.c(i)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// u_0(x), ..., u_D(x) from the three-term recurrence
/// c_i u_{i-1} + a_i u_i + b_i u_{i+1} = x u_i with u_0 = 1, u_1 = x/k.
inline std::vector<Polynomial> standard_polynomials(const IntersectionArray& ia) {
  const int D = ia.diameter();
  std::vector<Polynomial> u;
  u.push_back(Polynomial::constant(1));
  u.push_back(Polynomial({Rational(0), Rational(1, ia.valency())}));
  for (int i = 1; i < D; ++i) {
    Polynomial next = Polynomial::linear_root(Rational(ia.a(i))) * u[i] - Rational(ia.c(i)) * u[i - 1];
    u.push_back(Rational(1, ia.b(i)) * next);
  }
  return u;
}

inline StandardSequence standard_sequence(const IntersectionArray& ia, const Eigenvalue& theta) {
  StandardSequence seq{theta, standard_polynomials(ia), {}};
  for (const auto& p : seq.polys) seq.u.push_back(p(theta.interval()));
  return seq;
}

inline StandardSequence standard_sequence(const IntersectionArray& ia, const Rational& theta) {
  return standard_sequence(ia, Eigenvalue::exact(theta));
}

/// Sign changes of u_0..u_D; exact zeros are skipped.
inline int sign_changes(const StandardSequence& seq) {
  int count = 0, last = 0;
  for (const auto& p : seq.polys) {
    int s = seq.theta.sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

namespace detail {

/// sum_i k_i u_i(x)^2.
inline Polynomial multiplicity_weight(const IntersectionArray& ia) {
  const DerivedQuantities d = derive(ia);
  const auto u = standard_polynomials(ia);
  Polynomial weight;
  for (std::size_t i = 0; i < u.size(); ++i) weight = weight + Rational(d.kseq[i]) * (u[i] * u[i]);
  return weight;
}

inline Multiplicity multiplicity(const Rational& n, Polynomial weight, const Eigenvalue& theta,
                                 const Rational& target) {
  if (theta.is_exact()) return {RationalInterval(n / weight(theta.value()))};
  // weight(theta) = r(theta) with r = weight mod (defining polynomial); a
  // constant remainder makes the multiplicity exact.
  const Polynomial r = Polynomial::divmod(weight, theta.defining_polynomial()).second;
  if (!r.is_zero() && r.degree() == 0) return {RationalInterval(n / r(Rational(0)))};
  if (!r.is_zero()) weight = r;
  Eigenvalue t = theta;
  Rational width = t.interval().width();
  while (true) {
    t = t.refined(width);
    RationalInterval w = weight(t.interval());
    if (w.lo() > 0) {
      RationalInterval m = RationalInterval(n) / w;
      if (m.width() < target || width < refinement_floor()) return {m};
    }
    if (width < refinement_floor()) throw PrecisionError("multiplicity enclosure failed");
    width /= 1024;
  }
}

}  // namespace detail

/// n / sum_i k_i u_i(theta)^2. Irrational eigenvalues give an enclosure of
/// width below `target`.
inline Multiplicity multiplicity(const IntersectionArray& ia, const Eigenvalue& theta,
                                 const Rational& target = decimal_tolerance(9)) {
  return detail::multiplicity(Rational(derive(ia).n), detail::multiplicity_weight(ia), theta, target);
}

namespace detail {

inline void isolate_roots(const SturmChain& sturm, const Polynomial& q, const Rational& lo,
                          const Rational& hi, int count, std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  const Rational span = hi - lo;
  if (span > 1) {
    // split at integers until every piece lies inside a unit interval
    Rational mid(floor_of((lo + hi) / 2));
    if (mid == lo) mid += 1;
    int left = sturm.count(lo, mid);
    isolate_roots(sturm, q, lo, mid, left, out);
    isolate_roots(sturm, q, mid, hi, count - left, out);
    return;
  }
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = sturm.count(lo, mid);
  isolate_roots(sturm, q, lo, mid, left, out);
  isolate_roots(sturm, q, mid, hi, count - left, out);
}

}  // namespace detail

/// The D+1 distinct eigenvalues in descending order with multiplicities.
/// Integer roots are found by exact evaluation over [-k, k] and deflated;
/// the remaining roots are isolated to width <= tol.
inline Spectrum eigenvalues(const IntersectionArray& ia, const Rational& tol = default_tolerance(),
                            const Rational& mult_target = decimal_tolerance(9)) {
  if (tol <= 0) throw PreconditionError("isolation tolerance must be positive");
  if (!is_feasible(ia)) throw PreconditionError("eigenvalues require an array passing basic feasibility");
  Spectrum spec;
  spec.char_poly = char_poly(ia);
  const std::int64_t k = ia.valency();

  Polynomial rest = spec.char_poly;
  std::vector<Eigenvalue> found;
  for (std::int64_t v = k; v >= -k && rest.degree() > 0; --v) {
    if (rest(Rational(v)) == 0) {
      rest = Polynomial::divmod(rest, Polynomial::linear_root(Rational(v))).first;
      found.push_back(Eigenvalue::integer(v));
    }
  }
  if (rest.degree() > 0) {
    SturmChain sturm(rest);
    std::vector<std::pair<Rational, Rational>> boxes;
    const Rational lo(-k), hi(k);
    detail::isolate_roots(sturm, rest, lo, hi, sturm.count(lo, hi), boxes);
    if (static_cast<int>(boxes.size()) != rest.degree())
      throw PrecisionError("root isolation did not separate all eigenvalues");
    for (auto& [a, b] : boxes) found.push_back(Eigenvalue::isolated(rest, a, b).refined(tol));
  }
  std::sort(found.begin(), found.end(),
            [](const Eigenvalue& x, const Eigenvalue& y) { return x.interval().lo() > y.interval().lo(); });
  if (static_cast<int>(found.size()) != ia.diameter() + 1)
    throw PrecisionError("expected D+1 distinct eigenvalues");
  spec.eigs = std::move(found);
  const Rational n(derive(ia).n);
  const Polynomial weight = detail::multiplicity_weight(ia);
  for (const auto& e : spec.eigs) spec.mults.push_back(detail::multiplicity(n, weight, e, mult_target));
  return spec;
}

/// Number of distinct eigenvalues strictly below x, by an exact Sturm count.
/// Much cheaper than a full spectrum when only a lower bound is needed.
inline int eigenvalues_below(const IntersectionArray& ia, const Rational& x) {
  const Polynomial p = char_poly(ia);
  const SturmChain sturm(p);
  const Rational lo(-ia.valency() - 1);
  if (x <= lo) return 0;
  return sturm.count(lo, x) - (p(x) == 0 ? 1 : 0);
}

struct TraceCheck {
  RationalInterval sum_m;        // should contain n
  RationalInterval sum_m_theta;  // should contain 0
  RationalInterval sum_m_theta2; // should contain n*k
  bool holds = false;
};

/// sum m_i = n, sum m_i theta_i = 0, sum m_i theta_i^2 = n k.
inline TraceCheck trace_identities(const IntersectionArray& ia, const Spectrum& spec) {
  const DerivedQuantities d = derive(ia);
  TraceCheck t;
  for (std::size_t i = 0; i < spec.eigs.size(); ++i) {
    RationalInterval th = spec.eigs[i].interval();
    t.sum_m += spec.mults[i].value;
    t.sum_m_theta += spec.mults[i].value * th;
    t.sum_m_theta2 += spec.mults[i].value * th * th;
  }
  t.holds = t.sum_m.contains(Rational(d.n)) && t.sum_m_theta.contains(Rational(0)) &&
            t.sum_m_theta2.contains(Rational(d.n) * d.k);
  return t;
}

/// Whether some eigenvalue theta != k has theta^2 > k/2. Not applicable
/// (nullopt) for D <= 2.
inline std::optional<bool> large_eigenvalue_check(const Spectrum& spec, const IntersectionArray& ia) {
  if (ia.diameter() < 3) return std::nullopt;
  const Polynomial f({Rational(-ia.valency()), Rational(0), Rational(2)});  // 2x^2 - k
  for (std::size_t i = 1; i < spec.eigs.size(); ++i)
    if (spec.eigs[i].sign_of(f) > 0) return true;
  return false;
}

struct ValencyBound {
  bool holds = false;               // k < m (a_1 + m)
  std::int64_t cap = 0;             // m (a_1 + m)
  std::optional<RationalInterval> u2_theta_min;  // closed form, when k - a_1 - 1 != 0 and D >= 2
};

inline bool lemma32_holds(std::int64_t k, std::int64_t a1, std::int64_t m) { return k < m * (a1 + m); }

inline ValencyBound valency_bound_check(const IntersectionArray& ia, std::int64_t m) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  const std::int64_t a1 = ia.a(1);
  return {lemma32_holds(ia.valency(), a1, m), m * (a1 + m), std::nullopt};
}

/// u_2(theta) = (theta^2 - a_1 theta - k) / (k (k - a_1 - 1)).
inline std::optional<RationalInterval> u2_closed_form(const IntersectionArray& ia, const Eigenvalue& theta) {
  const std::int64_t k = ia.valency(), a1 = ia.a(1);
  if (ia.diameter() < 2 || k - a1 - 1 == 0) return std::nullopt;
  Polynomial num({Rational(-k), Rational(-a1), Rational(1)});
  return num(theta.interval()) * RationalInterval(Rational(1, k * (k - a1 - 1)));
}

inline ValencyBound valency_bound_check(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m) {
  ValencyBound vb = valency_bound_check(ia, m);
  vb.u2_theta_min = u2_closed_form(ia, spec.theta_min());
  return vb;
}

}  // namespace drg
