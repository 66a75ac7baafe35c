#pragma once

// Parameter-level geometric structure: the Delsarte clique size, the
// (tau, psi) solver for pseudo-geometric arrays, Metsch's line conditions,
// the forcing test for a_1 > m^2 c_2, partial-geometry arithmetic, and the
// valency/diameter bounds used as feasibility filters.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/exact.hpp"
#include "drg/spectra.hpp"

namespace drg {

// ---------------------------------------------------------------------------
// Delsarte clique size

/// 1 + k / (-theta_D): exact when theta_D is rational, an enclosure otherwise.
struct DelsarteSize {
  RationalInterval value;

  bool exact() const { return value.is_point(); }
  std::optional<std::int64_t> integer() const {
    if (!exact() || !is_integral(value.lo())) return std::nullopt;
    return numerator_of(value.lo()).convert_to<std::int64_t>();
  }
};

inline DelsarteSize delsarte_clique_size(const IntersectionArray& ia, const Spectrum& spec) {
  if (ia.diameter() < 2) throw PreconditionError("Delsarte bound needs a non-complete graph (D >= 2)");
  const Eigenvalue& t = spec.theta_min();
  RationalInterval neg = -t.interval();
  return {RationalInterval(Rational(1)) + RationalInterval(Rational(ia.valency())) / neg};
}

// ---------------------------------------------------------------------------
// (tau, psi) solver

struct GeometricSolution {
  std::int64_t m = 0;              // theta_D = -m
  std::int64_t s = 0;              // k / m
  std::vector<std::int64_t> tau;   // tau_1 .. tau_D
  std::vector<std::int64_t> psi;   // psi_0 .. psi_{D-1}
  std::vector<std::string> flags;

  std::int64_t tau_at(int i) const { return tau.at(i - 1); }
  std::int64_t psi_at(int i) const { return psi.at(i); }
};

struct Infeasible {
  int index = 0;
  std::string reason;
};

using SolveOutcome = std::variant<GeometricSolution, Infeasible>;

/// The forced recursion tau_i = c_i / psi_{i-1},
/// psi_i = 1 + k/m - b_i / (m - tau_i), without checking theta_D.
/// `psi0` is exposed only so the forcing of psi_0 = 1 can be tested.
inline SolveOutcome geometric_recursion(const IntersectionArray& ia, std::int64_t m, std::int64_t psi0 = 1) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  const std::int64_t k = ia.valency();
  if (k % m != 0) throw PreconditionError("m = " + std::to_string(m) + " does not divide k = " + std::to_string(k));
  const int D = ia.diameter();
  GeometricSolution sol;
  sol.m = m;
  sol.s = k / m;
  sol.psi.push_back(psi0);
  auto fail = [](int i, std::string why) { return SolveOutcome(Infeasible{i, std::move(why)}); };
  for (int i = 1; i <= D; ++i) {
    const std::int64_t prev = sol.psi.back();
    const std::string idx = std::to_string(i);
    if (ia.c(i) % prev != 0)
      return fail(i, "tau_" + idx + " = c_" + idx + "/psi_" + std::to_string(i - 1) + " = " +
                         std::to_string(ia.c(i)) + "/" + std::to_string(prev) + " is not an integer");
    const std::int64_t tau = ia.c(i) / prev;
    const std::int64_t tau_max = i < D ? m - 1 : m;
    if (tau < 1 || tau > tau_max)
      return fail(i, "tau_" + idx + " = " + std::to_string(tau) + " outside [1, " + std::to_string(tau_max) + "]");
    sol.tau.push_back(tau);
    if (i == D) break;
    const std::int64_t denom = m - tau;
    if (ia.b(i) % denom != 0)
      return fail(i, "psi_" + idx + ": b_" + idx + "/(m - tau_" + idx + ") = " + std::to_string(ia.b(i)) + "/" +
                         std::to_string(denom) + " is not an integer");
    const std::int64_t psi = 1 + sol.s - ia.b(i) / denom;
    if (psi < 1 || psi > sol.s)
      return fail(i, "psi_" + idx + " = " + std::to_string(psi) + " outside [1, " + std::to_string(sol.s) + "]");
    sol.psi.push_back(psi);
  }
  if (sol.tau.front() != 1 || sol.psi.front() != 1)
    return fail(1, "tau_1 = psi_0 = 1 is forced by c_1 = 1");
  sol.flags.push_back("pseudo-geometric");
  return sol;
}

/// Requires theta_D = -m exactly and m | k (PreconditionError otherwise).
/// Success means pseudo-geometric: necessary, not sufficient, for a
/// geometric graph with this array.
inline SolveOutcome solve_geometric_parameters(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  if (ia.diameter() < 2) throw PreconditionError("geometric parameters need D >= 2");
  if (spec.theta_min().compare(Rational(-m)) != 0)
    throw PreconditionError("theta_D = " + spec.theta_min().str() + " is not -" + std::to_string(m));
  return geometric_recursion(ia, m);
}

inline SolveOutcome solve_geometric_parameters(const IntersectionArray& ia, std::int64_t m) {
  return solve_geometric_parameters(ia, eigenvalues(ia), m);
}

struct Lemma42Flags {
  bool applicable = false;       // needs c_2 >= 2
  bool tau2_ge_psi1 = true;      // false certifies that no geometric graph has this array
  bool quadrangle_required = false;
  std::string note;
};

inline Lemma42Flags check_lemma42(const GeometricSolution& sol, const IntersectionArray& ia) {
  Lemma42Flags f;
  if (ia.diameter() < 2 || ia.c(2) < 2) {
    f.note = "requires D >= 2 and c_2 >= 2";
    return f;
  }
  f.applicable = true;
  f.tau2_ge_psi1 = sol.tau_at(2) >= sol.psi_at(1);
  f.quadrangle_required = true;
  if (!f.tau2_ge_psi1)
    f.note = "tau_2 = " + std::to_string(sol.tau_at(2)) + " < psi_1 = " + std::to_string(sol.psi_at(1));
  return f;
}

// ---------------------------------------------------------------------------
// Metsch conditions and the forcing test

struct MetschResult {
  std::int64_t line_size_threshold = 0;  // lambda + 2 - (s-1)(mu-1)
  bool cond_i = false;                   // lambda > (2s-1)(mu-1) - 1
  bool cond_ii = false;                  // k < (s+1)(lambda+1) - s(s+1)(mu-1)/2
};

inline MetschResult metsch_conditions(std::int64_t k, std::int64_t lambda, std::int64_t mu, std::int64_t s) {
  if (k < 2 || mu < 1 || lambda < 0 || s < 1)
    throw PreconditionError("Metsch conditions need k >= 2, mu >= 1, lambda >= 0, s >= 1");
  MetschResult r;
  r.line_size_threshold = lambda + 2 - (s - 1) * (mu - 1);
  r.cond_i = lambda > (2 * s - 1) * (mu - 1) - 1;
  r.cond_ii = 2 * k < 2 * (s + 1) * (lambda + 1) - s * (s + 1) * (mu - 1);
  return r;
}

enum class ForcingVerdict { ForcedGeometric, Inconsistent, NotForced };

inline const char* to_string(ForcingVerdict v) {
  switch (v) {
    case ForcingVerdict::ForcedGeometric: return "forced_geometric";
    case ForcingVerdict::Inconsistent: return "inconsistent";
    case ForcingVerdict::NotForced: return "not_forced";
  }
  return "?";
}

struct ForcingResult {
  ForcingVerdict verdict = ForcingVerdict::NotForced;
  std::string reason;
};

/// When -m <= theta_D < 1-m and a_1 > m^2 c_2 any realization is geometric
/// with theta_D = -m; arrays contradicting that are inconsistent.
inline ForcingResult forcing_test(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m) {
  if (ia.diameter() < 2) throw PreconditionError("forcing test needs D >= 2");
  if (m < 2) throw PreconditionError("m must be at least 2");
  const Eigenvalue& t = spec.theta_min();
  const bool in_window = t.compare(Rational(-m)) >= 0 && t.compare(Rational(1 - m)) < 0;
  const std::int64_t a1 = ia.a(1), c2 = ia.c(2);
  if (!in_window || !(a1 > m * m * c2))
    return {ForcingVerdict::NotForced, in_window ? "a_1 <= m^2 c_2" : "theta_D outside [-m, 1-m)"};
  if (t.compare(Rational(-m)) != 0)
    return {ForcingVerdict::Inconsistent, "a_1 > m^2 c_2 forces theta_D = -m but theta_D = " + t.str()};
  if (ia.valency() % m != 0)
    return {ForcingVerdict::Inconsistent, "a_1 > m^2 c_2 forces geometric but m does not divide k"};
  auto out = geometric_recursion(ia, m);
  if (auto* bad = std::get_if<Infeasible>(&out))
    return {ForcingVerdict::Inconsistent, "a_1 > m^2 c_2 forces geometric but " + bad->reason};
  return {ForcingVerdict::ForcedGeometric, "a_1 > m^2 c_2 and theta_D = -m"};
}

// ---------------------------------------------------------------------------
// Partial geometries

struct PartialGeometryOrder {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t alpha = 0;
};

struct PointGraphParameters {
  IntersectionArray array;   // {k, b_1; 1, c_2}
  std::int64_t k = 0, b1 = 0, c2 = 0, lambda = 0, v = 0;
  std::int64_t eigenvalues[3] = {0, 0, 0};   // k, s - alpha, -t - 1
};

/// Strongly regular point graph of a partial geometry of order (s, t, alpha).
/// The non-principal eigenvalues are s - alpha and -t - 1; these coincide
/// with (s - 1, -t - 1) when alpha = 1.
inline PointGraphParameters partial_geometry_array(const PartialGeometryOrder& pg) {
  if (pg.s < 1 || pg.t < 1) throw PreconditionError("partial geometry needs s >= 1 and t >= 1");
  if (pg.alpha < 1 || pg.alpha > std::min(pg.s + 1, pg.t + 1))
    throw PreconditionError("alpha must lie in [1, min(s+1, t+1)]");
  if (pg.alpha == pg.s + 1) throw PreconditionError("alpha = s + 1 gives a complete point graph");
  PointGraphParameters out;
  out.k = pg.s * (pg.t + 1);
  out.b1 = (pg.s - pg.alpha + 1) * pg.t;
  out.c2 = pg.alpha * (pg.t + 1);
  out.lambda = out.k - out.b1 - 1;
  if ((out.k * out.b1) % out.c2 != 0)
    throw PreconditionError("vertex count 1 + k + k b_1 / c_2 is not an integer");
  out.v = 1 + out.k + out.k * out.b1 / out.c2;
  out.array = IntersectionArray({out.k, out.b1}, {1, out.c2});
  out.eigenvalues[0] = out.k;
  out.eigenvalues[1] = pg.s - pg.alpha;
  out.eigenvalues[2] = -pg.t - 1;
  Spectrum spec = eigenvalues(out.array);
  for (int i = 0; i < 3; ++i)
    if (spec.eigs[i].compare(Rational(out.eigenvalues[i])) != 0)
      throw std::logic_error("point graph spectrum disagrees with partial geometry parameters");
  return out;
}

enum class PgLabel { LatinSquare, Steiner, Other };

inline const char* to_string(PgLabel l) {
  switch (l) {
    case PgLabel::LatinSquare: return "latin_square";
    case PgLabel::Steiner: return "steiner";
    case PgLabel::Other: return "other";
  }
  return "?";
}

inline PgLabel pg_classify(const PartialGeometryOrder& pg) {
  if (pg.alpha == pg.t + 1) return PgLabel::LatinSquare;
  if (pg.alpha == pg.t) return PgLabel::Steiner;
  return PgLabel::Other;
}

// ---------------------------------------------------------------------------
// Geometric graphs with psi_1 = tau_2 >= 2

inline bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

struct CandidateCase {
  std::string label;      // johnson | folded_johnson | grassmann | small
  std::string detail;
  bool excluded = false;  // arithmetic rules the case out for this array
};

struct EqualPsiTauReport {
  bool theorem_applies = false;  // D >= 3 and psi_1 = tau_2 >= 2
  std::string note;
  std::vector<CandidateCase> cases;

  std::vector<std::string> remaining() const {
    std::vector<std::string> out;
    for (const auto& c : cases)
      if (!c.excluded) out.push_back(c.label);
    return out;
  }
};

/// Case list for geometric graphs with psi_1 = tau_2 >= 2. For D = 2 the
/// classification does not apply; the candidate list is still computed and
/// returned alongside a context note.
inline EqualPsiTauReport classify_equal_psi_tau(const GeometricSolution& sol, const IntersectionArray& ia) {
  EqualPsiTauReport r;
  const int D = ia.diameter();
  if (D < 2 || sol.psi.size() < 2 || sol.tau.size() < 2 || sol.psi_at(1) != sol.tau_at(2) || sol.psi_at(1) < 2) {
    r.note = "not applicable: requires psi_1 = tau_2 >= 2";
    return r;
  }
  const std::int64_t psi1 = sol.psi_at(1), m = sol.m, k = ia.valency();
  r.theorem_applies = D >= 3;
  if (D == 2)
    r.note = "diameter 2: classification needs D >= 3; geometric strongly regular graphs with fixed smallest "
             "eigenvalue have psi_1 in {tau_2, tau_2 - 1} up to finitely many exceptions";
  if (psi1 == 2) {
    // Both candidates are determined by (D, k); compare the whole array.
    CandidateCase j{"johnson", "Johnson graph J(n, D)", true};
    if (k % D == 0 && k / D >= D) {
      const std::int64_t n = D + k / D;
      j.detail = "Johnson graph J(" + std::to_string(n) + ", " + std::to_string(D) + ")";
      std::vector<std::int64_t> b, c;
      for (std::int64_t i = 0; i < D; ++i) b.push_back((D - i) * (n - D - i));
      for (std::int64_t i = 1; i <= D; ++i) c.push_back(i * i);
      j.excluded = !(IntersectionArray(b, c) == ia);
    }
    if (j.excluded) j.detail += "; array differs from the Johnson array with this D and k";
    CandidateCase f{"folded_johnson", "folded Johnson graph J(4D, 2D)/antipodes", true};
    if (D >= 3 && k == 4LL * D * D) {
      std::vector<std::int64_t> b, c;
      for (std::int64_t i = 0; i < D; ++i) b.push_back((2 * D - i) * (2 * D - i));
      for (std::int64_t i = 1; i < D; ++i) c.push_back(i * i);
      c.push_back(2LL * D * D);
      f.excluded = !(IntersectionArray(b, c) == ia);
    }
    if (f.excluded) f.detail += "; array differs from the folded Johnson array with this D";
    r.cases = {j, f};
  } else {
    const std::int64_t q = psi1 - 1;
    CandidateCase g{"grassmann", "Grassmann graph over the field of order " + std::to_string(q), false};
    if (!is_prime_power(q)) {
      g.excluded = true;
      g.detail += "; " + std::to_string(q) + " is not a prime power";
    }
    const std::int64_t cap = psi1 * (psi1 - 1) * m;
    CandidateCase s{"small", "k < psi_1 (psi_1 - 1) m = " + std::to_string(cap), false};
    if (!(k < cap)) {
      s.excluded = true;
      s.detail += "; fails for k = " + std::to_string(k);
    }
    r.cases = {g, s};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bounds

struct BoundEntry {
  std::string key;
  bool applicable = false;
  std::optional<Rational> value;   // the bound itself, when numeric
  std::string rendered;            // human-readable bound
  std::optional<bool> satisfied;   // unset when not applicable
  std::string note;                // unmet hypothesis, or context
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
  bool any_violation() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const BoundEntry& e) { return e.applicable && e.satisfied == false; });
  }
  void append(const BoundReport& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }
};

inline BoundEntry not_applicable(std::string key, std::string why) {
  BoundEntry e;
  e.key = std::move(key);
  e.note = std::move(why);
  return e;
}

/// ceil(D^2 (2m^2/eps)^(2D+4)) - 1: the largest k allowed by the valency bound.
inline BigInt theorem33_valency_cap(std::int64_t m, std::int64_t D, const Rational& eps) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  if (D < 3) throw PreconditionError("D must be at least 3");
  if (eps <= 0 || eps > 1) throw PreconditionError("eps must lie in (0, 1]");
  Rational base = Rational(2 * m * m) / eps;
  Rational bound = Rational(D * D) * pow_rational(base, static_cast<unsigned>(2 * D + 4));
  return ceil_of(bound) - 1;
}

/// floor(2(m-1)/(sqrt 5 - 1)) = floor((m-1)(1 + sqrt 5)/2), in integers.
inline std::int64_t terwilliger_alpha_cap(std::int64_t m) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  const BigInt r = isqrt(BigInt(5) * (m - 1) * (m - 1));  // floor((m-1) sqrt 5)
  return ((BigInt(m - 1) + r) / 2).convert_to<std::int64_t>();
}

inline BoundEntry lemma32_entry(std::int64_t k, std::int64_t a1, std::int64_t m) {
  BoundEntry e;
  e.key = "lemma32_valency_cap";
  e.applicable = true;
  e.value = Rational(m * (a1 + m));
  e.rendered = "k < " + std::to_string(m * (a1 + m));
  e.satisfied = lemma32_holds(k, a1, m);
  return e;
}

inline BoundEntry thm35_entry(std::int64_t k, std::int64_t a1, std::int64_t cD, std::int64_t D) {
  BoundEntry e;
  e.key = "thm35_diameter_cap";
  e.applicable = true;
  e.value = Rational(k + cD, a1 + 2);
  e.rendered = "D <= " + to_string(*e.value);
  e.satisfied = Rational(D) <= *e.value;
  return e;
}

inline BoundEntry prop36_entry(std::int64_t a1, std::int64_t m, std::int64_t D) {
  BoundEntry e;
  e.key = "prop36_diameter_cap";
  e.applicable = true;
  e.value = Rational(2 * m * (a1 + m), a1 + 2);
  e.rendered = "D < " + to_string(*e.value) + " <= " + std::to_string(m * m);
  e.satisfied = Rational(D) < *e.value;
  return e;
}

inline BoundEntry thm34_entry(std::int64_t k, std::int64_t c2, std::int64_t D) {
  if (c2 < 2) return not_applicable("thm34_diameter_cap", "requires c_2 >= 2");
  BoundEntry e;
  e.key = "thm34_diameter_cap";
  e.applicable = true;
  if (k <= 30) {
    e.value = Rational(pow_big(BigInt(4), static_cast<unsigned>(k)));
    e.rendered = "D <= " + to_string(*e.value);
  } else {
    e.rendered = "D <= 4^" + std::to_string(k);
  }
  e.satisfied = !e.value || Rational(D) <= *e.value;
  return e;
}

/// Diameter bounds. The quadrangle-gated bounds apply only when
/// has_quadrangle is true; the m^2 bound applies to pseudo-geometric arrays
/// (theta_D = -m, solver success) with c_2 >= 2.
inline BoundReport diameter_bounds(const IntersectionArray& ia, std::int64_t m, std::optional<bool> has_quadrangle,
                                   const Spectrum* spec = nullptr) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  const std::int64_t k = ia.valency(), a1 = ia.a(1), D = ia.diameter();
  const std::int64_t c2 = D >= 2 ? ia.c(2) : 0, cD = ia.c(ia.diameter());
  BoundReport r;
  if (has_quadrangle == true) {
    r.entries.push_back(thm35_entry(k, a1, cD, D));
    r.entries.push_back(prop36_entry(a1, m, D));
  } else {
    const char* why = has_quadrangle ? "graph has no induced quadrangle" : "induced quadrangle not certified";
    r.entries.push_back(not_applicable("thm35_diameter_cap", why));
    r.entries.push_back(not_applicable("prop36_diameter_cap", why));
  }

  bool pseudo = false;
  if (D >= 2 && c2 >= 2 && k % m == 0 && is_feasible(ia)) {
    Spectrum local;
    if (!spec) {
      local = eigenvalues(ia);
      spec = &local;
    }
    if (spec->theta_min().compare(Rational(-m)) == 0)
      pseudo = std::holds_alternative<GeometricSolution>(geometric_recursion(ia, m));
  }
  if (pseudo) {
    BoundEntry e;
    e.key = "prop44_diameter_cap";
    e.applicable = true;
    e.value = Rational(m * m);
    e.rendered = "D < " + std::to_string(m * m);
    e.satisfied = D < m * m;
    r.entries.push_back(e);
  } else {
    r.entries.push_back(not_applicable("prop44_diameter_cap", "requires a pseudo-geometric array with c_2 >= 2"));
  }
  r.entries.push_back(thm34_entry(k, c2, D));
  return r;
}

inline BoundEntry eta_entry(std::int64_t k, std::int64_t b1, const Eigenvalue& theta1, const Multiplicity& m1,
                            std::int64_t m, int D) {
  const std::string key = "eta_local";
  if (D < 3) return not_applicable(key, "requires D >= 3");
  auto mi = m1.integer();
  if (!mi) return not_applicable(key, "m_1 is not integral");
  if (!(*mi > 2 && *mi < k)) return not_applicable(key, "requires 2 < m_1 < k (m_1 = " + mi->str() + ")");
  if (theta1.sign_of(Polynomial({Rational(1), Rational(1)})) <= 0) return not_applicable(key, "theta_1 <= -1");
  BoundEntry e;
  e.key = key;
  e.applicable = true;
  // eta = -1 - b_1/(theta_1 + 1) >= -m  <=>  (m-1)(theta_1 + 1) - b_1 >= 0
  const Polynomial slack({Rational((m - 1) - b1), Rational(m - 1)});
  e.satisfied = theta1.sign_of(slack) >= 0;
  if (theta1.is_exact()) {
    e.value = Rational(-1) - Rational(b1) / (theta1.value() + 1);
    e.rendered = "eta = " + to_string(*e.value) + " >= -" + std::to_string(m);
  } else {
    const Eigenvalue sharp = theta1.refined(decimal_tolerance(14));
    RationalInterval eta = RationalInterval(Rational(-1)) -
                           RationalInterval(Rational(b1)) / (sharp.interval() + RationalInterval(Rational(1)));
    e.rendered = "eta ~ " + to_decimal(eta.midpoint(), 12) + " >= -" + std::to_string(m);
  }
  return e;
}

inline BoundEntry godsil_entry(std::int64_t k, const Multiplicity& m1) {
  const std::string key = "godsil_ok";
  auto mi = m1.integer();
  if (!mi) return not_applicable(key, "m_1 is not integral");
  if (!(*mi > 2 && *mi < k)) return not_applicable(key, "requires 2 < m_1 < k (m_1 = " + mi->str() + ")");
  BoundEntry e;
  e.key = key;
  e.applicable = true;
  BigInt rhs = (*mi - 1) * (*mi + 2);
  e.value = Rational(rhs);
  e.rendered = "2k <= (m_1 - 1)(m_1 + 2) = " + rhs.str();
  e.satisfied = BigInt(2 * k) <= rhs;
  return e;
}

inline BoundEntry ratio_entry(std::int64_t b1, std::int64_t a1, std::int64_t c2, std::int64_t m) {
  const std::string key = "b1_c2_ratio";
  if (a1 <= 0) return not_applicable(key, "requires a_1 > 0");
  if (c2 <= 0) return not_applicable(key, "requires D >= 2");
  Rational eps = std::min(Rational(c2, a1), Rational(1));
  BoundEntry e;
  e.key = key;
  e.applicable = true;
  e.value = Rational((m - 1) * (a1 + m + 1)) / (eps * a1);
  e.rendered = "b_1/c_2 = " + to_string(Rational(b1, c2)) + " < " + to_string(*e.value) + " (eps = " + to_string(eps) + ")";
  e.satisfied = Rational(b1, c2) < *e.value;
  return e;
}

/// Spectral filters from the valency-bound argument: the local eigenvalue
/// eta, Godsil's multiplicity bound, and the b_1/c_2 ratio. The first two
/// apply only under 2 < m_1 < k.
inline BoundReport proof_filters(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m) {
  if (m < 2) throw PreconditionError("m must be at least 2");
  if (ia.diameter() < 2) throw PreconditionError("proof filters need D >= 2");
  BoundReport r;
  const std::int64_t k = ia.valency();
  r.entries.push_back(eta_entry(k, ia.b(1), spec.eigs[1], spec.mults[1], m, ia.diameter()));
  r.entries.push_back(godsil_entry(k, spec.mults[1]));
  r.entries.push_back(ratio_entry(ia.b(1), ia.a(1), ia.c(2), m));
  return r;
}

inline BoundEntry thm33_entry(std::int64_t k, std::int64_t a1, std::int64_t c2, std::int64_t m, std::int64_t D) {
  const std::string key = "thm33_valency_cap";
  if (D < 3) return not_applicable(key, "requires D >= 3");
  BoundEntry e;
  e.key = key;
  e.applicable = true;
  if (a1 == 0) {
    e.value = Rational(m * m);
    e.rendered = "k < m^2 = " + std::to_string(m * m) + " (a_1 = 0)";
    e.satisfied = k < m * m;
    return e;
  }
  Rational eps = std::min(Rational(c2, a1), Rational(1));
  BigInt cap = theorem33_valency_cap(m, D, eps);
  e.value = Rational(cap);
  e.rendered = "k <= " + cap.str() + " (eps = " + to_string(eps) + ")";
  e.satisfied = BigInt(k) <= cap;
  return e;
}

inline BoundEntry terwilliger_entry(std::int64_t m) {
  BoundEntry e;
  e.key = "terwilliger_alpha_cap";
  e.applicable = true;
  e.value = Rational(terwilliger_alpha_cap(m));
  e.rendered = "alpha <= " + to_string(*e.value);
  e.note = "clique-extension size of local graphs in Terwilliger graphs";
  return e;
}

/// Every bound for an array under smallest eigenvalue >= -m, in a fixed key order.
inline BoundReport full_bound_report(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m,
                                     std::optional<bool> has_quadrangle) {
  BoundReport r;
  const std::int64_t k = ia.valency(), a1 = ia.a(1), D = ia.diameter();
  r.entries.push_back(lemma32_entry(k, a1, m));
  r.append(diameter_bounds(ia, m, has_quadrangle, &spec));
  r.entries.push_back(thm33_entry(k, a1, D >= 2 ? ia.c(2) : 0, m, D));
  if (D >= 2) r.append(proof_filters(ia, spec, m));
  r.entries.push_back(terwilliger_entry(m));
  return r;
}

}  // namespace drg
