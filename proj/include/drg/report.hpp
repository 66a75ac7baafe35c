#pragma once

// Plain-text reports for the command-line tool. Formatting is fixed so that
// identical inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/enumerator.hpp"
#include "drg/geometric.hpp"
#include "drg/records.hpp"
#include "drg/spectra.hpp"

namespace drg {

namespace detail {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace detail

/// "key: rendered [status]", with the unmet hypothesis for skipped entries.
inline std::string render_bound(const BoundEntry& e) {
  std::string out = e.key + ": ";
  if (!e.applicable) return out + "n/a (" + e.note + ")";
  out += e.rendered;
  if (e.satisfied) out += *e.satisfied ? " [ok]" : " [VIOLATED]";
  if (!e.note.empty()) out += " (" + e.note + ")";
  return out;
}

/// Smallest m >= 2 with theta_D >= -m.
inline std::int64_t natural_m(const Spectrum& spec) {
  std::int64_t m = 2;
  while (spec.theta_min().compare(Rational(-m)) < 0) ++m;
  return m;
}

inline SearchSpec analysis_spec(std::int64_t m) {
  SearchSpec s;
  s.m = m;
  s.filters = {std::begin(kAllFilters), std::end(kAllFilters)};
  return s;
}

/// The enumerator's record for a single array, with every filter evaluated
/// up to the first failure. Infeasible arrays yield a filtered record.
inline ResultRecord analyze_record(const IntersectionArray& ia, std::optional<std::int64_t> m) {
  auto violations = basic_feasibility(ia);
  if (!violations.empty() || ia.diameter() < 2) {
    ResultRecord r;
    r.ia = ia;
    try {
      r.n = derive(ia).n;
    } catch (const NonIntegralError&) {
      r.n = 0;
    }
    r.cls = Classification::Filtered;
    r.reason = violations.empty() ? "basic: complete graph (D = 1)" : "basic: " + violations.front().detail;
    r.filters = {{"basic", "fail"}};
    return r;
  }
  const std::int64_t mm = m ? *m : natural_m(eigenvalues(ia));
  return *evaluate_array(ia, analysis_spec(mm), true);
}

/// Human-readable analysis of one array.
inline std::string analyze_report(const IntersectionArray& ia, std::optional<std::int64_t> m_opt) {
  std::ostringstream os;
  os << "array: " << format_array(ia) << "\n";
  os << "diameter: " << ia.diameter() << "\n";
  os << "valency: " << ia.valency() << "\n";

  const auto violations = basic_feasibility(ia);
  if (!violations.empty()) {
    os << "basic feasibility: FAIL\n";
    for (const auto& v : violations) os << "  " << to_string(v.kind) << ": " << v.detail << "\n";
    os << "verdict: infeasible\n";
    return os.str();
  }
  const DerivedQuantities d = derive(ia);
  os << "a: " << detail::join(d.a) << "\n";
  os << "k_i: " << detail::join(d.kseq) << "\n";
  os << "vertices: " << d.n << "\n";
  os << "basic feasibility: pass\n";
  if (ia.is_complete()) {
    os << "verdict: complete graph K_" << d.n << ", excluded from geometric analysis\n";
    return os.str();
  }

  const Spectrum spec = eigenvalues(ia);
  os << "spectrum:\n";
  for (std::size_t i = 0; i < spec.eigs.size(); ++i)
    os << "  theta_" << i << " = " << spec.eigs[i].str() << "  multiplicity " << spec.mults[i].str()
       << "  sign changes " << sign_changes(standard_sequence(ia, spec.eigs[i])) << "\n";
  os << "characteristic polynomial: " << spec.char_poly.str() << "\n";

  const std::int64_t m = m_opt ? *m_opt : natural_m(spec);
  os << "m: " << m << (m_opt ? "" : " (smallest m >= 2 with theta_D >= -m)") << "\n";
  const DelsarteSize ds = delsarte_clique_size(ia, spec);
  os << "delsarte clique size: "
     << (ds.exact() ? to_string(ds.value.lo()) : "~" + to_decimal(ds.value.midpoint(), 12))
     << (ds.integer() ? "" : " (not an integer)") << "\n";

  const ResultRecord rec = *evaluate_array(ia, analysis_spec(m), true);
  os << "filters:\n";
  for (const auto& f : rec.filters) os << "  " << f.name << ": " << f.status << "\n";
  const auto forcing = forcing_test(ia, spec, m);
  os << "forcing: " << to_string(forcing.verdict) << " (" << forcing.reason << ")\n";

  const ClassificationResult c = classify(ia, spec, m);
  os << "classification: " << to_string(c.cls) << " (" << c.reason << ")\n";
  if (rec.cls == Classification::Filtered) os << "rejected by " << rec.reason << "\n";
  std::optional<bool> quadrangle;
  if (c.cls == Classification::PseudoGeometric) {
    os << "tau: " << detail::join(c.tau) << "\n";
    os << "psi: " << detail::join(c.psi) << "\n";
    const std::int64_t line = -spec.theta_min().integer_value().convert_to<std::int64_t>();
    auto sol = std::get<GeometricSolution>(geometric_recursion(ia, line));
    auto l42 = check_lemma42(sol, ia);
    if (l42.applicable) {
      quadrangle = true;
      os << "lemma42: tau_2 >= psi_1 holds; a geometric realization contains an induced quadrangle\n";
      if (ia.diameter() >= 3 && sol.psi_at(1) == sol.tau_at(2) && sol.psi_at(1) >= 2) {
        auto eq = classify_equal_psi_tau(sol, ia);
        os << "equal psi_1 = tau_2 = " << sol.psi_at(1) << ":\n";
        for (const auto& cc : eq.cases)
          os << "  " << cc.label << ": " << (cc.excluded ? "excluded" : "possible") << " (" << cc.detail << ")\n";
      }
    }
  }
  if (rec.flags.size()) os << "flags: " << detail::join(rec.flags) << "\n";

  const BoundReport br = full_bound_report(ia, spec, m, quadrangle);
  os << "bounds:\n";
  for (const auto& e : br.entries) os << "  " << render_bound(e) << "\n";
  return os.str();
}

struct BoundsQuery {
  std::int64_t m = 2;
  std::int64_t a1 = 0;
  std::optional<std::int64_t> k, c2, cD, D;
  std::optional<Rational> eps;
};

/// Bound values for loose parameters. Entries whose inputs are missing say
/// which options they need; checks are reported only when the checked
/// quantity is given.
inline BoundReport standalone_bounds(const BoundsQuery& q) {
  if (q.m < 2) throw PreconditionError("m must be at least 2");
  if (q.a1 < 0) throw PreconditionError("a_1 must be nonnegative");
  BoundReport r;

  BoundEntry l32 = lemma32_entry(q.k.value_or(0), q.a1, q.m);
  if (!q.k) l32.satisfied.reset();
  r.entries.push_back(l32);

  if (q.k && q.cD) {
    BoundEntry e = thm35_entry(*q.k, q.a1, *q.cD, q.D.value_or(0));
    if (!q.D) e.satisfied.reset();
    e.note = "requires an induced quadrangle";
    r.entries.push_back(e);
  } else {
    r.entries.push_back(not_applicable("thm35_diameter_cap", "needs --k and --cD"));
  }

  BoundEntry p36 = prop36_entry(q.a1, q.m, q.D.value_or(0));
  if (!q.D) p36.satisfied.reset();
  p36.note = "requires an induced quadrangle";
  r.entries.push_back(p36);

  BoundEntry p44;
  p44.key = "prop44_diameter_cap";
  p44.applicable = true;
  p44.value = Rational(q.m * q.m);
  p44.rendered = "D < " + std::to_string(q.m * q.m);
  if (q.D) p44.satisfied = *q.D < q.m * q.m;
  p44.note = "geometric with c_2 >= 2";
  r.entries.push_back(p44);

  if (q.k && q.c2) {
    BoundEntry e = thm34_entry(*q.k, *q.c2, q.D.value_or(0));
    if (!q.D && e.applicable) e.satisfied.reset();
    r.entries.push_back(e);
  } else {
    r.entries.push_back(not_applicable("thm34_diameter_cap", "needs --k and --c2"));
  }

  std::optional<Rational> eps = q.eps;
  if (!eps && q.c2 && q.a1 > 0) eps = std::min(Rational(*q.c2, q.a1), Rational(1));
  if (q.D && *q.D >= 3 && eps) {
    BoundEntry e;
    e.key = "thm33_valency_cap";
    e.applicable = true;
    const BigInt cap = theorem33_valency_cap(q.m, *q.D, *eps);
    e.value = Rational(cap);
    e.rendered = "k <= " + cap.str() + " (eps = " + to_string(*eps) + ")";
    if (q.k) e.satisfied = BigInt(*q.k) <= cap;
    r.entries.push_back(e);
  } else {
    r.entries.push_back(not_applicable("thm33_valency_cap", "needs --D >= 3 and --eps (or --c2 with a_1 > 0)"));
  }

  r.entries.push_back(terwilliger_entry(q.m));
  return r;
}

inline std::string bounds_report(const BoundsQuery& q) {
  std::ostringstream os;
  os << "m: " << q.m << "\n" << "a_1: " << q.a1 << "\n";
  for (const auto& e : standalone_bounds(q).entries) os << render_bound(e) << "\n";
  return os.str();
}

}  // namespace drg
