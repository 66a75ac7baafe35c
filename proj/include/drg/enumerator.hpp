#pragma once

// Bounded search over intersection arrays with smallest eigenvalue >= -m.
// The search space is split into independent (D, k, b_1) prefixes; results
// are emitted prefix by prefix in canonical order whatever the schedule.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/error.hpp"
#include "drg/geometric.hpp"
#include "drg/records.hpp"
#include "drg/spectra.hpp"

namespace drg {

// Listed in the order they are evaluated.
enum class Filter { Basic, Lemma32, Spectral, Lemma31, Forcing, Eta, Godsil, Diameter };

inline constexpr Filter kAllFilters[] = {Filter::Basic,   Filter::Lemma32, Filter::Spectral, Filter::Lemma31,
                                         Filter::Forcing, Filter::Eta,     Filter::Godsil,   Filter::Diameter};

inline const char* to_string(Filter f) {
  switch (f) {
    case Filter::Basic: return "basic";
    case Filter::Lemma32: return "lemma32";
    case Filter::Spectral: return "spectral";
    case Filter::Lemma31: return "lemma31";
    case Filter::Forcing: return "forcing";
    case Filter::Eta: return "eta";
    case Filter::Godsil: return "godsil";
    case Filter::Diameter: return "diameter";
  }
  return "?";
}

inline std::set<Filter> default_filters() {
  return {Filter::Basic, Filter::Lemma32, Filter::Spectral, Filter::Lemma31, Filter::Forcing};
}

/// Comma-separated filter labels; "all" and "default" are accepted. The
/// basic filter is always on since the search only generates arrays meeting it.
inline std::set<Filter> parse_filters(const std::string& text) {
  std::set<Filter> out{Filter::Basic};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(std::begin(kAllFilters), std::end(kAllFilters));
      continue;
    }
    if (item == "default") {
      auto d = default_filters();
      out.insert(d.begin(), d.end());
      continue;
    }
    bool found = false;
    for (Filter f : kAllFilters)
      if (item == to_string(f)) {
        out.insert(f);
        found = true;
      }
    if (!found) throw ParseError("unknown filter '" + item + "'");
  }
  return out;
}

struct SearchSpec {
  std::int64_t m = 2;
  int d_min = 2;
  int d_max = 2;
  std::int64_t k_max = 10;
  std::int64_t c2_min = 1;
  std::set<Filter> filters = default_filters();
  int shard_index = 0;
  int shard_total = 1;

  bool has(Filter f) const { return filters.count(f) > 0; }
};

inline void validate(const SearchSpec& s) {
  if (s.m < 2) throw PreconditionError("m must be at least 2");
  if (s.d_min < 2 || s.d_max < s.d_min) throw PreconditionError("diameter range must satisfy 2 <= D_min <= D_max");
  if (s.k_max < 2) throw PreconditionError("k_max must be at least 2");
  if (s.c2_min < 1) throw PreconditionError("c2_min must be at least 1");
  if (s.shard_total < 1 || s.shard_index < 0 || s.shard_index >= s.shard_total)
    throw PreconditionError("shard index must lie in [0, total)");
  // D <= 4^k_max; only binding for tiny k_max.
  if (s.k_max < 31 && BigInt(s.d_max) > pow_big(BigInt(4), static_cast<unsigned>(s.k_max)))
    throw PreconditionError("D_max exceeds 4^k_max");
}

/// The i-th of `total` round-robin shards of the (D, k, b_1) prefix space.
inline SearchSpec shard(const SearchSpec& s, int i, int total) {
  if (total < 1 || i < 0 || i >= total) throw PreconditionError("shard index must lie in [0, total)");
  SearchSpec out = s;
  out.shard_index = i;
  out.shard_total = total;
  return out;
}

struct ClassificationResult {
  Classification cls = Classification::Unresolved;
  std::string reason;
  std::vector<std::int64_t> tau, psi;
  bool forced = false;  // a_1 > m^2 c_2 with theta_D in [-m, 1-m)
};

/// Array-level decision: pseudo-geometric parameters, a certified reason
/// why no geometric graph has this array, or unresolved. Integral theta_D
/// is tested with m' = -theta_D, the only admissible line size.
inline ClassificationResult classify(const IntersectionArray& ia, const Spectrum& spec, std::int64_t m) {
  ClassificationResult r;
  const Eigenvalue& t = spec.theta_min();
  const std::int64_t a1 = ia.a(1), c2 = ia.c(2), k = ia.valency();
  r.forced = t.compare(Rational(-m)) >= 0 && t.compare(Rational(1 - m)) < 0 && a1 > m * m * c2;
  if (!t.is_integer()) {
    if (r.forced) {
      r.cls = Classification::CertifiedNonGeometric;
      r.reason = "forcing: a_1 > m^2 c_2 forces theta_D = -m but theta_D = " + t.str();
    } else {
      r.reason = "theta_D = " + t.str() + " is not an integer and no forcing applies";
    }
    return r;
  }
  const BigInt mp = -t.integer_value();
  if (mp < 2) {
    r.reason = "theta_D = " + t.str() + " > -2";
    return r;
  }
  const std::int64_t line = mp.convert_to<std::int64_t>();
  if (k % line != 0) {
    r.cls = Classification::CertifiedNonGeometric;
    r.reason = "m_divides_k: theta_D = -" + std::to_string(line) + " does not divide k = " + std::to_string(k);
    return r;
  }
  auto sol = geometric_recursion(ia, line);
  if (auto* bad = std::get_if<Infeasible>(&sol)) {
    r.cls = Classification::CertifiedNonGeometric;
    r.reason = "lemma41: " + bad->reason;
    return r;
  }
  const auto& g = std::get<GeometricSolution>(sol);
  auto f = check_lemma42(g, ia);
  if (f.applicable && !f.tau2_ge_psi1) {
    r.cls = Classification::CertifiedNonGeometric;
    r.reason = "lemma42: " + f.note;
    return r;
  }
  r.cls = Classification::PseudoGeometric;
  r.reason = "m' = " + std::to_string(line);
  r.tau = g.tau;
  r.psi = g.psi;
  return r;
}

/// Evaluates one complete array. Returns nothing when a filter rejects it
/// and `explain` is off.
inline std::optional<ResultRecord> evaluate_array(const IntersectionArray& ia, const SearchSpec& s, bool explain) {
  ResultRecord rec;
  rec.ia = ia;
  rec.n = derive(ia).n;
  const std::int64_t k = ia.valency(), a1 = ia.a(1), m = s.m;
  if (ia.diameter() == 2 && ia.c(2) == k) rec.flags.push_back("complete_multipartite");

  auto mark = [&](Filter f, const char* status) { rec.filters.push_back({to_string(f), status}); };
  auto reject = [&](Filter f, const std::string& why) -> std::optional<ResultRecord> {
    mark(f, "fail");
    if (!explain) return std::nullopt;
    rec.cls = Classification::Filtered;
    rec.reason = std::string(to_string(f)) + ": " + why;
    return rec;
  };

  mark(Filter::Basic, "pass");
  if (s.has(Filter::Lemma32)) {
    if (!lemma32_holds(k, a1, m))
      return reject(Filter::Lemma32, "k = " + std::to_string(k) + " >= m(a_1 + m) = " + std::to_string(m * (a1 + m)));
    mark(Filter::Lemma32, "pass");
  }

  // Cheap exact rejections before the full-precision spectrum.
  if (s.has(Filter::Spectral)) {
    if (eigenvalues_below(ia, Rational(-m)) > 0) return reject(Filter::Spectral, "theta_D < -" + std::to_string(m));
    try {
      Spectrum coarse = eigenvalues(ia, Rational(1, 1 << 16), Rational(1, 64));
      for (std::size_t i = 0; i < coarse.mults.size(); ++i)
        if (!coarse.mults[i].may_be_integral())
          return reject(Filter::Spectral,
                        "multiplicity of theta_" + std::to_string(i) + " is " + coarse.mults[i].str());
    } catch (const PrecisionError&) {
      // decided below at full precision
    }
  }

  Spectrum spec;
  try {
    spec = eigenvalues(ia);
  } catch (const PrecisionError& e) {
    mark(Filter::Spectral, "error");
    rec.cls = Classification::Unresolved;
    rec.reason = std::string("precision: ") + e.what();
    return rec;
  }
  for (std::size_t i = 0; i < spec.eigs.size(); ++i) rec.spectrum.push_back({spec.eigs[i].str(), spec.mults[i].str()});
  rec.theta_min = spec.theta_min().str();

  if (s.has(Filter::Spectral)) {
    if (spec.theta_min().compare(Rational(-m)) < 0)
      return reject(Filter::Spectral, "theta_D = " + rec.theta_min + " < -" + std::to_string(m));
    for (std::size_t i = 0; i < spec.mults.size(); ++i)
      if (!spec.mults[i].is_integral())
        return reject(Filter::Spectral, "multiplicity of theta_" + std::to_string(i) + " is " + spec.mults[i].str());
    if (!trace_identities(ia, spec).holds) return reject(Filter::Spectral, "trace identities fail");
    mark(Filter::Spectral, "pass");
  }
  if (s.has(Filter::Lemma31)) {
    auto big = large_eigenvalue_check(spec, ia);
    if (!big)
      mark(Filter::Lemma31, "n/a");
    else if (!*big)
      return reject(Filter::Lemma31, "no eigenvalue theta != k has theta^2 > k/2");
    else
      mark(Filter::Lemma31, "pass");
  }
  if (s.has(Filter::Forcing)) {
    auto f = forcing_test(ia, spec, m);
    if (f.verdict == ForcingVerdict::Inconsistent) return reject(Filter::Forcing, f.reason);
    mark(Filter::Forcing, f.verdict == ForcingVerdict::ForcedGeometric ? "pass" : "n/a");
  }
  if (s.has(Filter::Eta) || s.has(Filter::Godsil)) {
    auto pf = proof_filters(ia, spec, m);
    for (auto [flt, key] : {std::pair{Filter::Eta, "eta_local"}, std::pair{Filter::Godsil, "godsil_ok"}}) {
      if (!s.has(flt)) continue;
      const BoundEntry* e = pf.find(key);
      if (!e->applicable)
        mark(flt, "n/a");
      else if (e->satisfied == false)
        return reject(flt, e->rendered);
      else
        mark(flt, "pass");
    }
  }

  ClassificationResult c = classify(ia, spec, m);
  if (s.has(Filter::Diameter)) {
    const bool pseudo = c.cls == Classification::PseudoGeometric && ia.c(2) >= 2;
    const std::int64_t line = pseudo ? -spec.theta_min().integer_value().convert_to<std::int64_t>() : m;
    BoundReport br = diameter_bounds(ia, line, pseudo ? std::optional<bool>(true) : std::nullopt, &spec);
    for (const auto& e : br.entries)
      if (e.applicable && e.satisfied == false) return reject(Filter::Diameter, e.key + ": " + e.rendered);
    mark(Filter::Diameter, pseudo ? "pass" : "n/a");
  }

  rec.cls = c.cls;
  rec.reason = c.reason;
  rec.tau = c.tau;
  rec.psi = c.psi;
  if (c.forced) rec.flags.push_back("forced_geometric");
  return rec;
}

struct Prefix {
  int D = 0;
  std::int64_t k = 0;
  std::int64_t b1 = 0;
};

/// All (D, k, b_1) prefixes of this shard, in canonical order.
inline std::vector<Prefix> shard_prefixes(const SearchSpec& s) {
  std::vector<Prefix> out;
  std::int64_t index = 0;
  for (int D = s.d_min; D <= s.d_max; ++D)
    for (std::int64_t k = 2; k <= s.k_max; ++k)
      for (std::int64_t b1 = k - 1; b1 >= 1; --b1, ++index)
        if (index % s.shard_total == s.shard_index) out.push_back({D, k, b1});
  return out;
}

namespace detail {

class PrefixSearch {
 public:
  PrefixSearch(const SearchSpec& s, const Prefix& p, bool explain, const std::set<std::string>* skip)
      : s_(s), p_(p), explain_(explain), skip_(skip), b_(p.D), c_(p.D + 1) {}

  std::vector<ResultRecord> run() {
    const std::int64_t k = p_.k, a1 = k - p_.b1 - 1;
    if (s_.has(Filter::Lemma32) && !explain_ && !lemma32_holds(k, a1, s_.m)) return {};
    b_[0] = k;
    b_[1] = p_.b1;
    c_[1] = 1;
    grow(2, k);
    std::sort(out_.begin(), out_.end(),
              [](const ResultRecord& x, const ResultRecord& y) { return canonical_less(x.ia, y.ia); });
    return std::move(out_);
  }

 private:
  // b_0..b_{i-1} and c_1..c_{i-1} are fixed; k_prev = k_{i-1}.
  void grow(int i, std::int64_t k_prev) {
    const int D = p_.D;
    const std::int64_t k = p_.k;
    std::int64_t top;
    if (__builtin_mul_overflow(k_prev, b_[i - 1], &top)) throw CapExceeded("vertex count overflows 64 bits");
    const std::int64_t c_lo = std::max(c_[i - 1], i == 2 ? s_.c2_min : std::int64_t{1});
    if (i == D) {
      for (std::int64_t ci = c_lo; ci <= k; ++ci) {
        if (top % ci != 0) continue;
        c_[i] = ci;
        if (!cross_ok(i)) continue;
        finish();
      }
      return;
    }
    for (std::int64_t bi = b_[i - 1]; bi >= 1; --bi)
      for (std::int64_t ci = c_lo; ci + bi <= k; ++ci) {
        if (top % ci != 0) continue;
        b_[i] = bi;
        c_[i] = ci;
        if (!cross_ok(i)) continue;
        grow(i + 1, top / ci);
      }
  }

  // b_x >= c_{D-x}; checks the pairs that became decidable at step i.
  bool cross_ok(int i) const {
    const int j = p_.D - i;
    if (j < 1 || j > i) return true;
    return b_[i] >= c_[j] && b_[j] >= c_[i];
  }

  void finish() {
    IntersectionArray ia(b_, std::vector<std::int64_t>(c_.begin() + 1, c_.end()));
    if (skip_ && skip_->count(format_array(ia))) return;
    if (!is_feasible(ia)) throw Error("internal: search produced infeasible array " + format_array(ia));
    if (auto rec = evaluate_array(ia, s_, explain_)) out_.push_back(std::move(*rec));
  }

  const SearchSpec& s_;
  Prefix p_;
  bool explain_;
  const std::set<std::string>* skip_;
  std::vector<std::int64_t> b_, c_;  // c_[0] unused
  std::vector<ResultRecord> out_;
};

}  // namespace detail

struct RunOptions {
  int threads = 1;
  bool explain = false;
  const std::set<std::string>* skip_keys = nullptr;  // resume: canonical keys already stored
};

struct RunStats {
  std::int64_t prefixes = 0;
  std::int64_t records = 0;
};

/// Runs the search and hands each record to `sink` in canonical order. Worker
/// threads process prefixes independently; the calling thread is the single
/// writer and emits prefix results strictly in prefix order.
inline RunStats run_enumeration(const SearchSpec& s, const RunOptions& opt,
                                const std::function<void(const ResultRecord&)>& sink) {
  validate(s);
  const auto prefixes = shard_prefixes(s);
  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(prefixes.size())));
  std::vector<std::optional<std::vector<ResultRecord>>> done(prefixes.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || stop) return;
      std::vector<ResultRecord> recs;
      try {
        recs = detail::PrefixSearch(s, prefixes[i], opt.explain, opt.skip_keys).run();
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done[i] = std::move(recs);
      cv.notify_all();
    }
  };

  RunStats stats;
  stats.prefixes = static_cast<std::int64_t>(prefixes.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  std::exception_ptr sink_failure;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::vector<ResultRecord> recs;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i].has_value() || stop.load(); });
      if (!done[i]) break;
      recs = std::move(*done[i]);
      done[i].reset();
    }
    try {
      for (const auto& r : recs) {
        sink(r);
        ++stats.records;
      }
    } catch (...) {
      sink_failure = std::current_exception();
      stop = true;
      break;
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (sink_failure) std::rethrow_exception(sink_failure);
  return stats;
}

/// Collects the whole run in memory.
inline std::vector<ResultRecord> enumerate(const SearchSpec& s, const RunOptions& opt = {}) {
  std::vector<ResultRecord> out;
  run_enumeration(s, opt, [&](const ResultRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace drg
