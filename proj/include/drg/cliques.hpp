#pragma once

// Maximal-clique enumeration and the search for a partition of the edge set
// into Delsarte cliques, which decides geometricity of a concrete graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/exact.hpp"
#include "drg/graph.hpp"
#include "drg/spectra.hpp"

namespace drg {

struct CliqueLimits {
  std::int64_t max_cliques = 100000;
  std::int64_t max_nodes = 10000000;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int min_size, int exact_size, const CliqueLimits& lim)
      : g_(g), min_(min_size), exact_(exact_size), lim_(lim) {}

  std::vector<std::vector<int>> run() {
    for (int v = 0; v < g_.n(); ++v) {
      std::vector<int> P, X;
      for (int w : g_.neighbors(v)) (w > v ? P : X).push_back(w);
      R_ = {v};
      expand(P, X);
    }
    for (auto& c : out_) std::sort(c.begin(), c.end());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  void expand(std::vector<int>& P, std::vector<int>& X) {
    if (++nodes_ > lim_.max_nodes)
      throw CapExceeded("clique search exceeded " + std::to_string(lim_.max_nodes) + " nodes");
    const int r = static_cast<int>(R_.size());
    if (r + static_cast<int>(P.size()) < std::max(min_, exact_)) return;
    if (exact_ > 0 && r == exact_) {
      if (P.empty() && X.empty()) report();
      return;
    }
    if (P.empty()) {
      if (X.empty()) report();
      return;
    }
    // Pivot: the vertex of P u X with the most neighbours in P.
    int pivot = -1, best = -1;
    for (const auto* S : {&P, &X})
      for (int u : *S) {
        int cnt = 0;
        for (int w : P) cnt += g_.adjacent(u, w);
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<int> branch;
    for (int w : P)
      if (!g_.adjacent(pivot, w)) branch.push_back(w);
    for (int w : branch) {
      std::vector<int> P2, X2;
      for (int z : P)
        if (g_.adjacent(w, z)) P2.push_back(z);
      for (int z : X)
        if (g_.adjacent(w, z)) X2.push_back(z);
      R_.push_back(w);
      expand(P2, X2);
      R_.pop_back();
      P.erase(std::find(P.begin(), P.end(), w));
      X.push_back(w);
    }
  }

  void report() {
    if (static_cast<int>(R_.size()) < min_) return;
    if (static_cast<std::int64_t>(out_.size()) >= lim_.max_cliques)
      throw CapExceeded("clique enumeration exceeded " + std::to_string(lim_.max_cliques) + " cliques");
    out_.push_back(R_);
  }

  const Graph& g_;
  int min_, exact_;
  CliqueLimits lim_;
  std::vector<int> R_;
  std::vector<std::vector<int>> out_;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

/// All maximal cliques with at least min_size vertices, each sorted, in
/// lexicographic order.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size = 1, const CliqueLimits& lim = {}) {
  return detail::CliqueSearch(g, min_size, 0, lim).run();
}

/// Maximal cliques with exactly `size` vertices, lexicographically ordered.
inline std::vector<std::vector<int>> delsarte_cliques(const Graph& g, int size, const CliqueLimits& lim = {}) {
  if (size < 2) throw PreconditionError("clique size must be at least 2");
  return detail::CliqueSearch(g, 0, size, lim).run();
}

inline std::vector<std::vector<int>> delsarte_cliques(const Graph& g, const Rational& size, const CliqueLimits& lim = {}) {
  if (!is_integral(size)) throw PreconditionError("Delsarte clique size " + to_string(size) + " is not an integer");
  return delsarte_cliques(g, numerator_of(size).convert_to<int>(), lim);
}

// ---------------------------------------------------------------------------
// Geometric cover

struct CliqueCover {
  std::vector<std::vector<int>> cliques;
  std::map<std::pair<int, int>, int> edge_map;  // edge (u < v) -> index into cliques
  std::optional<std::int64_t> cover_count;      // set when counting was requested
  std::int64_t candidates = 0;                  // Delsarte cliques found
};

struct NonGeometricCertificate {
  std::string reason;
  std::optional<std::pair<int, int>> edge;  // an edge in no Delsarte clique, when that is the reason
};

struct Undecided {
  std::string reason;
};

using CoverOutcome = std::variant<CliqueCover, NonGeometricCertificate, Undecided>;

struct CoverOptions {
  bool count_all = false;
  CliqueLimits limits{};
  std::int64_t max_search_nodes = 10000000;
};

namespace detail {

class ExactCover {
 public:
  ExactCover(std::vector<std::vector<int>> clique_edges, int edge_count)
      : ce_(std::move(clique_edges)), covered_(edge_count, 0), live_(edge_count, 0), dead_(ce_.size(), 0),
        by_edge_(edge_count) {
    for (std::size_t k = 0; k < ce_.size(); ++k)
      for (int e : ce_[k]) by_edge_[e].push_back(static_cast<int>(k));
    for (int e = 0; e < edge_count; ++e) live_[e] = static_cast<int>(by_edge_[e].size());
  }

  /// Returns false when the node budget ran out.
  bool search(bool count_all, std::int64_t budget) {
    budget_ = budget;
    count_all_ = count_all;
    return recurse();
  }

  std::int64_t solutions() const { return solutions_; }
  const std::vector<int>& first() const { return first_; }

 private:
  bool recurse() {
    if (++nodes_ > budget_) return false;
    int pick = -1, best = 1 << 30;
    for (std::size_t e = 0; e < covered_.size(); ++e)
      if (!covered_[e] && live_[e] < best) {
        best = live_[e];
        pick = static_cast<int>(e);
      }
    if (pick < 0) {
      if (solutions_++ == 0) first_ = chosen_;
      return true;
    }
    if (best == 0) return true;
    std::vector<int> options;
    for (int k : by_edge_[pick])
      if (!dead_[k]) options.push_back(k);
    for (int k : options) {
      choose(k);
      chosen_.push_back(k);
      bool ok = recurse();
      chosen_.pop_back();
      unchoose(k);
      if (!ok) return false;
      if (!count_all_ && solutions_ > 0) return true;
    }
    return true;
  }

  void choose(int k) {
    for (int e : ce_[k]) {
      covered_[e] = 1;
      for (int k2 : by_edge_[e])
        if (dead_[k2]++ == 0)
          for (int e2 : ce_[k2]) --live_[e2];
    }
  }

  void unchoose(int k) {
    for (auto it = ce_[k].rbegin(); it != ce_[k].rend(); ++it) {
      int e = *it;
      for (auto jt = by_edge_[e].rbegin(); jt != by_edge_[e].rend(); ++jt)
        if (--dead_[*jt] == 0)
          for (int e2 : ce_[*jt]) ++live_[e2];
      covered_[e] = 0;
    }
  }

  std::vector<std::vector<int>> ce_;
  std::vector<char> covered_;
  std::vector<int> live_;
  std::vector<int> dead_;
  std::vector<std::vector<int>> by_edge_;
  std::vector<int> chosen_, first_;
  std::int64_t solutions_ = 0, nodes_ = 0, budget_ = 0;
  bool count_all_ = false;
};

}  // namespace detail

/// Searches for a set of Delsarte cliques partitioning the edges. A
/// certificate is returned only when the search is exhaustive; exhausted
/// budgets give Undecided.
inline CoverOutcome geometric_cover(const Graph& g, const IntersectionArray& ia, const Spectrum& spec,
                                    const CoverOptions& opt = {}) {
  if (ia.diameter() < 2) throw PreconditionError("geometric cover needs a non-complete graph");
  if (g.regular_degree() != ia.valency()) throw PreconditionError("graph valency does not match the array");
  const Eigenvalue& t = spec.theta_min();
  if (!t.is_integer()) return NonGeometricCertificate{"no Delsarte cliques possible: theta_D = " + t.str() + " is not an integer", {}};
  const BigInt m = -t.integer_value();
  if (BigInt(ia.valency()) % m != 0)
    return NonGeometricCertificate{"no Delsarte cliques possible: 1 + k/(-theta_D) = 1 + " +
                                       std::to_string(ia.valency()) + "/" + m.str() + " is not an integer",
                                   {}};
  const int size = 1 + static_cast<int>(ia.valency() / m.convert_to<std::int64_t>());

  std::vector<std::vector<int>> cliques;
  try {
    cliques = delsarte_cliques(g, size, opt.limits);
  } catch (const CapExceeded& e) {
    return Undecided{e.what()};
  }

  const auto edges = g.edges();
  std::unordered_map<std::uint64_t, int> edge_id;
  edge_id.reserve(edges.size() * 2);
  auto key = [&](int u, int v) { return std::uint64_t(std::min(u, v)) * g.n() + std::max(u, v); };
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[key(edges[i].first, edges[i].second)] = static_cast<int>(i);
  std::vector<std::vector<int>> clique_edges(cliques.size());
  std::vector<int> per_edge(edges.size(), 0);
  for (std::size_t k = 0; k < cliques.size(); ++k)
    for (std::size_t i = 0; i < cliques[k].size(); ++i)
      for (std::size_t j = i + 1; j < cliques[k].size(); ++j) {
        int e = edge_id.at(key(cliques[k][i], cliques[k][j]));
        clique_edges[k].push_back(e);
        ++per_edge[e];
      }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (per_edge[e] == 0)
      return NonGeometricCertificate{"edge {" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) +
                                         "} lies in no clique of size " + std::to_string(size),
                                     edges[e]};

  std::vector<int> chosen;
  std::optional<std::int64_t> count;
  if (std::all_of(per_edge.begin(), per_edge.end(), [](int c) { return c == 1; })) {
    for (std::size_t k = 0; k < cliques.size(); ++k) chosen.push_back(static_cast<int>(k));
    if (opt.count_all) count = 1;
  } else {
    detail::ExactCover ec(clique_edges, static_cast<int>(edges.size()));
    if (!ec.search(opt.count_all, opt.max_search_nodes))
      return Undecided{"cover search exceeded " + std::to_string(opt.max_search_nodes) + " nodes"};
    if (ec.solutions() == 0)
      return NonGeometricCertificate{"exhaustive search: no set of " + std::to_string(size) +
                                         "-cliques partitions the edges",
                                     {}};
    chosen = ec.first();
    if (opt.count_all) count = ec.solutions();
  }
  std::sort(chosen.begin(), chosen.end());
  CliqueCover cover;
  cover.candidates = static_cast<std::int64_t>(cliques.size());
  cover.cover_count = count;
  for (int k : chosen) {
    const int idx = static_cast<int>(cover.cliques.size());
    cover.cliques.push_back(cliques[k]);
    for (int e : clique_edges[k]) cover.edge_map[edges[e]] = idx;
  }
  return cover;
}

}  // namespace drg
