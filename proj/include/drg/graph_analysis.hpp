#pragma once

// Structural checks on concrete graphs: distance-regularity, quadrangles and
// the Terwilliger property, outer distributions of codes, equitable
// partitions, clique extensions, antipodality and local graphs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drg/arrays.hpp"
#include "drg/graph.hpp"

namespace drg {

/// Evidence that a property fails: the vertices involved and a description.
struct Witness {
  std::vector<int> vertices;
  std::string detail;
};

using DistanceRegularity = std::variant<IntersectionArray, Witness>;

/// Tallies c_i(x,y) and b_i(x,y) for every ordered pair by breadth-first
/// search from each vertex. Returns the intersection array when the tallies
/// depend only on d(x,y), otherwise two pairs at equal distance that differ.
inline DistanceRegularity is_distance_regular(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (g.n() == 1) return Witness{{0}, "single vertex: diameter 0"};
  struct Entry {
    std::int64_t c = -1, b = -1;
    int x = -1, y = -1;
  };
  std::vector<Entry> table;
  int D = -1;
  for (int x = 0; x < g.n(); ++x) {
    auto dist = bfs_distances(g, x);
    int ecc = *std::max_element(dist.begin(), dist.end());
    if (D < 0) {
      D = ecc;
      table.assign(D + 1, Entry{});
    } else if (ecc != D) {
      int far = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
      return Witness{{table[D].x, table[D].y, x, far},
                     "vertex " + std::to_string(x) + " has eccentricity " + std::to_string(ecc) + ", vertex " +
                         std::to_string(table[D].x) + " has " + std::to_string(D)};
    }
    for (int y = 0; y < g.n(); ++y) {
      const int i = dist[y];
      std::int64_t c = 0, b = 0;
      for (int z : g.neighbors(y)) {
        if (dist[z] == i - 1) ++c;
        if (dist[z] == i + 1) ++b;
      }
      Entry& e = table[i];
      if (e.x < 0) {
        e = {c, b, x, y};
      } else if (e.c != c || e.b != b) {
        return Witness{{e.x, e.y, x, y},
                       "pairs (" + std::to_string(e.x) + "," + std::to_string(e.y) + ") and (" + std::to_string(x) +
                           "," + std::to_string(y) + ") at distance " + std::to_string(i) + " have (c,b) = (" +
                           std::to_string(e.c) + "," + std::to_string(e.b) + ") vs (" + std::to_string(c) + "," +
                           std::to_string(b) + ")"};
      }
    }
  }
  std::vector<std::int64_t> b, c;
  for (int i = 0; i < D; ++i) b.push_back(table[i].b);
  for (int i = 1; i <= D; ++i) c.push_back(table[i].c);
  return IntersectionArray(b, c);
}

/// Every vertex pair at distance 2 has a common neighbourhood inducing a
/// clique. Not applicable (nullopt) to complete graphs.
inline std::optional<bool> is_terwilliger(const Graph& g) {
  bool any_distance_two = false;
  std::vector<int> common;
  for (int x = 0; x < g.n(); ++x) {
    auto dist = bfs_distances(g, x);
    for (int y = x + 1; y < g.n(); ++y) {
      if (dist[y] != 2) continue;
      any_distance_two = true;
      common.clear();
      std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(), g.neighbors(y).begin(),
                            g.neighbors(y).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!g.adjacent(common[i], common[j])) return false;
    }
  }
  if (!any_distance_two) return std::nullopt;
  return true;
}

/// An induced 4-cycle v-u-w-z: searched from paths v-u-w with v, w
/// non-adjacent, looking for a second common neighbour z not adjacent to u.
inline std::optional<std::array<int, 4>> find_induced_quadrangle(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    const auto& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i)
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        int v = nu[i], w = nu[j];
        if (g.adjacent(v, w)) continue;
        for (int z : g.neighbors(v))
          if (z != u && g.adjacent(z, w) && !g.adjacent(z, u)) return std::array<int, 4>{v, u, w, z};
      }
  }
  return std::nullopt;
}

inline bool has_induced_quadrangle(const Graph& g) { return find_induced_quadrangle(g).has_value(); }

// ---------------------------------------------------------------------------
// Codes and partitions

struct CodeProfile {
  int covering_radius = 0;
  std::vector<std::vector<std::int64_t>> outer;  // (rho+1) x (D+1), e[l][i]
  std::vector<std::int64_t> psi;                 // e[i][i], 0 <= i <= rho
};

/// Outer distribution B_{xi}(C) = |C n Gamma_i(x)|; completely regular iff
/// the row depends only on d(x, C).
inline std::variant<CodeProfile, Witness> outer_distribution(const Graph& g, const std::vector<int>& code) {
  if (code.empty()) throw PreconditionError("code must be nonempty");
  for (int c : code)
    if (c < 0 || c >= g.n()) throw PreconditionError("code vertex out of range");
  const int D = diameter(g);
  std::vector<std::vector<std::int64_t>> B(g.n(), std::vector<std::int64_t>(D + 1, 0));
  std::vector<int> sorted = code;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int c : sorted) {
    auto dist = bfs_distances(g, c);
    for (int x = 0; x < g.n(); ++x) ++B[x][dist[x]];
  }
  std::vector<int> rho_of(g.n());
  int rho = 0;
  for (int x = 0; x < g.n(); ++x) {
    int r = 0;
    while (B[x][r] == 0) ++r;
    rho_of[x] = r;
    rho = std::max(rho, r);
  }
  CodeProfile p;
  p.covering_radius = rho;
  p.outer.assign(rho + 1, {});
  std::vector<int> rep(rho + 1, -1);
  for (int x = 0; x < g.n(); ++x) {
    int r = rho_of[x];
    if (rep[r] < 0) {
      rep[r] = x;
      p.outer[r] = B[x];
    } else if (p.outer[r] != B[x]) {
      return Witness{{rep[r], x}, "vertices " + std::to_string(rep[r]) + " and " + std::to_string(x) +
                                      " are both at distance " + std::to_string(r) +
                                      " from the code but have different outer distributions"};
    }
  }
  for (int i = 0; i <= rho; ++i) p.psi.push_back(p.outer[i][i]);
  return p;
}

inline bool is_completely_regular(const Graph& g, const std::vector<int>& code) {
  return std::holds_alternative<CodeProfile>(outer_distribution(g, code));
}

using QuotientMatrix = std::vector<std::vector<std::int64_t>>;

/// Quotient matrix of an equitable partition, or a witness pair of vertices
/// in one part with different neighbour counts into another.
inline std::variant<QuotientMatrix, Witness> is_equitable(const Graph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw PreconditionError("partition has an empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= g.n()) throw PreconditionError("partition vertex out of range");
      if (part_of[v] >= 0) throw PreconditionError("partition parts overlap at vertex " + std::to_string(v));
      part_of[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (part_of[v] < 0) throw PreconditionError("partition misses vertex " + std::to_string(v));
  const std::size_t L = parts.size();
  QuotientMatrix Q(L, std::vector<std::int64_t>(L, 0));
  for (std::size_t p = 0; p < L; ++p) {
    std::vector<std::int64_t> row(L);
    for (std::size_t idx = 0; idx < parts[p].size(); ++idx) {
      const int v = parts[p][idx];
      std::fill(row.begin(), row.end(), 0);
      for (int w : g.neighbors(v)) ++row[part_of[w]];
      if (idx == 0) {
        Q[p] = row;
      } else if (row != Q[p]) {
        std::size_t j = 0;
        while (row[j] == Q[p][j]) ++j;
        return Witness{{parts[p][0], v}, "vertices " + std::to_string(parts[p][0]) + " and " + std::to_string(v) +
                                             " of part " + std::to_string(p) + " have " + std::to_string(Q[p][j]) +
                                             " vs " + std::to_string(row[j]) + " neighbours in part " +
                                             std::to_string(j)};
      }
    }
  }
  return Q;
}

/// Parts {x} and Gamma_i(x) for 1 <= i <= ecc(x).
inline std::vector<std::vector<int>> distance_partition(const Graph& g, int x) {
  auto dist = bfs_distances(g, x);
  int ecc = *std::max_element(dist.begin(), dist.end());
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end())
    throw PreconditionError("graph is disconnected");
  std::vector<std::vector<int>> parts(ecc + 1);
  for (int v = 0; v < g.n(); ++v) parts[dist[v]].push_back(v);
  return parts;
}

// ---------------------------------------------------------------------------
// Clique extensions

/// Replace each vertex by an alpha-clique; copies of adjacent vertices are
/// adjacent. Vertex (x, i) = x * alpha + i.
inline Graph clique_extension(const Graph& g, int alpha) {
  if (alpha < 1) throw PreconditionError("alpha must be at least 1");
  if (static_cast<long double>(g.n()) * alpha > kMaxVertices) throw CapExceeded("clique extension exceeds vertex cap");
  const int N = g.n() * alpha;
  std::vector<std::vector<int>> adj(N);
  for (int x = 0; x < g.n(); ++x)
    for (int i = 0; i < alpha; ++i) {
      auto& a = adj[x * alpha + i];
      for (int j = 0; j < alpha; ++j)
        if (j != i) a.push_back(x * alpha + j);
      for (int y : g.neighbors(x))
        for (int j = 0; j < alpha; ++j) a.push_back(y * alpha + j);
    }
  return Graph::from_adjacency(std::move(adj), "clique_extension(" + g.label() + "," + std::to_string(alpha) + ")");
}

struct CliqueExtensionInfo {
  int alpha = 1;
  Graph base;
};

/// Groups vertices with equal closed neighbourhoods. The largest alpha with
/// g = clique_extension(base, alpha) is the gcd of the class sizes; the base
/// keeps size/alpha copies of each class, ordered by smallest member.
inline CliqueExtensionInfo detect_clique_extension(const Graph& g) {
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> closed = g.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    classes[closed].push_back(v);
  }
  std::vector<std::vector<int>> groups;
  for (auto& [_, members] : classes) groups.push_back(members);
  std::sort(groups.begin(), groups.end(), [](auto& a, auto& b) { return a.front() < b.front(); });
  int alpha = 0;
  for (auto& grp : groups) alpha = std::gcd(alpha, static_cast<int>(grp.size()));

  std::vector<int> class_of(g.n());
  std::vector<int> first_base(groups.size());
  int N = 0;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    for (int v : groups[c]) class_of[v] = static_cast<int>(c);
    first_base[c] = N;
    N += static_cast<int>(groups[c].size()) / alpha;
  }
  std::vector<std::vector<int>> adj(N);
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const int copies = static_cast<int>(groups[c].size()) / alpha;
    std::vector<int> nb;
    for (int w : g.neighbors(groups[c].front())) nb.push_back(class_of[w]);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (int i = 0; i < copies; ++i) {
      const int u = first_base[c] + i;
      for (int d : nb) {
        const int dcopies = static_cast<int>(groups[d].size()) / alpha;
        for (int j = 0; j < dcopies; ++j) {
          const int v = first_base[d] + j;
          if (v != u) adj[u].push_back(v);
        }
      }
    }
  }
  return {alpha, Graph::from_adjacency(std::move(adj), "base(" + g.label() + ")")};
}

// ---------------------------------------------------------------------------
// Antipodality and local graphs

/// "Equal or at distance D" is an equivalence relation.
inline bool is_antipodal(const Graph& g) {
  const DistanceData d = all_distances(g);
  const int D = d.diameter;
  if (D < 2) return false;
  for (int x = 0; x < g.n(); ++x) {
    std::vector<int> far;
    for (int y = 0; y < g.n(); ++y)
      if (d(x, y) == D) far.push_back(y);
    for (std::size_t i = 0; i < far.size(); ++i)
      for (std::size_t j = i + 1; j < far.size(); ++j)
        if (d(far[i], far[j]) != D) return false;
  }
  return true;
}

/// Subgraph induced on the neighbours of x, relabelled 0..k-1 in increasing order.
inline Graph local_graph(const Graph& g, int x) {
  const auto& nb = g.neighbors(x);
  if (nb.empty()) throw PreconditionError("vertex has no neighbours");
  std::vector<std::vector<int>> adj(nb.size());
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (i != j && g.adjacent(nb[i], nb[j])) adj[i].push_back(static_cast<int>(j));
  return Graph::from_adjacency(std::move(adj), "local(" + g.label() + "," + std::to_string(x) + ")");
}

}  // namespace drg
