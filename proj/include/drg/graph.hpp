#pragma once

// Simple undirected graphs with sorted adjacency lists (plus bitset rows for
// constant-time adjacency on graphs up to a few thousand vertices), breadth-
// first distances, and the plain-text edge-list format.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "drg/error.hpp"

namespace drg {

inline constexpr int kMaxVertices = 100000;

class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged; loops and out-of-range endpoints are errors.
  Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label = {})
      : n_(n), adj_(n), label_(std::move(label)) {
    if (n < 1) throw PreconditionError("a graph needs at least one vertex");
    if (n > kMaxVertices) throw CapExceeded("vertex count " + std::to_string(n) + " exceeds cap");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
      if (u == v) throw PreconditionError("loops are not allowed");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    finish();
  }

  static Graph from_adjacency(std::vector<std::vector<int>> adj, std::string label = {}) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    if (g.n_ < 1) throw PreconditionError("a graph needs at least one vertex");
    if (g.n_ > kMaxVertices) throw CapExceeded("vertex count " + std::to_string(g.n_) + " exceeds cap");
    g.adj_ = std::move(adj);
    g.label_ = std::move(label);
    g.finish();
    return g;
  }

  int n() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    if (!bits_.empty()) return (bits_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Common value of the degrees, or -1 when the graph is not regular.
  int regular_degree() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return -1;
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  void finish() {
    m_ = 0;
    for (int v = 0; v < n_; ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      for (int w : a) {
        if (w < 0 || w >= n_) throw PreconditionError("edge endpoint out of range");
        if (w == v) throw PreconditionError("loops are not allowed");
      }
      m_ += static_cast<std::int64_t>(a.size());
    }
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v])
        if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v))
          throw PreconditionError("adjacency is not symmetric");
    m_ /= 2;
    if (n_ <= kBitsetLimit) {
      words_ = (std::size_t(n_) + 63) / 64;
      bits_.assign(std::size_t(n_) * words_, 0);
      for (int v = 0; v < n_; ++v)
        for (int w : adj_[v]) bits_[std::size_t(v) * words_ + (w >> 6)] |= std::uint64_t(1) << (w & 63);
    }
  }

  static constexpr int kBitsetLimit = 20000;

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::string label_;
};

inline constexpr int kUnreachable = -1;

/// Distances from `source`; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.n(), kUnreachable);
  std::vector<int> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

struct DistanceData {
  int n = 0;
  int diameter = 0;
  std::vector<std::uint16_t> dist;  // row-major n x n

  int operator()(int u, int v) const { return dist[std::size_t(u) * n + v]; }
};

inline constexpr int kMaxDistanceMatrix = 8192;

/// All-pairs distances; requires a connected graph.
inline DistanceData all_distances(const Graph& g) {
  if (g.n() > kMaxDistanceMatrix)
    throw CapExceeded("distance matrix limited to " + std::to_string(kMaxDistanceMatrix) + " vertices");
  DistanceData d;
  d.n = g.n();
  d.dist.resize(std::size_t(g.n()) * g.n());
  for (int x = 0; x < g.n(); ++x) {
    auto row = bfs_distances(g, x);
    for (int y = 0; y < g.n(); ++y) {
      if (row[y] == kUnreachable) throw PreconditionError("graph is disconnected");
      d.dist[std::size_t(x) * g.n() + y] = static_cast<std::uint16_t>(row[y]);
      d.diameter = std::max(d.diameter, row[y]);
    }
  }
  return d;
}

inline int diameter(const Graph& g) {
  int D = 0;
  for (int x = 0; x < g.n(); ++x) {
    auto row = bfs_distances(g, x);
    for (int v : row) {
      if (v == kUnreachable) throw PreconditionError("graph is disconnected");
      D = std::max(D, v);
    }
  }
  return D;
}

/// "n m" followed by m lines "u v" with u < v.
inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_graph(std::istream& is) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(is, out)) {
      auto p = out.find_first_not_of(" \t\r");
      if (p != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("graph file is empty");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("header must be 'n m'");
  }
  if (n < 1 || m < 0) throw ParseError("header values out of range");
  if (n > kMaxVertices) throw CapExceeded("vertex count " + std::to_string(n) + " exceeds cap");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("malformed edge line " + std::to_string(i + 2));
    if (!(0 <= u && u < v && v < n))
      throw ParseError("edge line " + std::to_string(i + 2) + " must satisfy 0 <= u < v < n");
    edges.emplace_back(int(u), int(v));
  }
  if (next_line(line)) throw ParseError("more edge lines than the header declares");
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("duplicate edge");
  return Graph(int(n), edges);
}

}  // namespace drg
