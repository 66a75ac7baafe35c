#pragma once

// Generators for the named graph families: polygons, complete multipartite
// graphs, Hamming, Johnson, folded Johnson, Shrikhande, Doob, Grassmann and
// Petersen graphs.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

namespace detail {

inline std::string fmt_label(const std::string& name, std::initializer_list<long long> args) {
  std::string s = name + "(";
  bool first = true;
  for (auto a : args) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  return s + ")";
}

inline void check_cap(long double count) {
  if (count > kMaxVertices) throw CapExceeded("vertex count exceeds cap of " + std::to_string(kMaxVertices));
}

inline long double binom_ld(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// k-subsets of {0..n-1} as bitmasks, in colexicographic order.
inline std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k == 0) return {0};
  std::uint32_t s = (1u << k) - 1;
  const std::uint32_t limit = 1u << n;
  while (s < limit) {
    out.push_back(s);
    std::uint32_t c = s & -s, r = s + c;  // Gosper's hack
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace detail

inline Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  detail::check_cap(n);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e, detail::fmt_label("complete", {n}));
}

inline Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  detail::check_cap(n);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e, detail::fmt_label("cycle", {n}));
}

/// K_{t x n}: t parts of size n; vertex p*n + i.
inline Graph complete_multipartite(int t, int n) {
  if (t < 2 || n < 1) throw PreconditionError("complete multipartite graph needs t >= 2 parts of size n >= 1");
  detail::check_cap(static_cast<long double>(t) * n);
  std::vector<std::pair<int, int>> e;
  const int N = t * n;
  for (int u = 0; u < N; ++u)
    for (int v = u + 1; v < N; ++v)
      if (u / n != v / n) e.emplace_back(u, v);
  return Graph(N, e, detail::fmt_label("complete_multipartite", {t, n}));
}

/// Words of length d over {0..q-1}, vertex = base-q value (first coordinate most significant).
inline Graph hamming(int d, int q) {
  if (d < 1 || q < 2) throw PreconditionError("hamming needs d >= 1 and q >= 2");
  long double count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  detail::check_cap(count);
  const int N = static_cast<int>(count);
  std::vector<std::vector<int>> adj(N);
  for (int v = 0; v < N; ++v) {
    int place = 1;
    for (int i = 0; i < d; ++i, place *= q) {
      int digit = (v / place) % q;
      for (int a = 0; a < q; ++a)
        if (a != digit) adj[v].push_back(v + (a - digit) * place);
    }
  }
  return Graph::from_adjacency(std::move(adj), detail::fmt_label("hamming", {d, q}));
}

/// e-subsets of {0..n-1}, adjacent when they share e-1 elements.
inline Graph johnson(int n, int e) {
  if (n < 2 || e < 1 || e > n - 1 || n > 31) throw PreconditionError("johnson needs 1 <= e <= n-1 and n <= 31");
  detail::check_cap(detail::binom_ld(n, e));
  auto sets = detail::subsets(n, e);
  const int N = static_cast<int>(sets.size());
  std::map<std::uint32_t, int> index;
  for (int i = 0; i < N; ++i) index[sets[i]] = i;
  std::vector<std::vector<int>> adj(N);
  for (int i = 0; i < N; ++i)
    for (int a = 0; a < n; ++a) {
      if (!(sets[i] >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (sets[i] >> b & 1) continue;
        adj[i].push_back(index.at(sets[i] ^ (1u << a) ^ (1u << b)));
      }
    }
  return Graph::from_adjacency(std::move(adj), detail::fmt_label("johnson", {n, e}));
}

/// Complementary pairs of s-subsets of a 2s-set, represented by the member
/// containing 0; adjacent when some representatives meet in s-1 elements.
inline Graph folded_johnson(int s) {
  if (s < 2 || s > 15) throw PreconditionError("folded_johnson needs 2 <= s <= 15");
  detail::check_cap(detail::binom_ld(2 * s, s) / 2);
  std::vector<std::uint32_t> reps;
  for (auto S : detail::subsets(2 * s, s))
    if (S & 1u) reps.push_back(S);
  const int N = static_cast<int>(reps.size());
  std::vector<std::vector<int>> adj(N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      int meet = __builtin_popcount(reps[i] & reps[j]);
      if (meet == s - 1 || meet == 1) {  // |S n T| = s-1 or |S n complement(T)| = s-1
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return Graph::from_adjacency(std::move(adj), detail::fmt_label("folded_johnson", {s}));
}

/// Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}; vertex (a,b) = 4a + b.
inline Graph shrikhande() {
  std::vector<std::pair<int, int>> e;
  const int gens[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& g : gens) e.emplace_back(4 * a + b, 4 * ((a + g[0]) % 4) + (b + g[1]) % 4);
  return Graph(16, e, "shrikhande");
}

/// Cartesian product; vertex (g, h) = g * |H| + h.
inline Graph cartesian_product(const Graph& G, const Graph& H) {
  detail::check_cap(static_cast<long double>(G.n()) * H.n());
  const int N = G.n() * H.n();
  std::vector<std::vector<int>> adj(N);
  for (int g = 0; g < G.n(); ++g)
    for (int h = 0; h < H.n(); ++h) {
      auto& a = adj[g * H.n() + h];
      for (int g2 : G.neighbors(g)) a.push_back(g2 * H.n() + h);
      for (int h2 : H.neighbors(h)) a.push_back(g * H.n() + h2);
    }
  return Graph::from_adjacency(std::move(adj), G.label() + "x" + H.label());
}

/// Cartesian product of s Shrikhande graphs followed by c copies of K4.
inline Graph doob(int s, int c) {
  if (s < 1 || c < 0) throw PreconditionError("doob needs s >= 1 and c >= 0");
  long double count = 1;
  for (int i = 0; i < s + c; ++i) count *= 16.0L / (i < s ? 1 : 4);
  detail::check_cap(count);
  Graph g = shrikhande();
  for (int i = 1; i < s; ++i) g = cartesian_product(g, shrikhande());
  for (int i = 0; i < c; ++i) g = cartesian_product(g, complete_graph(4));
  g.set_label(detail::fmt_label("doob", {s, c}));
  return g;
}

inline Graph complement(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v && !g.adjacent(u, v)) adj[u].push_back(v);
  return Graph::from_adjacency(std::move(adj), "complement(" + g.label() + ")");
}

inline Graph petersen() {
  Graph g = complement(johnson(5, 2));
  g.set_label("petersen");
  return g;
}

namespace detail {

// Vectors of F_q^n stored as digit arrays; subspaces as reduced row echelon bases.
using Vec = std::array<std::uint8_t, 16>;
using Basis = std::vector<Vec>;

inline int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw std::logic_error("no inverse");
}

/// Reduced row echelon form over the prime field of order q; drops zero rows.
inline Basis rref(Basis rows, int n, int q) {
  int r = 0;
  for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    int inv = inv_mod(rows[r][col], q);
    for (int j = 0; j < n; ++j) rows[r][j] = static_cast<std::uint8_t>(rows[r][j] * inv % q);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[i][col]) continue;
      int f = rows[i][col];
      for (int j = 0; j < n; ++j) rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + q * q - f * rows[r][j]) % q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline std::vector<std::uint64_t> basis_key(const Basis& b, int n, int q) {
  std::vector<std::uint64_t> key;
  for (auto& v : b) {
    std::uint64_t x = 0;
    for (int j = 0; j < n; ++j) x = x * q + v[j];
    key.push_back(x);
  }
  return key;
}

inline std::int64_t gaussian_binomial(int n, int k, int q) {
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= std::pow(static_cast<long double>(q), n - i) - 1;
    den *= std::pow(static_cast<long double>(q), i + 1) - 1;
  }
  return static_cast<std::int64_t>(num / den + 0.5L);
}

}  // namespace detail

/// d-dimensional subspaces of F_q^n (q in {2, 3}), adjacent when they meet in
/// dimension d-1. Vertices are numbered in breadth-first order from the
/// span of the first d unit vectors.
inline Graph grassmann(int q, int n, int d) {
  if (q != 2 && q != 3) throw PreconditionError("grassmann supports q in {2, 3}");
  if (d < 1 || d > n - 1 || n > 16) throw PreconditionError("grassmann needs 1 <= d <= n-1 and n <= 16");
  const std::int64_t N = detail::gaussian_binomial(n, d, q);
  detail::check_cap(static_cast<long double>(N));

  using detail::Basis;
  using detail::Vec;
  std::vector<Vec> space;  // all vectors of F_q^n
  {
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (std::int64_t x = 0; x < total; ++x) {
      Vec v{};
      std::int64_t y = x;
      for (int j = n - 1; j >= 0; --j, y /= q) v[j] = static_cast<std::uint8_t>(y % q);
      space.push_back(v);
    }
  }

  std::map<std::vector<std::uint64_t>, int> index;
  std::vector<Basis> verts;
  Basis start(d, Vec{});
  for (int i = 0; i < d; ++i) start[i][i] = 1;
  index[detail::basis_key(start, n, q)] = 0;
  verts.push_back(start);
  std::vector<std::vector<int>> adj;

  for (std::size_t cur = 0; cur < verts.size(); ++cur) {
    const Basis U = verts[cur];
    const auto ukey = detail::basis_key(U, n, q);
    // Hyperplanes of U: kernels of the nonzero functionals on coordinates
    // w.r.t. U's basis, taken up to scalars (first nonzero coefficient 1).
    std::vector<int> nbrs;
    std::int64_t fcount = 1;
    for (int i = 0; i < d; ++i) fcount *= q;
    for (std::int64_t f = 1; f < fcount; ++f) {
      std::vector<int> coef(d);
      std::int64_t y = f;
      for (int i = d - 1; i >= 0; --i, y /= q) coef[i] = static_cast<int>(y % q);
      int lead = 0;
      while (coef[lead] == 0) ++lead;
      if (coef[lead] != 1) continue;
      // Kernel of sum coef_i x_i: for i != lead, e_i - coef_i e_lead.
      Basis H;
      for (int i = 0; i < d; ++i) {
        if (i == lead) continue;
        Vec v{};
        for (int j = 0; j < n; ++j)
          v[j] = static_cast<std::uint8_t>((U[i][j] + q * q - coef[i] * U[lead][j]) % q);
        H.push_back(v);
      }
      for (const Vec& v : space) {
        Basis W = H;
        W.push_back(v);
        W = detail::rref(std::move(W), n, q);
        if (static_cast<int>(W.size()) != d) continue;
        auto key = detail::basis_key(W, n, q);
        if (key == ukey) continue;
        auto it = index.find(key);
        int id;
        if (it == index.end()) {
          id = static_cast<int>(verts.size());
          index.emplace(std::move(key), id);
          verts.push_back(std::move(W));
        } else {
          id = it->second;
        }
        nbrs.push_back(id);
      }
    }
    adj.push_back(std::move(nbrs));
  }
  if (static_cast<std::int64_t>(verts.size()) != N) throw std::logic_error("grassmann enumeration count mismatch");
  return Graph::from_adjacency(std::move(adj), detail::fmt_label("grassmann", {q, n, d}));
}

}  // namespace drg
