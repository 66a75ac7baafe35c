// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "drg/drg.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace drg;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string shell(const std::string& args) {
  const std::string cmd = "'" DRG_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  require(p != nullptr, "cannot run " + cmd);
  std::string out;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, got);
  const int st = pclose(p);
  require(WIFEXITED(st) && WEXITSTATUS(st) == 0, "command failed: drg " + args);
  return out;
}

IntersectionArray array_of(const Graph& g) {
  auto r = is_distance_regular(g);
  require(std::holds_alternative<IntersectionArray>(r), g.label() + " is not distance-regular");
  return std::get<IntersectionArray>(r);
}

/// The cliques are complete and partition the edge set.
void check_edge_partition(const Graph& g, const std::vector<std::vector<int>>& cliques, std::size_t size) {
  std::set<std::pair<int, int>> seen;
  for (const auto& q : cliques) {
    require(q.size() == size, "clique of size " + std::to_string(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        require(g.adjacent(q[i], q[j]), "clique has a non-edge");
        require(seen.insert(std::minmax(q[i], q[j])).second, "edge covered twice");
      }
  }
  require(static_cast<std::int64_t>(seen.size()) == g.edge_count(), "cover misses edges");
}

/// Sorted numeric eigenvalues grouped with multiplicities.
std::vector<std::pair<double, int>> numeric_spectrum(const Graph& g) {
  auto ev = adjacency_spectrum_numeric(g);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  std::vector<std::pair<double, int>> out;
  for (double x : ev) {
    if (!out.empty() && std::abs(out.back().first - x) < 1e-6)
      ++out.back().second;
    else
      out.emplace_back(x, 1);
  }
  return out;
}

/// Independent check of complete regularity: the distance partition from the
/// code is equitable.
std::pair<bool, int> completely_regular_oracle(const Graph& g, const std::vector<int>& code) {
  std::vector<int> d(g.n(), -1);
  std::vector<int> queue(code.begin(), code.end());
  for (int c : code) d[c] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int y : g.neighbors(queue[h]))
      if (d[y] < 0) {
        d[y] = d[queue[h]] + 1;
        queue.push_back(y);
      }
  const int rho = *std::max_element(d.begin(), d.end());
  std::vector<std::vector<int>> row(rho + 1);
  for (int x = 0; x < g.n(); ++x) {
    std::vector<int> cnt(rho + 1, 0);
    for (int y : g.neighbors(x)) ++cnt[d[y]];
    if (row[d[x]].empty())
      row[d[x]] = cnt;
    else if (row[d[x]] != cnt)
      return {false, rho};
  }
  return {true, rho};
}

/// Every clique, grown one vertex at a time in increasing vertex order.
void all_cliques(const Graph& g, std::vector<int>& cur, int from, std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int v = from; v < g.n(); ++v)
    if (std::all_of(cur.begin(), cur.end(), [&](int u) { return g.adjacent(u, v); })) {
      cur.push_back(v);
      all_cliques(g, cur, v + 1, out);
      cur.pop_back();
    }
}

/// Brute force over vertex quadruples.
bool quadrangle_oracle(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // The three 4-cycles on {a,b,c,d}, each with both diagonals absent.
          const int cyc[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (auto& q : cyc)
            if (g.adjacent(q[0], q[1]) && g.adjacent(q[1], q[2]) && g.adjacent(q[2], q[3]) &&
                g.adjacent(q[3], q[0]) && !g.adjacent(q[0], q[2]) && !g.adjacent(q[1], q[3]))
              return true;
        }
  return false;
}

// ---------------------------------------------------------------------------

std::string doob_hamming() {
  const Graph h = hamming(3, 4), d = doob(1, 1);
  const IntersectionArray want = parse_array("{9,6,3;1,2,3}");
  require(array_of(h) == want && array_of(d) == want, "arrays differ from {9,6,3;1,2,3}");
  require(oracle::hamming_array(3, 4) == want, "closed-form Hamming array disagrees");
  const Spectrum spec = eigenvalues(want);

  auto hc = geometric_cover(h, want, spec);
  require(std::holds_alternative<CliqueCover>(hc), "H(3,4) has no cover");
  const auto& cover = std::get<CliqueCover>(hc).cliques;
  require(cover.size() == 48, "H(3,4) cover has " + std::to_string(cover.size()) + " cliques");
  check_edge_partition(h, cover, 4);

  auto dc = geometric_cover(d, want, spec);
  require(std::holds_alternative<NonGeometricCertificate>(dc), "Doob graph not certified non-geometric");
  const auto& cert = std::get<NonGeometricCertificate>(dc);
  require(cert.edge.has_value(), "certificate carries no edge");
  const auto [u, v] = *cert.edge;
  require(d.adjacent(u, v), "certificate edge is not an edge");
  // No 4-clique through uv: no two common neighbours are adjacent.
  std::vector<int> common;
  for (int w : d.neighbors(u))
    if (d.adjacent(w, v)) common.push_back(w);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      require(!d.adjacent(common[i], common[j]), "certificate edge lies in a 4-clique");
  return "48-clique cover; Doob edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no 4-clique";
}

std::string exact_spectra() {
  struct Case {
    const char* ia;
    Graph g;
    std::vector<std::int64_t> eig, mult;
  };
  const std::vector<Case> cases = {{"{3,2;1,1}", petersen(), {3, 1, -2}, {1, 5, 4}},
                                   {"{6,4,2;1,2,3}", hamming(3, 3), {6, 3, 0, -3}, {1, 6, 12, 8}}};
  for (const auto& c : cases) {
    const Spectrum s = eigenvalues(parse_array(c.ia));
    require(s.eigs.size() == c.eig.size(), std::string(c.ia) + ": wrong eigenvalue count");
    const auto num = numeric_spectrum(c.g);
    require(num.size() == c.eig.size(), std::string(c.ia) + ": numeric spectrum has a different size");
    for (std::size_t i = 0; i < c.eig.size(); ++i) {
      require(s.eigs[i].is_integer() && s.eigs[i].integer_value() == c.eig[i], std::string(c.ia) + ": eigenvalue");
      require(s.mults[i].integer() && *s.mults[i].integer() == c.mult[i], std::string(c.ia) + ": multiplicity");
      require(std::abs(num[i].first - static_cast<double>(c.eig[i])) < 1e-6 && num[i].second == c.mult[i],
              std::string(c.ia) + ": numeric oracle disagrees");
    }
  }
  return "Petersen and H(3,3) exact, numeric agreement within 1e-6";
}

GeometricSolution solve(const IntersectionArray& ia, std::int64_t m) {
  auto r = solve_geometric_parameters(ia, m);
  require(std::holds_alternative<GeometricSolution>(r), format_array(ia) + ": solver failed");
  return std::get<GeometricSolution>(r);
}

std::string solver() {
  using V = std::vector<std::int64_t>;
  auto h33 = solve(array_of(hamming(3, 3)), 3);
  require(h33.tau == V{1, 2, 3} && h33.psi == V{1, 1, 1}, "H(3,3) tau/psi");
  auto j52 = solve(array_of(johnson(5, 2)), 2);
  require(j52.tau == V{1, 2} && j52.psi == V{1, 2}, "J(5,2) tau/psi");
  const IntersectionArray gia = array_of(grassmann(2, 4, 2));
  require(gia == oracle::grassmann_array(2, 4, 2), "Grassmann array disagrees with closed form");
  const DerivedQuantities d = derive(gia);
  require(d.n == 35 && gia.valency() == 18 && gia.a(1) == 9 && gia.c(2) == 9, "Grassmann is not SRG(35,18,9,9)");
  auto g = solve(gia, 3);
  require(g.psi_at(1) == 3 && g.tau_at(2) == 3, "Grassmann psi_1, tau_2 != 3");
  auto rep = classify_equal_psi_tau(g, gia);
  bool named = false;
  for (const auto& c : rep.cases)
    named |= c.label == "grassmann" && !c.excluded && c.detail.find("order 2") != std::string::npos;
  require(named, "Grassmann case over the order-2 field not named");
  return "H(3,3), J(5,2), J_2(4,2) exact";
}

std::string sign_changes_all() {
  const std::vector<IntersectionArray> arrays = {array_of(hamming(3, 4)),     array_of(hamming(3, 3)),
                                                 array_of(johnson(5, 2)),     array_of(grassmann(2, 4, 2)),
                                                 parse_array("{3,2;1,1}")};
  int checked = 0;
  for (const auto& ia : arrays) {
    const Spectrum s = eigenvalues(ia);
    const auto ev = oracle::intersection_matrix_eigenvalues(ia);
    require(ev.size() == s.eigs.size(), format_array(ia) + ": eigenvalue count");
    for (std::size_t i = 0; i < s.eigs.size(); ++i) {
      require(sign_changes(standard_sequence(ia, s.eigs[i])) == static_cast<int>(i),
              format_array(ia) + ": theta_" + std::to_string(i));
      const auto u = oracle::standard_sequence_double(ia, ev[i]);
      int changes = 0;
      double last = u[0];
      for (double x : u)
        if (std::abs(x) > 1e-9) {
          if (x * last < 0) ++changes;
          last = x;
        }
      require(changes == static_cast<int>(i), format_array(ia) + ": numeric oracle, theta_" + std::to_string(i));
      ++checked;
    }
  }
  return std::to_string(checked) + " eigenvalues";
}

std::string forcing_j192() {
  const Graph g = johnson(19, 2);
  const IntersectionArray ia = array_of(g);
  require(ia == oracle::johnson_array(19, 2), "J(19,2) array disagrees with closed form");
  require(ia.a(1) == 17 && ia.a(1) > 2 * 2 * ia.c(2), "a_1 > m^2 c_2 fails");
  const auto mr = metsch_conditions(34, 17, 4, 2);
  require(mr.cond_i && mr.cond_ii, "metsch_conditions(34,17,4,2) != (true, true)");
  const Spectrum spec = eigenvalues(ia);
  require(forcing_test(ia, spec, 2).verdict == ForcingVerdict::ForcedGeometric, "forcing test does not force");
  auto res = geometric_cover(g, ia, spec);
  require(std::holds_alternative<CliqueCover>(res), "J(19,2) has no cover");
  const auto& cover = std::get<CliqueCover>(res).cliques;
  require(cover.size() == 19, "cover has " + std::to_string(cover.size()) + " cliques");
  check_edge_partition(g, cover, 18);
  return "19 cliques of size 18; Metsch (true, true)";
}

std::string clique_extension_spectrum() {
  const auto num = numeric_spectrum(clique_extension(shrikhande(), 2));
  auto has = [&](double x) {
    return std::any_of(num.begin(), num.end(), [&](auto& p) { return std::abs(p.first - x) < 1e-6; });
  };
  require(has(-3) && has(13), "spectrum lacks -3 or 13");
  return "-3 and 13 present";
}

std::string terwilliger_equivalence() {
  std::vector<Graph> graphs = {cycle(5),          cycle(6),           cycle(7),
                               petersen(),        complement(petersen()), shrikhande(),
                               hamming(2, 3),     hamming(2, 4),      hamming(3, 3),
                               hamming(3, 4),     johnson(5, 2),      johnson(6, 3),
                               johnson(7, 2),     folded_johnson(3),  doob(1, 1),
                               grassmann(2, 4, 2), complete_multipartite(3, 2), complete_multipartite(4, 3),
                               clique_extension(shrikhande(), 2)};
  std::mt19937 rng(20240607);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(4, 30)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    graphs.emplace_back(n, edges, "random" + std::to_string(t));
  }
  int compared = 0, with_oracle = 0;
  for (const auto& g : graphs) {
    require(is_connected(g), g.label() + " disconnected");
    if (diameter(g) < 2) continue;
    const auto terw = is_terwilliger(g);
    require(terw.has_value(), g.label() + ": Terwilliger test not applicable");
    const bool quad = has_induced_quadrangle(g);
    require(*terw == !quad, g.label() + ": Terwilliger != no quadrangle");
    if (g.n() <= 64) {
      require(quad == quadrangle_oracle(g), g.label() + ": quadrangle search disagrees with brute force");
      ++with_oracle;
    }
    ++compared;
  }
  return std::to_string(compared) + " graphs, " + std::to_string(with_oracle) + " brute-forced";
}

std::string delsarte_completely_regular() {
  int good = 0, bad = 0;
  for (const Graph& g : {hamming(3, 3), hamming(3, 4), johnson(5, 2)}) {
    const IntersectionArray ia = array_of(g);
    const int D = ia.diameter();
    const auto ev = oracle::intersection_matrix_eigenvalues(ia);
    const double dsize = 1 + ia.valency() / -ev.back();
    const auto ds = delsarte_clique_size(ia, eigenvalues(ia)).integer();
    require(ds && std::abs(dsize - static_cast<double>(*ds)) < 1e-9, g.label() + ": Delsarte size");
    std::vector<std::vector<int>> cliques;
    std::vector<int> cur;
    all_cliques(g, cur, 0, cliques);
    for (const auto& q : cliques) {
      // Keep maximal cliques only.
      bool maximal = true;
      for (int x = 0; x < g.n() && maximal; ++x)
        if (std::find(q.begin(), q.end(), x) == q.end() &&
            std::all_of(q.begin(), q.end(), [&](int y) { return g.adjacent(x, y); }))
          maximal = false;
      if (!maximal) continue;
      const auto [cr, rho] = completely_regular_oracle(g, q);
      require(cr == is_completely_regular(g, q), g.label() + ": complete-regularity oracle disagrees");
      const bool both = cr && rho == D - 1;
      if (static_cast<std::int64_t>(q.size()) == *ds) {
        require(both, g.label() + ": Delsarte clique not completely regular with radius D-1");
        ++good;
      } else {
        require(static_cast<std::int64_t>(q.size()) < *ds, g.label() + ": clique larger than Delsarte bound");
        require(!both, g.label() + ": smaller maximal clique passes both conditions");
        ++bad;
      }
    }
  }
  return std::to_string(good) + " Delsarte cliques pass, " + std::to_string(bad) + " smaller maximal cliques fail";
}

std::string enumerator_run() {
  const fs::path dir = fs::temp_directory_path() / ("drg_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path p;
    ~Cleanup() { fs::remove_all(p); }
  } cleanup{dir};
  const std::string base = "enumerate --m 3 --d-min 3 --d-max 3 --k-max 12 --c2-min 2";
  const std::string one = shell(base + " --threads 1");
  const std::string eight = shell(base + " --threads 8");
  require(one == eight, "1 and 8 workers differ");
  std::string files;
  for (int i = 0; i < 4; ++i) {
    const fs::path f = dir / ("s" + std::to_string(i) + ".jsonl");
    shell(base + " --shard " + std::to_string(i) + "/4 -o '" + f.string() + "'");
    files += " '" + f.string() + "'";
  }
  require(shell("enumerate --merge" + files) == one, "4-shard merge differs");

  std::istringstream in(one);
  bool found = false;
  int n = 0;
  for (std::string line; std::getline(in, line); ++n) {
    const ResultRecord r = parse_record(line);
    const auto& ia = r.ia;
    found |= format_array(ia) == "{6,4,2;1,2,3}" && r.cls == Classification::PseudoGeometric;
    const auto ev = oracle::intersection_matrix_eigenvalues(ia);
    require(ev.back() >= -3 - 1e-9, r.key() + ": theta_D < -3");
    require(ia.valency() < 3 * (ia.a(1) + 3), r.key() + ": k >= 3(a_1 + 3)");
    bool big = false;
    for (std::size_t i = 1; i < ev.size(); ++i) big |= ev[i] * ev[i] > ia.valency() / 2.0 + 1e-9;
    require(big, r.key() + ": no eigenvalue with theta^2 > k/2");
  }
  require(found, "{6,4,2;1,2,3} missing or not pseudo_geometric");
  return std::to_string(n) + " records, identical across 1/8 workers and 4 shards";
}

std::string bound_formulas() {
  const std::uint64_t want = 9ULL * (1ULL << 30) - 1;  // 9 * 8^10 - 1
  require(want == 9663676415ULL, "oracle arithmetic");
  require(theorem33_valency_cap(2, 3, Rational(1)) == BigInt(want), "theorem33_valency_cap(2,3,1)");
  for (auto [m, cap] : {std::pair<int, int>{2, 1}, {3, 3}, {5, 6}}) {
    require(terwilliger_alpha_cap(m) == cap, "terwilliger_alpha_cap(" + std::to_string(m) + ")");
    const long double x = (m - 1) * (1 + std::sqrt(5.0L)) / 2;
    require(static_cast<int>(std::floor(x)) == cap, "closed-form oracle for alpha cap");
  }
  const std::string out = shell("bounds --m 2 --a1 17");
  require(out.find("lemma32_valency_cap: k < 38\n") != std::string::npos, "bounds output lacks the cap 38");
  return "9663676415; (1,3,6); k < 38";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
    double limit_s;  // 0 = no runtime requirement
  };
  const std::vector<Criterion> criteria = {
      {"doob_hamming_separation", doob_hamming, 60},
      {"exact_spectra", exact_spectra, 0},
      {"geometric_parameter_solver", solver, 0},
      {"standard_sequence_sign_changes", sign_changes_all, 0},
      {"forcing_johnson_19_2", forcing_j192, 120},
      {"clique_extension_spectrum", clique_extension_spectrum, 0},
      {"terwilliger_equivalence", terwilliger_equivalence, 0},
      {"delsarte_completely_regular", delsarte_completely_regular, 0},
      {"enumerator_soundness_determinism", enumerator_run, 600},
      {"bound_formulas", bound_formulas, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs >= c.limit_s) {
      ok = false;
      detail += "; over the time limit";
    }
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << c.name << " (" << detail << ", " << timing
              << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
