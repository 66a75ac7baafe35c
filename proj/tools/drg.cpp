// drg: command-line front end.
//
// Exit status 0 means the command ran to completion, whatever the
// mathematical verdict. Operational failures (bad input, I/O, caps) exit 1;
// usage errors exit with CLI11's code.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drg/drg.hpp"

namespace {

using namespace drg;

/// Writes to the -o file when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path, std::ios::openmode mode = std::ios::out) {
    if (path.empty()) return;
    file_.open(path, mode);
    if (!file_) throw Error("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (file_.fail()) throw Error("write failed");
  }

 private:
  std::ofstream file_;
};

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print_witness(std::ostream& os, const Witness& w) {
  os << "not distance-regular\n";
  os << "witness: " << w.detail << "\n";
  if (!w.vertices.empty()) os << "vertices: " << join_ints(w.vertices) << "\n";
}

/// The array of a connected distance-regular graph, or nullopt after printing
/// why the graph is not one.
std::optional<IntersectionArray> check_drg(const Graph& g, std::ostream& os) {
  if (!is_connected(g)) {
    os << "not distance-regular\nwitness: graph is disconnected\n";
    return std::nullopt;
  }
  auto res = is_distance_regular(g);
  if (auto* w = std::get_if<Witness>(&res)) {
    print_witness(os, *w);
    return std::nullopt;
  }
  return std::get<IntersectionArray>(res);
}

// ---------------------------------------------------------------------------

Graph generate(const std::string& family, const std::vector<int>& p) {
  struct Family {
    std::size_t arity;
    std::function<Graph(const std::vector<int>&)> make;
    const char* usage;
  };
  static const std::map<std::string, Family> families = {
      {"complete", {1, [](auto& a) { return complete_graph(a[0]); }, "complete N"}},
      {"cycle", {1, [](auto& a) { return cycle(a[0]); }, "cycle N"}},
      {"complete_multipartite",
       {2, [](auto& a) { return complete_multipartite(a[0], a[1]); }, "complete_multipartite T N"}},
      {"hamming", {2, [](auto& a) { return hamming(a[0], a[1]); }, "hamming D Q"}},
      {"johnson", {2, [](auto& a) { return johnson(a[0], a[1]); }, "johnson N E"}},
      {"folded_johnson", {1, [](auto& a) { return folded_johnson(a[0]); }, "folded_johnson S"}},
      {"doob", {2, [](auto& a) { return doob(a[0], a[1]); }, "doob S C"}},
      {"grassmann", {3, [](auto& a) { return grassmann(a[0], a[1], a[2]); }, "grassmann Q N D"}},
      {"shrikhande", {0, [](auto&) { return shrikhande(); }, "shrikhande"}},
      {"petersen", {0, [](auto&) { return petersen(); }, "petersen"}},
  };
  auto it = families.find(family);
  if (it == families.end()) {
    std::string known;
    for (const auto& [name, f] : families) known += (known.empty() ? "" : ", ") + name;
    throw PreconditionError("unknown family '" + family + "' (known: " + known + ")");
  }
  if (p.size() != it->second.arity) throw PreconditionError(std::string("usage: gen ") + it->second.usage);
  return it->second.make(p);
}

// ---------------------------------------------------------------------------

std::pair<int, int> parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t a = 0, b = 0;
    const int i = std::stoi(text.substr(0, slash), &a);
    const int t = std::stoi(text.substr(slash + 1), &b);
    if (a != slash || b != text.size() - slash - 1) throw std::invalid_argument("trailing text");
    return {i, t};
  } catch (const std::logic_error&) {
    throw ParseError("shard must be written i/t, got '" + text + "'");
  }
}

/// Prepares an interrupted output file for appending: a trailing line that
/// does not parse is cut off, and the keys already present are returned.
std::set<std::string> prepare_resume(const std::string& path) {
  std::set<std::string> keys;
  if (!std::filesystem::exists(path)) return keys;
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::size_t keep = 0, pos = 0;
  while (pos < content.size()) {
    const auto nl = content.find('\n', pos);
    if (nl == std::string::npos) break;  // partial last line
    const std::string line = content.substr(pos, nl - pos);
    if (!line.empty()) {
      try {
        keys.insert(format_array(parse_record(line).ia));
      } catch (const ParseError&) {
        break;
      }
    }
    pos = nl + 1;
    keep = pos;
  }
  if (keep < content.size()) std::filesystem::resize_file(path, keep);
  return keys;
}

struct EnumerateArgs {
  SearchSpec spec;
  std::string filters = "default";
  std::string shard;
  int threads = 1;
  bool explain = false;
  bool resume = false;
  std::vector<std::string> merge;
  std::string out;
};

int run_enumerate(EnumerateArgs& a) {
  if (!a.merge.empty()) {
    std::vector<std::vector<std::string>> runs;
    for (const auto& f : a.merge) {
      std::ifstream in(f);
      if (!in) throw Error("cannot open " + f);
      runs.push_back(read_record_lines(in));
    }
    Output out(a.out);
    for (const auto& line : merge_record_lines(runs)) out.stream() << line << "\n";
    out.close();
    return 0;
  }
  a.spec.filters = parse_filters(a.filters);
  if (!a.shard.empty()) {
    auto [i, t] = parse_shard(a.shard);
    a.spec = shard(a.spec, i, t);
  }
  validate(a.spec);

  std::set<std::string> skip;
  if (a.resume) {
    if (a.out.empty()) throw PreconditionError("--resume needs an output file (-o)");
    skip = prepare_resume(a.out);
  }
  Output out(a.out, a.resume ? std::ios::app : std::ios::out);
  RunOptions opt{a.threads, a.explain, a.resume ? &skip : nullptr};
  const RunStats st =
      run_enumeration(a.spec, opt, [&](const ResultRecord& r) { out.stream() << to_json_line(r) << "\n"; });
  out.stream().flush();
  out.close();
  std::cerr << "prefixes " << st.prefixes << ", records " << st.records;
  if (a.resume) std::cerr << ", skipped " << skip.size();
  std::cerr << "\n";
  return 0;
}

/// Fills options of `sub` from a key=value file. Command-line and environment
/// values take precedence.
void apply_config(CLI::App& sub, const std::string& path) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error& e) {
    throw ParseError("config " + path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (item.name == "config") throw ParseError("config " + path + ": nested config is not allowed");
    CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
    if (!opt) throw ParseError("config " + path + ": unknown key '" + item.name + "'");
    if (opt->count() > 0) continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError("config " + path + ": " + item.name + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------

int run_graph_geometric(const std::string& path, std::int64_t max_nodes, const std::string& out_path) {
  const Graph g = load_graph(path);
  Output out(out_path);
  std::ostream& os = out.stream();
  auto ia = check_drg(g, os);
  if (!ia) return 0;
  os << "array: " << format_array(*ia) << "\n";
  if (ia->is_complete()) {
    os << "complete graph: a single clique, outside the geometric question\n";
    return 0;
  }
  CoverOptions opt;
  opt.max_search_nodes = max_nodes;
  const auto res = geometric_cover(g, *ia, eigenvalues(*ia), opt);
  if (auto* c = std::get_if<CliqueCover>(&res)) {
    os << "geometric: cover by " << c->cliques.size() << " cliques of size " << c->cliques.front().size() << "\n";
    for (const auto& q : c->cliques) os << join_ints(q) << "\n";
  } else if (auto* cert = std::get_if<NonGeometricCertificate>(&res)) {
    os << "non-geometric: " << cert->reason << "\n";
    if (cert->edge) os << "edge: " << cert->edge->first << " " << cert->edge->second << "\n";
  } else {
    os << "undecided: " << std::get<Undecided>(res).reason << "\n";
  }
  out.close();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-regular graph toolkit: intersection arrays, spectra, geometricity and bounds"};
  app.require_subcommand(1);

  // analyze
  std::string array_text;
  std::optional<std::int64_t> analyze_m;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Report on one intersection array");
  analyze->add_option("array", array_text, "Array as {b0,...;c1,...}")->required();
  analyze->add_option("--m", analyze_m, "Eigenvalue bound m (default: smallest m >= 2 with theta_D >= -m)")
      ->check(CLI::Range(2, 1 << 20));
  analyze->add_flag("--json", as_json, "Emit the result record instead of the text report");

  // graph-check / graph-geometric
  std::string graph_path, graph_out;
  std::int64_t max_nodes = CoverOptions{}.max_search_nodes;
  auto* gcheck = app.add_subcommand("graph-check", "Decide distance-regularity of a graph file");
  gcheck->add_option("file", graph_path, "Graph file, or - for stdin")->required();
  auto* ggeo = app.add_subcommand("graph-geometric", "Search for a Delsarte clique cover of a graph file");
  ggeo->add_option("file", graph_path, "Graph file, or - for stdin")->required();
  ggeo->add_option("--max-nodes", max_nodes, "Exact-cover search budget")->check(CLI::PositiveNumber);
  ggeo->add_option("-o,--output", graph_out, "Output file");

  // gen
  std::string family, gen_out;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "Write a graph from a named family");
  gen->add_option("family", family, "hamming, johnson, doob, grassmann, ...")->required();
  gen->add_option("params", gen_params, "Integer family parameters");
  gen->add_option("-o,--output", gen_out, "Output file");

  // enumerate
  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Enumerate feasible arrays with theta_D >= -m");
  en->add_option("--m", ea.spec.m, "Eigenvalue bound m")->capture_default_str();
  en->add_option("--d-min", ea.spec.d_min, "Smallest diameter")->capture_default_str();
  en->add_option("--d-max", ea.spec.d_max, "Largest diameter")->capture_default_str();
  en->add_option("--k-max", ea.spec.k_max, "Largest valency")->capture_default_str();
  en->add_option("--c2-min", ea.spec.c2_min, "Smallest c_2")->capture_default_str();
  en->add_option("--filters", ea.filters, "Comma-separated filters, 'default' or 'all'")->capture_default_str();
  en->add_option("--shard", ea.shard, "Run shard i of t, written i/t");
  en->add_option("--threads", ea.threads, "Worker threads")->envname("DRG_THREADS")->check(CLI::Range(1, 1024));
  en->add_flag("--explain", ea.explain, "Also emit filtered arrays with their first failing filter");
  en->add_flag("--resume", ea.resume, "Continue an interrupted run in the -o file");
  en->add_option("--merge", ea.merge, "Merge record files into canonical order instead of searching")
      ->check(CLI::ExistingFile);
  en->add_option("-o,--output", ea.out, "Output file");
  std::string config_path;
  en->add_option("--config", config_path, "File of key=value lines naming enumerate options")
      ->check(CLI::ExistingFile);

  // bounds
  BoundsQuery bq;
  std::optional<std::string> eps_text;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the valency and diameter bounds");
  bounds->add_option("--m", bq.m, "Eigenvalue bound m")->required();
  bounds->add_option("--a1", bq.a1, "a_1")->required();
  bounds->add_option("--k", bq.k, "Valency");
  bounds->add_option("--c2", bq.c2, "c_2");
  bounds->add_option("--cD", bq.cD, "c_D");
  bounds->add_option("--D", bq.D, "Diameter");
  bounds->add_option("--eps", eps_text, "epsilon in (0, 1], as p/q or an integer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) {
      const IntersectionArray ia = parse_array(array_text);
      if (as_json)
        std::cout << to_json_line(analyze_record(ia, analyze_m)) << "\n";
      else
        std::cout << analyze_report(ia, analyze_m);
    } else if (*gcheck) {
      const Graph g = load_graph(graph_path);
      if (auto ia = check_drg(g, std::cout)) std::cout << format_array(*ia) << "\n";
    } else if (*ggeo) {
      return run_graph_geometric(graph_path, max_nodes, graph_out);
    } else if (*gen) {
      const Graph g = generate(family, gen_params);
      Output out(gen_out);
      write_graph(out.stream(), g);
      out.close();
    } else if (*en) {
      if (!config_path.empty()) apply_config(*en, config_path);
      return run_enumerate(ea);
    } else if (*bounds) {
      if (eps_text) {
        try {
          bq.eps = Rational(*eps_text);
        } catch (const std::exception&) {
          throw ParseError("eps must be a rational p/q, got '" + *eps_text + "'");
        }
      }
      std::cout << bounds_report(bq);
    }
  } catch (const Error& e) {
    std::cerr << "drg: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "drg: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
