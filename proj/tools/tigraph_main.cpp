#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tigraph/tigraph.hpp"

namespace {

using tigraph::Graph;
using tigraph::VertexId;

// Stable exit codes: 0 success/true, 1 verification mismatch, 2 input error,
// 10 property false, 11 pattern or eligibility absent.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kPropertyFalse = 10;
constexpr int kPatternAbsent = 11;

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string trimmed(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Inputs may be a family spec (always contains ':', which graph6 bytes never
// do), "-" for a graph6 line on stdin, a file holding one graph6 line, or a
// graph6 literal.
Graph load_graph(const std::string& input) {
  if (input.find(':') != std::string::npos)
    return tigraph::build_family(tigraph::parse_family_spec(input));
  std::string line;
  if (input == "-") {
    if (!std::getline(std::cin, line)) tigraph::fail(tigraph::Errc::MalformedGraph6, "empty stdin");
  } else if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    while (std::getline(in, line) && trimmed(line).empty()) {
    }
  } else {
    line = input;
  }
  return tigraph::parse_graph6(trimmed(line));
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  int lo = 0, hi = 0;
  if (dots != std::string::npos) {
    try {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
      dots = std::string::npos;
    }
  }
  if (dots == std::string::npos)
    tigraph::fail(tigraph::Errc::BadParam, "range must look like 'a..b', got '" + text + "'");
  if (lo > hi) tigraph::fail(tigraph::Errc::BadParam, "empty range '" + text + "'");
  return {lo, hi};
}

template <typename T>
std::string join(const std::vector<T>& v, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

int run_check(const std::string& input, const std::string& report) {
  Graph g = load_graph(input);
  auto profile = tigraph::transmission_profile(g);
  std::cout << "n=" << g.order() << " max_degree=" << tigraph::max_degree(g)
            << " chemical=" << yn(tigraph::is_chemical(g)) << "\n";
  if (report == "full") std::cout << "transmissions=" << join(profile.values, ',') << "\n";
  std::cout << "complexity=" << profile.complexity << "/" << g.order() << "\n";
  std::cout << "TI: " << yn(profile.is_ti) << "\n";
  return profile.is_ti ? kOk : kPropertyFalse;
}

int run_construct(const std::string& spec, const std::string& out, bool annotate) {
  if (annotate && out != "dot")
    tigraph::fail(tigraph::Errc::BadParam, "--annotate requires --out dot");
  Graph g = tigraph::build_family(tigraph::parse_family_spec(spec));
  if (out == "dot") {
    std::vector<std::string> labels;
    if (annotate)
      for (auto t : tigraph::transmission_profile(g).values) labels.push_back(std::to_string(t));
    std::cout << tigraph::to_dot(g, labels);
  } else {
    std::cout << tigraph::to_graph6(g) << "\n";
  }
  return kOk;
}

// Random inputs for the lemma replays. Trees come from uniform random Prüfer
// sequences; connected graphs add extra edges on top of such a tree.
Graph random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return n == 1 ? Graph::from_edge_list(1, {}) : Graph::from_edge_list(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<tigraph::Edge> edges;
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, s});
    if (--deg[s] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(int n, int extra, std::mt19937_64& rng) {
  Graph t = random_tree(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Graph g = t;
  for (int tries = 0; extra > 0 && tries < 20 * n; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g = g.with_edge(u, v);
    --extra;
  }
  return g;
}

// Two hubs joined by a path with k interior vertices; p pendant leaves on the
// near hub (vertex 0), q on the far one. Interior ids are p+1 .. p+k.
Graph dumbbell(int p, int k, int q) {
  std::vector<tigraph::Edge> edges;
  for (int i = 1; i <= p; ++i) edges.push_back({0, i});
  int prev = 0;
  for (int j = 1; j <= k; ++j) {
    edges.push_back({prev, p + j});
    prev = p + j;
  }
  int far = p + k + 1;
  edges.push_back({prev, far});
  for (int i = 1; i <= q; ++i) edges.push_back({far, far + i});
  return Graph::from_edge_list(far + q + 1, edges);
}

struct VerifyTally {
  int lines = 0;
  int mismatches = 0;

  void line(const std::string& text, bool ok) {
    ++lines;
    if (!ok) ++mismatches;
    std::cout << text << (ok ? " ok" : " MISMATCH") << "\n";
  }

  int finish() const {
    std::cout << (mismatches == 0 ? "all agree" : std::to_string(mismatches) + " mismatches")
              << " (" << lines << " lines)\n";
    return mismatches == 0 ? kOk : kMismatch;
  }
};

int verify_cti(int lo, int hi) {
  VerifyTally tally;
  for (int n = lo | 1; n <= hi; n += 2) {
    Graph t = tigraph::ti_odd_tree(n);
    bool computed = tigraph::is_chemical(t) && tigraph::is_transmission_irregular(t);
    std::ostringstream line;
    line << "n=" << n << " predicted=TI computed=" << (computed ? "TI" : "not-TI");
    tally.line(line.str(), computed);
  }
  return tally.finish();
}

int verify_zti(int lo, int hi) {
  VerifyTally tally;
  for (int a = lo; a <= hi; ++a) {
    bool predicted = tigraph::z0_is_ti_predicate(a);
    bool computed =
        tigraph::is_transmission_irregular(tigraph::z0_graph(a - 1, a + 1, a - 2, a + 2));
    std::ostringstream line;
    line << "a=" << a << " predicted=" << (predicted ? "TI" : "not-TI")
         << " computed=" << (computed ? "TI" : "not-TI");
    tally.line(line.str(), predicted == computed);
  }
  return tally.finish();
}

int verify_k4(int lo, int hi) {
  VerifyTally tally;
  for (int a = lo; a <= hi; ++a) {
    bool predicted = tigraph::k4_is_ti_predicate(a);
    bool computed =
        tigraph::is_transmission_irregular(tigraph::k4_pendant(a - 2, a - 1, a + 1, a + 2));
    std::ostringstream line;
    line << "a=" << a << " predicted=" << (predicted ? "TI" : "not-TI")
         << " computed=" << (computed ? "TI" : "not-TI");
    tally.line(line.str(), predicted == computed);
  }
  return tally.finish();
}

// Sweep every irregular chemical tree in the order range and every proper
// pendant path on it; each eligible pair must double into an irregular tree.
int verify_double(int lo, int hi) {
  VerifyTally tally;
  for (int n = lo; n <= hi; ++n) {
    tigraph::TreeStream stream(n, 4);
    int ti_trees = 0, paths = 0, eligible = 0, irregular = 0;
    while (stream.advance()) {
      Graph t = stream.to_graph();
      if (!tigraph::is_transmission_irregular(t)) continue;
      ++ti_trees;
      for (const auto& path : tigraph::find_pendant_paths(t)) {
        ++paths;
        if (!tigraph::doubling_check(t, path).eligible) continue;
        ++eligible;
        if (tigraph::is_transmission_irregular(tigraph::doubling_construct(t, path))) ++irregular;
      }
    }
    std::ostringstream line;
    line << "n=" << n << " ti_trees=" << ti_trees << " paths=" << paths
         << " eligible=" << eligible << " irregular=" << irregular;
    tally.line(line.str(), eligible == irregular);
  }
  return tally.finish();
}

int verify_lemmas(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VerifyTally tally;

  // Edge identity: Tr(u) - Tr(v) = n_v - n_u on every edge.
  long long edges_checked = 0, edge_bad = 0;
  auto check_edges = [&](const Graph& g) {
    auto values = tigraph::transmission_profile(g).values;
    for (auto [u, v] : g.edges()) {
      auto cc = tigraph::closer_counts(g, u, v);
      ++edges_checked;
      if (values[u] - values[v] != cc.closer_to_v - cc.closer_to_u) ++edge_bad;
    }
  };
  std::uniform_int_distribution<int> tree_order(2, 120), graph_order(5, 40), extra(1, 12);
  for (int i = 0; i < samples; ++i) check_edges(random_tree(tree_order(rng), rng));
  for (int i = 0; i < samples / 4 + 1; ++i)
    check_edges(random_connected(graph_order(rng), extra(rng), rng));
  {
    std::ostringstream line;
    line << "edge-identity edges=" << edges_checked << " violations=" << edge_bad;
    tally.line(line.str(), edge_bad == 0);
  }

  // Pendant paths with 2x < n: the vertex next to the root sits n - 2x above
  // the root.
  long long pend_checked = 0, pend_bad = 0;
  for (int i = 0; i < samples; ++i) {
    Graph t = random_tree(tree_order(rng), rng);
    auto values = tigraph::transmission_profile(t).values;
    int n = t.order();
    for (const auto& path : tigraph::find_pendant_paths(t)) {
      if (2 * path.length >= n) continue;
      VertexId next = path.interior.empty() ? path.leaf : path.interior.front();
      ++pend_checked;
      if (values[next] - values[path.root] != n - 2 * path.length) ++pend_bad;
    }
  }
  {
    std::ostringstream line;
    line << "pendant-path checks=" << pend_checked << " violations=" << pend_bad;
    tally.line(line.str(), pend_bad == 0);
  }

  // Internal paths on dumbbells: Tr(v_j) - Tr(v_0) = j(a + j - 1) where
  // a = p - q - k is the first step.
  long long internal_checked = 0, internal_bad = 0;
  std::uniform_int_distribution<int> kk(1, 7), qq(1, 5), aa(1, 8);
  for (int i = 0; i < samples; ++i) {
    int k = kk(rng), q = qq(rng), a = aa(rng), p = q + k + a;
    Graph g = dumbbell(p, k, q);
    auto values = tigraph::transmission_profile(g).values;
    for (int j = 1; j <= k; ++j) {
      ++internal_checked;
      if (values[p + j] - values[0] != 1LL * j * (a + j - 1)) ++internal_bad;
    }
  }
  {
    std::ostringstream line;
    line << "internal-path checks=" << internal_checked << " violations=" << internal_bad;
    tally.line(line.str(), internal_bad == 0);
  }
  return tally.finish();
}

int run_enumerate(std::optional<int> order, const std::string& range, bool chemical,
                  const std::string& predicate, int jobs, int witness_cap,
                  const std::string& witness_file) {
  if (order.has_value() == !range.empty())
    tigraph::fail(tigraph::Errc::BadParam, "give exactly one of --order and --range");
  auto pred = tigraph::parse_predicate(predicate);
  auto cap = chemical ? std::optional<int>(4) : std::nullopt;
  std::vector<tigraph::SearchReport> reports;
  if (order)
    reports.push_back(tigraph::search_order(*order, cap, pred, jobs, witness_cap));
  else {
    auto [lo, hi] = parse_range(range);
    reports = tigraph::search(lo, hi, pred, cap, jobs, witness_cap);
  }
  std::optional<std::ofstream> out;
  if (!witness_file.empty()) {
    out.emplace(witness_file);
    if (!*out)
      tigraph::fail(tigraph::Errc::BadParam, "cannot open witness file '" + witness_file + "'");
  }
  for (const auto& r : reports) {
    std::cout << "order=" << r.order << " trees=" << r.total_trees << " ti_count=" << r.ti_count
              << "\n";
    std::cerr << "# order " << r.order << ": " << r.elapsed.count() << " ms\n";
    if (out)
      for (const auto& w : r.witnesses) *out << w << "\n";
  }
  return kOk;
}

int run_double(const std::string& input, VertexId leaf) {
  Graph g = load_graph(input);
  std::optional<tigraph::PendantPath> path;
  for (const auto& p : tigraph::find_pendant_paths(g))
    if (p.leaf == leaf) path = p;
  if (!path)
    tigraph::fail(tigraph::Errc::NotAProperPath,
                  "vertex " + std::to_string(leaf) + " is not the leaf of a proper pendant path");
  auto report = tigraph::doubling_check(g, *path);
  std::cerr << "path root=" << path->root << " leaf=" << path->leaf << " length=" << path->length
            << "\n";
  std::cerr << "partially_ti=" << yn(report.partially_ti) << " dbtm=" << yn(report.dbtm)
            << " window_j=" << (report.window_j ? std::to_string(*report.window_j) : "-")
            << " eligible=" << yn(report.eligible) << "\n";
  if (!report.eligible)
    std::cerr << "warning: eligibility conditions not met; the doubled tree may or may not be "
                 "irregular\n";
  Graph doubled = tigraph::doubling_construct(g, *path);
  std::cerr << "result order=" << doubled.order()
            << " TI=" << yn(tigraph::is_transmission_irregular(doubled)) << "\n";
  std::cout << tigraph::to_graph6(doubled) << "\n";
  return report.eligible ? kOk : kPatternAbsent;
}

int run_edge_add(const std::string& input, const std::string& which) {
  Graph g = load_graph(input);
  auto witness = which == "i" ? tigraph::edge_add_case_i(g) : tigraph::edge_add_case_ii(g);
  if (!witness) {
    std::cerr << "no case-" << which << " pattern found\n";
    return kPatternAbsent;
  }
  tigraph::Edge inserted{-1, -1};
  for (auto e : witness->result.edges())
    if (!g.has_edge(e.first, e.second)) inserted = e;
  const auto& v = witness->vertices;
  std::cerr << "witness v1=" << v[0] << " v2=" << v[1] << " v3=" << v[2] << " v4=" << v[3] << "\n";
  std::cerr << "insert=(" << inserted.first << "," << inserted.second << ")"
            << " result_TI=" << yn(tigraph::is_transmission_irregular(witness->result)) << "\n";
  std::cout << tigraph::to_graph6(witness->result) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transmission irregularity toolkit: check, construct and search graphs whose "
               "vertex distance sums are pairwise distinct"};
  app.require_subcommand(1);

  std::string input, report = "summary", spec, out = "graph6", range, predicate = "ti";
  std::string theorem, witness_file, edge_case;
  bool annotate = false, chemical = false;
  std::optional<int> order;
  int jobs = 1, witness_cap = 100, samples = 200, path_leaf = -1;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "report transmission facts for one graph");
  check->add_option("input", input, "graph6 line, file, family spec, or - for stdin")->required();
  check->add_option("--report", report, "summary or full")
      ->check(CLI::IsMember({"summary", "full"}));

  auto* construct = app.add_subcommand("construct", "build a named family member");
  construct->add_option("spec", spec, "family spec, e.g. ti-odd:9 or h:2;1,2;2,3")->required();
  construct->add_option("--out", out, "graph6 or dot")->check(CLI::IsMember({"graph6", "dot"}));
  construct->add_flag("--annotate", annotate, "label DOT vertices with transmissions");

  auto* verify = app.add_subcommand("verify", "replay a family theorem or lemma suite");
  verify->add_option("theorem", theorem, "cti, zti, k4, double, or lemmas")
      ->required()
      ->check(CLI::IsMember({"cti", "zti", "k4", "double", "lemmas"}));
  verify->add_option("--range", range, "parameter range a..b");
  verify->add_option("--samples", samples, "random samples for lemmas")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed for lemmas");

  auto* enumerate = app.add_subcommand("enumerate", "count trees and collect matches");
  enumerate->add_option("--order", order, "single order");
  enumerate->add_option("--range", range, "order range a..b");
  enumerate->add_flag("--chemical", chemical, "cap maximum degree at 4");
  enumerate->add_option("--predicate", predicate, "ti, ti-and-case-i, ti-and-case-ii, or ti-even-order");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--witness-cap", witness_cap, "max stored matches per order")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--witnesses", witness_file, "write matching graph6 lines here");

  auto* dbl = app.add_subcommand("double", "mirror a tree across a pendant path");
  dbl->add_option("input", input, "graph6 line, file, family spec, or - for stdin")->required();
  dbl->add_option("--path", path_leaf, "leaf vertex of the pendant path to double")->required();

  auto* edge_add = app.add_subcommand("edge-add", "add one cycle edge preserving irregularity");
  edge_add->add_option("input", input, "graph6 line, file, family spec, or - for stdin")
      ->required();
  edge_add->add_option("--case", edge_case, "witness pattern: i or ii")
      ->required()
      ->check(CLI::IsMember({"i", "ii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return run_check(input, report);
    if (construct->parsed()) return run_construct(spec, out, annotate);
    if (verify->parsed()) {
      if (theorem == "lemmas") return verify_lemmas(samples, seed);
      const char* fallback = theorem == "cti" ? "7..151" : theorem == "double" ? "7..12" : "2..60";
      auto [lo, hi] = parse_range(range.empty() ? fallback : range);
      if (theorem == "cti") return verify_cti(lo, hi);
      if (theorem == "zti") return verify_zti(lo, hi);
      if (theorem == "k4") return verify_k4(lo, hi);
      return verify_double(lo, hi);
    }
    if (enumerate->parsed())
      return run_enumerate(order, range, chemical, predicate, jobs, witness_cap, witness_file);
    if (dbl->parsed()) return run_double(input, path_leaf);
    if (edge_add->parsed()) return run_edge_add(input, edge_case);
  } catch (const tigraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
