#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

using tigraph::Graph;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the built binary through the shell, capturing stdout, stderr and the
// exit status. Arguments are appended verbatim, so quote where needed; no
// argument ever contains a single quote (graph6 bytes stay in 63..126).
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("TIGRAPH_CLI");
  REQUIRE(bin != nullptr);
  static int counter = 0;
  auto err_path = std::filesystem::temp_directory_path() /
                  ("tigraph_cli_err_" + std::to_string(++counter) + ".txt");
  std::string cmd = env_prefix + "'" + bin + "' " + args + " 2>" + err_path.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  REQUIRE(WIFEXITED(rc));
  r.status = WEXITSTATUS(rc);
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string shell_quoted(const std::string& s) { return "'" + s + "'"; }

std::string trimmed_view(const std::string& s) {
  auto end = s.find_last_not_of(" \t\r\n");
  return end == std::string::npos ? "" : s.substr(0, end + 1);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli check reports irregularity") {
  Graph t7 = tigraph::ti_odd_tree(7);
  std::string g6 = tigraph::to_graph6(t7);

  auto r = run_cli("check " + shell_quoted(g6));
  CHECK(r.status == 0);
  CHECK(contains(r.out, "n=7"));
  CHECK(contains(r.out, "chemical=yes"));
  CHECK(contains(r.out, "complexity=7/7"));
  CHECK(contains(r.out, "TI: yes"));
  CHECK_FALSE(contains(r.out, "transmissions="));

  auto full = run_cli("check --report full " + shell_quoted(g6));
  CHECK(full.status == 0);
  CHECK(contains(full.out, "transmissions=" + ttest::join_values(t7)));
}

TEST_CASE("cli check rejects and grades down") {
  Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto r = run_cli("check " + shell_quoted(tigraph::to_graph6(c5)));
  CHECK(r.status == 10);
  CHECK(contains(r.out, "complexity=1/5"));
  CHECK(contains(r.out, "TI: no"));

  auto truncated = run_cli("check 'D'");
  CHECK(truncated.status == 2);
  CHECK(contains(truncated.err, "MalformedGraph6"));

  // Not a file, contains no colon: parsed as a graph6 literal and rejected.
  auto missing = run_cli("check no_such_file");
  CHECK(missing.status == 2);

  auto usage = run_cli("");
  CHECK(usage.status == 2);
  auto help = run_cli("--help");
  CHECK(help.status == 0);
}

TEST_CASE("cli check reads files and stdin") {
  auto path = std::filesystem::temp_directory_path() / "tigraph_cli_input.g6";
  {
    std::ofstream out(path);
    out << "\n" << tigraph::to_graph6(tigraph::ti_odd_tree(9)) << "\n";
  }
  auto r = run_cli("check " + shell_quoted(path.string()));
  std::filesystem::remove(path);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "n=9"));
  CHECK(contains(r.out, "complexity=9/9"));

  // K3 over stdin: one transmission value shared by all three vertices.
  auto k3 = run_cli("check -", "printf 'Bw\\n' | ");
  CHECK(k3.status == 10);
  CHECK(contains(k3.out, "complexity=1/3"));
}

TEST_CASE("cli construct emits the named family") {
  auto r = run_cli("construct ti-odd:7");
  CHECK(r.status == 0);
  CHECK(r.out == tigraph::to_graph6(tigraph::ti_odd_tree(7)) + "\n");

  auto z = run_cli("construct z0:2,4,1,5");
  CHECK(z.status == 0);
  CHECK(z.out == tigraph::to_graph6(tigraph::z0_graph(2, 4, 1, 5)) + "\n");
  CHECK(tigraph::parse_graph6(z.out.substr(0, z.out.size() - 1)).order() == 16);

  auto bad = run_cli("construct 'h:0;1,1;1,1'");
  CHECK(bad.status == 2);
  CHECK(contains(bad.err, "BadLength"));

  auto dot = run_cli("construct ti-odd:7 --out dot --annotate");
  CHECK(dot.status == 0);
  CHECK(contains(dot.out, "graph G {"));
  CHECK(contains(dot.out, " -- "));
  auto values = tigraph::transmission_profile(tigraph::ti_odd_tree(7)).values;
  CHECK(contains(dot.out, ": " + std::to_string(values[0]) + "\""));

  auto lonely = run_cli("construct ti-odd:7 --annotate");
  CHECK(lonely.status == 2);
}

TEST_CASE("cli verify replays the family theorems") {
  auto zti = run_cli("verify zti --range 2..20");
  CHECK(zti.status == 0);
  CHECK(contains(zti.out, "all agree (19 lines)"));
  CHECK(contains(zti.out, "a=3 predicted=TI computed=TI ok"));
  CHECK(contains(zti.out, "a=4 predicted=not-TI computed=not-TI ok"));

  auto cti = run_cli("verify cti --range 7..31");
  CHECK(cti.status == 0);
  CHECK(contains(cti.out, "all agree (13 lines)"));

  auto k4 = run_cli("verify k4 --range 2..20");
  CHECK(k4.status == 0);
  CHECK(contains(k4.out, "a=2 predicted=not-TI computed=not-TI ok"));
  CHECK(contains(k4.out, "all agree (19 lines)"));

  auto empty = run_cli("verify zti --range 5..3");
  CHECK(empty.status == 2);
  auto junk = run_cli("verify zti --range pear");
  CHECK(junk.status == 2);
}

TEST_CASE("cli verify sweeps doubling and lemmas") {
  auto dbl = run_cli("verify double --range 7..9");
  CHECK(dbl.status == 0);
  CHECK(contains(dbl.out, "n=7 ti_trees=1"));
  CHECK(contains(dbl.out, "all agree (3 lines)"));

  auto lemmas = run_cli("verify lemmas --samples 60 --seed 7");
  CHECK(lemmas.status == 0);
  CHECK(contains(lemmas.out, "edge-identity"));
  CHECK(contains(lemmas.out, "pendant-path"));
  CHECK(contains(lemmas.out, "internal-path"));
  CHECK(contains(lemmas.out, "all agree"));
  CHECK_FALSE(contains(lemmas.out, "violations=1"));
}

TEST_CASE("cli enumerate reports counts and witnesses") {
  auto small = run_cli("enumerate --range 1..6 --predicate ti");
  CHECK(small.status == 0);
  int lines = 0;
  std::istringstream in(small.out);
  for (std::string line; std::getline(in, line); ++lines) {
    // Only the one-vertex tree is (trivially) irregular this far down.
    if (lines == 0)
      CHECK(line == "order=1 trees=1 ti_count=1");
    else
      CHECK(contains(line, "ti_count=0"));
  }
  CHECK(lines == 6);

  auto path = std::filesystem::temp_directory_path() / "tigraph_cli_witnesses.g6";
  auto chem = run_cli("enumerate --order 9 --chemical --witnesses " + shell_quoted(path.string()));
  CHECK(chem.status == 0);
  CHECK(contains(chem.out, "order=9 trees=35 "));
  std::ifstream wit(path);
  int found = 0;
  for (std::string line; std::getline(wit, line);) {
    Graph g = tigraph::parse_graph6(line);
    CHECK(g.order() == 9);
    CHECK(tigraph::is_chemical(g));
    CHECK(tigraph::is_transmission_irregular(g));
    ++found;
  }
  std::filesystem::remove(path);
  CHECK(contains(chem.out, "ti_count=" + std::to_string(found)));
  CHECK(found >= 1);
}

TEST_CASE("cli enumerate is deterministic across jobs") {
  auto one = run_cli("enumerate --order 10 --jobs 1");
  auto four = run_cli("enumerate --order 10 --jobs 4");
  CHECK(one.status == 0);
  CHECK(four.status == 0);
  CHECK(one.out == four.out);
  CHECK(contains(one.out, "order=10 trees=106 "));
}

TEST_CASE("cli enumerate flag errors") {
  CHECK(run_cli("enumerate --order 7 --range 1..3").status == 2);
  CHECK(run_cli("enumerate").status == 2);
  auto pred = run_cli("enumerate --order 7 --predicate bogus");
  CHECK(pred.status == 2);
  CHECK(contains(pred.err, "UnknownPredicate"));
  auto capped = run_cli("enumerate --order 12", "TI_MAX_ORDER=10 ");
  CHECK(capped.status == 2);
  CHECK(contains(capped.err, "OrderTooLarge"));
  CHECK(run_cli("enumerate --order 12", "TI_MAX_ORDER=12 ").status == 0);
}

TEST_CASE("cli double mirrors a pendant path") {
  Graph t7 = tigraph::ti_odd_tree(7);
  int long_leaf = -1, short_leaf = -1;
  for (const auto& p : tigraph::find_pendant_paths(t7)) {
    if (p.length == 3) long_leaf = p.leaf;
    if (p.length == 1) short_leaf = p.leaf;
  }
  REQUIRE(long_leaf >= 0);
  REQUIRE(short_leaf >= 0);

  auto r = run_cli("double ti-odd:7 --path " + std::to_string(long_leaf));
  CHECK(r.status == 0);
  CHECK(contains(r.err, "eligible=yes"));
  CHECK(contains(r.err, "result order=15 TI=yes"));
  Graph doubled = tigraph::parse_graph6(trimmed_view(r.out));
  CHECK(doubled.order() == 15);
  CHECK(tigraph::is_transmission_irregular(doubled));

  // The short arm misses the eligibility window; the tree is still emitted.
  auto w = run_cli("double ti-odd:7 --path " + std::to_string(short_leaf));
  CHECK(w.status == 11);
  CHECK(contains(w.err, "window_j=-"));
  CHECK(contains(w.err, "warning"));
  CHECK(tigraph::parse_graph6(trimmed_view(w.out)).order() == 15);

  Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto cyc = run_cli("double " + shell_quoted(tigraph::to_graph6(c5)) + " --path 1");
  CHECK(cyc.status == 2);
}

TEST_CASE("cli edge-add inserts a cycle edge") {
  // Feed one search-found witness of each pattern back through the CLI.
  // Order 19 is the smallest with either pattern, so start there.
  for (std::string which : {"i", "ii"}) {
    auto pred = which == "i" ? tigraph::SearchPredicate::TiAndCaseI
                             : tigraph::SearchPredicate::TiAndCaseII;
    std::string witness;
    for (int n = 19; n <= 21 && witness.empty(); ++n) {
      auto report = tigraph::search_order(n, std::nullopt, pred, 1, 1);
      if (!report.witnesses.empty()) witness = report.witnesses.front();
    }
    REQUIRE_FALSE(witness.empty());

    auto r = run_cli("edge-add " + shell_quoted(witness) + " --case " + which);
    CHECK(r.status == 0);
    CHECK(contains(r.err, "witness v1="));
    CHECK(contains(r.err, "result_TI=yes"));
    Graph before = tigraph::parse_graph6(witness);
    Graph after = tigraph::parse_graph6(trimmed_view(r.out));
    CHECK(after.order() == before.order());
    CHECK(after.edges().size() == before.edges().size() + 1);
    CHECK(tigraph::is_transmission_irregular(after));
  }

  auto absent = run_cli("edge-add ti-odd:7 --case i");
  CHECK(absent.status == 11);
  CHECK(contains(absent.err, "no case-i pattern found"));

  Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto notti = run_cli("edge-add " + shell_quoted(tigraph::to_graph6(c5)) + " --case ii");
  CHECK(notti.status == 2);
  CHECK(contains(notti.err, "NotTI"));
}
