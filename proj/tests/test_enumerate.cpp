#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "test_util.hpp"

using tigraph::Errc;
using tigraph::Graph;
using tigraph::TreeStream;
using ttest::thrown_errc;

namespace {

// Published counts of free trees (all, then maximum degree 4) by order.
// The degree-capped numbers are the alkane isomer counts.
constexpr std::uint64_t kFreeTrees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
constexpr std::uint64_t kQuarticTrees[] = {1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858};

std::uint64_t stream_count(int order, std::optional<int> cap) {
  TreeStream s(order, cap);
  std::uint64_t total = 0;
  while (s.advance()) ++total;
  return total;
}

std::set<std::string> stream_canonicals(int order, std::optional<int> cap) {
  TreeStream s(order, cap);
  std::set<std::string> out;
  while (s.advance()) {
    Graph g = s.to_graph();
    REQUIRE(g.order() == order);
    REQUIRE(tigraph::is_tree(g));
    if (cap) REQUIRE(tigraph::max_degree(g) <= *cap);
    auto [it, fresh] = out.insert(ttest::ahu_canonical(g));
    REQUIRE(fresh);  // no isomorph may be yielded twice
  }
  return out;
}

}  // namespace

TEST_CASE("tree stream matches the published counts") {
  for (int n = 1; n <= 14; ++n) {
    CHECK(stream_count(n, std::nullopt) == kFreeTrees[n - 1]);
    CHECK(stream_count(n, 4) == kQuarticTrees[n - 1]);
  }
  // Degree cap 2 leaves just the path; cap 1 only fits the single edge.
  for (int n = 2; n <= 10; ++n) CHECK(stream_count(n, 2) == 1);
  CHECK(stream_count(2, 1) == 1);
  CHECK(stream_count(3, 1) == 0);
}

TEST_CASE("tree stream agrees with the brute force universe") {
  for (int n = 1; n <= 8; ++n)
    CHECK(stream_canonicals(n, std::nullopt) == ttest::prufer_tree_universe(n));
  for (int n = 6; n <= 8; ++n) {
    CHECK(stream_canonicals(n, 4) == ttest::prufer_tree_universe(n, 4));
    CHECK(stream_canonicals(n, 3) == ttest::prufer_tree_universe(n, 3));
  }
}

TEST_CASE("tree stream bookkeeping") {
  TreeStream s(9);
  std::uint64_t expect = 0;
  while (s.advance()) {
    CHECK(s.index() == expect);
    ++expect;
    CHECK(tigraph::parse_graph6(s.to_graph6()).edges() == s.to_graph().edges());
  }
  CHECK(expect == 47);

  CHECK(thrown_errc([] { TreeStream bad(0); }) == Errc::BadOrder);
  CHECK(thrown_errc([] { TreeStream bad(5, 0); }) == Errc::BadParam);
}

TEST_CASE("enumeration order cap") {
  CHECK(thrown_errc([] { TreeStream t(25); }) == Errc::OrderTooLarge);
  CHECK_FALSE(thrown_errc([] { TreeStream t(25, std::nullopt, 30); }));

  setenv("TI_MAX_ORDER", "10", 1);
  CHECK(tigraph::enumeration_order_cap() == 10);
  CHECK(thrown_errc([] { TreeStream t(12); }) == Errc::OrderTooLarge);
  setenv("TI_MAX_ORDER", "not-a-number", 1);
  CHECK(tigraph::enumeration_order_cap() == tigraph::kDefaultMaxOrder);
  setenv("TI_MAX_ORDER", "9999", 1);
  CHECK(tigraph::enumeration_order_cap() == tigraph::kDefaultMaxOrder);
  unsetenv("TI_MAX_ORDER");
  CHECK(tigraph::enumeration_order_cap() == tigraph::kDefaultMaxOrder);
}

TEST_CASE("predicate names") {
  using tigraph::SearchPredicate;
  for (auto p : {SearchPredicate::Ti, SearchPredicate::TiAndCaseI, SearchPredicate::TiAndCaseII,
                 SearchPredicate::TiEvenOrder})
    CHECK(tigraph::parse_predicate(tigraph::predicate_name(p)) == p);
  CHECK(thrown_errc([] { tigraph::parse_predicate("bogus"); }) == Errc::UnknownPredicate);
}

TEST_CASE("no irregular tree below order 7 except the trivial one") {
  // The one-vertex tree is irregular by definition: its single transmission
  // set has full size. Orders 2 through 6 all collide somewhere.
  auto one = tigraph::count_ti_trees(1, false);
  CHECK(one.ti_count == 1);
  REQUIRE(one.witnesses.size() == 1);
  CHECK(one.witnesses.front() == "@");
  for (int n = 2; n <= 6; ++n) {
    CHECK(tigraph::count_ti_trees(n, false).ti_count == 0);
    CHECK(tigraph::count_ti_trees(n, true).ti_count == 0);
  }
}

TEST_CASE("census finds the known small witnesses") {
  auto r7 = tigraph::count_ti_trees(7, true);
  CHECK(r7.total_trees == 9);
  CHECK(r7.ti_count >= 1);
  std::set<std::string> found;
  for (const auto& g6 : r7.witnesses) {
    Graph g = tigraph::parse_graph6(g6);
    CHECK(tigraph::is_transmission_irregular(g));
    CHECK(tigraph::is_chemical(g));
    found.insert(ttest::ahu_canonical(g));
  }
  std::vector<int> arms{1, 2, 3};
  CHECK(found.count(ttest::ahu_canonical(tigraph::starlike(arms))) == 1);

  auto r9 = tigraph::count_ti_trees(9, true);
  std::set<std::string> found9;
  for (const auto& g6 : r9.witnesses) found9.insert(ttest::ahu_canonical(tigraph::parse_graph6(g6)));
  std::vector<int> arms9{1, 3, 4};
  CHECK(found9.count(ttest::ahu_canonical(tigraph::starlike(arms9))) == 1);
}

TEST_CASE("parallel search is deterministic") {
  auto one = tigraph::search_order(12, std::nullopt, tigraph::SearchPredicate::Ti, 1);
  auto four = tigraph::search_order(12, std::nullopt, tigraph::SearchPredicate::Ti, 4);
  CHECK(one.order == four.order);
  CHECK(one.total_trees == four.total_trees);
  CHECK(one.ti_count == four.ti_count);
  CHECK(one.witnesses == four.witnesses);
  CHECK(one.total_trees == 551);

  auto capped = tigraph::search_order(12, std::nullopt, tigraph::SearchPredicate::Ti, 3, 2);
  REQUIRE(capped.witnesses.size() <= 2);
  for (std::size_t i = 0; i < capped.witnesses.size(); ++i)
    CHECK(capped.witnesses[i] == one.witnesses[i]);
  CHECK(capped.ti_count == one.ti_count);
}

TEST_CASE("search over an order range") {
  auto reports = tigraph::search(4, 8, tigraph::SearchPredicate::Ti, std::nullopt);
  REQUIRE(reports.size() == 5);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].order == 4 + static_cast<int>(i));
    CHECK(reports[i].total_trees == kFreeTrees[3 + i]);
  }
  CHECK(thrown_errc([] { tigraph::search(0, 3, tigraph::SearchPredicate::Ti, std::nullopt); }) ==
        Errc::BadOrder);
  CHECK(thrown_errc([] { tigraph::search(5, 4, tigraph::SearchPredicate::Ti, std::nullopt); }) ==
        Errc::BadOrder);
}

TEST_CASE("structured predicates only keep matching witnesses") {
  // Parity alone rules even orders out for the plain predicate at odd n.
  auto even_at_odd = tigraph::search_order(9, std::nullopt, tigraph::SearchPredicate::TiEvenOrder);
  CHECK(even_at_odd.ti_count == 0);

  // Trees carrying either insertion pattern first appear at order 19: one
  // tree whose three largest transmissions sit on a pendant path, and two
  // whose top pair are pendant vertices two steps apart.
  struct FirstHit {
    tigraph::SearchPredicate pred;
    std::uint64_t count_at_19;
  };
  for (auto [pred, count_at_19] : {FirstHit{tigraph::SearchPredicate::TiAndCaseI, 1},
                                   FirstHit{tigraph::SearchPredicate::TiAndCaseII, 2}}) {
    for (int n = 13; n <= 19; ++n) {
      auto r = tigraph::search_order(n, std::nullopt, pred, 1, 1 << 20);
      CHECK(r.ti_count == r.witnesses.size());
      CHECK(r.ti_count == (n < 19 ? 0 : count_at_19));
      for (const auto& g6 : r.witnesses) {
        Graph g = tigraph::parse_graph6(g6);
        REQUIRE(tigraph::is_transmission_irregular(g));
        auto hit = pred == tigraph::SearchPredicate::TiAndCaseI ? tigraph::edge_add_case_i(g)
                                                                : tigraph::edge_add_case_ii(g);
        REQUIRE(hit.has_value());
        CHECK(tigraph::is_transmission_irregular(hit->result));
      }
    }
  }
}
