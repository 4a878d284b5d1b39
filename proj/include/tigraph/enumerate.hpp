#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tigraph/graph.hpp"
#include "tigraph/graph6.hpp"
#include "tigraph/structure.hpp"
#include "tigraph/transmission.hpp"

namespace tigraph {

inline constexpr int kDefaultMaxOrder = 24;

// Enumeration cap, overridable through the TI_MAX_ORDER environment
// variable. Unparseable or absurd values fall back to the default.
inline int enumeration_order_cap() {
  const char* env = std::getenv("TI_MAX_ORDER");
  if (!env) return kDefaultMaxOrder;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 64) return kDefaultMaxOrder;
  return static_cast<int>(v);
}

// Exhaustive stream of free trees of a given order, one per isomorphism
// class, optionally restricted to a maximum degree.
//
// Internals: canonical rooted trees are visited in decreasing lexicographic
// order of their level sequences (root at level 1, subtrees of every vertex
// ordered lexicographically non-increasing) via the classic successor rule:
// take the last position p with level > 2 and refill the tail by cycling
// the block that starts at p's parent. A rooted representative is kept only
// when its root is the canonical center of the underlying free tree:
//   h1 == h2           root is the unique center;
//   h1 == h2 + 1       root is the nearer of two adjacent centers; accept
//                      iff the far half (first principal subtree, re-rooted)
//                      is lexicographically >= the near half;
//   otherwise          reject,
// where h1, h2 are the depths of the two deepest principal subtrees. Each
// free tree then appears exactly once. Degree caps are enforced inside the
// stream, so capped trees are never yielded.
class TreeStream {
 public:
  explicit TreeStream(int order, std::optional<int> degree_cap = std::nullopt, int max_order = -1) {
    int cap = max_order > 0 ? max_order : enumeration_order_cap();
    if (order < 1) fail(Errc::BadOrder, "tree order must be >= 1");
    if (order > cap)
      fail(Errc::OrderTooLarge, "order " + std::to_string(order) + " exceeds cap " +
                                     std::to_string(cap));
    if (degree_cap && *degree_cap < 1) fail(Errc::BadParam, "degree cap must be >= 1");
    n_ = order;
    degree_cap_ = degree_cap;
    lvl_.resize(n_);
    parent_.assign(n_, -1);
    last_at_level_.assign(n_ + 2, 0);
  }

  // Moves to the next tree; false once the stream is exhausted.
  bool advance() {
    while (next_rooted()) {
      if (!accept_free()) continue;
      fill_parents();
      if (degree_cap_ && max_deg_ > *degree_cap_) continue;
      ++index_;
      return true;
    }
    return false;
  }

  int order() const { return n_; }
  std::span<const int> levels() const { return lvl_; }
  std::span<const int> parents() const { return parent_; }
  std::uint64_t index() const { return static_cast<std::uint64_t>(index_); }

  Graph to_graph() const {
    std::vector<Edge> edges;
    edges.reserve(n_ - 1);
    for (int i = 1; i < n_; ++i) edges.emplace_back(parent_[i], i);
    return Graph::from_edge_list(n_, std::move(edges));
  }

  std::string to_graph6() const { return tigraph::to_graph6(to_graph()); }

 private:
  bool next_rooted() {
    if (!started_) {
      started_ = true;
      for (int i = 0; i < n_; ++i) lvl_[i] = i + 1;  // the path, lexicographic maximum
      return true;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 1; --i)
      if (lvl_[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) return false;  // the star was the last sequence
    int q = p - 1;
    while (lvl_[q] != lvl_[p] - 1) --q;
    for (int i = p; i < n_; ++i) lvl_[i] = lvl_[i - (p - q)];
    return true;
  }

  bool accept_free() const {
    if (n_ <= 2) return true;
    // First principal subtree occupies [1, e1); its depth h1 is the global
    // maximum level minus one because canonical order sinks the deepest
    // chain first.
    int e1 = n_;
    for (int i = 2; i < n_; ++i)
      if (lvl_[i] == 2) {
        e1 = i;
        break;
      }
    if (e1 == n_) return false;  // single principal subtree: root is a leaf end
    int h1 = 0, h2 = 0;
    for (int i = 1; i < e1; ++i) h1 = std::max(h1, lvl_[i] - 1);
    for (int i = e1; i < n_; ++i) h2 = std::max(h2, lvl_[i] - 1);
    if (h1 == h2) return true;
    if (h1 != h2 + 1) return false;
    // Two centers: compare the far half (subtree [1, e1) re-rooted, levels
    // down one) against the near half (root plus the remaining subtrees).
    int la = e1 - 1, lb = n_ - e1 + 1;
    for (int i = 0; i < std::min(la, lb); ++i) {
      int x = i == 0 ? 1 : lvl_[1 + i] - 1;
      int y = i == 0 ? 1 : lvl_[e1 + i - 1];
      if (x != y) return x > y;
    }
    return la >= lb;
  }

  void fill_parents() {
    last_at_level_[1] = 0;
    parent_[0] = -1;
    child_count_.assign(n_, 0);
    for (int i = 1; i < n_; ++i) {
      parent_[i] = last_at_level_[lvl_[i] - 1];
      last_at_level_[lvl_[i]] = i;
      ++child_count_[parent_[i]];
    }
    max_deg_ = child_count_[0];
    for (int i = 1; i < n_; ++i) max_deg_ = std::max(max_deg_, child_count_[i] + 1);
  }

  int n_ = 0;
  std::optional<int> degree_cap_;
  bool started_ = false;
  std::int64_t index_ = -1;
  std::vector<int> lvl_, parent_, last_at_level_, child_count_;
  int max_deg_ = 0;
};

enum class SearchPredicate { Ti, TiAndCaseI, TiAndCaseII, TiEvenOrder };

inline SearchPredicate parse_predicate(std::string_view name) {
  if (name == "ti") return SearchPredicate::Ti;
  if (name == "ti-and-case-i") return SearchPredicate::TiAndCaseI;
  if (name == "ti-and-case-ii") return SearchPredicate::TiAndCaseII;
  if (name == "ti-even-order") return SearchPredicate::TiEvenOrder;
  fail(Errc::UnknownPredicate, "unknown predicate '" + std::string(name) + "'");
}

inline const char* predicate_name(SearchPredicate p) {
  switch (p) {
    case SearchPredicate::Ti: return "ti";
    case SearchPredicate::TiAndCaseI: return "ti-and-case-i";
    case SearchPredicate::TiAndCaseII: return "ti-and-case-ii";
    case SearchPredicate::TiEvenOrder: return "ti-even-order";
  }
  return "?";
}

struct SearchReport {
  int order = 0;
  std::uint64_t total_trees = 0;  // trees the stream yielded (after any cap)
  std::uint64_t ti_count = 0;     // trees satisfying the predicate
  std::vector<std::string> witnesses;
  std::chrono::milliseconds elapsed{0};
};

namespace detail {

// Predicate evaluation on a bare parent array (vertices in preorder, so
// parent[i] < i). Scratch buffers avoid per-tree allocation.
struct TreeEval {
  std::vector<long long> size;
  std::vector<Transmission> tr, sorted;

  bool transmissions_distinct(const int* par, int n) {
    size.assign(n, 1);
    tr.resize(n);
    Transmission tr0 = 0;
    std::vector<int> depth(n, 0);
    for (int i = 1; i < n; ++i) {
      depth[i] = depth[par[i]] + 1;
      tr0 += depth[i];
    }
    for (int i = n - 1; i >= 1; --i) size[par[i]] += size[i];
    tr[0] = tr0;
    for (int i = 1; i < n; ++i) tr[i] = tr[par[i]] + n - 2 * size[i];
    sorted = tr;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  static Graph graph_of(const int* par, int n) {
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.emplace_back(par[i], i);
    return Graph::from_edge_list(n, std::move(edges));
  }

  bool matches(const int* par, int n, SearchPredicate pred) {
    if (!transmissions_distinct(par, n)) return false;
    switch (pred) {
      case SearchPredicate::Ti:
        return true;
      case SearchPredicate::TiEvenOrder:
        return n % 2 == 0;
      case SearchPredicate::TiAndCaseI:
        return edge_add_case_i(graph_of(par, n)).has_value();
      case SearchPredicate::TiAndCaseII:
        return edge_add_case_ii(graph_of(par, n)).has_value();
    }
    return false;
  }
};

struct Batch {
  std::uint64_t first_index = 0;
  int count = 0;
  std::vector<int> parents;  // count * n ints
};

struct BatchOutcome {
  std::uint64_t first_index = 0;
  std::uint64_t total = 0;
  std::uint64_t matched = 0;
  std::vector<std::pair<std::uint64_t, std::string>> witnesses;
};

}  // namespace detail

// Exhaustively searches free trees of one order. Parallel runs split the
// stream into fixed-size batches handed to worker threads; results are
// merged back in stream order, so counts and witness lists are identical
// for every jobs setting.
inline SearchReport search_order(int order, std::optional<int> degree_cap, SearchPredicate pred,
                                 int jobs = 1, int witness_cap = 100, int max_order = -1) {
  if (jobs < 1) fail(Errc::BadParam, "jobs must be >= 1");
  if (witness_cap < 0) fail(Errc::BadParam, "witness cap must be >= 0");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.order = order;

  std::vector<detail::BatchOutcome> outcomes;

  if (jobs == 1) {
    TreeStream stream(order, degree_cap, max_order);
    detail::TreeEval eval;
    detail::BatchOutcome acc;
    while (stream.advance()) {
      ++acc.total;
      if (eval.matches(stream.parents().data(), order, pred)) {
        ++acc.matched;
        if (acc.witnesses.size() < static_cast<std::size_t>(witness_cap))
          acc.witnesses.emplace_back(stream.index(), stream.to_graph6());
      }
    }
    outcomes.push_back(std::move(acc));
  } else {
    constexpr int kBatch = 256;
    std::mutex mu;
    std::condition_variable cv_space, cv_data;
    std::deque<detail::Batch> queue;
    bool producing = true;
    const std::size_t queue_cap = static_cast<std::size_t>(jobs) * 4;

    std::vector<detail::BatchOutcome> partials;
    std::mutex out_mu;

    auto worker = [&]() {
      detail::TreeEval eval;
      for (;;) {
        detail::Batch batch;
        {
          std::unique_lock lk(mu);
          cv_data.wait(lk, [&] { return !queue.empty() || !producing; });
          if (queue.empty()) return;
          batch = std::move(queue.front());
          queue.pop_front();
        }
        cv_space.notify_one();
        detail::BatchOutcome out;
        out.first_index = batch.first_index;
        out.total = batch.count;
        for (int t = 0; t < batch.count; ++t) {
          const int* par = batch.parents.data() + static_cast<std::size_t>(t) * order;
          if (eval.matches(par, order, pred)) {
            ++out.matched;
            // Batches are stream-ordered, so keeping at most witness_cap per
            // batch still leaves the globally first witness_cap matches
            // available to the merge below.
            if (out.witnesses.size() < static_cast<std::size_t>(witness_cap))
              out.witnesses.emplace_back(batch.first_index + t,
                                         to_graph6(detail::TreeEval::graph_of(par, order)));
          }
        }
        std::lock_guard lk(out_mu);
        partials.push_back(std::move(out));
      }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

    {
      TreeStream stream(order, degree_cap, max_order);
      detail::Batch batch;
      batch.parents.reserve(static_cast<std::size_t>(kBatch) * order);
      std::uint64_t produced = 0;
      auto flush = [&]() {
        if (batch.count == 0) return;
        std::unique_lock lk(mu);
        cv_space.wait(lk, [&] { return queue.size() < queue_cap; });
        queue.push_back(std::move(batch));
        lk.unlock();
        cv_data.notify_one();
        batch = detail::Batch{};
        batch.parents.reserve(static_cast<std::size_t>(kBatch) * order);
      };
      while (stream.advance()) {
        if (batch.count == 0) batch.first_index = produced;
        batch.parents.insert(batch.parents.end(), stream.parents().begin(),
                             stream.parents().end());
        ++batch.count;
        ++produced;
        if (batch.count == kBatch) flush();
      }
      flush();
      {
        std::lock_guard lk(mu);
        producing = false;
      }
      cv_data.notify_all();
    }
    for (auto& th : pool) th.join();
    outcomes = std::move(partials);
    std::sort(outcomes.begin(), outcomes.end(),
              [](const auto& a, const auto& b) { return a.first_index < b.first_index; });
  }

  for (auto& out : outcomes) {
    report.total_trees += out.total;
    report.ti_count += out.matched;
    for (auto& [idx, g6] : out.witnesses) {
      (void)idx;
      if (report.witnesses.size() < static_cast<std::size_t>(witness_cap))
        report.witnesses.push_back(std::move(g6));
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

// TI census over the free (or chemical, cap 4) trees of one order.
inline SearchReport count_ti_trees(int order, bool chemical, int jobs = 1, int witness_cap = 100,
                                   int max_order = -1) {
  return search_order(order, chemical ? std::optional<int>(4) : std::nullopt,
                      SearchPredicate::Ti, jobs, witness_cap, max_order);
}

// Per-order reports over an inclusive order range.
inline std::vector<SearchReport> search(int order_lo, int order_hi, SearchPredicate pred,
                                        std::optional<int> degree_cap, int jobs = 1,
                                        int witness_cap = 100, int max_order = -1) {
  if (order_lo < 1 || order_hi < order_lo) fail(Errc::BadOrder, "bad order range");
  std::vector<SearchReport> reports;
  reports.reserve(order_hi - order_lo + 1);
  for (int n = order_lo; n <= order_hi; ++n)
    reports.push_back(search_order(n, degree_cap, pred, jobs, witness_cap, max_order));
  return reports;
}

}  // namespace tigraph
