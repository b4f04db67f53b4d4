#include <set>

#include "doctest.h"
#include "zdsg/enumerator.hpp"
#include "zdsg/export.hpp"
#include "zdsg/formulas.hpp"

using namespace zdsg;

namespace {

// Counts labeled tables on m nonzero elements whose zero-divisor graph has
// exactly the edges of `target`, by trying every symmetric table. Shares
// nothing with the enumerator except MulTable itself.
std::uint64_t brute_force_labeled(const TargetGraph& target) {
  const int m = target.vertex_count();
  const SimpleGraph want = target_graph(target);
  std::vector<std::pair<int, int>> cells;
  for (int u = 1; u <= m; ++u) {
    for (int v = u; v <= m; ++v) cells.emplace_back(u, v);
  }
  std::vector<int> digits(cells.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    MulTable t(m);
    bool graph_ok = true;
    for (std::size_t i = 0; i < cells.size() && graph_ok; ++i) {
      const auto [u, v] = cells[i];
      t.set(u, v, digits[i]);
      if (u != v && (digits[i] == 0) != want.adjacent(u, v)) graph_ok = false;
    }
    if (graph_ok) {
      bool assoc = true;
      for (int a = 1; a <= m && assoc; ++a) {
        for (int b = 1; b <= m && assoc; ++b) {
          for (int c = 1; c <= m && assoc; ++c) assoc = t(t(a, b), c) == t(a, t(b, c));
        }
      }
      bool all_zd = true;
      for (int a = 1; a <= m; ++a) {
        bool zd = false;
        for (int b = 1; b <= m; ++b) zd = zd || t(a, b) == 0;
        all_zd = all_zd && zd;
      }
      if (assoc && all_zd) ++count;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] > m) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return count;
}

std::vector<MulTable> collect(const TargetGraph& target, const EnumerateOptions& o) {
  std::vector<MulTable> out;
  enumerate_labeled(target, [&](const MulTable& t) { out.push_back(t); }, o);
  return out;
}

}  // namespace

TEST_CASE("slot layout") {
  const SearchSpec k3 = seed_partial_table(TargetGraph::complete(3));
  CHECK(k3.slots == std::vector<Slot>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(k3.leaf_count() == 64);

  const SearchSpec p3 = seed_partial_table(TargetGraph::complete_plus_end(3));
  CHECK(p3.slots == std::vector<Slot>{{4, 4}, {2, 4}, {3, 4}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(p3.domains[0].size() == 5);
  CHECK(p3.domains[1] == std::vector<ElementId>{1, 2, 3, 4});
  CHECK(p3.seed(1, 4) == 0);
  CHECK(p3.seed(1, 2) == 0);
  CHECK(p3.leaf_count() == 10000);
}

TEST_CASE("labeled counts match a full brute force") {
  CHECK(collect(TargetGraph::complete(1), {}).size() == 1);
  CHECK(collect(TargetGraph::complete(2), {}).size() == 6);
  CHECK(collect(TargetGraph::complete(3), {}).size() == 23);
  CHECK(brute_force_labeled(TargetGraph::complete(2)) == 6);
  CHECK(brute_force_labeled(TargetGraph::complete(3)) == 23);
  CHECK(brute_force_labeled(TargetGraph::complete_plus_end(2)) ==
        collect(TargetGraph::complete_plus_end(2), {}).size());
  CHECK(brute_force_labeled(TargetGraph::complete(4)) == 104);
  CHECK(brute_force_labeled(TargetGraph::complete_plus_end(3)) == 36);
  CHECK(collect(TargetGraph::complete(4), {}).size() == 104);
  CHECK(collect(TargetGraph::complete_plus_end(3), {}).size() == 36);
  CHECK(collect(TargetGraph::complete_plus_end(4), {}).size() == 167);
}

TEST_CASE("pruning changes the work, not the result") {
  for (const auto& target : {TargetGraph::complete(4), TargetGraph::complete_plus_end(3),
                             TargetGraph::complete_plus_end(4)}) {
    EnumerateOptions slow;
    slow.prune = false;
    std::vector<MulTable> pruned;
    std::vector<MulTable> unpruned;
    const auto a = enumerate_labeled(target, [&](const MulTable& t) { pruned.push_back(t); });
    const auto b =
        enumerate_labeled(target, [&](const MulTable& t) { unpruned.push_back(t); }, slow);
    CHECK(pruned == unpruned);
    CHECK(a.assignments < b.assignments);
  }
}

TEST_CASE("output order does not depend on the job count") {
  const auto target = TargetGraph::complete_plus_end(4);
  EnumerateOptions one;
  const auto base = collect(target, one);
  for (int jobs : {2, 3, 8}) {
    EnumerateOptions many;
    many.jobs = jobs;
    CHECK(collect(target, many) == base);
    CHECK(oracle_classes(target, many) == oracle_classes(target, one));
  }
}

TEST_CASE("every emitted table realizes the target") {
  const auto target = TargetGraph::complete_plus_end(4);
  std::set<std::vector<std::vector<ElementId>>> seen;
  enumerate_labeled(target, [&](const MulTable& t) {
    CHECK(realizes_target(t, target));
    CHECK(seen.insert(t.grid()).second);
  });
}

TEST_CASE("the clique is an ideal in every K_n+1 table") {
  for (int n = 3; n <= 5; ++n) {
    std::uint64_t violations = 0;
    enumerate_labeled(TargetGraph::complete_plus_end(n),
                      [&](const MulTable& t) { violations += clique_is_ideal(t) ? 0 : 1; });
    CHECK(violations == 0);
  }
}

TEST_CASE("pinning x1^2") {
  const auto target = TargetGraph::complete_plus_end(3);
  std::uint64_t total = 0;
  for (ElementId sq = 0; sq <= 4; ++sq) {
    EnumerateOptions o;
    o.pendant_square = sq;
    const auto tables = collect(target, o);
    for (const auto& t : tables) CHECK(t(4, 4) == sq);
    total += tables.size();
  }
  CHECK(total == 36);

  // x1^2 = a1: four labeled tables in three classes.
  EnumerateOptions o;
  o.pendant_square = 1;
  CHECK(collect(target, o).size() == 4);
  CHECK(oracle_classes(target, o).class_count() == 3);
}

TEST_CASE("budget") {
  CHECK(oracle_within_budget(TargetGraph::complete(6)));
  CHECK_FALSE(oracle_within_budget(TargetGraph::complete(7)));
  CHECK(oracle_within_budget(TargetGraph::complete_plus_end(4)));
  CHECK_FALSE(oracle_within_budget(TargetGraph::complete_plus_end(5)));
}
