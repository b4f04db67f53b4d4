#include <array>
#include <functional>
#include <map>

#include "doctest.h"
#include "zdsg/enumerator.hpp"
#include "zdsg/errors.hpp"
#include "zdsg/formulas.hpp"

using namespace zdsg;

namespace {

// Partitions of `total` into exactly `parts` parts, listed as nonincreasing
// sequences.
std::uint64_t list_partitions(int total, int parts) {
  std::function<std::uint64_t(int, int, int)> go = [&](int left, int slots, int cap) {
    if (slots == 0) return std::uint64_t{left == 0 ? 1u : 0u};
    std::uint64_t n = 0;
    for (int first = std::min(left, cap); first >= 1; --first) n += go(left - first, slots - 1, first);
    return n;
  };
  return go(total, parts, total);
}

// Standard pendant layout for n = 3: a1 = 1, a2 = 2, a3 = 3, x1 = 4.
MulTable pendant3(ElementId x1_sq, ElementId a2x, ElementId a3x, ElementId s1, ElementId s2,
                  ElementId s3) {
  MulTable t(4);
  t.set(4, 4, x1_sq);
  t.set(2, 4, a2x);
  t.set(3, 4, a3x);
  t.set(1, 1, s1);
  t.set(2, 2, s2);
  t.set(3, 3, s3);
  return t;
}

PendantCaseCount oracle_strata(int n) {
  return stratify(oracle_classes(TargetGraph::complete_plus_end(n)), n);
}

}  // namespace

TEST_CASE("partition recurrence matches listing") {
  for (int total = 0; total <= 20; ++total) {
    for (int parts = 0; parts <= total + 1; ++parts) {
      CHECK(partitions_exact(total, parts) == list_partitions(total, parts));
    }
  }
  CHECK(partitions_exact(5, 2) == 2);
  CHECK(partitions_exact(7, 3) == 4);
  CHECK_THROWS_AS(partitions_exact(-1, 1), UsageError);
}

TEST_CASE("K_n class count formula") {
  CHECK(complete_class_count(1) == 2);
  CHECK(complete_class_count(2) == 4);
  CHECK(complete_class_count(3) == 7);
  CHECK(complete_class_count(4) == 12);
  CHECK(complete_class_count(5) == 19);
}

TEST_CASE("K_n generator meets the formula and the oracle") {
  const Generated one = generate_complete(1);
  CHECK(one.catalog.class_count() == 1);
  CHECK(one.rejected.size() == 1);

  for (int n = 2; n <= 8; ++n) {
    const Generated g = generate_complete(n);
    CHECK(g.rejected.empty());
    CHECK(g.catalog.class_count() == complete_class_count(n));
    if (n <= 5) {
      const ClassCatalog o = oracle_classes(TargetGraph::complete(n));
      CHECK(o.keys() == g.catalog.keys());
    }
  }
}

TEST_CASE("K_n conditions") {
  MulTable ok(3);
  ok.set(2, 2, 1);
  ok.set(3, 3, 3);
  CHECK(complete_conditions_hold(ok));

  MulTable chain(3);
  chain.set(3, 3, 2);
  chain.set(2, 2, 1);
  CHECK_FALSE(complete_conditions_hold(chain));

  MulTable off(3);
  off.set(1, 2, 1);
  CHECK_THROWS_AS(complete_conditions_hold(off), UsageError);
}

TEST_CASE("x1^2 = 0 conditions") {
  CHECK(zero_square_conditions_hold(pendant3(0, 1, 1, 0, 1, 0)));
  CHECK_FALSE(zero_square_conditions_hold(pendant3(0, 1, 1, 1, 0, 0)));
  CHECK_FALSE(zero_square_conditions_hold(pendant3(0, 2, 1, 0, 0, 0)));
  CHECK_THROWS_AS(zero_square_conditions_hold(pendant3(4, 1, 1, 0, 0, 0)), UsageError);
  CHECK(generate_zero_square(4).catalog.class_count() == 4);
}

TEST_CASE("x1^2 = x1 conditions") {
  CHECK(idempotent_square_conditions_hold(pendant3(4, 2, 3, 0, 0, 0)));
  CHECK(idempotent_square_conditions_hold(pendant3(4, 2, 2, 0, 0, 1)));
  // a3 x1 = a2 needs a2^2 = 0.
  CHECK_FALSE(idempotent_square_conditions_hold(pendant3(4, 2, 2, 0, 2, 0)));
  // No fixed product.
  CHECK_FALSE(idempotent_square_conditions_hold(pendant3(4, 3, 2, 0, 0, 0)));
  // a1^2 = a1 while a2^2 = a1.
  CHECK_FALSE(idempotent_square_conditions_hold(pendant3(4, 2, 3, 1, 1, 0)));
}

TEST_CASE("x1^2 = a1 conditions") {
  CHECK(neighbor_square_conditions_hold(pendant3(1, 1, 1, 0, 0, 0)));
  CHECK_FALSE(neighbor_square_conditions_hold(pendant3(1, 1, 1, 0, 1, 0)));
  const Generated g = generate_neighbor_square(3);
  CHECK(g.catalog.class_count() == 1);
  CHECK(g.rejected.empty());
}

TEST_CASE("x1^2 = a2 conditions") {
  CHECK(other_square_conditions_hold(pendant3(2, 1, 1, 0, 0, 0)));
  CHECK(other_square_conditions_hold(pendant3(2, 2, 1, 0, 2, 1)));
  CHECK(other_square_conditions_hold(pendant3(2, 3, 1, 0, 1, 0)));
  CHECK_FALSE(other_square_conditions_hold(pendant3(2, 2, 1, 0, 0, 0)));
  for (int n = 3; n <= 6; ++n) {
    CHECK(generate_other_square(n).catalog.class_count() == 3 * static_cast<std::uint64_t>(n) - 4);
  }
}

TEST_CASE("case classification works in any labeling") {
  const MulTable t = pendant3(2, 3, 1, 0, 1, 0);
  // Move the pendant to 1 and the clique to 2..4.
  const MulTable r = relabel(t, std::vector<ElementId>{0, 3, 4, 2, 1});
  CHECK(pendant_square_case(r) == PendantSquare::other);
  CHECK(to_pendant_layout(r) == t);
  CHECK(case_conditions_hold(r));
  CHECK(clique_is_ideal(r));
  CHECK(fixed_pendant_products(pendant3(4, 2, 2, 0, 0, 1)) == 1);
}

TEST_CASE("generators never emit an invalid table or a class outside the oracle") {
  for (int n = 3; n <= 5; ++n) {
    const Generated g = generate_pendant(n);
    CHECK(g.rejected.empty());
    const ClassCatalog o = oracle_classes(TargetGraph::complete_plus_end(n));
    for (const auto& key : g.catalog.keys()) CHECK(o.contains(key));
    for (const auto& [key, entry] : g.catalog.entries()) CHECK(case_conditions_hold(entry.representative));
  }
}

TEST_CASE("oracle case counts") {
  // Frozen from the brute-force oracle.
  const std::map<int, std::array<std::uint64_t, 4>> expected{
      {3, {3, 11, 3, 5}}, {4, {4, 27, 4, 8}}, {5, {5, 66, 5, 11}}};
  for (const auto& [n, want] : expected) {
    const auto s = oracle_strata(n);
    CHECK(s.by_case.at(PendantSquare::zero) == want[0]);
    CHECK(s.by_case.at(PendantSquare::pendant) == want[1]);
    CHECK(s.by_case.at(PendantSquare::neighbor) == want[2]);
    CHECK(s.by_case.at(PendantSquare::other) == want[3]);
  }
  CHECK(oracle_strata(3).total() == 22);
  CHECK(oracle_strata(4).total() == 43);
  CHECK(oracle_strata(5).total() == 87);
}

TEST_CASE("idempotent strata") {
  CHECK(idempotent_stratum_count(3, 1) == 3);
  CHECK(idempotent_stratum_count(3, 2) == 3);
  CHECK(idempotent_stratum_count(4, 2) == 9);
  CHECK(idempotent_stratum_count(5, 2) == 16);
  CHECK(idempotent_stratum_count(4, 3) == 2 * complete_class_count(3));
  CHECK(idempotent_stratum_count(5, 4) == 2 * complete_class_count(4));

  const std::map<int, std::vector<std::uint64_t>> oracle{
      {3, {3, 8}}, {4, {4, 9, 14}}, {5, {5, 16, 21, 24}}};
  for (const auto& [n, by_r] : oracle) {
    const auto s = oracle_strata(n);
    const IdempotentFamily fam = generate_idempotent_square(n);
    for (int r = 1; r <= n - 1; ++r) {
      CHECK(s.k2_by_r.at(r) == by_r[static_cast<std::size_t>(r - 1)]);
      CHECK(fam.by_fixed.at(r).class_count() == by_r[static_cast<std::size_t>(r - 1)]);
    }
  }
}

TEST_CASE("stated counts") {
  const auto s3 = stated_case_counts(3);
  CHECK(s3.by_case.at(PendantSquare::neighbor) == 1);
  CHECK(s3.k2() == 6);
  CHECK(s3.total() == 15);
  CHECK(stated_case_counts(4).total() == 40);
  CHECK(pendant_total_count(4) == 40);
  CHECK(pendant_total_count(5) == 83);
}
