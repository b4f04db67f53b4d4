#include "doctest.h"
#include "zdsg/errors.hpp"
#include "zdsg/mul_table.hpp"

using namespace zdsg;

namespace {

// K_2 with a1^2 = a2, a2^2 = a2, a1 a2 = 0.
MulTable broken_k2() {
  MulTable t(2);
  t.set(1, 1, 2);
  t.set(2, 2, 2);
  return t;
}

}  // namespace

TEST_CASE("null table") {
  MulTable t(3);
  CHECK(t.order() == 3);
  CHECK(t.size() == 4);
  for (int u = 0; u <= 3; ++u) {
    for (int v = 0; v <= 3; ++v) CHECK(t(u, v) == 0);
  }
  CHECK(is_zd_semigroup(t));
  CHECK(zero_divisors(t) == std::vector<ElementId>{1, 2, 3});
}

TEST_CASE("set mirrors and mul checks range") {
  MulTable t(2);
  t.set(1, 2, 1);
  CHECK(t.mul(2, 1) == 1);
  CHECK(t.mul(0, 2) == 0);
  CHECK_THROWS_AS(t.mul(3, 1), UsageError);
  CHECK_THROWS_AS(t.mul(-1, 1), UsageError);
  CHECK_THROWS_AS(t.set(0, 1, 1), UsageError);
  CHECK_THROWS_AS(t.set(1, 1, 3), UsageError);
}

TEST_CASE("associativity witness is the first failing triple") {
  const MulTable t = broken_k2();
  const auto w = check_associativity(t);
  REQUIRE(w.has_value());
  CHECK(*w == AssocWitness{1, 1, 2, 2, 0});
  CHECK_FALSE(is_zd_semigroup(t));
}

TEST_CASE("zero divisors need a nonzero annihilating partner") {
  // Z_4 without the units: {0, 2} with 2 * 2 = 0.
  MulTable z4(1);
  CHECK(zero_divisors(z4) == std::vector<ElementId>{1});

  // {0, e} with e idempotent has no zero divisors.
  MulTable idem(1);
  idem.set(1, 1, 1);
  CHECK(zero_divisors(idem).empty());
  CHECK_FALSE(is_zd_semigroup(idem));
}

TEST_CASE("associative tables from small rings") {
  // Nonzero zero divisors of Z_8: 2, 4, 6 labeled 1, 2, 3.
  const int val[] = {0, 2, 4, 6};
  MulTable t(3);
  for (int u = 1; u <= 3; ++u) {
    for (int v = u; v <= 3; ++v) {
      const int p = val[u] * val[v] % 8;
      int id = 0;
      while (val[id] != p) ++id;
      t.set(u, v, id);
    }
  }
  CHECK_FALSE(check_associativity(t).has_value());
  CHECK(is_zd_semigroup(t));
}

TEST_CASE("from_grid validation") {
  CHECK_NOTHROW(MulTable::from_grid({{0, 0}, {0, 0}}));
  CHECK_THROWS_AS(MulTable::from_grid({{0, 0}, {0, 0, 0}}), UsageError);
  CHECK_THROWS_AS(MulTable::from_grid({{0, 1}, {1, 0}}), UsageError);
  CHECK_THROWS_AS(MulTable::from_grid({{0, 0, 0}, {0, 0, 1}, {0, 2, 0}}), UsageError);
  CHECK_THROWS_AS(MulTable::from_grid({{0, 0}, {0, 2}}), UsageError);
}

TEST_CASE("relabel") {
  const MulTable t = broken_k2();
  const std::vector<ElementId> swap{0, 2, 1};
  const MulTable r = relabel(t, swap);
  CHECK(r(2, 2) == 1);
  CHECK(r(1, 1) == 1);
  CHECK(relabel(r, swap) == t);
  CHECK_THROWS_AS(relabel(t, std::vector<ElementId>{1, 0, 2}), UsageError);
  CHECK_THROWS_AS(relabel(t, std::vector<ElementId>{0, 1, 1}), UsageError);
}

TEST_CASE("json round trip and rejection") {
  const MulTable t = broken_k2();
  const auto j = to_json(t);
  CHECK(j.at("m") == 2);
  CHECK(table_from_json(j) == t);
  CHECK(to_compact_string(t) == "[[2,0],[0,2]]");

  auto bad = j;
  bad["m"] = 3;
  CHECK_THROWS_AS(table_from_json(bad), UsageError);
  CHECK_THROWS_AS(table_from_json(nlohmann::json::array()), UsageError);
}
