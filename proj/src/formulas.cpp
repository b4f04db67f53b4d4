#include "zdsg/formulas.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "zdsg/enumerator.hpp"
#include "zdsg/errors.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

std::uint64_t partitions_exact(int total, int parts) {
  if (total < 0 || parts < 0) throw UsageError("partitions_exact: negative argument");
  // p[j][i], filled bottom-up.
  std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(total + 1),
                                            std::vector<std::uint64_t>(parts + 1, 0));
  p[0][0] = 1;
  for (int j = 1; j <= total; ++j) {
    for (int i = 1; i <= std::min(j, parts); ++i) p[j][i] = p[j - 1][i - 1] + p[j - i][i];
  }
  return p[total][parts];
}

std::uint64_t complete_class_count(int n) {
  if (n < 1) throw UsageError("complete_class_count needs n >= 1");
  std::uint64_t sum = 1;
  for (int k = 1; k <= n; ++k) {
    for (int t = 0; t <= n - k; ++t) sum += partitions_exact(n - t, k);
  }
  return sum;
}

namespace {

void require_complete_shape(const MulTable& t) {
  for (ElementId i = 1; i <= t.order(); ++i) {
    for (ElementId j = i + 1; j <= t.order(); ++j) {
      if (t(i, j) != kZero) throw UsageError("expected a_i a_j = 0 for all i != j");
    }
  }
}

// Nondecreasing sequences of `parts` positive integers summing to `total`.
void for_each_partition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    const int left = parts - static_cast<int>(cur.size());
    if (left == 0) {
      if (remaining == 0) f(cur);
      return;
    }
    for (int d = min_part; d * left <= remaining; ++d) {
      cur.push_back(d);
      rec(remaining - d, d);
      cur.pop_back();
    }
  };
  rec(total, 1);
}

void keep_if_valid(Generated& out, const MulTable& t, const TargetGraph& target) {
  if (realizes_target(t, target)) {
    out.catalog.insert(t);
  } else {
    out.rejected.push_back(t);
  }
}

void require_pendant_generator(int n) {
  if (n < 3) throw UsageError("K_n+1 generators need n >= 3");
  if (n + 1 > kMaxOrder) throw UsageError("n too large");
}

// Standard pendant layout with the forced zeros and x_1^2 set.
MulTable pendant_base(int n, ElementId x_square) {
  MulTable t(n + 1);
  const ElementId x = pendant_element(n);
  t.set(x, x, x_square);
  return t;
}

void require_pendant_shape(const MulTable& t, PendantSquare expected) {
  const int n = t.order() - 1;
  if (n < 2) throw UsageError("table too small for the pendant layout");
  const ElementId x = pendant_element(n);
  for (ElementId i = 1; i <= n; ++i) {
    for (ElementId j = i + 1; j <= n; ++j) {
      if (t(i, j) != kZero) throw UsageError("expected a_i a_j = 0 for all i != j");
    }
  }
  if (t(1, x) != kZero) throw UsageError("expected a_1 x_1 = 0");
  const ElementId sq = t(x, x);
  bool ok = false;
  switch (expected) {
    case PendantSquare::zero: ok = sq == kZero; break;
    case PendantSquare::pendant: ok = sq == x; break;
    case PendantSquare::neighbor: ok = sq == 1; break;
    case PendantSquare::other: ok = sq == 2; break;
  }
  if (!ok) throw UsageError("x_1^2 does not match the " + to_string(expected) + " case");
}

}  // namespace

bool complete_conditions_hold(const MulTable& t) {
  require_complete_shape(t);
  for (ElementId i = 1; i <= t.order(); ++i) {
    const ElementId sq = t(i, i);
    if (sq == kZero || sq == i) continue;
    if (t(sq, sq) != kZero) return false;
  }
  return true;
}

Generated generate_complete(int n) {
  if (n < 1 || n > kMaxOrder) throw UsageError("generate_complete: n out of range");
  const auto target = TargetGraph::complete(n);
  Generated out;
  for (int k = 1; k <= n; ++k) {
    for (int t = 0; t <= n - k; ++t) {
      for_each_partition(n - t, k, [&](const std::vector<int>& parts) {
        // Nilpotents 1..k, idempotents k+1..k+t, then pointers.
        MulTable table(n);
        for (ElementId i = k + 1; i <= k + t; ++i) table.set(i, i, i);
        ElementId next = k + t + 1;
        for (int a = 0; a < k; ++a) {
          for (int c = 1; c < parts[a]; ++c, ++next) table.set(next, next, a + 1);
        }
        keep_if_valid(out, table, target);
      });
    }
  }
  MulTable idempotents(n);
  for (ElementId i = 1; i <= n; ++i) idempotents.set(i, i, i);
  keep_if_valid(out, idempotents, target);
  return out;
}

std::string to_string(PendantSquare c) {
  switch (c) {
    case PendantSquare::zero: return "0";
    case PendantSquare::pendant: return "x1";
    case PendantSquare::neighbor: return "a1";
    case PendantSquare::other: return "a2";
  }
  return "?";
}

bool zero_square_conditions_hold(const MulTable& t) {
  require_pendant_shape(t, PendantSquare::zero);
  const int n = t.order() - 1;
  const ElementId x = pendant_element(n);
  if (t(1, 1) != kZero) return false;
  for (ElementId i = 2; i <= n; ++i) {
    if (t(i, x) != 1) return false;
    if (t(i, i) != kZero && t(i, i) != 1) return false;
  }
  return true;
}

Generated generate_zero_square(int n) {
  require_pendant_generator(n);
  const auto target = TargetGraph::complete_plus_end(n);
  const ElementId x = pendant_element(n);
  Generated out;
  for (int c = 0; c <= n - 1; ++c) {
    MulTable t = pendant_base(n, kZero);
    for (ElementId i = 2; i <= n; ++i) t.set(i, x, 1);
    for (ElementId i = 2; i <= c + 1; ++i) t.set(i, i, 1);
    keep_if_valid(out, t, target);
  }
  return out;
}

bool idempotent_square_conditions_hold(const MulTable& t) {
  require_pendant_shape(t, PendantSquare::pendant);
  const int n = t.order() - 1;
  const ElementId x = pendant_element(n);
  auto fixed = [&](ElementId i) { return t(i, x) == i; };

  bool any_fixed = false;
  for (ElementId i = 2; i <= n; ++i) {
    const ElementId ix = t(i, x);
    if (ix < 2 || ix > n) return false;
    any_fixed = any_fixed || ix == i;
  }
  if (!any_fixed) return false;

  for (ElementId i = 2; i <= n; ++i) {
    const ElementId j = t(i, x);
    const ElementId sq = t(i, i);
    if (j != i) {
      if (!fixed(j) || t(j, j) != kZero) return false;
      if (sq != kZero && sq != 1) return false;
    } else if (sq != kZero && sq != i) {
      if (sq < 2 || sq > n) return false;
      if (!fixed(sq) || t(sq, sq) != kZero) return false;
    }
  }

  const ElementId a1sq = t(1, 1);
  if (a1sq != kZero && a1sq != 1) return false;
  if (a1sq == 1) {
    for (ElementId i = 2; i <= n; ++i) {
      if (t(i, i) == 1) return false;
    }
  }
  return true;
}

IdempotentFamily generate_idempotent_square(int n) {
  require_pendant_generator(n);
  const auto target = TargetGraph::complete_plus_end(n);
  const ElementId x = pendant_element(n);
  IdempotentFamily out;

  MulTable t = pendant_base(n, x);
  std::vector<ElementId> image(static_cast<std::size_t>(n + 1), 0);

  // Squares are drawn from a superset of what the conditions allow and then
  // filtered by idempotent_square_conditions_hold.
  auto square_candidates = [&](ElementId i) {
    std::vector<ElementId> c{kZero, 1};
    if (image[i] == i) {
      c.pop_back();
      for (ElementId j = 2; j <= n; ++j) c.push_back(j);
    }
    return c;
  };

  std::function<void(ElementId)> squares = [&](ElementId i) {
    if (i > n) {
      if (!idempotent_square_conditions_hold(t)) return;
      if (realizes_target(t, target)) {
        const auto key = canonical_form(t);
        out.catalog.insert(key);
        out.by_fixed[fixed_pendant_products(t)].insert(key);
      } else {
        out.rejected.push_back(t);
      }
      return;
    }
    const auto cands = i == 1 ? std::vector<ElementId>{kZero, 1} : square_candidates(i);
    for (ElementId v : cands) {
      t.set(i, i, v);
      squares(i + 1);
    }
    t.set(i, i, kZero);
  };

  std::function<void(ElementId)> products = [&](ElementId i) {
    if (i > n) {
      // Conditions (1) and (2) on the pendant products alone.
      bool any_fixed = false;
      for (ElementId k = 2; k <= n; ++k) {
        if (image[k] == k) {
          any_fixed = true;
        } else if (image[image[k]] != image[k]) {
          return;
        }
      }
      if (any_fixed) squares(1);
      return;
    }
    for (ElementId j = 2; j <= n; ++j) {
      image[i] = j;
      t.set(i, x, j);
      products(i + 1);
    }
  };
  products(2);
  return out;
}

bool neighbor_square_conditions_hold(const MulTable& t) {
  require_pendant_shape(t, PendantSquare::neighbor);
  const int n = t.order() - 1;
  const ElementId x = pendant_element(n);
  for (ElementId i = 1; i <= n; ++i) {
    if (t(i, i) != kZero) return false;
    if (i >= 2 && t(i, x) != 1) return false;
  }
  return true;
}

Generated generate_neighbor_square(int n) {
  require_pendant_generator(n);
  const ElementId x = pendant_element(n);
  MulTable t = pendant_base(n, 1);
  for (ElementId i = 2; i <= n; ++i) t.set(i, x, 1);
  Generated out;
  keep_if_valid(out, t, TargetGraph::complete_plus_end(n));
  return out;
}

bool other_square_conditions_hold(const MulTable& t) {
  require_pendant_shape(t, PendantSquare::other);
  const int n = t.order() - 1;
  const ElementId x = pendant_element(n);
  if (t(1, 1) != kZero) return false;
  for (ElementId i = 3; i <= n; ++i) {
    if (t(i, x) != 1) return false;
    if (t(i, i) != kZero && t(i, i) != 1) return false;
  }
  const ElementId px = t(2, x);
  const ElementId sq = t(2, 2);
  const bool case_a = px == 1 && sq == kZero;
  const bool case_b = px == 2 && sq == 2;
  const bool case_c = px >= 3 && px <= n && sq == 1 && t(px, px) == kZero;
  return static_cast<int>(case_a) + static_cast<int>(case_b) + static_cast<int>(case_c) == 1;
}

Generated generate_other_square(int n) {
  require_pendant_generator(n);
  const auto target = TargetGraph::complete_plus_end(n);
  const ElementId x = pendant_element(n);
  Generated out;
  // c of the a_i with i >= 3 (other than a_r in case C) square to a_1.
  auto base = [&](int c, ElementId skip) {
    MulTable t = pendant_base(n, 2);
    for (ElementId i = 3; i <= n; ++i) t.set(i, x, 1);
    for (ElementId i = 3; i <= n && c > 0; ++i) {
      if (i == skip) continue;
      t.set(i, i, 1);
      --c;
    }
    return t;
  };
  for (int c = 0; c <= n - 2; ++c) {
    MulTable a = base(c, 0);
    a.set(2, x, 1);
    keep_if_valid(out, a, target);

    MulTable b = base(c, 0);
    b.set(2, x, 2);
    b.set(2, 2, 2);
    keep_if_valid(out, b, target);
  }
  for (int c = 0; c <= n - 3; ++c) {
    MulTable t = base(c, 3);
    t.set(2, x, 3);
    t.set(2, 2, 1);
    keep_if_valid(out, t, target);
  }
  return out;
}

Generated generate_pendant(int n) {
  Generated out;
  auto absorb = [&](const Generated& g) {
    out.catalog.merge(g.catalog);
    out.rejected.insert(out.rejected.end(), g.rejected.begin(), g.rejected.end());
  };
  absorb(generate_zero_square(n));
  absorb(generate_idempotent_square(n));
  absorb(generate_neighbor_square(n));
  absorb(generate_other_square(n));
  return out;
}

std::uint64_t idempotent_stratum_count(int n, int r) {
  if (n < 3) throw UsageError("idempotent_stratum_count needs n >= 3");
  if (r < 1 || r > n - 1) throw UsageError("r must lie in 1..n-1");
  if (r == 1) return static_cast<std::uint64_t>(n);
  if (r == 2) {
    if (n == 3) return 3;
    if (n == 4) return 9;
    return 4 * static_cast<std::uint64_t>(n - 1);
  }
  if (r == n - 1) return 2 * complete_class_count(n - 1);
  const auto family = generate_idempotent_square(n);
  const auto it = family.by_fixed.find(r);
  return it == family.by_fixed.end() ? 0 : it->second.class_count();
}

std::uint64_t pendant_total_count(int n) {
  return generate_idempotent_square(n).catalog.class_count() + 4 * static_cast<std::uint64_t>(n) - 3;
}

PendantSquare pendant_square_case(const MulTable& t) {
  const auto rec = recognize_target(build_zd_graph(t));
  if (!rec || rec->target.family != GraphFamily::complete_plus_end) {
    throw UsageError("table graph is not K_n+1");
  }
  const ElementId sq = t(*rec->pendant, *rec->pendant);
  if (sq == kZero) return PendantSquare::zero;
  if (sq == *rec->pendant) return PendantSquare::pendant;
  if (sq == *rec->neighbor) return PendantSquare::neighbor;
  return PendantSquare::other;
}

int fixed_pendant_products(const MulTable& t) {
  const auto rec = recognize_target(build_zd_graph(t));
  if (!rec || rec->target.family != GraphFamily::complete_plus_end) {
    throw UsageError("table graph is not K_n+1");
  }
  const ElementId x = *rec->pendant;
  int r = 0;
  for (ElementId a = 1; a <= t.order(); ++a) {
    if (a != x && a != *rec->neighbor && t(a, x) == a) ++r;
  }
  return r;
}

bool clique_is_ideal(const MulTable& t) {
  const auto rec = recognize_target(build_zd_graph(t));
  if (!rec || rec->target.family != GraphFamily::complete_plus_end) {
    throw UsageError("table graph is not K_n+1");
  }
  const ElementId x = *rec->pendant;
  for (ElementId a = 1; a <= t.order(); ++a) {
    if (a == x) continue;
    for (ElementId s = 1; s <= t.order(); ++s) {
      if (t(a, s) == x) return false;
    }
  }
  return true;
}

MulTable to_pendant_layout(const MulTable& t) {
  const auto rec = recognize_target(build_zd_graph(t));
  if (!rec || rec->target.family != GraphFamily::complete_plus_end) {
    throw UsageError("table graph is not K_n+1");
  }
  const int n = rec->target.n;
  const ElementId x = *rec->pendant;
  const ElementId a1 = *rec->neighbor;
  const ElementId sq = t(x, x);
  const bool pin_other = sq != kZero && sq != x && sq != a1;

  std::vector<ElementId> perm(static_cast<std::size_t>(t.size()), kZero);
  perm[x] = pendant_element(n);
  perm[a1] = 1;
  ElementId next = 2;
  if (pin_other) perm[sq] = next++;
  for (ElementId v = 1; v <= t.order(); ++v) {
    if (v != x && v != a1 && !(pin_other && v == sq)) perm[v] = next++;
  }
  return relabel(t, perm);
}

bool case_conditions_hold(const MulTable& t) {
  const MulTable s = to_pendant_layout(t);
  switch (pendant_square_case(s)) {
    case PendantSquare::zero: return zero_square_conditions_hold(s);
    case PendantSquare::pendant: return idempotent_square_conditions_hold(s);
    case PendantSquare::neighbor: return neighbor_square_conditions_hold(s);
    case PendantSquare::other: return other_square_conditions_hold(s);
  }
  return false;
}

std::uint64_t PendantCaseCount::total() const {
  std::uint64_t s = 0;
  for (const auto& [c, v] : by_case) s += v;
  return s;
}

std::uint64_t PendantCaseCount::k2() const {
  const auto it = by_case.find(PendantSquare::pendant);
  return it == by_case.end() ? 0 : it->second;
}

PendantCaseCount stated_case_counts(int n) {
  if (n < 3) throw UsageError("stated_case_counts needs n >= 3");
  PendantCaseCount out;
  out.n = n;
  for (int r = 1; r <= n - 1; ++r) out.k2_by_r[r] = idempotent_stratum_count(n, r);
  const auto k2 = std::accumulate(out.k2_by_r.begin(), out.k2_by_r.end(), std::uint64_t{0},
                                  [](std::uint64_t s, const auto& kv) { return s + kv.second; });
  out.by_case[PendantSquare::zero] = static_cast<std::uint64_t>(n);
  out.by_case[PendantSquare::pendant] = k2;
  out.by_case[PendantSquare::neighbor] = 1;
  out.by_case[PendantSquare::other] = 3 * static_cast<std::uint64_t>(n) - 4;
  return out;
}

PendantCaseCount stratify(const ClassCatalog& catalog, int n) {
  PendantCaseCount out;
  out.n = n;
  for (PendantSquare c : {PendantSquare::zero, PendantSquare::pendant, PendantSquare::neighbor,
                          PendantSquare::other}) {
    out.by_case[c] = 0;
  }
  for (int r = 1; r <= n - 1; ++r) out.k2_by_r[r] = 0;
  for (const auto& [key, entry] : catalog.entries()) {
    const auto c = pendant_square_case(entry.representative);
    ++out.by_case[c];
    if (c == PendantSquare::pendant) ++out.k2_by_r[fixed_pendant_products(entry.representative)];
  }
  return out;
}

}  // namespace zdsg
