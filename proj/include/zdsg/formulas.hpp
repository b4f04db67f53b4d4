#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zdsg/classifier.hpp"
#include "zdsg/mul_table.hpp"

namespace zdsg {

// ---------------------------------------------------------------------------
// Counting formulas
// ---------------------------------------------------------------------------

/// Partitions of `total` into exactly `parts` positive parts, via
/// p(j, i) = p(j-1, i-1) + p(j-i, i).
std::uint64_t partitions_exact(int total, int parts);

/// Closed-form class count for K_n:
///   1 + sum_{k=1..n} sum_{t=0..n-k} partitions_exact(n - t, k).
/// The trailing 1 is the all-idempotent table, which is only a zero-divisor
/// semigroup for n >= 2, so the formula overcounts at n = 1.
std::uint64_t complete_class_count(int n);

// ---------------------------------------------------------------------------
// K_n: conditions and constructive generator
// ---------------------------------------------------------------------------

/// Table must have every off-diagonal product zero (UsageError otherwise).
/// True iff each a_i^2 is 0, a_i, or some a_j (j != i) with a_j^2 = 0.
bool complete_conditions_hold(const MulTable& t);

/// Output of a constructive generator. Every constructed table is
/// re-validated against the target; failures land in `rejected` instead of
/// the catalog.
struct Generated {
  ClassCatalog catalog;
  std::vector<MulTable> rejected;
};

/// One table per (k, t, mu) profile plus the all-idempotent table. At n = 1
/// the all-idempotent table is not a zero-divisor semigroup and is rejected.
Generated generate_complete(int n);

// ---------------------------------------------------------------------------
// K_n+1, split by the square of the pendant x_1
// ---------------------------------------------------------------------------
//
// Every check below needs the standard pendant layout (a_i = i, x_1 = n + 1),
// a_i a_j = 0 for i != j, a_1 x_1 = 0, and the x_1^2 value of its case.
// Anything else throws UsageError. Generators require n >= 3.

enum class PendantSquare {
  zero,      ///< x_1^2 = 0
  pendant,   ///< x_1^2 = x_1
  neighbor,  ///< x_1^2 = a_1
  other,     ///< x_1^2 = a_i for some i >= 2
};

std::string to_string(PendantSquare c);

/// x_1^2 = 0: a_1^2 = 0, a_i x_1 = a_1 and a_i^2 in {0, a_1} for i >= 2.
bool zero_square_conditions_hold(const MulTable& t);
/// n classes: c = 0..n-1 of the a_i (i >= 2) square to a_1, the rest to 0.
Generated generate_zero_square(int n);

/// x_1^2 = x_1:
///  (1) a_i x_1 in {a_2..a_n} for i >= 2, with at least one fixed a_i x_1 = a_i;
///  (2) a_i x_1 = a_j (j != i) forces a_j x_1 = a_j, a_j^2 = 0, a_i^2 in {0, a_1};
///  (3) a_r x_1 = a_r forces a_r^2 in {0, a_r} or a_j (j >= 2, j != r), and
///      a_r^2 = a_j forces a_j x_1 = a_j, a_j^2 = 0;
///  (4) a_1^2 in {0, a_1}, and a_1^2 = 0 if any a_i^2 = a_1.
bool idempotent_square_conditions_hold(const MulTable& t);

struct IdempotentFamily : Generated {
  /// Classes by r = #{i >= 2 : a_i x_1 = a_i}, r = 1..n-1.
  std::map<int, ClassCatalog> by_fixed;
};

/// Every labeled assignment satisfying idempotent_square_conditions_hold.
IdempotentFamily generate_idempotent_square(int n);

/// x_1^2 = a_1: a_i x_1 = a_1 for i >= 2 and every a_i^2 = 0.
bool neighbor_square_conditions_hold(const MulTable& t);
/// The single table those conditions admit.
Generated generate_neighbor_square(int n);

/// x_1^2 = a_2: a_1^2 = 0; for i >= 3, a_i x_1 = a_1 and a_i^2 in {0, a_1};
/// and exactly one of
///   (A) a_2 x_1 = a_1, a_2^2 = 0;
///   (B) a_2 x_1 = a_2, a_2^2 = a_2;
///   (C) a_2 x_1 = a_r (r >= 3), a_2^2 = a_1, a_r^2 = 0.
bool other_square_conditions_hold(const MulTable& t);
/// (A) and (B) each contribute n - 1 classes and (C) n - 2.
Generated generate_other_square(int n);

/// Union of the four case generators.
Generated generate_pendant(int n);

/// Idempotent-case classes with exactly r fixed pendant products. Uses the
/// tabulated values where they exist: r = 1 gives n; r = 2 gives 3, 9, 4(n-1)
/// for n = 3, 4, >= 5; r = n - 1 gives 2 * complete_class_count(n - 1). The
/// r = 2 table takes precedence where both apply (n = 3). Other strata come
/// from generate_idempotent_square.
std::uint64_t idempotent_stratum_count(int n, int r);

/// generate_idempotent_square(n).class_count() + 4n - 3.
std::uint64_t pendant_total_count(int n);

// ---------------------------------------------------------------------------
// Class statistics for K_n+1 catalogs (any labeling)
// ---------------------------------------------------------------------------

/// Uses the recognized pendant and its neighbor, so it works on canonical
/// representatives. Throws UsageError if the table's graph is not K_n+1.
PendantSquare pendant_square_case(const MulTable& t);

/// #{clique vertices a != a_1 : a x_1 = a}.
int fixed_pendant_products(const MulTable& t);

/// The clique {0, a_1..a_n} absorbs every product it takes part in.
bool clique_is_ideal(const MulTable& t);

/// Relabels a K_n+1 table into the standard layout: the pendant becomes
/// n + 1, its neighbor 1, and in the `other` case x_1^2 becomes 2. Remaining
/// clique vertices keep their relative order.
MulTable to_pendant_layout(const MulTable& t);

/// Dispatches to the condition set of the table's x_1^2 case after
/// normalizing the layout.
bool case_conditions_hold(const MulTable& t);

struct PendantCaseCount {
  int n = 0;
  std::map<PendantSquare, std::uint64_t> by_case;
  /// Idempotent case only, keyed by r.
  std::map<int, std::uint64_t> k2_by_r;

  std::uint64_t total() const;
  std::uint64_t k2() const;
};

/// Counts stated by the closed forms: n, sum of idempotent_stratum_count, 1,
/// 3n - 4.
PendantCaseCount stated_case_counts(int n);

/// Stratifies the classes of a K_n+1 catalog.
PendantCaseCount stratify(const ClassCatalog& catalog, int n);

}  // namespace zdsg
