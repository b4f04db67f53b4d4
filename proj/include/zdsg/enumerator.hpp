#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zdsg/classifier.hpp"
#include "zdsg/mul_table.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

/// Element layout used by every K_n / K_n+1 table built in this library:
/// a_i is i for 1 <= i <= n, and the pendant x_1 (K_n+1 only) is n + 1.
inline constexpr ElementId pendant_element(int n) noexcept { return n + 1; }

struct Slot {
  ElementId row;
  ElementId col;

  bool operator==(const Slot&) const = default;
};

/// Free cells of a partially determined table and the values each may take.
/// Every cell of `seed` that is not a slot is forced.
struct SearchSpec {
  TargetGraph target;
  MulTable seed{0};
  std::vector<Slot> slots;
  std::vector<std::vector<ElementId>> domains;

  /// Product of domain sizes.
  std::uint64_t leaf_count() const;
};

/// Forced zeros follow the target's edges, and each remaining cell becomes a
/// slot: x_1^2 first, then a_i x_1 for i = 2..n, then the diagonal a_1..a_n.
/// a_i x_1 may not be 0 (that would add an edge); squares range over all
/// elements since loops are not edges.
SearchSpec seed_partial_table(const TargetGraph& target);

struct EnumerateOptions {
  /// Check every newly determined triple after each assignment.
  bool prune = true;
  /// Worker threads; root branches (values of the first slot) are split
  /// among them and results are replayed in root order.
  int jobs = 1;
  /// K_n+1 only: pin x_1^2 to this element.
  std::optional<ElementId> pendant_square;
};

struct EnumerationStats {
  std::uint64_t accepted = 0;
  /// Slot assignments made (interior nodes and leaves).
  std::uint64_t assignments = 0;
};

using TableVisitor = std::function<void(const MulTable&)>;

/// Visits every labeled zero-divisor semigroup realizing the target exactly,
/// in slot order regardless of `jobs`.
EnumerationStats enumerate_labeled(const TargetGraph& target, const TableVisitor& visitor,
                                   const EnumerateOptions& options = {});

/// Every complete assignment of the seed's slots, filtered by nothing.
/// Used for exhaustive audits of the forced-pattern space.
void for_each_candidate(const SearchSpec& spec, const TableVisitor& visitor);

/// Labeled enumeration followed by classification.
ClassCatalog oracle_classes(const TargetGraph& target, const EnumerateOptions& options = {});

/// True if the oracle for this target fits the default run budget
/// (K_n up to n = 6, K_n+1 up to n = 4).
bool oracle_within_budget(const TargetGraph& target);

/// Target membership test applied to every completed table.
bool realizes_target(const MulTable& t, const TargetGraph& target);

}  // namespace zdsg
