#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdsg/mul_table.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

/// Agreement between "realizes the target" and a structural condition set
/// over every table of one slice of the forced-pattern space.
struct AuditSlice {
  std::string label;
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::uint64_t conditions = 0;
  /// Counts of each disagreement direction.
  std::uint64_t valid_only = 0;
  std::uint64_t conditions_only = 0;
  /// First few witnesses of each direction, in enumeration order.
  std::vector<MulTable> valid_only_witnesses;
  std::vector<MulTable> conditions_only_witnesses;

  bool agrees() const { return valid_only == 0 && conditions_only == 0; }
};

struct ConditionAudit {
  TargetGraph target;
  std::vector<AuditSlice> slices;
  /// Valid K_n+1 tables whose clique is not an ideal.
  std::uint64_t ideal_violations = 0;

  bool counterexample_free() const;
};

inline constexpr std::size_t kAuditWitnessLimit = 8;

/// Walks the whole forced-pattern candidate space of the target (the
/// enumerator's slots, no pruning). K_n is one slice checked against
/// complete_conditions_hold. K_n+1 is sliced by x_1^2 in {0, x_1, a_1, a_2};
/// x_1^2 = a_i for i >= 3 is the a_2 case relabeled and is skipped.
ConditionAudit audit_stated_conditions(const TargetGraph& target);

}  // namespace zdsg
