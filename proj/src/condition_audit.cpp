#include "zdsg/condition_audit.hpp"

#include <functional>

#include "zdsg/enumerator.hpp"
#include "zdsg/formulas.hpp"

namespace zdsg {

bool ConditionAudit::counterexample_free() const {
  for (const auto& s : slices) {
    if (!s.agrees()) return false;
  }
  return ideal_violations == 0;
}

namespace {

void run_slice(const SearchSpec& spec, AuditSlice& slice, const TargetGraph& target,
               const std::function<bool(const MulTable&)>& conditions,
               std::uint64_t& ideal_violations) {
  for_each_candidate(spec, [&](const MulTable& t) {
    ++slice.candidates;
    const bool valid = realizes_target(t, target);
    const bool cond = conditions(t);
    slice.valid += valid ? 1 : 0;
    slice.conditions += cond ? 1 : 0;
    if (valid && target.family == GraphFamily::complete_plus_end && !clique_is_ideal(t)) {
      ++ideal_violations;
    }
    if (valid && !cond) {
      ++slice.valid_only;
      if (slice.valid_only_witnesses.size() < kAuditWitnessLimit) {
        slice.valid_only_witnesses.push_back(t);
      }
    } else if (cond && !valid) {
      ++slice.conditions_only;
      if (slice.conditions_only_witnesses.size() < kAuditWitnessLimit) {
        slice.conditions_only_witnesses.push_back(t);
      }
    }
  });
}

}  // namespace

ConditionAudit audit_stated_conditions(const TargetGraph& target) {
  ConditionAudit audit;
  audit.target = target;
  const SearchSpec base = seed_partial_table(target);

  if (target.family == GraphFamily::complete) {
    AuditSlice slice;
    slice.label = "complete";
    run_slice(base, slice, target, complete_conditions_hold, audit.ideal_violations);
    audit.slices.push_back(std::move(slice));
    return audit;
  }

  const int n = target.n;
  const ElementId x = pendant_element(n);
  struct Case {
    PendantSquare which;
    ElementId square;
    std::function<bool(const MulTable&)> conditions;
  };
  const std::vector<Case> cases{
      {PendantSquare::zero, kZero, zero_square_conditions_hold},
      {PendantSquare::pendant, x, idempotent_square_conditions_hold},
      {PendantSquare::neighbor, 1, neighbor_square_conditions_hold},
      {PendantSquare::other, 2, other_square_conditions_hold},
  };
  for (const auto& c : cases) {
    SearchSpec spec = base;
    spec.domains[0] = {c.square};
    AuditSlice slice;
    slice.label = "x1^2=" + to_string(c.which);
    run_slice(spec, slice, target, c.conditions, audit.ideal_violations);
    audit.slices.push_back(std::move(slice));
  }
  return audit;
}

}  // namespace zdsg
