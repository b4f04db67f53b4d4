#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace zdsg {

/// Index of a semigroup element. 0 is the zero element; 1..m are the nonzero
/// elements. In the pendant layout a_1..a_n occupy 1..n and x_1 is n + 1.
using ElementId = int;

inline constexpr ElementId kZero = 0;

/// Largest supported count of nonzero elements. Canonicalization is m!, so
/// anything beyond this is out of reach anyway.
inline constexpr int kMaxOrder = 10;

/// Dense commutative multiplication table with an absorbing zero.
///
/// Storage is the full (m+1) x (m+1) grid. Every write goes through set(),
/// which mirrors the entry, so the table is symmetric at all times and row 0
/// and column 0 stay zero.
class MulTable {
 public:
  /// Null semigroup on m nonzero elements (every product is zero).
  explicit MulTable(int order);

  /// Builds a table from a full grid, rejecting asymmetric input, a nonzero
  /// entry in row/column 0, and out-of-range values.
  static MulTable from_grid(const std::vector<std::vector<ElementId>>& grid);

  /// Number of nonzero elements (m).
  int order() const noexcept { return order_; }
  /// Number of elements including zero (m + 1).
  int size() const noexcept { return order_ + 1; }

  /// Checked product; throws UsageError on an out-of-range index.
  ElementId mul(ElementId u, ElementId v) const;

  /// Unchecked product for hot loops.
  ElementId operator()(ElementId u, ElementId v) const noexcept {
    return cells_[static_cast<std::size_t>(u * size() + v)];
  }

  /// Sets uv = vu = w. u and v must be nonzero.
  void set(ElementId u, ElementId v, ElementId w);

  std::vector<std::vector<ElementId>> grid() const;

  bool operator==(const MulTable&) const = default;

 private:
  int order_;
  std::vector<ElementId> cells_;
};

/// A failing triple: (uv)w = lhs but u(vw) = rhs.
struct AssocWitness {
  ElementId u;
  ElementId v;
  ElementId w;
  ElementId lhs;
  ElementId rhs;

  bool operator==(const AssocWitness&) const = default;
};

/// First associativity failure over nonzero triples in lexicographic order,
/// or nullopt if the table is associative.
std::optional<AssocWitness> check_associativity(const MulTable& t);

/// Nonzero u with some nonzero v (v == u allowed) such that uv = 0, ascending.
std::vector<ElementId> zero_divisors(const MulTable& t);

/// Associative and every nonzero element is a zero divisor.
bool is_zd_semigroup(const MulTable& t);

/// Applies the relabeling u -> perm[u]. perm must be a permutation of 0..m
/// with perm[0] == 0.
MulTable relabel(const MulTable& t, std::span<const ElementId> perm);

/// {"m": m, "entries": [[...], ...]} with the full grid.
nlohmann::json to_json(const MulTable& t);
MulTable table_from_json(const nlohmann::json& j);

/// Compact single-line rendering of the nonzero block, e.g. "[[0,1],[1,2]]".
std::string to_compact_string(const MulTable& t);

}  // namespace zdsg
