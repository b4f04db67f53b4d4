#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdsg/mul_table.hpp"

namespace zdsg {

/// Upper triangle (diagonal included, row-major over 1..m) of the
/// lexicographically smallest relabeling of a table. Two tables share a key
/// iff they are isomorphic by a permutation fixing 0.
struct CanonicalKey {
  std::vector<ElementId> cells;

  /// Number of nonzero elements of the tables this key describes.
  int order() const;
  /// Two lowercase hex digits per cell.
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;
};

/// Minimum over all m! relabelings of the flattened upper triangle.
CanonicalKey canonical_form(const MulTable& t);

/// The table whose flattened upper triangle is the key.
MulTable table_from_key(const CanonicalKey& key);

struct CatalogEntry {
  MulTable representative;
  std::uint64_t multiplicity = 0;
};

/// Isomorphism classes keyed by canonical form. Representatives are stored in
/// canonical labeling; multiplicity counts labeled tables inserted per class.
class ClassCatalog {
 public:
  /// True if the table opened a new class.
  bool insert(const MulTable& t);
  /// Inserts with a precomputed key; the key must be canonical_form(t).
  bool insert(const CanonicalKey& key, std::uint64_t multiplicity = 1);
  /// Key-wise union, adding multiplicities.
  void merge(const ClassCatalog& other);

  std::size_t class_count() const noexcept { return entries_.size(); }
  std::uint64_t labeled_count() const;
  bool contains(const CanonicalKey& key) const { return entries_.contains(key); }
  const std::map<CanonicalKey, CatalogEntry>& entries() const noexcept { return entries_; }
  std::vector<CanonicalKey> keys() const;

  bool operator==(const ClassCatalog& other) const;

 private:
  std::map<CanonicalKey, CatalogEntry> entries_;
};

/// JSON array of {key, representative, multiplicity} sorted by key.
nlohmann::json to_json(const ClassCatalog& c);
ClassCatalog catalog_from_json(const nlohmann::json& j);

/// Decomposition of a K_n table by what each element squares to.
///
/// nilpotent: a_i^2 = 0; idempotent: a_i^2 = a_i; pointer: a_i^2 = a_j for a
/// nilpotent a_j != a_i. mu is sorted ascending and holds, for each
/// nilpotent, one plus the number of pointers squaring onto it, so it is a
/// partition of n - t into k parts.
struct SquareProfile {
  std::vector<ElementId> nilpotent;
  std::vector<ElementId> idempotent;
  std::vector<ElementId> pointer;
  int k = 0;
  int t = 0;
  std::vector<int> mu;

  bool operator==(const SquareProfile&) const = default;
};

/// Throws UsageError unless the table is a zero-divisor semigroup with
/// graph K_n.
SquareProfile square_profile(const MulTable& t);

}  // namespace zdsg
