#include "zdsg/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zdsg/errors.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

int CanonicalKey::order() const {
  int m = 0;
  while (m * (m + 1) / 2 < static_cast<int>(cells.size())) ++m;
  if (m * (m + 1) / 2 != static_cast<int>(cells.size())) {
    throw UsageError("key length is not triangular");
  }
  return m;
}

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(cells.size() * 2);
  for (ElementId c : cells) {
    out.push_back(kDigits[(c >> 4) & 0xf]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw UsageError("hex key has odd length");
  CanonicalKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int cell = 0;
    const char* first = hex.data() + i;
    const auto [end, ec] = std::from_chars(first, first + 2, cell, 16);
    if (ec != std::errc{} || end != first + 2) throw UsageError("hex key has a non-hex digit");
    key.cells.push_back(cell);
  }
  key.order();
  return key;
}

CanonicalKey canonical_form(const MulTable& t) {
  const int m = t.order();
  const std::size_t len = static_cast<std::size_t>(m * (m + 1) / 2);
  // sigma[new] = old, pi[old] = new.
  std::vector<ElementId> sigma(static_cast<std::size_t>(m + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<ElementId> pi(sigma);

  CanonicalKey best;
  best.cells.reserve(len);
  for (ElementId i = 1; i <= m; ++i) {
    for (ElementId j = i; j <= m; ++j) best.cells.push_back(t(i, j));
  }

  while (std::next_permutation(sigma.begin() + 1, sigma.end())) {
    for (ElementId i = 1; i <= m; ++i) pi[sigma[i]] = i;
    // Lazy comparison against the incumbent; only rebuild on a strict win.
    std::size_t pos = 0;
    int cmp = 0;
    for (ElementId i = 1; i <= m && cmp == 0; ++i) {
      for (ElementId j = i; j <= m; ++j, ++pos) {
        const ElementId c = pi[t(sigma[i], sigma[j])];
        if (c != best.cells[pos]) {
          cmp = c < best.cells[pos] ? -1 : 1;
          break;
        }
      }
    }
    if (cmp >= 0) continue;
    pos = 0;
    for (ElementId i = 1; i <= m; ++i) {
      for (ElementId j = i; j <= m; ++j) best.cells[pos++] = pi[t(sigma[i], sigma[j])];
    }
  }
  return best;
}

MulTable table_from_key(const CanonicalKey& key) {
  const int m = key.order();
  MulTable t(m);
  std::size_t pos = 0;
  for (ElementId i = 1; i <= m; ++i) {
    for (ElementId j = i; j <= m; ++j) t.set(i, j, key.cells[pos++]);
  }
  return t;
}

bool ClassCatalog::insert(const MulTable& t) { return insert(canonical_form(t)); }

bool ClassCatalog::insert(const CanonicalKey& key, std::uint64_t multiplicity) {
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    it->second.multiplicity += multiplicity;
    return false;
  }
  entries_.emplace(key, CatalogEntry{table_from_key(key), multiplicity});
  return true;
}

void ClassCatalog::merge(const ClassCatalog& other) {
  for (const auto& [key, entry] : other.entries_) insert(key, entry.multiplicity);
}

std::uint64_t ClassCatalog::labeled_count() const {
  std::uint64_t total = 0;
  for (const auto& [key, entry] : entries_) total += entry.multiplicity;
  return total;
}

std::vector<CanonicalKey> ClassCatalog::keys() const {
  std::vector<CanonicalKey> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(key);
  return out;
}

bool ClassCatalog::operator==(const ClassCatalog& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  for (; a != entries_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.multiplicity != b->second.multiplicity) return false;
  }
  return true;
}

nlohmann::json to_json(const ClassCatalog& c) {
  auto arr = nlohmann::json::array();
  for (const auto& [key, entry] : c.entries()) {
    arr.push_back({{"key", key.hex()},
                   {"representative", to_json(entry.representative)},
                   {"multiplicity", entry.multiplicity}});
  }
  return arr;
}

ClassCatalog catalog_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("catalog JSON must be an array");
  ClassCatalog c;
  for (const auto& item : j) {
    const auto key = CanonicalKey::from_hex(item.at("key").get<std::string>());
    if (table_from_json(item.at("representative")) != table_from_key(key)) {
      throw UsageError("catalog representative does not match its key");
    }
    c.insert(key, item.at("multiplicity").get<std::uint64_t>());
  }
  return c;
}

SquareProfile square_profile(const MulTable& t) {
  const auto rec = recognize_target(build_zd_graph(t));
  if (!rec || rec->target.family != GraphFamily::complete || !is_zd_semigroup(t)) {
    throw UsageError("square_profile needs a zero-divisor semigroup with graph K_n");
  }
  const int n = t.order();
  SquareProfile p;
  for (ElementId i = 1; i <= n; ++i) {
    const ElementId sq = t(i, i);
    if (sq == kZero) {
      p.nilpotent.push_back(i);
    } else if (sq == i) {
      p.idempotent.push_back(i);
    } else {
      p.pointer.push_back(i);
    }
  }
  p.k = static_cast<int>(p.nilpotent.size());
  p.t = static_cast<int>(p.idempotent.size());
  for (ElementId a : p.nilpotent) {
    int parts = 1;
    for (ElementId c : p.pointer) parts += t(c, c) == a ? 1 : 0;
    p.mu.push_back(parts);
  }
  std::sort(p.mu.begin(), p.mu.end());
  return p;
}

}  // namespace zdsg
