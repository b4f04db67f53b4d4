#include "zdsg/mul_table.hpp"

#include <sstream>

#include "zdsg/errors.hpp"

namespace zdsg {

MulTable::MulTable(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw UsageError("table order " + std::to_string(order) + " outside 0.." +
                     std::to_string(kMaxOrder));
  }
  cells_.assign(static_cast<std::size_t>(size() * size()), kZero);
}

MulTable MulTable::from_grid(const std::vector<std::vector<ElementId>>& grid) {
  if (grid.empty()) throw UsageError("empty grid");
  const int n = static_cast<int>(grid.size());
  MulTable t(n - 1);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(grid[u].size()) != n) throw UsageError("grid is not square");
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const ElementId w = grid[u][v];
      if (w < 0 || w >= n) {
        throw UsageError("entry (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range");
      }
      if ((u == 0 || v == 0) && w != kZero) throw UsageError("zero row/column must be zero");
      if (grid[v][u] != w) {
        throw UsageError("grid is not symmetric at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      }
      if (u != 0 && v != 0 && u <= v) t.set(u, v, w);
    }
  }
  return t;
}

ElementId MulTable::mul(ElementId u, ElementId v) const {
  if (u < 0 || u > order_ || v < 0 || v > order_) {
    throw UsageError("element index out of range");
  }
  return (*this)(u, v);
}

void MulTable::set(ElementId u, ElementId v, ElementId w) {
  if (u <= 0 || u > order_ || v <= 0 || v > order_) {
    throw UsageError("set() needs nonzero in-range operands");
  }
  if (w < 0 || w > order_) throw UsageError("product value out of range");
  cells_[static_cast<std::size_t>(u * size() + v)] = w;
  cells_[static_cast<std::size_t>(v * size() + u)] = w;
}

std::vector<std::vector<ElementId>> MulTable::grid() const {
  std::vector<std::vector<ElementId>> g(static_cast<std::size_t>(size()));
  for (int u = 0; u < size(); ++u) {
    g[u].reserve(static_cast<std::size_t>(size()));
    for (int v = 0; v < size(); ++v) g[u].push_back((*this)(u, v));
  }
  return g;
}

std::optional<AssocWitness> check_associativity(const MulTable& t) {
  const int m = t.order();
  for (ElementId u = 1; u <= m; ++u) {
    for (ElementId v = 1; v <= m; ++v) {
      const ElementId uv = t(u, v);
      for (ElementId w = 1; w <= m; ++w) {
        const ElementId lhs = t(uv, w);
        const ElementId rhs = t(u, t(v, w));
        if (lhs != rhs) return AssocWitness{u, v, w, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::vector<ElementId> zero_divisors(const MulTable& t) {
  std::vector<ElementId> out;
  for (ElementId u = 1; u <= t.order(); ++u) {
    for (ElementId v = 1; v <= t.order(); ++v) {
      if (t(u, v) == kZero) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

bool is_zd_semigroup(const MulTable& t) {
  if (static_cast<int>(zero_divisors(t).size()) != t.order()) return false;
  return !check_associativity(t).has_value();
}

MulTable relabel(const MulTable& t, std::span<const ElementId> perm) {
  const int m = t.order();
  if (static_cast<int>(perm.size()) != m + 1 || perm[0] != kZero) {
    throw UsageError("relabel: permutation must have size m+1 and fix 0");
  }
  std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
  for (ElementId p : perm) {
    if (p < 0 || p > m || seen[p]) throw UsageError("relabel: not a permutation");
    seen[p] = true;
  }
  MulTable out(m);
  for (ElementId u = 1; u <= m; ++u) {
    for (ElementId v = u; v <= m; ++v) out.set(perm[u], perm[v], perm[t(u, v)]);
  }
  return out;
}

nlohmann::json to_json(const MulTable& t) {
  return nlohmann::json{{"m", t.order()}, {"entries", t.grid()}};
}

MulTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("entries")) {
    throw UsageError("table JSON needs \"m\" and \"entries\"");
  }
  const int m = j.at("m").get<int>();
  auto grid = j.at("entries").get<std::vector<std::vector<ElementId>>>();
  if (static_cast<int>(grid.size()) != m + 1) throw UsageError("entries size does not match m");
  return MulTable::from_grid(grid);
}

std::string to_compact_string(const MulTable& t) {
  std::ostringstream os;
  os << '[';
  for (ElementId u = 1; u <= t.order(); ++u) {
    if (u > 1) os << ',';
    os << '[';
    for (ElementId v = 1; v <= t.order(); ++v) {
      if (v > 1) os << ',';
      os << t(u, v);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace zdsg
