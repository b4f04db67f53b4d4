#include "zdsg/enumerator.hpp"

#include <atomic>
#include <thread>

#include "zdsg/errors.hpp"

namespace zdsg {

std::uint64_t SearchSpec::leaf_count() const {
  std::uint64_t total = 1;
  for (const auto& d : domains) total *= d.size();
  return total;
}

SearchSpec seed_partial_table(const TargetGraph& target) {
  SearchSpec spec;
  spec.target = target;
  const int n = target.n;
  const int m = target.vertex_count();
  if (target.family == GraphFamily::complete_plus_end && n < 2) {
    throw UsageError("K_n+1 needs n >= 2");
  }
  if (m > kMaxOrder) throw UsageError("target too large for enumeration");
  spec.seed = MulTable(m);

  std::vector<ElementId> all(static_cast<std::size_t>(m + 1));
  for (ElementId e = 0; e <= m; ++e) all[e] = e;
  std::vector<ElementId> nonzero(all.begin() + 1, all.end());

  if (target.family == GraphFamily::complete_plus_end) {
    const ElementId x = pendant_element(n);
    spec.slots.push_back({x, x});
    spec.domains.push_back(all);
    for (ElementId i = 2; i <= n; ++i) {
      spec.slots.push_back({i, x});
      spec.domains.push_back(nonzero);
    }
  }
  for (ElementId i = 1; i <= n; ++i) {
    spec.slots.push_back({i, i});
    spec.domains.push_back(all);
  }
  return spec;
}

bool realizes_target(const MulTable& t, const TargetGraph& target) {
  if (t.order() != target.vertex_count()) return false;
  if (!is_zd_semigroup(t)) return false;
  const auto rec = recognize_target(build_zd_graph(t));
  return rec && rec->target == target;
}

namespace {

/// Depth-first assignment over the slots of one SearchSpec. The partial table
/// tracks which cells are determined so triples are checked as soon as both
/// sides can be evaluated.
class Search {
 public:
  Search(const SearchSpec& spec, bool prune)
      : spec_(spec), prune_(prune), m_(spec.seed.order()), table_(spec.seed) {
    known_.assign(static_cast<std::size_t>((m_ + 1) * (m_ + 1)), 1);
    for (const Slot& s : spec_.slots) {
      mark(s.row, s.col, false);
    }
    root_ok_ = !prune_ || all_known_triples_ok();
  }

  template <typename Leaf>
  void run(std::size_t depth, const Leaf& leaf) {
    if (!root_ok_) return;
    descend(depth, leaf);
  }

  /// Runs only the branch where slot 0 takes its `branch`-th value.
  template <typename Leaf>
  void run_branch(std::size_t branch, const Leaf& leaf) {
    if (!root_ok_ || spec_.slots.empty()) return;
    assign_and_descend(0, spec_.domains[0][branch], leaf);
  }

  std::uint64_t assignments() const { return assignments_; }

 private:
  bool known(ElementId u, ElementId v) const {
    return known_[static_cast<std::size_t>(u * (m_ + 1) + v)] != 0;
  }
  void mark(ElementId u, ElementId v, bool k) {
    known_[static_cast<std::size_t>(u * (m_ + 1) + v)] = k ? 1 : 0;
    known_[static_cast<std::size_t>(v * (m_ + 1) + u)] = k ? 1 : 0;
  }

  // True unless both sides are determined and differ.
  bool triple_ok(ElementId u, ElementId v, ElementId w) const {
    if (!known(u, v) || !known(v, w)) return true;
    const ElementId uv = table_(u, v);
    const ElementId vw = table_(v, w);
    if (!known(uv, w) || !known(u, vw)) return true;
    return table_(uv, w) == table_(u, vw);
  }

  bool all_known_triples_ok() const {
    for (ElementId u = 1; u <= m_; ++u) {
      for (ElementId v = 1; v <= m_; ++v) {
        for (ElementId w = 1; w <= m_; ++w) {
          if (!triple_ok(u, v, w)) return false;
        }
      }
    }
    return true;
  }

  // Triples in which cell {p, q} is used, either as the inner product or as
  // the outer product of one side.
  bool triples_through_ok(ElementId p, ElementId q) const {
    for (ElementId x = 1; x <= m_; ++x) {
      if (!triple_ok(p, q, x) || !triple_ok(q, p, x) || !triple_ok(x, p, q) ||
          !triple_ok(x, q, p)) {
        return false;
      }
    }
    for (ElementId x = 1; x <= m_; ++x) {
      for (ElementId y = 1; y <= m_; ++y) {
        if (!known(x, y)) continue;
        const ElementId xy = table_(x, y);
        if (xy == p && (!triple_ok(x, y, q) || !triple_ok(q, x, y))) return false;
        if (xy == q && (!triple_ok(x, y, p) || !triple_ok(p, x, y))) return false;
      }
    }
    return true;
  }

  template <typename Leaf>
  void descend(std::size_t depth, const Leaf& leaf) {
    if (depth == spec_.slots.size()) {
      leaf(table_);
      return;
    }
    for (ElementId value : spec_.domains[depth]) assign_and_descend(depth, value, leaf);
  }

  template <typename Leaf>
  void assign_and_descend(std::size_t depth, ElementId value, const Leaf& leaf) {
    const Slot& s = spec_.slots[depth];
    ++assignments_;
    table_.set(s.row, s.col, value);
    mark(s.row, s.col, true);
    if (!prune_ || triples_through_ok(s.row, s.col)) descend(depth + 1, leaf);
    mark(s.row, s.col, false);
  }

  const SearchSpec& spec_;
  bool prune_;
  int m_;
  MulTable table_;
  std::vector<char> known_;
  bool root_ok_ = true;
  std::uint64_t assignments_ = 0;
};

SearchSpec options_spec(const TargetGraph& target, const EnumerateOptions& options) {
  SearchSpec spec = seed_partial_table(target);
  if (options.pendant_square) {
    if (target.family != GraphFamily::complete_plus_end) {
      throw UsageError("pendant_square applies to K_n+1 only");
    }
    const ElementId v = *options.pendant_square;
    if (v < 0 || v > target.vertex_count()) throw UsageError("pendant_square out of range");
    spec.domains[0] = {v};
  }
  return spec;
}

}  // namespace

void for_each_candidate(const SearchSpec& spec, const TableVisitor& visitor) {
  Search search(spec, false);
  search.run(0, [&](const MulTable& t) { visitor(t); });
}

EnumerationStats enumerate_labeled(const TargetGraph& target, const TableVisitor& visitor,
                                   const EnumerateOptions& options) {
  const SearchSpec spec = options_spec(target, options);
  EnumerationStats stats;
  auto accept = [&target](const MulTable& t) { return realizes_target(t, target); };

  const std::size_t branches = spec.slots.empty() ? 0 : spec.domains[0].size();
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(branches)));
  if (jobs <= 1) {
    Search search(spec, options.prune);
    search.run(0, [&](const MulTable& t) {
      if (!accept(t)) return;
      ++stats.accepted;
      visitor(t);
    });
    stats.assignments = search.assignments();
    return stats;
  }

  // Each root branch collects privately; replay in branch order afterwards.
  std::vector<std::vector<MulTable>> found(branches);
  std::vector<std::uint64_t> work(branches, 0);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t b = next++; b < branches; b = next++) {
          Search search(spec, options.prune);
          search.run_branch(b, [&](const MulTable& t) {
            if (accept(t)) found[b].push_back(t);
          });
          work[b] = search.assignments();
        }
      });
    }
  }
  for (std::size_t b = 0; b < branches; ++b) {
    stats.assignments += work[b];
    for (const MulTable& t : found[b]) {
      ++stats.accepted;
      visitor(t);
    }
  }
  return stats;
}

ClassCatalog oracle_classes(const TargetGraph& target, const EnumerateOptions& options) {
  std::vector<MulTable> tables;
  enumerate_labeled(target, [&](const MulTable& t) { tables.push_back(t); }, options);

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tables.size())));
  std::vector<ClassCatalog> partial(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < tables.size();
             i += static_cast<std::size_t>(jobs)) {
          partial[w].insert(tables[i]);
        }
      });
    }
  }
  ClassCatalog out;
  for (const auto& c : partial) out.merge(c);
  return out;
}

bool oracle_within_budget(const TargetGraph& target) {
  return target.family == GraphFamily::complete ? target.n <= 6 : target.n <= 4;
}

}  // namespace zdsg
