#include "zdsg/export.hpp"

#include "zdsg/enumerator.hpp"
#include "zdsg/formulas.hpp"

namespace zdsg {

void write_ndjson(std::ostream& os, const MulTable& t) { os << to_json(t).dump() << '\n'; }

void write_catalog_json(std::ostream& os, const ClassCatalog& c) {
  os << to_json(c).dump(1) << '\n';
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void write_catalog_csv(std::ostream& os, const ClassCatalog& c, const TargetGraph& target) {
  const bool pendant = target.family == GraphFamily::complete_plus_end;
  os << "target,n,class_id,x1_square_case,r,k,t,mu,multiplicity,key\n";
  int id = 1;
  for (const auto& [key, entry] : c.entries()) {
    const MulTable& t = entry.representative;
    os << target.name() << ',' << target.n << ',' << id++ << ',';
    if (pendant) {
      const auto sq = pendant_square_case(t);
      os << to_string(sq) << ',';
      if (sq == PendantSquare::pendant) os << fixed_pendant_products(t);
      os << ",,,";
    } else {
      const auto p = square_profile(t);
      os << ",," << p.k << ',' << p.t << ',' << join(p.mu);
    }
    os << ',' << entry.multiplicity << ',' << key.hex() << '\n';
  }
}

SimpleGraph target_graph(const TargetGraph& target) {
  SimpleGraph g(target.vertex_count());
  for (int u = 1; u <= target.n; ++u) {
    for (int v = u + 1; v <= target.n; ++v) g.add_edge(u, v);
  }
  if (target.family == GraphFamily::complete_plus_end) g.add_edge(1, pendant_element(target.n));
  return g;
}

void write_catalog_dot(std::ostream& os, const ClassCatalog& c, const TargetGraph& target) {
  const bool pendant = target.family == GraphFamily::complete_plus_end;
  const SimpleGraph g = target_graph(target);
  std::vector<std::string> notes;
  notes.push_back(std::to_string(c.class_count()) + " classes");
  int id = 1;
  for (const auto& [key, entry] : c.entries()) {
    std::string line = "class " + std::to_string(id++) + " key=" + key.hex();
    if (pendant) {
      const auto sq = pendant_square_case(entry.representative);
      line += " x1^2=" + to_string(sq);
      if (sq == PendantSquare::pendant) {
        line += " r=" + std::to_string(fixed_pendant_products(entry.representative));
      }
    } else {
      const auto p = square_profile(entry.representative);
      line += " k=" + std::to_string(p.k) + " t=" + std::to_string(p.t) + " mu=(" + join(p.mu) + ")";
    }
    line += " multiplicity=" + std::to_string(entry.multiplicity);
    notes.push_back(std::move(line));
  }
  os << to_dot(g, vertex_labels(g), notes);
}

}  // namespace zdsg
