#include "zdsg/zd_graph.hpp"

#include <sstream>

#include "zdsg/errors.hpp"

namespace zdsg {

SimpleGraph::SimpleGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw UsageError("negative vertex count");
  adj_.assign(static_cast<std::size_t>((vertex_count + 1) * (vertex_count + 1)), false);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) {
    throw UsageError("edge endpoint out of range");
  }
  if (u == v) throw UsageError("loops are not edges");
  adj_[static_cast<std::size_t>(u * (vertex_count_ + 1) + v)] = true;
  adj_[static_cast<std::size_t>(v * (vertex_count_ + 1) + u)] = true;
}

bool SimpleGraph::adjacent(int u, int v) const {
  if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) return false;
  return adj_[static_cast<std::size_t>(u * (vertex_count_ + 1) + v)];
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= vertex_count_; ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= vertex_count_; ++u) {
    for (int v = u + 1; v <= vertex_count_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

TargetGraph TargetGraph::complete(int n) {
  if (n < 1) throw UsageError("K_n needs n >= 1");
  return TargetGraph{GraphFamily::complete, n};
}

TargetGraph TargetGraph::complete_plus_end(int n) {
  if (n < 2) throw UsageError("K_n+1 needs n >= 2");
  return TargetGraph{GraphFamily::complete_plus_end, n};
}

std::string TargetGraph::name() const {
  return "K" + std::to_string(n) + (family == GraphFamily::complete ? "" : "+1");
}

std::string TargetGraph::kind() const {
  return family == GraphFamily::complete ? "kn" : "kn1";
}

SimpleGraph build_zd_graph(const MulTable& t) {
  SimpleGraph g(t.order());
  for (ElementId u = 1; u <= t.order(); ++u) {
    for (ElementId v = u + 1; v <= t.order(); ++v) {
      if (t(u, v) == kZero) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

bool is_clique_without(const SimpleGraph& g, int skip) {
  for (int u = 1; u <= g.vertex_count(); ++u) {
    if (u == skip) continue;
    for (int v = u + 1; v <= g.vertex_count(); ++v) {
      if (v != skip && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Recognition> recognize_target(const SimpleGraph& g) {
  const int vc = g.vertex_count();
  if (vc == 0) return std::nullopt;
  if (is_clique_without(g, 0)) return Recognition{TargetGraph::complete(vc), {}, {}};
  if (vc < 3) return std::nullopt;
  for (int p = vc; p >= 1; --p) {
    if (g.degree(p) != 1) continue;
    if (!is_clique_without(g, p)) continue;
    int q = 1;
    while (!g.adjacent(p, q)) ++q;
    return Recognition{TargetGraph::complete_plus_end(vc - 1), p, q};
  }
  return std::nullopt;
}

std::vector<std::string> vertex_labels(const SimpleGraph& g) {
  std::vector<std::string> labels(static_cast<std::size_t>(g.vertex_count() + 1));
  const auto rec = recognize_target(g);
  if (!rec) {
    for (int v = 1; v <= g.vertex_count(); ++v) labels[v] = "v" + std::to_string(v);
    return labels;
  }
  int next = 1;
  if (rec->pendant) {
    labels[*rec->pendant] = "x1";
    labels[*rec->neighbor] = "a1";
    next = 2;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (labels[v].empty()) labels[v] = "a" + std::to_string(next++);
  }
  return labels;
}

std::string to_dot(const SimpleGraph& g, std::span<const std::string> labels,
                   std::span<const std::string> annotations) {
  if (static_cast<int>(labels.size()) != g.vertex_count() + 1) {
    throw UsageError("to_dot: need one label per vertex (index 0 unused)");
  }
  std::string name = "G";
  if (const auto rec = recognize_target(g)) {
    name = rec->target.name();
    for (char& c : name) {
      if (c == '+') c = '_';
    }
  }
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& a : annotations) os << "  // " << a << '\n';
  for (int v = 1; v <= g.vertex_count(); ++v) os << "  " << labels[v] << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << labels[u] << " -- " << labels[v] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zdsg
