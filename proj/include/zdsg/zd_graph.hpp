#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zdsg/mul_table.hpp"

namespace zdsg {

/// Undirected simple graph on vertices 1..vertex_count.
class SimpleGraph {
 public:
  explicit SimpleGraph(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Ignores duplicates; rejects loops and out-of-range ends.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int vertex_count_;
  std::vector<bool> adj_;
};

enum class GraphFamily { complete, complete_plus_end };

/// K_n, or K_n with one pendant vertex hanging off a clique vertex.
struct TargetGraph {
  GraphFamily family = GraphFamily::complete;
  int n = 1;

  static TargetGraph complete(int n);
  static TargetGraph complete_plus_end(int n);

  int vertex_count() const noexcept { return family == GraphFamily::complete ? n : n + 1; }
  /// "K3" or "K3+1".
  std::string name() const;
  /// "kn" or "kn1", as spelled on the command line.
  std::string kind() const;

  bool operator==(const TargetGraph&) const = default;
};

struct Recognition {
  TargetGraph target;
  std::optional<int> pendant;
  std::optional<int> neighbor;

  bool operator==(const Recognition&) const = default;
};

/// Vertices 1..m; u != v adjacent iff uv = 0.
SimpleGraph build_zd_graph(const MulTable& t);

/// Recognizes K_n and K_n+1. A complete graph always wins, so K_2 is
/// CompleteK{2} and never K_1 plus a pendant. P_3 is reported as
/// CompletePlusEnd{2}; when two degree-1 vertices qualify, the larger id is
/// taken as the pendant.
std::optional<Recognition> recognize_target(const SimpleGraph& g);

/// a1..an for clique vertices and x1 for the pendant, using the recognized
/// roles; the pendant's neighbor is a1 and the remaining clique vertices
/// are numbered a2.. in id order. Unrecognized graphs get v1..vn.
/// Indexed by vertex id; entry 0 is empty.
std::vector<std::string> vertex_labels(const SimpleGraph& g);

/// One `graph` block with vertices and edges in id order. Each annotation
/// becomes a `//` comment line at the top of the block.
std::string to_dot(const SimpleGraph& g, std::span<const std::string> labels,
                   std::span<const std::string> annotations = {});

}  // namespace zdsg
