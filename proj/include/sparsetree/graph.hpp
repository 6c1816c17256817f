#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sparsetree/rational.hpp"

namespace sparsetree {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  Rational capacity;
};

/// Undirected graph with exact capacities and a designated terminal set.
///
/// Vertices carry opaque string names; ids are dense and follow insertion
/// order. Parallel edges are merged by adding capacities, and self-loops are
/// never stored.
class CapacitatedGraph {
 public:
  VertexId add_vertex(std::string_view name, bool terminal = false);
  /// Returns the existing id when `name` is already present.
  VertexId ensure_vertex(std::string_view name, bool terminal = false);
  void set_terminal(VertexId v, bool terminal = true);

  /// Adds capacity between u and v, merging with an existing edge.
  void add_edge(VertexId u, VertexId v, const Rational& capacity);
  void add_edge(std::string_view u, std::string_view v, const Rational& capacity);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t terminal_count() const;

  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;  // throws UnknownVertex
  bool is_terminal(VertexId v) const { return terminal_.at(v); }
  std::vector<VertexId> terminals() const;
  std::vector<std::string> terminal_names() const;

  /// Edges ordered by (u, v) id.
  std::vector<Edge> edges() const;
  Rational capacity(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  /// Neighbours of v in increasing id order.
  std::vector<VertexId> neighbors(VertexId v) const;

  bool all_unit_capacities() const;
  bool is_connected() const;
  bool is_tree() const;

  /// Sum of capacities of edges with exactly one endpoint in `side`.
  Rational boundary(const std::vector<bool>& side) const;

  /// Name-based equality: same vertex names, terminal names and capacities.
  friend bool operator==(const CapacitatedGraph& a, const CapacitatedGraph& b);

 private:
  std::vector<std::string> names_;
  std::vector<bool> terminal_;
  std::unordered_map<std::string, VertexId> index_;
  std::map<std::pair<VertexId, VertexId>, Rational> edges_;
  std::vector<std::set<VertexId>> adjacency_;
};

std::string describe(const CapacitatedGraph& graph);

/// Symmetric nonnegative demand between distinct terminals, keyed by name.
class Demand {
 public:
  void set(std::string_view a, std::string_view b, const Rational& value);
  void add(std::string_view a, std::string_view b, const Rational& value);
  Rational get(std::string_view a, std::string_view b) const;
  bool all_zero() const;
  const std::map<std::pair<std::string, std::string>, Rational>& entries() const { return entries_; }

  /// d(x, x') := c_H(x, x') for every edge of h.
  static Demand from_graph(const CapacitatedGraph& h);

 private:
  static std::pair<std::string, std::string> key(std::string_view a, std::string_view b);
  std::map<std::pair<std::string, std::string>, Rational> entries_;
};

/// One-to-one partial map from terminals of a first graph to terminals of a second.
struct TerminalCorrespondence {
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct MergeStep {
  std::size_t first;
  std::size_t second;
  TerminalCorrespondence correspondence;
};

/// Replaying the steps with phi_merge recombines split pieces.
struct MergePlan {
  std::vector<MergeStep> steps;
};

struct RawEdge {
  std::string u;
  std::string v;
  Rational capacity;
};

/// Unchecked instance description, as produced by parsers.
struct InstanceDescription {
  std::vector<std::string> vertices;
  std::vector<std::string> terminals;
  std::vector<RawEdge> edges;
};

struct ValidationOptions {
  bool require_connected = false;
  std::size_t min_terminals = 0;
};

CapacitatedGraph validate_instance(const InstanceDescription& description, const ValidationOptions& options = {});

/// Edge-wise weighted sum of graphs over a common vertex set.
CapacitatedGraph convex_combine(std::span<const CapacitatedGraph> graphs, std::span<const Rational> weights);

/// 2-sum: identifies corresponding terminals (names from g1 win) and merges parallel edges.
CapacitatedGraph phi_merge(const CapacitatedGraph& g1, const CapacitatedGraph& g2, const TerminalCorrespondence& corr);

/// Folds the pieces along the plan; pieces not reached by any step are appended as disjoint parts.
CapacitatedGraph replay_merge_plan(std::span<const CapacitatedGraph> pieces, const MergePlan& plan);

/// Copy of graph restricted to vertices with keep[v] set; ids are renumbered in order.
CapacitatedGraph induced_subgraph(const CapacitatedGraph& graph, const std::vector<bool>& keep);

}  // namespace sparsetree
