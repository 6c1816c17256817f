#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsetree/graph.hpp"

namespace sparsetree {

/// A tree in leaf-terminal form rooted at its lowest-named non-terminal.
///
/// Children are ordered by name, so two trees with equal graphs always root
/// identically. The degenerate case is the single edge between two
/// terminals, which has no non-terminal to root at; it is rooted at the
/// lower-named terminal and flagged.
class RootedTree {
 public:
  const CapacitatedGraph& graph() const { return graph_; }
  VertexId root() const { return root_; }
  bool degenerate() const { return degenerate_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  VertexId parent(VertexId v) const { return parent_.at(v); }
  const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  std::size_t child_count(VertexId v) const { return children_.at(v).size(); }
  int level(VertexId v) const { return level_.at(v); }

  /// True when `v` lies in the subtree rooted at `ancestor` (inclusive).
  bool in_subtree(VertexId v, VertexId ancestor) const {
    return enter_[ancestor] <= enter_[v] && exit_[v] <= exit_[ancestor];
  }
  /// The child endpoint of tree edge {a, b}; throws UnknownEdge otherwise.
  VertexId edge_child(VertexId a, VertexId b) const;

  /// Non-terminals by decreasing level, ties by name.
  const std::vector<VertexId>& processing_order() const { return processing_order_; }
  /// Ancestors of v from its parent up to the root.
  std::vector<VertexId> ancestors(VertexId v) const;

 private:
  friend RootedTree root_tree(const CapacitatedGraph& tree);

  CapacitatedGraph graph_;
  VertexId root_ = kNoVertex;
  bool degenerate_ = false;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<int> level_;
  std::vector<int> enter_;
  std::vector<int> exit_;
  std::vector<VertexId> processing_order_;
};

/// Repeatedly deletes non-terminal leaves.
CapacitatedGraph prune_nonterminal_leaves(const CapacitatedGraph& tree);

/// Splices out every non-terminal of degree 2 except `keep`, joining its two
/// neighbours by a unit edge. Unit capacities only.
CapacitatedGraph contract_degree2_nonterminals(const CapacitatedGraph& tree,
                                               std::optional<std::string_view> keep = std::nullopt);

struct SplitTree {
  std::vector<CapacitatedGraph> components;
  MergePlan plan;
};

/// Cuts the tree at every internal terminal u into deg(u) pieces. The piece
/// holding u's lowest-id neighbour keeps the name u; other copies are
/// renamed (u#2, u#3, ...) and the plan maps u back onto them.
SplitTree split_at_internal_terminals(const CapacitatedGraph& tree);

/// Lowest-named non-terminal, or nullopt when every vertex is a terminal.
std::optional<std::string> choose_root(const CapacitatedGraph& tree);

RootedTree root_tree(const CapacitatedGraph& tree);

/// prune + split: every returned component has all of its terminals as leaves.
SplitTree prepare_tree(const CapacitatedGraph& tree);

}  // namespace sparsetree
