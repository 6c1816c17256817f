#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sparsetree/execution.hpp"
#include "sparsetree/graph.hpp"
#include "sparsetree/tree_prep.hpp"

namespace sparsetree {

/// A connected retraction of a rooted tree onto its terminals, together
/// with the terminal graph obtained by contracting each fibre.
struct ZeroExtension {
  std::vector<VertexId> retraction;  // tree vertex -> terminal vertex (tree ids)
  CapacitatedGraph induced;          // on the tree's terminals, by name
};

/// Non-terminals by decreasing level each copy the image of a
/// uniformly chosen child. Deterministic in (tree, seed).
ZeroExtension sample_zero_extension(const RootedTree& tree, std::uint64_t seed);

/// Every outcome of the child choices, each with its exact probability.
std::vector<std::pair<ZeroExtension, Rational>> enumerate_zero_extensions(const RootedTree& tree,
                                                                          std::uint64_t limit);

/// Product of child counts over non-terminals (the number of distinct choice vectors).
Rational extension_count(const RootedTree& tree);

/// Sum of induced capacities whose tree path crosses edge {a, b}.
Rational extension_load(const RootedTree& tree, const ZeroExtension& ext, VertexId a, VertexId b);

/// Smallest level l such that x's ancestors at levels m_x-1 .. l all map to x.
int expansion_level(const RootedTree& tree, const ZeroExtension& ext, VertexId x);

/// 1 + sum_{j=l}^{m_x-1} (c_j - 1), the load ceiling of x's leaf edge when x is expanded to level l.
Rational expansion_load_bound(const RootedTree& tree, VertexId x, int level);

/// True when every fibre of the retraction induces a connected subtree.
bool has_connected_fibres(const RootedTree& tree, const ZeroExtension& ext);

struct ExpandedLevelEvent {
  VertexId terminal;
  int level;
  Rational probability;
};

/// P[x expanded exactly to level l] for l = m_x down to 0.
std::vector<ExpandedLevelEvent> expansion_probabilities(const RootedTree& tree, VertexId x);

/// Lowest common ancestors by binary lifting plus integer prefix products of
/// child counts along root paths.
class PathProductIndex {
 public:
  explicit PathProductIndex(const RootedTree& tree);

  const RootedTree& tree() const { return *tree_; }
  VertexId lca(VertexId a, VertexId b) const;
  /// Product of 1/c_w over strict ancestors w of v that lie strictly below `ancestor`.
  Rational segment_product(VertexId v, VertexId ancestor) const;
  /// Product of c_w over strict ancestors w of v.
  const Rational& root_product(VertexId v) const { return root_product_.at(v); }

 private:
  const RootedTree* tree_;
  std::vector<std::vector<VertexId>> jump_;
  std::vector<Rational> root_product_;
};

PathProductIndex build_path_product_index(const RootedTree& tree);

/// Probability that (x, x') is an edge of the random induced graph.
Rational closed_form_capacity(const PathProductIndex& index, VertexId x, VertexId x2);

/// Closed-form capacities for every terminal pair of one leaf-terminal tree.
CapacitatedGraph component_sparsifier(const RootedTree& tree, Execution exec = Execution::parallel);

/// Full pipeline for an arbitrary unit tree: prune, split at internal
/// terminals, contract unary non-terminals below the chosen root, evaluate
/// the closed form per component and merge the pieces back.
CapacitatedGraph expected_sparsifier(const CapacitatedGraph& tree, Execution exec = Execution::parallel);

/// Empirical edge frequencies over seeds first_seed .. first_seed+count-1.
CapacitatedGraph monte_carlo_sparsifier(const RootedTree& tree, std::uint64_t first_seed, std::uint64_t count,
                                        Execution exec = Execution::parallel);

}  // namespace sparsetree
