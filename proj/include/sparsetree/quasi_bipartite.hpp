#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sparsetree/execution.hpp"
#include "sparsetree/graph.hpp"

namespace sparsetree {

/// A non-terminal centre and its capacitated rays to terminals.
struct StarComponent {
  std::string center;
  std::vector<std::pair<std::string, Rational>> rays;

  Rational total_capacity() const;
  CapacitatedGraph as_graph() const;
};

/// Non-terminals sharing the same terminal neighbourhood.
struct TypeGroup {
  std::vector<std::string> signature;  // terminal names, graph order
  std::vector<std::string> members;
};

/// Subdivides every terminal-terminal edge with a fresh non-terminal.
/// Throws NonterminalAdjacency when two non-terminals are adjacent.
CapacitatedGraph normalize_quasi_bipartite(const CapacitatedGraph& graph);

struct StarDecomposition {
  std::vector<StarComponent> stars;
  MergePlan plan;  // folds star i into the union of stars 0..i-1 on shared terminals
};

StarDecomposition decompose_stars(const CapacitatedGraph& graph);

/// Complete graph with c(x, x') = 2 c(u,x) c(u,x') / C. A one-ray star gives
/// the isolated terminal; an empty star throws SingleRay.
CapacitatedGraph weighted_star_sparsifier(const StarComponent& star);

/// Quality-2 sparsifier on exactly the terminals of a quasi-bipartite graph.
CapacitatedGraph qb_sparsifier(const CapacitatedGraph& graph, Execution exec = Execution::parallel);

std::vector<TypeGroup> group_by_type(const CapacitatedGraph& graph);

/// Replaces each type group of size n by one centre with capacity-n rays.
CapacitatedGraph exact_qb_sparsifier(const CapacitatedGraph& graph);

}  // namespace sparsetree
