#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsetree/execution.hpp"
#include "sparsetree/graph.hpp"

namespace sparsetree {

/// Maximum flow between two disjoint vertex sets (Edmonds-Karp over exact rationals).
Rational max_flow(const CapacitatedGraph& graph, const std::vector<VertexId>& sources, const std::vector<VertexId>& sinks);

/// Minimum cut separating terminal names `side` from the remaining terminals.
Rational terminal_mincut(const CapacitatedGraph& graph, const std::vector<std::string>& side);

/// Enumeration cap: SPARSETREE_MAX_K when set, otherwise 16.
std::size_t default_max_terminals();

struct CutRow {
  std::vector<std::string> side;  // canonical witness side
  Rational mincut_g;
  Rational cut_h;
};

struct QualityReport {
  Rational min_ratio;
  Rational max_ratio;
  bool unbounded = false;  // some cut has mincut_G = 0 < cut_H
  std::vector<std::string> witness_min;
  std::vector<std::string> witness_max;
  std::size_t cuts = 0;
  std::vector<CutRow> table;  // filled when requested

  bool dominates() const { return min_ratio >= Rational(1); }
};

struct CutQualityOptions {
  std::size_t max_terminals = default_max_terminals();
  bool keep_table = false;
  Execution exec = Execution::parallel;
};

/// Compares every terminal bipartition of g against h. When h lives on the
/// terminals only its cut is the direct boundary sum, otherwise a max-flow.
QualityReport enumerate_cut_quality(const CapacitatedGraph& g, const CapacitatedGraph& h,
                                    const CutQualityOptions& options = {});

struct EdgeCongestion {
  std::string u;
  std::string v;
  Rational load;
  Rational capacity;
  Rational congestion;
};

struct FlowCertificate {
  Rational quality;
  std::pair<std::string, std::string> bottleneck;
  std::vector<EdgeCongestion> per_edge;
};

/// Routes every demand pair along its unique tree path.
FlowCertificate tree_congestion(const CapacitatedGraph& tree, const Demand& demand);

/// Congestion of the demand induced by h's capacities, routed in the tree.
FlowCertificate flow_quality_tree(const CapacitatedGraph& tree, const CapacitatedGraph& h);

}  // namespace sparsetree
