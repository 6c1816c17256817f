#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsetree/execution.hpp"
#include "sparsetree/graph.hpp"
#include "sparsetree/simplex.hpp"

namespace sparsetree {

struct PathFlow {
  std::vector<std::string> path;
  Rational flow;
};

struct ConcurrentFlowSolution {
  LpStatus status = LpStatus::optimal;  // unbounded for an all-zero demand
  Rational lambda;
  std::vector<PathFlow> flows;  // paths carrying positive flow
  std::size_t columns = 0;
  std::size_t pricing_rounds = 0;
};

/// Largest lambda such that lambda * demand routes within capacities.
///
/// Path formulation seeded with direct edges and two-hop paths through
/// non-terminals; further paths enter by shortest-path pricing on the
/// edge duals, so the optimum is exact on any topology.
ConcurrentFlowSolution max_concurrent_flow(const CapacitatedGraph& graph, const Demand& demand);

/// 1 / lambda_G(d_H): the flow quality of a dominating sparsifier h on g's terminals.
Rational flow_quality_lp(const CapacitatedGraph& g, const CapacitatedGraph& h);

struct ExactVerification {
  bool ok = true;
  bool mincuts_equal = true;
  std::vector<Rational> lambda_g;
  std::vector<Rational> lambda_h;
  std::optional<std::size_t> witness_demand;
  std::vector<std::string> witness_cut;
};

/// Every demand must agree within `tolerance` and all terminal mincuts exactly.
ExactVerification verify_exact(const CapacitatedGraph& g, const CapacitatedGraph& h, const std::vector<Demand>& demands,
                               const Rational& tolerance = Rational(0), Execution exec = Execution::parallel);

}  // namespace sparsetree
