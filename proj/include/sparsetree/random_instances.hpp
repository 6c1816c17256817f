#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sparsetree/graph.hpp"

namespace sparsetree {

/// Terminals x1..xk joined to center "v" by unit edges.
CapacitatedGraph make_unit_star(std::size_t k);

/// Star with ray capacities caps[i] on x(i+1).
CapacitatedGraph make_star(const std::vector<Rational>& caps);

/// v0 -> {x1, v1}, v1 -> {x2, x3}.
CapacitatedGraph make_caterpillar();

/// Random unit-capacity tree on v0..v(n-1) with k random terminals.
CapacitatedGraph random_unit_tree(std::size_t n, std::size_t k, std::uint64_t seed);

/// Random unit-capacity quasi-bipartite graph: terminals x1..xk, centers
/// c1..c(centers) whose neighbourhoods come from a small pool, so types repeat.
CapacitatedGraph random_unit_qb(std::size_t k, std::size_t centers, std::uint64_t seed);

/// `count` demands on g's terminals with small integer entries, never all zero.
std::vector<Demand> random_demands(const CapacitatedGraph& g, std::size_t count, std::uint64_t seed);

/// Unit demand on each terminal pair, then the uniform demand.
std::vector<Demand> standard_demands(const CapacitatedGraph& g);

}  // namespace sparsetree
