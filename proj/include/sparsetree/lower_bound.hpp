#pragma once

#include <cstddef>

#include "sparsetree/graph.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

struct StarLowerBound {
  Rational value;               // 2(1 - 1/k)
  CapacitatedGraph sparsifier;  // uniform 2/k on all pairs
  QualityReport report;         // uniform sparsifier against the unit star
};

/// Unit star with terminals x1..xk around center "v".
StarLowerBound star_lower_bound(std::size_t k);

/// Best cut quality over all terminal-only sparsifiers of the unit star,
/// solved as an LP over every bipartition.
Rational optimal_star_sparsifier_lp(std::size_t k, std::size_t max_k = 8);

}  // namespace sparsetree
