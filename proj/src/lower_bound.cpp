#include "sparsetree/lower_bound.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "sparsetree/error.hpp"
#include "sparsetree/random_instances.hpp"
#include "sparsetree/simplex.hpp"

namespace sparsetree {

StarLowerBound star_lower_bound(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "star needs at least 2 terminals");
  const CapacitatedGraph star = make_unit_star(k);
  StarLowerBound out;
  out.value = Rational(2) * (Rational(1) - Rational(1, static_cast<long>(k)));
  for (std::size_t i = 1; i <= k; ++i) out.sparsifier.add_vertex("x" + std::to_string(i), true);
  const Rational c(2, static_cast<long>(k));
  for (VertexId a = 0; a < k; ++a) {
    for (VertexId b = a + 1; b < k; ++b) out.sparsifier.add_edge(a, b, c);
  }
  out.report = enumerate_cut_quality(star, out.sparsifier);
  return out;
}

Rational optimal_star_sparsifier_lp(std::size_t k, std::size_t max_k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "star needs at least 2 terminals");
  if (k > max_k) throw Error(ErrorKind::TooManyTerminals, std::to_string(k) + " terminals exceed the cap of " + std::to_string(max_k));
  const CapacitatedGraph star = make_unit_star(k);
  const auto terminals = star.terminals();

  // Variables: one weight per terminal pair, then q. Maximize -q.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  const std::size_t q = pairs.size();
  LinearProgram lp;
  lp.variable_count = q + 1;
  lp.objective.assign(q + 1, Rational(0));
  lp.objective[q] = Rational(-1);

  const std::uint64_t masks = (std::uint64_t{1} << (k - 1)) - 1;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    // terminal 0 always on side S
    const std::uint64_t side = (mask << 1) | 1;
    std::vector<VertexId> s, t;
    for (std::size_t i = 0; i < k; ++i) ((side >> i) & 1 ? s : t).push_back(terminals[i]);
    const Rational m = max_flow(star, s, t);
    std::vector<std::pair<std::size_t, Rational>> crossing;
    for (std::size_t p = 0; p < q; ++p) {
      if (((side >> pairs[p].first) & 1) != ((side >> pairs[p].second) & 1)) crossing.emplace_back(p, Rational(1));
    }
    lp.rows.push_back({crossing, RowSense::greater_equal, m});
    auto upper = crossing;
    upper.emplace_back(q, -m);
    lp.rows.push_back({upper, RowSense::less_equal, Rational(0)});
  }
  const LpSolution solution = solve_lp(lp);
  if (solution.status != LpStatus::optimal) throw Error(ErrorKind::InvalidArgument, "star LP did not reach an optimum");
  return -solution.objective;
}

}  // namespace sparsetree
