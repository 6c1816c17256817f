#include "sparsetree/random_instances.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

CapacitatedGraph make_unit_star(std::size_t k) {
  return make_star(std::vector<Rational>(k, Rational(1)));
}

CapacitatedGraph make_star(const std::vector<Rational>& caps) {
  CapacitatedGraph g;
  const VertexId center = g.add_vertex("v");
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const VertexId x = g.add_vertex("x" + std::to_string(i + 1), true);
    g.add_edge(center, x, caps[i]);
  }
  return g;
}

CapacitatedGraph make_caterpillar() {
  CapacitatedGraph g;
  g.add_vertex("v0");
  g.add_vertex("v1");
  for (const char* x : {"x1", "x2", "x3"}) g.add_vertex(x, true);
  g.add_edge("v0", "x1", Rational(1));
  g.add_edge("v0", "v1", Rational(1));
  g.add_edge("v1", "x2", Rational(1));
  g.add_edge("v1", "x3", Rational(1));
  return g;
}

CapacitatedGraph random_unit_tree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 2 || k < 2 || k > n) throw Error(ErrorKind::InvalidArgument, "need 2 <= k <= n");
  std::mt19937_64 rng(seed);
  CapacitatedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (VertexId i = 1; i < n; ++i) g.add_edge(i, static_cast<VertexId>(pick(rng, i)), Rational(1));
  std::vector<VertexId> order(n);
  for (VertexId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < k; ++i) g.set_terminal(order[i]);
  return g;
}

CapacitatedGraph random_unit_qb(std::size_t k, std::size_t centers, std::uint64_t seed) {
  if (k < 2 || centers < 1) throw Error(ErrorKind::InvalidArgument, "need k >= 2 and at least one center");
  std::mt19937_64 rng(seed);
  CapacitatedGraph g;
  for (std::size_t i = 1; i <= k; ++i) g.add_vertex("x" + std::to_string(i), true);
  const std::size_t pool_size = std::max<std::size_t>(1, centers / 2);
  std::vector<std::vector<VertexId>> pool;
  for (std::size_t p = 0; p < pool_size; ++p) {
    std::vector<VertexId> members;
    while (members.size() < 2) {
      members.clear();
      for (VertexId x = 0; x < k; ++x) {
        if (pick(rng, 2) == 0) members.push_back(x);
      }
    }
    pool.push_back(std::move(members));
  }
  for (std::size_t c = 1; c <= centers; ++c) {
    const VertexId center = g.add_vertex("c" + std::to_string(c));
    for (VertexId x : pool[pick(rng, pool.size())]) g.add_edge(center, x, Rational(1));
  }
  return g;
}

std::vector<Demand> random_demands(const CapacitatedGraph& g, std::size_t count, std::uint64_t seed) {
  const auto names = g.terminal_names();
  if (names.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 terminals");
  std::mt19937_64 rng(seed);
  std::vector<Demand> out;
  for (std::size_t i = 0; i < count; ++i) {
    Demand d;
    for (std::size_t a = 0; a < names.size(); ++a) {
      for (std::size_t b = a + 1; b < names.size(); ++b) {
        const auto value = static_cast<long>(pick(rng, 4));
        if (value > 0) d.set(names[a], names[b], Rational(value));
      }
    }
    if (d.all_zero()) d.set(names[0], names[1], Rational(1));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Demand> standard_demands(const CapacitatedGraph& g) {
  const auto names = g.terminal_names();
  std::vector<Demand> out;
  Demand uniform;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      Demand d;
      d.set(names[a], names[b], Rational(1));
      out.push_back(std::move(d));
      uniform.set(names[a], names[b], Rational(1));
    }
  }
  if (!uniform.all_zero()) out.push_back(std::move(uniform));
  return out;
}

}  // namespace sparsetree
