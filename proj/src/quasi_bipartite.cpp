#include "sparsetree/quasi_bipartite.hpp"

#include <map>
#include <optional>
#include <unordered_set>

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {

void require_quasi_bipartite(const CapacitatedGraph& graph) {
  for (const Edge& e : graph.edges()) {
    if (!graph.is_terminal(e.u) && !graph.is_terminal(e.v)) {
      throw Error(ErrorKind::NonterminalAdjacency,
                  "non-terminals '" + graph.name(e.u) + "' and '" + graph.name(e.v) + "' are adjacent");
    }
  }
}

std::string fresh_name(const CapacitatedGraph& g, std::unordered_set<std::string>& taken, std::string base) {
  while (g.find(base) || taken.contains(base)) base += "'";
  taken.insert(base);
  return base;
}

}  // namespace

Rational StarComponent::total_capacity() const {
  Rational total;
  for (const auto& [t, c] : rays) total += c;
  return total;
}

CapacitatedGraph StarComponent::as_graph() const {
  CapacitatedGraph g;
  const VertexId u = g.add_vertex(center, false);
  for (const auto& [t, c] : rays) g.add_edge(u, g.add_vertex(t, true), c);
  return g;
}

CapacitatedGraph normalize_quasi_bipartite(const CapacitatedGraph& graph) {
  require_quasi_bipartite(graph);
  CapacitatedGraph out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out.add_vertex(graph.name(v), graph.is_terminal(v));
  std::unordered_set<std::string> taken;
  for (const Edge& e : graph.edges()) {
    if (graph.is_terminal(e.u) && graph.is_terminal(e.v)) {
      const VertexId w = out.add_vertex(fresh_name(graph, taken, graph.name(e.u) + "~" + graph.name(e.v)), false);
      out.add_edge(e.u, w, e.capacity);
      out.add_edge(w, e.v, e.capacity);
    } else {
      out.add_edge(e.u, e.v, e.capacity);
    }
  }
  return out;
}

StarDecomposition decompose_stars(const CapacitatedGraph& graph) {
  require_quasi_bipartite(graph);
  StarDecomposition out;
  std::unordered_set<std::string> covered;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.is_terminal(v)) continue;
    StarComponent star{graph.name(v), {}};
    for (VertexId t : graph.neighbors(v)) {
      if (!graph.is_terminal(t)) continue;
      star.rays.emplace_back(graph.name(t), graph.capacity(v, t));
    }
    if (star.rays.empty()) continue;
    if (!out.stars.empty()) {
      MergeStep step{0, out.stars.size(), {}};
      for (const auto& [t, c] : star.rays) {
        if (covered.contains(t)) step.correspondence.pairs.emplace_back(t, t);
      }
      out.plan.steps.push_back(std::move(step));
    }
    for (const auto& [t, c] : star.rays) covered.insert(t);
    out.stars.push_back(std::move(star));
  }
  return out;
}

CapacitatedGraph weighted_star_sparsifier(const StarComponent& star) {
  if (star.rays.empty()) throw Error(ErrorKind::SingleRay, "star '" + star.center + "' has no rays");
  CapacitatedGraph h;
  for (const auto& [t, c] : star.rays) h.add_vertex(t, true);
  const Rational total = star.total_capacity();
  for (std::size_t i = 0; i < star.rays.size(); ++i) {
    for (std::size_t j = i + 1; j < star.rays.size(); ++j) {
      h.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j),
                 Rational(2) * star.rays[i].second * star.rays[j].second / total);
    }
  }
  return h;
}

CapacitatedGraph qb_sparsifier(const CapacitatedGraph& graph, Execution exec) {
  const StarDecomposition decomposition = decompose_stars(normalize_quasi_bipartite(graph));
  std::vector<CapacitatedGraph> pieces(decomposition.stars.size());
  const auto count = static_cast<std::ptrdiff_t>(pieces.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) pieces[i] = weighted_star_sparsifier(decomposition.stars[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) pieces[i] = weighted_star_sparsifier(decomposition.stars[i]);
  }

  CapacitatedGraph merged = pieces.empty() ? CapacitatedGraph{} : replay_merge_plan(pieces, decomposition.plan);
  // Terminals with no incident star still belong to the sparsifier.
  CapacitatedGraph out;
  for (VertexId t : graph.terminals()) out.add_vertex(graph.name(t), true);
  for (const Edge& e : merged.edges()) out.add_edge(merged.name(e.u), merged.name(e.v), e.capacity);
  return out;
}

std::vector<TypeGroup> group_by_type(const CapacitatedGraph& graph) {
  require_quasi_bipartite(graph);
  for (const Edge& e : graph.edges()) {
    if (e.capacity != Rational(1)) {
      throw Error(ErrorKind::NotUnitCapacities, "edge (" + graph.name(e.u) + ", " + graph.name(e.v) + ") has capacity " +
                                                    e.capacity.to_string());
    }
  }
  std::map<std::vector<VertexId>, std::size_t> slot;
  std::vector<TypeGroup> groups;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.is_terminal(v)) continue;
    const std::vector<VertexId> signature = graph.neighbors(v);
    if (signature.empty()) continue;
    auto [it, inserted] = slot.try_emplace(signature, groups.size());
    if (inserted) {
      TypeGroup group;
      for (VertexId t : signature) group.signature.push_back(graph.name(t));
      groups.push_back(std::move(group));
    }
    groups[it->second].members.push_back(graph.name(v));
  }
  return groups;
}

CapacitatedGraph exact_qb_sparsifier(const CapacitatedGraph& graph) {
  const auto groups = group_by_type(graph);
  CapacitatedGraph out;
  for (VertexId t : graph.terminals()) out.add_vertex(graph.name(t), true);
  for (const Edge& e : graph.edges()) {
    if (graph.is_terminal(e.u) && graph.is_terminal(e.v)) out.add_edge(graph.name(e.u), graph.name(e.v), e.capacity);
  }
  for (const auto& group : groups) {
    const VertexId center = out.add_vertex(group.members.front(), false);
    const Rational weight(static_cast<long>(group.members.size()));
    for (const auto& t : group.signature) out.add_edge(center, out.id(t), weight);
  }
  return out;
}

}  // namespace sparsetree
