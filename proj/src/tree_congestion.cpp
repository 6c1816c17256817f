#include <algorithm>
#include <set>

#include "sparsetree/error.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

FlowCertificate tree_congestion(const CapacitatedGraph& tree, const Demand& demand) {
  if (!tree.is_tree()) throw Error(ErrorKind::NotATree, "tree_congestion needs a tree");
  const std::size_t n = tree.vertex_count();

  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<int> depth(n, 0);
  std::vector<VertexId> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId w : tree.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      order.push_back(w);
    }
  }

  // Each pair adds d at both ends and removes 2d at their meeting point; the
  // subtree sum below v is then the load on the edge from v to its parent.
  std::vector<Rational> excess(n);
  for (const auto& [key, d] : demand.entries()) {
    auto a = tree.find(key.first);
    auto b = tree.find(key.second);
    if (!a || !tree.is_terminal(*a)) throw Error(ErrorKind::UnknownTerminal, "'" + key.first + "' is not a terminal");
    if (!b || !tree.is_terminal(*b)) throw Error(ErrorKind::UnknownTerminal, "'" + key.second + "' is not a terminal");
    excess[*a] += d;
    excess[*b] += d;
    VertexId x = *a;
    VertexId y = *b;
    while (depth[x] > depth[y]) x = parent[x];
    while (depth[y] > depth[x]) y = parent[y];
    while (x != y) {
      x = parent[x];
      y = parent[y];
    }
    excess[x] -= Rational(2) * d;
  }
  std::vector<Rational> below = excess;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNoVertex) below[parent[*it]] += below[*it];
  }

  FlowCertificate cert;
  bool first = true;
  for (const Edge& e : tree.edges()) {
    const VertexId child = parent[e.u] == e.v ? e.u : e.v;
    EdgeCongestion row{tree.name(e.u), tree.name(e.v), below[child], e.capacity, below[child] / e.capacity};
    if (first || row.congestion > cert.quality) {
      cert.quality = row.congestion;
      cert.bottleneck = {row.u, row.v};
      first = false;
    }
    cert.per_edge.push_back(std::move(row));
  }
  return cert;
}

FlowCertificate flow_quality_tree(const CapacitatedGraph& tree, const CapacitatedGraph& h) {
  std::set<std::string> tree_terms;
  for (const auto& name : tree.terminal_names()) tree_terms.insert(name);
  std::set<std::string> h_vertices;
  for (VertexId v = 0; v < h.vertex_count(); ++v) h_vertices.insert(h.name(v));
  if (tree_terms != h_vertices) {
    throw Error(ErrorKind::VertexSetMismatch, "sparsifier vertices must be exactly the tree's terminals");
  }
  return tree_congestion(tree, Demand::from_graph(h));
}

}  // namespace sparsetree
