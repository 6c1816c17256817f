#include "sparsetree/tree_prep.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {

void require_tree(const CapacitatedGraph& tree) {
  if (!tree.is_tree()) {
    throw Error(ErrorKind::NotATree, "input with " + std::to_string(tree.vertex_count()) + " vertices and " +
                                         std::to_string(tree.edge_count()) + " edges is not a tree");
  }
}

}  // namespace

VertexId RootedTree::edge_child(VertexId a, VertexId b) const {
  if (a < parent_.size() && parent_[a] == b) return a;
  if (b < parent_.size() && parent_[b] == a) return b;
  throw Error(ErrorKind::UnknownEdge, "no tree edge between ids " + std::to_string(a) + " and " + std::to_string(b));
}

std::vector<VertexId> RootedTree::ancestors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId p = parent_.at(v); p != kNoVertex; p = parent_[p]) out.push_back(p);
  return out;
}

CapacitatedGraph prune_nonterminal_leaves(const CapacitatedGraph& tree) {
  require_tree(tree);
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> keep(n, true);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1 && !tree.is_terminal(v)) queue.push_back(v);
  }
  std::size_t remaining = n;
  while (!queue.empty() && remaining > 1) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (!keep[v]) continue;
    keep[v] = false;
    --remaining;
    for (VertexId w : tree.neighbors(v)) {
      if (!keep[w]) continue;
      if (--degree[w] <= 1 && !tree.is_terminal(w)) queue.push_back(w);
    }
  }
  return induced_subgraph(tree, keep);
}

CapacitatedGraph contract_degree2_nonterminals(const CapacitatedGraph& tree, std::optional<std::string_view> keep) {
  require_tree(tree);
  if (!tree.all_unit_capacities()) {
    throw Error(ErrorKind::NotUnitCapacities, "degree-2 contraction is only defined for unit-capacity trees");
  }
  const std::size_t n = tree.vertex_count();
  const VertexId protect = keep ? tree.id(*keep) : kNoVertex;
  std::vector<std::unordered_set<VertexId>> adj(n);
  for (const Edge& e : tree.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> alive(n, true);
  for (VertexId v = 0; v < n; ++v) {
    // Splicing v never changes its neighbours' degrees, so one pass suffices.
    if (tree.is_terminal(v) || v == protect || adj[v].size() != 2) continue;
    const VertexId a = *adj[v].begin();
    const VertexId b = *std::next(adj[v].begin());
    adj[a].erase(v);
    adj[b].erase(v);
    adj[a].insert(b);
    adj[b].insert(a);
    adj[v].clear();
    alive[v] = false;
  }
  CapacitatedGraph out;
  std::vector<VertexId> image(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) image[v] = out.add_vertex(tree.name(v), tree.is_terminal(v));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    std::vector<VertexId> sorted_adj(adj[v].begin(), adj[v].end());
    std::sort(sorted_adj.begin(), sorted_adj.end());
    for (VertexId w : sorted_adj) {
      if (v < w) out.add_edge(image[v], image[w], Rational(1));
    }
  }
  return out;
}

SplitTree split_at_internal_terminals(const CapacitatedGraph& tree) {
  require_tree(tree);
  const std::size_t n = tree.vertex_count();

  std::unordered_set<std::string> taken;
  for (VertexId v = 0; v < n; ++v) taken.insert(tree.name(v));

  // copy_of[v][i] is the split-graph vertex standing in for v on its i-th edge.
  CapacitatedGraph split;
  std::vector<std::vector<VertexId>> copy_of(n);
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) {
    nbrs[v] = tree.neighbors(v);
    const bool cut = tree.is_terminal(v) && nbrs[v].size() >= 2;
    if (!cut) {
      copy_of[v].assign(std::max<std::size_t>(nbrs[v].size(), 1), split.add_vertex(tree.name(v), tree.is_terminal(v)));
      continue;
    }
    for (std::size_t i = 0; i < nbrs[v].size(); ++i) {
      std::string name = tree.name(v);
      if (i > 0) {
        name += "#" + std::to_string(i + 1);
        while (taken.contains(name)) name += "#";
        taken.insert(name);
      }
      copy_of[v].push_back(split.add_vertex(name, true));
    }
  }
  for (const Edge& e : tree.edges()) {
    const auto iu = std::find(nbrs[e.u].begin(), nbrs[e.u].end(), e.v) - nbrs[e.u].begin();
    const auto iv = std::find(nbrs[e.v].begin(), nbrs[e.v].end(), e.u) - nbrs[e.v].begin();
    split.add_edge(copy_of[e.u][iu], copy_of[e.v][iv], e.capacity);
  }

  // Connected components of the split forest, numbered by lowest vertex id.
  std::vector<std::size_t> component(split.vertex_count(), static_cast<std::size_t>(-1));
  std::size_t count = 0;
  for (VertexId s = 0; s < split.vertex_count(); ++s) {
    if (component[s] != static_cast<std::size_t>(-1)) continue;
    std::vector<VertexId> stack{s};
    component[s] = count;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : split.neighbors(v)) {
        if (component[w] == static_cast<std::size_t>(-1)) {
          component[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }

  SplitTree out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<bool> keep(split.vertex_count());
    for (VertexId v = 0; v < split.vertex_count(); ++v) keep[v] = component[v] == c;
    out.components.push_back(induced_subgraph(split, keep));
  }
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 1; i < copy_of[v].size(); ++i) {
      if (copy_of[v][i] == copy_of[v][0]) break;
      MergeStep step{component[copy_of[v][0]], component[copy_of[v][i]], {}};
      step.correspondence.pairs.emplace_back(split.name(copy_of[v][0]), split.name(copy_of[v][i]));
      out.plan.steps.push_back(std::move(step));
    }
  }
  return out;
}

std::optional<std::string> choose_root(const CapacitatedGraph& tree) {
  std::optional<std::string> best;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (tree.is_terminal(v)) continue;
    if (!best || tree.name(v) < *best) best = tree.name(v);
  }
  return best;
}

RootedTree root_tree(const CapacitatedGraph& tree) {
  require_tree(tree);
  const std::size_t n = tree.vertex_count();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "a rooted tree needs at least two vertices");

  RootedTree rt;
  rt.graph_ = tree;
  if (n == 2 && tree.is_terminal(0) && tree.is_terminal(1)) {
    rt.degenerate_ = true;
    rt.root_ = tree.name(0) < tree.name(1) ? 0 : 1;
  } else {
    auto root = choose_root(tree);
    if (!root) throw Error(ErrorKind::NoNonterminalAvailable, "tree with more than two vertices has no non-terminal");
    rt.root_ = tree.id(*root);
    for (VertexId v = 0; v < n; ++v) {
      const bool leaf = tree.degree(v) == 1;
      if (leaf != tree.is_terminal(v)) {
        throw Error(ErrorKind::NotLeafTerminalForm,
                    "'" + tree.name(v) + (leaf ? "' is a non-terminal leaf" : "' is an internal terminal"));
      }
    }
  }

  rt.parent_.assign(n, kNoVertex);
  rt.children_.assign(n, {});
  rt.level_.assign(n, 0);
  rt.enter_.assign(n, 0);
  rt.exit_.assign(n, 0);

  std::vector<bool> seen(n, false);
  seen[rt.root_] = true;
  std::vector<VertexId> bfs{rt.root_};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const VertexId v = bfs[head];
    auto nbrs = tree.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) { return tree.name(a) < tree.name(b); });
    for (VertexId w : nbrs) {
      if (seen[w]) continue;
      seen[w] = true;
      rt.parent_[w] = v;
      rt.level_[w] = rt.level_[v] + 1;
      rt.children_[v].push_back(w);
      bfs.push_back(w);
    }
  }

  // Iterative Euler tour for subtree tests.
  int clock = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{rt.root_, 0}};
  rt.enter_[rt.root_] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < rt.children_[v].size()) {
      const VertexId c = rt.children_[v][next++];
      rt.enter_[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      rt.exit_[v] = clock++;
      stack.pop_back();
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (!tree.is_terminal(v)) rt.processing_order_.push_back(v);
  }
  std::sort(rt.processing_order_.begin(), rt.processing_order_.end(), [&](VertexId a, VertexId b) {
    if (rt.level_[a] != rt.level_[b]) return rt.level_[a] > rt.level_[b];
    return tree.name(a) < tree.name(b);
  });
  return rt;
}

SplitTree prepare_tree(const CapacitatedGraph& tree) {
  return split_at_internal_terminals(prune_nonterminal_leaves(tree));
}

}  // namespace sparsetree
