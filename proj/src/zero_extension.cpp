#include "sparsetree/zero_extension.hpp"

#include <algorithm>
#include <random>

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {

// Unbiased draw from [0, n) that does not depend on the standard library's
// distribution implementation, so sample streams are portable.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

std::vector<VertexId> identity_on_terminals(const RootedTree& tree) {
  std::vector<VertexId> f(tree.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < f.size(); ++v) {
    if (tree.graph().is_terminal(v)) f[v] = v;
  }
  return f;
}

std::vector<VertexId> sample_retraction(const RootedTree& tree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto f = identity_on_terminals(tree);
  for (VertexId v : tree.processing_order()) {
    const auto& kids = tree.children(v);
    f[v] = f[kids[uniform_index(rng, kids.size())]];
  }
  return f;
}

ZeroExtension make_extension(const RootedTree& tree, std::vector<VertexId> f) {
  const auto& g = tree.graph();
  ZeroExtension ext;
  for (VertexId v = 0; v < f.size(); ++v) {
    if (f[v] == kNoVertex) throw Error(ErrorKind::UnmappedVertex, "'" + g.name(v) + "' has no image");
  }
  for (VertexId t : g.terminals()) ext.induced.add_vertex(g.name(t), true);
  for (const Edge& e : g.edges()) {
    if (f[e.u] != f[e.v]) ext.induced.add_edge(g.name(f[e.u]), g.name(f[e.v]), Rational(1));
  }
  ext.retraction = std::move(f);
  return ext;
}

void require_leaf_terminal(const RootedTree& tree, VertexId x) {
  const auto& g = tree.graph();
  if (x >= g.vertex_count() || !g.is_terminal(x) || g.degree(x) != 1) {
    throw Error(ErrorKind::NotALeafTerminal,
                x < g.vertex_count() ? "'" + g.name(x) + "' is not a leaf terminal" : "vertex id out of range");
  }
}

}  // namespace

ZeroExtension sample_zero_extension(const RootedTree& tree, std::uint64_t seed) {
  return make_extension(tree, sample_retraction(tree, seed));
}

Rational extension_count(const RootedTree& tree) {
  Rational n(1);
  for (VertexId v : tree.processing_order()) n *= Rational(static_cast<long>(tree.child_count(v)));
  return n;
}

std::vector<std::pair<ZeroExtension, Rational>> enumerate_zero_extensions(const RootedTree& tree,
                                                                          std::uint64_t limit) {
  const Rational total = extension_count(tree);
  if (total > Rational(static_cast<long>(limit))) {
    throw Error(ErrorKind::TooManyExtensions, total.to_string() + " extensions exceed the limit of " +
                                                  std::to_string(limit));
  }
  const auto& order = tree.processing_order();
  const Rational probability = Rational(1) / total;
  std::vector<std::size_t> choice(order.size(), 0);
  std::vector<std::pair<ZeroExtension, Rational>> out;
  while (true) {
    auto f = identity_on_terminals(tree);
    for (std::size_t i = 0; i < order.size(); ++i) f[order[i]] = f[tree.children(order[i])[choice[i]]];
    out.emplace_back(make_extension(tree, std::move(f)), probability);

    // Mixed-radix increment, last processed vertex varies fastest.
    std::size_t i = order.size();
    while (i > 0) {
      --i;
      if (++choice[i] < tree.child_count(order[i])) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (order.empty()) return out;
  }
}

Rational extension_load(const RootedTree& tree, const ZeroExtension& ext, VertexId a, VertexId b) {
  const VertexId child = tree.edge_child(a, b);
  const auto& g = tree.graph();
  Rational load;
  for (const Edge& e : ext.induced.edges()) {
    const VertexId p = g.id(ext.induced.name(e.u));
    const VertexId q = g.id(ext.induced.name(e.v));
    if (tree.in_subtree(p, child) != tree.in_subtree(q, child)) load += e.capacity;
  }
  return load;
}

int expansion_level(const RootedTree& tree, const ZeroExtension& ext, VertexId x) {
  require_leaf_terminal(tree, x);
  int level = tree.level(x);
  for (VertexId p = tree.parent(x); p != kNoVertex && ext.retraction[p] == x; p = tree.parent(p)) level = tree.level(p);
  return level;
}

Rational expansion_load_bound(const RootedTree& tree, VertexId x, int level) {
  Rational bound(1);
  for (VertexId p : tree.ancestors(x)) {
    if (tree.level(p) >= level) bound += Rational(static_cast<long>(tree.child_count(p)) - 1);
  }
  return bound;
}

bool has_connected_fibres(const RootedTree& tree, const ZeroExtension& ext) {
  // A fibre is connected iff it has exactly one vertex whose parent lies outside it.
  std::vector<int> tops(tree.vertex_count(), 0);
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    const VertexId p = tree.parent(v);
    if (p == kNoVertex || ext.retraction[p] != ext.retraction[v]) ++tops[ext.retraction[v]];
  }
  for (VertexId t : tree.graph().terminals()) {
    if (tops[t] != 1) return false;
  }
  return true;
}

std::vector<ExpandedLevelEvent> expansion_probabilities(const RootedTree& tree, VertexId x) {
  require_leaf_terminal(tree, x);
  const int mx = tree.level(x);
  if (tree.degenerate()) return {ExpandedLevelEvent{x, mx, Rational(1)}};

  // by_level[j] = ancestor of x at level j.
  std::vector<VertexId> by_level(static_cast<std::size_t>(mx));
  for (VertexId p : tree.ancestors(x)) by_level[static_cast<std::size_t>(tree.level(p))] = p;
  auto c = [&](int j) { return Rational(static_cast<long>(tree.child_count(by_level[static_cast<std::size_t>(j)]))); };

  std::vector<ExpandedLevelEvent> out;
  Rational tail(1);  // prod_{j=l}^{m_x-1} 1/c_j
  for (int l = mx; l >= 1; --l) {
    out.push_back({x, l, (Rational(1) - Rational(1) / c(l - 1)) * tail});
    tail /= c(l - 1);
  }
  out.push_back({x, 0, tail});
  return out;
}

PathProductIndex::PathProductIndex(const RootedTree& tree) : tree_(&tree) {
  const std::size_t n = tree.vertex_count();
  std::size_t depth = 1;
  while ((std::size_t{1} << depth) < n) ++depth;
  jump_.assign(depth + 1, std::vector<VertexId>(n, kNoVertex));
  root_product_.assign(n, Rational(1));

  // Parents precede children in level order.
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return tree.level(a) < tree.level(b); });
  for (VertexId v : order) {
    const VertexId p = tree.parent(v);
    jump_[0][v] = p == kNoVertex ? v : p;
    if (p != kNoVertex) root_product_[v] = root_product_[p] * Rational(static_cast<long>(tree.child_count(p)));
  }
  for (std::size_t k = 1; k < jump_.size(); ++k) {
    for (VertexId v = 0; v < n; ++v) jump_[k][v] = jump_[k - 1][jump_[k - 1][v]];
  }
}

VertexId PathProductIndex::lca(VertexId a, VertexId b) const {
  const RootedTree& t = *tree_;
  if (t.level(a) < t.level(b)) std::swap(a, b);
  int diff = t.level(a) - t.level(b);
  for (std::size_t k = 0; diff > 0; ++k, diff >>= 1) {
    if (diff & 1) a = jump_[k][a];
  }
  if (a == b) return a;
  for (std::size_t k = jump_.size(); k-- > 0;) {
    if (jump_[k][a] != jump_[k][b]) {
      a = jump_[k][a];
      b = jump_[k][b];
    }
  }
  return jump_[0][a];
}

Rational PathProductIndex::segment_product(VertexId v, VertexId ancestor) const {
  if (v == ancestor || !tree_->in_subtree(v, ancestor)) {
    throw Error(ErrorKind::InvalidArgument, "segment_product needs a strict ancestor");
  }
  return root_product_[ancestor] * Rational(static_cast<long>(tree_->child_count(ancestor))) / root_product_[v];
}

PathProductIndex build_path_product_index(const RootedTree& tree) { return PathProductIndex(tree); }

Rational closed_form_capacity(const PathProductIndex& index, VertexId x, VertexId x2) {
  const RootedTree& tree = index.tree();
  if (x == x2) throw Error(ErrorKind::SameTerminal, "'" + tree.graph().name(x) + "' paired with itself");
  require_leaf_terminal(tree, x);
  require_leaf_terminal(tree, x2);
  if (tree.degenerate()) return Rational(1);
  // (2 / c_r) * prod_{j>r} 1/c_j on both branches, written with root products.
  const VertexId r = index.lca(x, x2);
  const Rational& br = index.root_product(r);
  return Rational(2) * Rational(static_cast<long>(tree.child_count(r))) * br * br /
         (index.root_product(x) * index.root_product(x2));
}

CapacitatedGraph component_sparsifier(const RootedTree& tree, Execution exec) {
  const auto& g = tree.graph();
  const auto terminals = g.terminals();
  CapacitatedGraph out;
  for (VertexId t : terminals) out.add_vertex(g.name(t), true);
  if (tree.degenerate()) {
    const Edge e = g.edges().front();
    out.add_edge(g.name(e.u), g.name(e.v), e.capacity);
    return out;
  }

  const PathProductIndex index(tree);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<Rational> caps(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      caps[p] = closed_form_capacity(index, terminals[pairs[p].first], terminals[pairs[p].second]);
    }
  } else {
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      caps[p] = closed_form_capacity(index, terminals[pairs[p].first], terminals[pairs[p].second]);
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    out.add_edge(static_cast<VertexId>(pairs[p].first), static_cast<VertexId>(pairs[p].second), caps[p]);
  }
  return out;
}

CapacitatedGraph expected_sparsifier(const CapacitatedGraph& tree, Execution exec) {
  if (!tree.is_tree()) throw Error(ErrorKind::NotATree, "expected_sparsifier needs a tree");
  if (!tree.all_unit_capacities()) throw Error(ErrorKind::NotUnitCapacities, "expected_sparsifier needs unit capacities");
  if (tree.terminal_count() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two terminals");

  SplitTree split = prepare_tree(tree);
  std::vector<CapacitatedGraph> pieces;
  pieces.reserve(split.components.size());
  for (const auto& component : split.components) {
    const auto root = choose_root(component);
    const CapacitatedGraph reduced = root ? contract_degree2_nonterminals(component, *root) : component;
    pieces.push_back(component_sparsifier(root_tree(reduced), exec));
  }
  return replay_merge_plan(pieces, split.plan);
}

CapacitatedGraph monte_carlo_sparsifier(const RootedTree& tree, std::uint64_t first_seed, std::uint64_t count,
                                        Execution exec) {
  const auto& g = tree.graph();
  const auto terminals = g.terminals();
  const std::size_t k = terminals.size();
  std::vector<std::size_t> slot(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) slot[terminals[i]] = i;
  const auto edges = g.edges();

  std::vector<std::uint64_t> hits(k * k, 0);
  auto tally = [&](std::uint64_t i, std::vector<std::uint64_t>& local) {
    const auto f = sample_retraction(tree, first_seed + i);
    for (const Edge& e : edges) {
      if (f[e.u] == f[e.v]) continue;
      const auto [a, b] = std::minmax(slot[f[e.u]], slot[f[e.v]]);
      ++local[a * k + b];
    }
  };

  const auto n = static_cast<std::int64_t>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(k * k, 0);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) tally(static_cast<std::uint64_t>(i), local);
#pragma omp critical
      for (std::size_t s = 0; s < hits.size(); ++s) hits[s] += local[s];
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) tally(static_cast<std::uint64_t>(i), hits);
  }

  CapacitatedGraph out;
  for (VertexId t : terminals) out.add_vertex(g.name(t), true);
  if (count == 0) return out;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (hits[a * k + b] == 0) continue;
      out.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b),
                   Rational(static_cast<long>(hits[a * k + b])) / Rational(static_cast<long>(count)));
    }
  }
  return out;
}

}  // namespace sparsetree
