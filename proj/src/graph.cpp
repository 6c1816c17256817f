#include "sparsetree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sparsetree/error.hpp"

namespace sparsetree {

VertexId CapacitatedGraph::add_vertex(std::string_view name, bool terminal) {
  std::string key(name);
  if (index_.contains(key)) throw Error(ErrorKind::DuplicateVertex, "vertex '" + key + "' already exists");
  const auto id = static_cast<VertexId>(names_.size());
  names_.push_back(key);
  terminal_.push_back(terminal);
  adjacency_.emplace_back();
  index_.emplace(std::move(key), id);
  return id;
}

VertexId CapacitatedGraph::ensure_vertex(std::string_view name, bool terminal) {
  if (auto existing = find(name)) {
    if (terminal) terminal_[*existing] = true;
    return *existing;
  }
  return add_vertex(name, terminal);
}

void CapacitatedGraph::set_terminal(VertexId v, bool terminal) { terminal_.at(v) = terminal; }

void CapacitatedGraph::add_edge(VertexId u, VertexId v, const Rational& capacity) {
  if (u >= names_.size() || v >= names_.size()) throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at '" + names_[u] + "'");
  if (capacity.sign() <= 0) {
    throw Error(ErrorKind::NonpositiveCapacity,
                "edge (" + names_[u] + ", " + names_[v] + ") has capacity " + capacity.to_string());
  }
  auto key = std::minmax(u, v);
  auto [it, inserted] = edges_.try_emplace(key, capacity);
  if (!inserted) it->second += capacity;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void CapacitatedGraph::add_edge(std::string_view u, std::string_view v, const Rational& capacity) {
  add_edge(id(u), id(v), capacity);
}

std::size_t CapacitatedGraph::terminal_count() const {
  return static_cast<std::size_t>(std::count(terminal_.begin(), terminal_.end(), true));
}

std::optional<VertexId> CapacitatedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId CapacitatedGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

std::vector<VertexId> CapacitatedGraph::terminals() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (terminal_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::string> CapacitatedGraph::terminal_names() const {
  std::vector<std::string> out;
  for (VertexId v : terminals()) out.push_back(names_[v]);
  return out;
}

std::vector<Edge> CapacitatedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, cap] : edges_) out.push_back(Edge{key.first, key.second, cap});
  return out;
}

Rational CapacitatedGraph::capacity(VertexId u, VertexId v) const {
  auto it = edges_.find(std::minmax(u, v));
  return it == edges_.end() ? Rational(0) : it->second;
}

std::vector<VertexId> CapacitatedGraph::neighbors(VertexId v) const {
  const auto& adj = adjacency_.at(v);
  return {adj.begin(), adj.end()};
}

bool CapacitatedGraph::all_unit_capacities() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second == Rational(1); });
}

bool CapacitatedGraph::is_connected() const {
  if (names_.empty()) return true;
  std::vector<bool> seen(names_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == names_.size();
}

bool CapacitatedGraph::is_tree() const {
  return !names_.empty() && edges_.size() + 1 == names_.size() && is_connected();
}

Rational CapacitatedGraph::boundary(const std::vector<bool>& side) const {
  Rational total;
  for (const auto& [key, cap] : edges_) {
    if (side.at(key.first) != side.at(key.second)) total += cap;
  }
  return total;
}

namespace {

using CanonicalEdge = std::tuple<std::string, std::string, Rational>;

std::vector<CanonicalEdge> canonical_edges(const CapacitatedGraph& g) {
  std::vector<CanonicalEdge> out;
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(g.name(e.u), g.name(e.v));
    out.emplace_back(a, b, e.capacity);
  }
  std::sort(out.begin(), out.end(), [](const CanonicalEdge& x, const CanonicalEdge& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<std::string> all_names(const CapacitatedGraph& g) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(g.name(v));
  return out;
}

}  // namespace

bool operator==(const CapacitatedGraph& a, const CapacitatedGraph& b) {
  return sorted(all_names(a)) == sorted(all_names(b)) && sorted(a.terminal_names()) == sorted(b.terminal_names()) &&
         canonical_edges(a) == canonical_edges(b);
}

std::string describe(const CapacitatedGraph& graph) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& n : sorted(all_names(graph))) os << ' ' << n;
  os << "\nterminals:";
  for (const auto& n : sorted(graph.terminal_names())) os << ' ' << n;
  os << '\n';
  for (const auto& [a, b, cap] : canonical_edges(graph)) os << a << " -- " << b << " : " << cap << '\n';
  return os.str();
}

std::pair<std::string, std::string> Demand::key(std::string_view a, std::string_view b) {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "demand between a terminal and itself: '" + std::string(a) + "'");
  auto [lo, hi] = std::minmax(a, b);
  return {std::string(lo), std::string(hi)};
}

void Demand::set(std::string_view a, std::string_view b, const Rational& value) {
  if (value.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative demand");
  auto k = key(a, b);
  if (value.sign() == 0) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

void Demand::add(std::string_view a, std::string_view b, const Rational& value) { set(a, b, get(a, b) + value); }

Rational Demand::get(std::string_view a, std::string_view b) const {
  auto it = entries_.find(key(a, b));
  return it == entries_.end() ? Rational(0) : it->second;
}

bool Demand::all_zero() const { return entries_.empty(); }

Demand Demand::from_graph(const CapacitatedGraph& h) {
  Demand d;
  for (const Edge& e : h.edges()) d.add(h.name(e.u), h.name(e.v), e.capacity);
  return d;
}

CapacitatedGraph validate_instance(const InstanceDescription& description, const ValidationOptions& options) {
  CapacitatedGraph g;
  for (const auto& name : description.vertices) g.add_vertex(name);
  for (const auto& t : description.terminals) {
    auto v = g.find(t);
    if (!v) throw Error(ErrorKind::MissingTerminal, "terminal '" + t + "' is not a vertex");
    g.set_terminal(*v);
  }
  for (const auto& e : description.edges) {
    auto u = g.find(e.u);
    auto v = g.find(e.v);
    if (!u) throw Error(ErrorKind::UnknownVertex, "edge endpoint '" + e.u + "' is not a vertex");
    if (!v) throw Error(ErrorKind::UnknownVertex, "edge endpoint '" + e.v + "' is not a vertex");
    g.add_edge(*u, *v, e.capacity);
  }
  if (g.terminal_count() < options.min_terminals) {
    throw Error(ErrorKind::MissingTerminal, "need at least " + std::to_string(options.min_terminals) + " terminals");
  }
  if (options.require_connected && !g.is_connected()) {
    throw Error(ErrorKind::InvalidArgument, "instance is not connected");
  }
  return g;
}

CapacitatedGraph convex_combine(std::span<const CapacitatedGraph> graphs, std::span<const Rational> weights) {
  if (graphs.empty() || graphs.size() != weights.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one weight per graph and at least one graph");
  }
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative combination weight " + w.to_string());
    total += w;
  }
  if (total != Rational(1)) throw Error(ErrorKind::WeightSumNotOne, "weights sum to " + total.to_string());

  const CapacitatedGraph& first = graphs.front();
  const auto names = sorted(all_names(first));
  const auto terms = sorted(first.terminal_names());
  CapacitatedGraph out;
  for (VertexId v = 0; v < first.vertex_count(); ++v) out.add_vertex(first.name(v), first.is_terminal(v));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (sorted(all_names(g)) != names || sorted(g.terminal_names()) != terms) {
      throw Error(ErrorKind::VertexSetMismatch, "graph " + std::to_string(i) + " has a different vertex set");
    }
    if (weights[i].sign() == 0) continue;
    for (const Edge& e : g.edges()) out.add_edge(g.name(e.u), g.name(e.v), weights[i] * e.capacity);
  }
  return out;
}

CapacitatedGraph phi_merge(const CapacitatedGraph& g1, const CapacitatedGraph& g2, const TerminalCorrespondence& corr) {
  std::vector<VertexId> image(g2.vertex_count(), kNoVertex);
  std::vector<bool> used_first(g1.vertex_count(), false);
  for (const auto& [a, b] : corr.pairs) {
    auto u = g1.find(a);
    auto v = g2.find(b);
    if (!u || !g1.is_terminal(*u)) throw Error(ErrorKind::UnknownTerminal, "'" + a + "' is not a terminal of the first graph");
    if (!v || !g2.is_terminal(*v)) throw Error(ErrorKind::UnknownTerminal, "'" + b + "' is not a terminal of the second graph");
    if (used_first[*u] || image[*v] != kNoVertex) {
      throw Error(ErrorKind::NonInjectiveCorrespondence, "pair (" + a + ", " + b + ") reuses a terminal");
    }
    used_first[*u] = true;
    image[*v] = *u;
  }

  CapacitatedGraph out = g1;
  for (VertexId v = 0; v < g2.vertex_count(); ++v) {
    if (image[v] != kNoVertex) continue;
    if (out.find(g2.name(v))) {
      throw Error(ErrorKind::IdentifierCollision, "vertex '" + g2.name(v) + "' exists in both graphs but is not identified");
    }
    image[v] = out.add_vertex(g2.name(v), g2.is_terminal(v));
  }
  for (const Edge& e : g2.edges()) out.add_edge(image[e.u], image[e.v], e.capacity);
  return out;
}

CapacitatedGraph replay_merge_plan(std::span<const CapacitatedGraph> pieces, const MergePlan& plan) {
  if (pieces.empty()) return {};
  // Each piece points to the group that currently holds it; a group lives in
  // the slot of its lowest-indexed piece.
  std::vector<std::size_t> owner(pieces.size());
  std::iota(owner.begin(), owner.end(), std::size_t{0});
  std::vector<std::optional<CapacitatedGraph>> groups(pieces.begin(), pieces.end());
  auto root = [&](std::size_t i) {
    while (owner[i] != i) i = owner[i] = owner[owner[i]];
    return i;
  };
  for (const auto& step : plan.steps) {
    if (step.first >= pieces.size() || step.second >= pieces.size()) {
      throw Error(ErrorKind::InvalidArgument, "merge step references a missing piece");
    }
    const std::size_t a = root(step.first);
    const std::size_t b = root(step.second);
    if (a == b) throw Error(ErrorKind::InvalidArgument, "merge step joins a group with itself");
    CapacitatedGraph merged = phi_merge(*groups[a], *groups[b], step.correspondence);
    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    groups[keep] = std::move(merged);
    groups[drop].reset();
    owner[drop] = keep;
  }
  std::optional<CapacitatedGraph> result;
  for (auto& g : groups) {
    if (!g) continue;
    result = result ? phi_merge(*result, *g, {}) : std::move(*g);
  }
  return *result;
}

CapacitatedGraph induced_subgraph(const CapacitatedGraph& graph, const std::vector<bool>& keep) {
  CapacitatedGraph out;
  std::vector<VertexId> image(graph.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (keep.at(v)) image[v] = out.add_vertex(graph.name(v), graph.is_terminal(v));
  }
  for (const Edge& e : graph.edges()) {
    if (image[e.u] != kNoVertex && image[e.v] != kNoVertex) out.add_edge(image[e.u], image[e.v], e.capacity);
  }
  return out;
}

}  // namespace sparsetree
