#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sparsetree/error.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

namespace {

struct Arc {
  std::size_t to;
  Rational residual;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : out_(n) {}

  // Undirected edge: two arcs that are each other's reverse.
  void add_undirected(std::size_t u, std::size_t v, const Rational& cap) { add(u, v, cap, cap); }
  void add_directed(std::size_t u, std::size_t v, const Rational& cap) { add(u, v, cap, Rational(0)); }

  Rational run(std::size_t s, std::size_t t) {
    Rational total;
    std::vector<std::size_t> via(out_.size());
    while (true) {
      std::fill(via.begin(), via.end(), kNone);
      std::deque<std::size_t> queue{s};
      via[s] = kRoot;
      while (!queue.empty() && via[t] == kNone) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t a : out_[v]) {
          const Arc& arc = arcs_[a];
          if (via[arc.to] == kNone && arc.residual.sign() > 0) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[t] == kNone) return total;
      Rational push = arcs_[via[t]].residual;
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].residual);
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].residual -= push;
        arcs_[via[v] ^ 1].residual += push;
      }
      total += push;
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kRoot = static_cast<std::size_t>(-2);

  void add(std::size_t u, std::size_t v, const Rational& forward, const Rational& backward) {
    out_[u].push_back(arcs_.size());
    arcs_.push_back({v, forward});
    out_[v].push_back(arcs_.size());
    arcs_.push_back({u, backward});
  }

  std::vector<std::vector<std::size_t>> out_;
  std::vector<Arc> arcs_;
};

}  // namespace

Rational max_flow(const CapacitatedGraph& graph, const std::vector<VertexId>& sources, const std::vector<VertexId>& sinks) {
  if (sources.empty() || sinks.empty()) throw Error(ErrorKind::EmptySide, "max_flow needs nonempty sources and sinks");
  std::unordered_set<VertexId> source_set(sources.begin(), sources.end());
  for (VertexId v : sinks) {
    if (source_set.contains(v)) throw Error(ErrorKind::OverlappingSets, "'" + graph.name(v) + "' is both source and sink");
  }
  const std::size_t n = graph.vertex_count();
  Rational unbounded(1);
  FlowNetwork net(n + 2);
  for (const Edge& e : graph.edges()) {
    net.add_undirected(e.u, e.v, e.capacity);
    unbounded += e.capacity;
  }
  for (VertexId s : sources) net.add_directed(n, s, unbounded);
  for (VertexId t : sinks) net.add_directed(t, n + 1, unbounded);
  return net.run(n, n + 1);
}

Rational terminal_mincut(const CapacitatedGraph& graph, const std::vector<std::string>& side) {
  std::vector<bool> in_side(graph.vertex_count(), false);
  for (const auto& name : side) {
    auto v = graph.find(name);
    if (!v || !graph.is_terminal(*v)) throw Error(ErrorKind::UnknownTerminal, "'" + name + "' is not a terminal");
    in_side[*v] = true;
  }
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  for (VertexId t : graph.terminals()) (in_side[t] ? sources : sinks).push_back(t);
  if (sources.empty() || sinks.empty()) throw Error(ErrorKind::EmptySide, "terminal cut has an empty side");
  return max_flow(graph, sources, sinks);
}

}  // namespace sparsetree
