#include "sparsetree/concurrent_flow.hpp"

#include <map>

#include "sparsetree/error.hpp"
#include "sparsetree/verify.hpp"

namespace sparsetree {

namespace {

struct Commodity {
  VertexId source;
  VertexId sink;
  Rational amount;
};

// Shortest path by rational edge lengths, O(V^2) Dijkstra with id tie-breaks.
std::optional<std::pair<Rational, std::vector<VertexId>>> shortest_path(
    const CapacitatedGraph& g, const std::map<std::pair<VertexId, VertexId>, Rational>& length, VertexId s, VertexId t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<VertexId> prev(n, kNoVertex);
  std::vector<bool> done(n, false);
  dist[s] = Rational(0);
  while (true) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (best == kNoVertex || *dist[v] < *dist[best])) best = v;
    }
    if (best == kNoVertex) return std::nullopt;
    if (best == t) break;
    done[best] = true;
    for (VertexId w : g.neighbors(best)) {
      if (done[w]) continue;
      const Rational candidate = *dist[best] + length.at(std::minmax(best, w));
      if (!dist[w] || candidate < *dist[w]) {
        dist[w] = candidate;
        prev[w] = best;
      }
    }
  }
  std::vector<VertexId> path{t};
  while (path.back() != s) path.push_back(prev[path.back()]);
  return std::make_pair(*dist[t], std::vector<VertexId>(path.rbegin(), path.rend()));
}

}  // namespace

ConcurrentFlowSolution max_concurrent_flow(const CapacitatedGraph& graph, const Demand& demand) {
  std::vector<Commodity> commodities;
  for (const auto& [key, amount] : demand.entries()) {
    auto s = graph.find(key.first);
    auto t = graph.find(key.second);
    if (!s || !graph.is_terminal(*s)) throw Error(ErrorKind::UnknownTerminal, "'" + key.first + "' is not a terminal");
    if (!t || !graph.is_terminal(*t)) throw Error(ErrorKind::UnknownTerminal, "'" + key.second + "' is not a terminal");
    commodities.push_back({*s, *t, amount});
  }
  ConcurrentFlowSolution out;
  if (commodities.empty()) {
    out.status = LpStatus::unbounded;
    return out;
  }

  // Rows: one per commodity (lambda*d - sum of its paths <= 0), one per edge.
  const auto edges = graph.edges();
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_row;
  LinearProgram lp;
  lp.variable_count = 1;
  lp.objective = {Rational(1)};
  for (const auto& c : commodities) lp.rows.push_back({{{0, c.amount}}, RowSense::less_equal, Rational(0)});
  for (const Edge& e : edges) {
    edge_row[{e.u, e.v}] = lp.rows.size();
    lp.rows.push_back({{}, RowSense::less_equal, e.capacity});
  }

  SimplexSolver solver(lp);
  std::vector<std::pair<std::size_t, std::vector<VertexId>>> columns;  // (commodity, path)
  auto add_path = [&](std::size_t c, std::vector<VertexId> path) {
    std::vector<std::pair<std::size_t, Rational>> entries{{c, Rational(-1)}};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      entries.emplace_back(edge_row.at(std::minmax(path[i], path[i + 1])), Rational(1));
    }
    solver.add_column(Rational(0), entries);
    columns.emplace_back(c, std::move(path));
  };
  for (std::size_t c = 0; c < commodities.size(); ++c) {
    const auto [s, t, amount] = commodities[c];
    if (graph.capacity(s, t).sign() > 0) add_path(c, {s, t});
    for (VertexId w : graph.neighbors(s)) {
      if (!graph.is_terminal(w) && graph.capacity(w, t).sign() > 0) add_path(c, {s, w, t});
    }
  }

  LpSolution solution;
  while (true) {
    solution = solver.solve();
    if (solution.status != LpStatus::optimal) break;
    std::map<std::pair<VertexId, VertexId>, Rational> length;
    for (const auto& [key, row] : edge_row) length[key] = solution.duals[row];
    bool added = false;
    for (std::size_t c = 0; c < commodities.size(); ++c) {
      auto best = shortest_path(graph, length, commodities[c].source, commodities[c].sink);
      if (best && best->first < solution.duals[c]) {
        add_path(c, std::move(best->second));
        added = true;
      }
    }
    ++out.pricing_rounds;
    if (!added) break;
  }

  out.status = solution.status;
  out.columns = columns.size();
  if (solution.status != LpStatus::optimal) return out;
  out.lambda = solution.objective;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Rational& f = solution.values[j + 1];
    if (f.sign() <= 0) continue;
    PathFlow pf;
    for (VertexId v : columns[j].second) pf.path.push_back(graph.name(v));
    pf.flow = f;
    out.flows.push_back(std::move(pf));
  }
  return out;
}

Rational flow_quality_lp(const CapacitatedGraph& g, const CapacitatedGraph& h) {
  const auto result = max_concurrent_flow(g, Demand::from_graph(h));
  if (result.status == LpStatus::unbounded) return Rational(0);
  if (result.lambda.sign() == 0) throw Error(ErrorKind::InvalidArgument, "sparsifier demand cannot be routed in the graph");
  return Rational(1) / result.lambda;
}

ExactVerification verify_exact(const CapacitatedGraph& g, const CapacitatedGraph& h, const std::vector<Demand>& demands,
                               const Rational& tolerance, Execution exec) {
  ExactVerification report;
  report.lambda_g.resize(demands.size());
  report.lambda_h.resize(demands.size());
  std::vector<LpStatus> status_g(demands.size()), status_h(demands.size());
  auto solve = [&](std::size_t i) {
    const auto a = max_concurrent_flow(g, demands[i]);
    const auto b = max_concurrent_flow(h, demands[i]);
    report.lambda_g[i] = a.lambda;
    report.lambda_h[i] = b.lambda;
    status_g[i] = a.status;
    status_h[i] = b.status;
  };
  const auto count = static_cast<std::int64_t>(demands.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) solve(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) solve(static_cast<std::size_t>(i));
  }
  for (std::size_t i = 0; i < demands.size(); ++i) {
    if (status_g[i] != status_h[i] || abs(report.lambda_g[i] - report.lambda_h[i]) > tolerance) {
      report.ok = false;
      report.witness_demand = i;
      break;
    }
  }

  CutQualityOptions options;
  options.exec = exec;
  const QualityReport cuts = enumerate_cut_quality(g, h, options);
  report.mincuts_equal = !cuts.unbounded && cuts.min_ratio == Rational(1) && cuts.max_ratio == Rational(1);
  if (!report.mincuts_equal) {
    report.ok = false;
    report.witness_cut = cuts.min_ratio != Rational(1) ? cuts.witness_min : cuts.witness_max;
  }
  return report;
}

}  // namespace sparsetree
