// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [--criterion N]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "sparsetree/concurrent_flow.hpp"
#include "sparsetree/instance_io.hpp"
#include "sparsetree/lower_bound.hpp"
#include "sparsetree/quasi_bipartite.hpp"
#include "sparsetree/random_instances.hpp"
#include "sparsetree/tree_prep.hpp"
#include "sparsetree/verify.hpp"
#include "sparsetree/zero_extension.hpp"

using namespace sparsetree;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void check(Outcome& o, bool condition, const std::string& what) {
  if (!condition) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Rational two_minus(std::size_t k) { return Rational(2) * (Rational(1) - Rational(1, static_cast<long>(k))); }

Outcome star_chain() {
  Outcome o;
  for (std::size_t k : {3u, 4u, 8u, 16u}) {
    const auto star = make_unit_star(k);
    const auto h = expected_sparsifier(star);
    bool uniform = h.vertex_count() == k && h.edge_count() == k * (k - 1) / 2;
    for (const auto& e : h.edges()) uniform = uniform && e.capacity == Rational(2, static_cast<long>(k));
    check(o, uniform, "k=" + std::to_string(k) + " sparsifier not uniform 2/k");
    const auto q = flow_quality_tree(star, h).quality;
    check(o, q == two_minus(k), "k=" + std::to_string(k) + " quality " + q.to_string());
    const auto lb = star_lower_bound(k);
    check(o, lb.value == q, "k=" + std::to_string(k) + " lower bound " + lb.value.to_string());
    check(o, lb.report.max_ratio == lb.value && lb.report.dominates(), "k=" + std::to_string(k) + " certificate");
  }
  if (o.pass) o.detail = "k=3,4,8,16 uniform 2/k, quality 2(1-1/k) equals lower bound";
  return o;
}

Outcome tightness_lp() {
  Outcome o;
  std::string values;
  for (std::size_t k : {2u, 3u, 4u, 5u}) {
    const Rational lp = optimal_star_sparsifier_lp(k);
    values += (values.empty() ? "" : ", ") + ("k=" + std::to_string(k) + " lp " + lp.to_string() + " want " + two_minus(k).to_string());
    check(o, lp == two_minus(k), "k=" + std::to_string(k) + " LP optimum " + lp.to_string() + " != " + two_minus(k).to_string());
  }
  o.detail = values;
  return o;
}

Outcome quality_two() {
  Outcome o;
  Rational worst(1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 10 + seed % 41;
    const std::size_t k = 2 + seed % 9;
    const auto t = random_unit_tree(n, k, 7000 + seed);
    const auto h = expected_sparsifier(t);
    const auto q = flow_quality_tree(t, h).quality;
    check(o, Rational(1) <= q && q <= Rational(2), "seed " + std::to_string(seed) + " quality " + q.to_string());
    const auto report = enumerate_cut_quality(t, h);
    check(o, report.cuts == (std::size_t{1} << (k - 1)) - 1, "seed " + std::to_string(seed) + " cut count");
    check(o, report.min_ratio >= Rational(1) && !report.unbounded, "seed " + std::to_string(seed) + " domination");
    if (q > worst) worst = q;
  }
  if (o.pass) o.detail = "100 trees, worst quality " + worst.to_string();
  return o;
}

// Probability-weighted average of every enumerated extension, per component, merged back.
CapacitatedGraph enumeration_oracle(const CapacitatedGraph& tree) {
  const auto split = prepare_tree(tree);
  std::vector<CapacitatedGraph> pieces;
  for (const auto& comp : split.components) {
    const auto rooted = root_tree(contract_degree2_nonterminals(comp, choose_root(comp)));
    std::vector<CapacitatedGraph> graphs;
    std::vector<Rational> weights;
    for (auto& [ext, p] : enumerate_zero_extensions(rooted, 10000)) {
      graphs.push_back(ext.induced);
      weights.push_back(p);
    }
    pieces.push_back(convex_combine(graphs, weights));
  }
  return replay_merge_plan(pieces, split.plan);
}

bool enumerable(const CapacitatedGraph& tree) {
  for (const auto& comp : prepare_tree(tree).components) {
    const auto rooted = root_tree(contract_degree2_nonterminals(comp, choose_root(comp)));
    if (extension_count(rooted) > Rational(10000)) return false;
  }
  return true;
}

Outcome closed_form() {
  Outcome o;
  std::vector<CapacitatedGraph> trees{make_caterpillar(), make_unit_star(3), make_unit_star(5), make_unit_star(8)};
  for (std::uint64_t seed = 0; trees.size() < 100 && seed < 1000; ++seed) {
    auto t = random_unit_tree(8 + seed % 30, 2 + seed % 7, 9000 + seed);
    if (enumerable(t)) trees.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    check(o, expected_sparsifier(trees[i]) == enumeration_oracle(trees[i]), "tree " + std::to_string(i) + " differs");
  }
  double worst = 0;
  for (const auto& g : {make_unit_star(5), make_caterpillar()}) {
    const auto tree = root_tree(g);
    const auto exact = component_sparsifier(tree);
    const auto mc = monte_carlo_sparsifier(tree, 1, 100000);
    for (const auto& e : exact.edges()) {
      const double diff = std::abs(mc.capacity(mc.id(exact.name(e.u)), mc.id(exact.name(e.v))).to_double() - e.capacity.to_double());
      worst = std::max(worst, diff);
    }
  }
  check(o, worst <= 0.01, "Monte-Carlo deviation " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream s;
    s << trees.size() << " trees equal to enumeration; Monte-Carlo max deviation " << worst;
    o.detail = s.str();
  }
  return o;
}

Outcome load_bounds() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const auto t = random_unit_tree(n, std::min<std::size_t>(n, 2 + seed % 5), 11000 + seed);
    for (const auto& comp : prepare_tree(t).components) {
      const auto tree = root_tree(contract_degree2_nonterminals(comp, choose_root(comp)));
      if (tree.degenerate() || tree.vertex_count() > 12) continue;
      const auto all = enumerate_zero_extensions(tree, 1u << 20);
      for (VertexId x : tree.graph().terminals()) {
        Rational mean;
        for (const auto& [ext, p] : all) {
          const Rational load = extension_load(tree, ext, x, tree.parent(x));
          check(o, load <= expansion_load_bound(tree, x, expansion_level(tree, ext, x)), "per-extension bound");
          mean += p * load;
          ++checked;
        }
        Rational b(1);
        for (VertexId a : tree.ancestors(x)) b *= Rational(static_cast<long>(tree.child_count(a)));
        check(o, mean <= (Rational(2) * b - Rational(1)) / b && mean < Rational(2), "expected-load bound");
      }
    }
  }
  const auto cat = root_tree(make_caterpillar());
  Rational mean;
  for (const auto& [ext, p] : enumerate_zero_extensions(cat, 100)) {
    mean += p * extension_load(cat, ext, cat.graph().id("x2"), cat.graph().id("v1"));
  }
  check(o, mean == Rational(3, 2), "caterpillar expectation " + mean.to_string());
  if (o.pass) o.detail = std::to_string(checked) + " (extension, leaf edge) loads bounded; caterpillar mean 3/2";
  return o;
}

Outcome weighted_stars() {
  Outcome o;
  const StarComponent star{"u", {{"x1", Rational(1)}, {"x2", Rational(2)}, {"x3", Rational(3)}}};
  const auto h = weighted_star_sparsifier(star);
  auto c = [&](const char* a, const char* b) { return h.capacity(h.id(a), h.id(b)); };
  check(o, c("x1", "x2") == Rational(2, 3) && c("x1", "x3") == Rational(1) && c("x2", "x3") == Rational(2), "capacities");
  const auto q = flow_quality_tree(star.as_graph(), h).quality;
  check(o, q == Rational(5, 3) && q == two_minus(6), "quality " + q.to_string());
  if (o.pass) o.detail = "capacities 2/3, 1, 2; quality 5/3";
  return o;
}

Outcome exactness() {
  Outcome o;
  std::size_t lps = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t k = 2 + i % 4;
    const std::size_t centers = 3 + i % 10;
    const auto g = random_unit_qb(k, centers, 13000 + i);
    const auto h = exact_qb_sparsifier(g);
    const auto cuts = enumerate_cut_quality(g, h);
    check(o, cuts.min_ratio == Rational(1) && cuts.max_ratio == Rational(1) && !cuts.unbounded,
          "instance " + std::to_string(i) + " mincuts");
    const auto report = verify_exact(g, h, random_demands(g, 20, 14000 + i));
    for (std::size_t d = 0; d < report.lambda_g.size(); ++d) {
      check(o, report.lambda_g[d] == report.lambda_h[d], "instance " + std::to_string(i) + " demand " + std::to_string(d));
    }
    lps += 2 * report.lambda_g.size();
    check(o, h.vertex_count() - h.terminal_count() <= (std::size_t{1} << k) - 1, "instance " + std::to_string(i) + " size");
  }
  if (o.pass) o.detail = "20 instances, mincuts equal, " + std::to_string(lps) + " LPs with zero gap";
  return o;
}

Outcome adversarial(const fs::path& dir) {
  Outcome o;
  const auto g = random_unit_qb(4, 8, 15000);
  const auto h = exact_qb_sparsifier(g);
  // Lower one ray of the center on the smallest mincut below that mincut.
  const auto report = enumerate_cut_quality(g, h);
  CapacitatedGraph bad;
  for (VertexId v = 0; v < h.vertex_count(); ++v) bad.add_vertex(h.name(v), h.is_terminal(v));
  const VertexId target = h.id(report.witness_min.front());
  const Rational mincut = terminal_mincut(g, report.witness_min);
  bool lowered = false;
  for (const auto& e : h.edges()) {
    Rational c = e.capacity;
    if (!lowered && (e.u == target || e.v == target)) {
      c = c - mincut / Rational(2) > Rational(0) ? c - mincut / Rational(2) : c / Rational(2);
      lowered = true;
    }
    bad.add_edge(e.u, e.v, c);
  }
  const auto g_path = (dir / "g.txt").string();
  const auto h_path = (dir / "h_bad.txt").string();
  std::ofstream(g_path) << serialize_instance(g);
  std::ofstream(h_path) << serialize_instance(bad);
  for (const std::string kind : {"cut", "exact"}) {
    std::ostringstream out, err;
    const int code = cli::run({"sparsetree", "verify", g_path, h_path, "--mode", kind}, out, err);
    check(o, code == 1, kind + " exit code " + std::to_string(code));
    check(o, out.str().find("witness-cut {") != std::string::npos, kind + " no witness cut");
    if (kind == "cut" && o.pass) {
      const auto text = out.str();
      const auto at = text.find("witness-cut ");
      o.detail = "exit 1, " + text.substr(at, text.find('\n', at) - at);
    }
  }
  return o;
}

Outcome determinism(const fs::path& dir) {
  Outcome o;
  const auto tree = (dir / "tree.txt").string();
  const auto config = (dir / "suite.txt").string();
  std::ofstream(tree) << serialize_instance(random_unit_tree(30, 6, 16000));
  std::ofstream(config) << "tree 10 30 6 17000\nqb 4 4 6 18000\n";
  auto twice = [&](const std::vector<std::string>& args) {
    std::ostringstream a, b, err;
    const int ca = cli::run(args, a, err);
    const int cb = cli::run(args, b, err);
    return ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  };
  check(o, twice({"sparsetree", "sample", tree, "--seed", "99", "--count", "50"}), "sample text stream");
  check(o, twice({"sparsetree", "sample", tree, "--seed", "99", "--count", "50", "--format", "json"}), "sample json stream");
  check(o, twice({"sparsetree", "bench", config}), "bench csv");
  if (o.pass) o.detail = "sample streams and bench CSV byte-identical across runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const fs::path dir = fs::temp_directory_path() / ("sparsetree_acceptance_" + std::to_string(only));
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"star optimality chain", star_chain},
      {"tightness LP", tightness_lp},
      {"quality at most 2 on random trees", quality_two},
      {"closed form equals enumeration", closed_form},
      {"load bounds", load_bounds},
      {"weighted stars", weighted_stars},
      {"exact quasi-bipartite sparsifier", exactness},
      {"adversarial detection", [&] { return adversarial(dir); }},
      {"determinism", [&] { return determinism(dir); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  fs::remove_all(dir);
  return failed == 0 ? 0 : 1;
}
