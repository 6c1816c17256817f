#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sparsetree/error.hpp"
#include "sparsetree/random_instances.hpp"
#include "sparsetree/tree_prep.hpp"
#include "sparsetree/verify.hpp"

using namespace sparsetree;

namespace {

CapacitatedGraph path(const std::vector<std::pair<std::string, bool>>& vertices) {
  CapacitatedGraph g;
  for (const auto& [name, terminal] : vertices) g.add_vertex(name, terminal);
  for (VertexId i = 0; i + 1 < vertices.size(); ++i) g.add_edge(i, i + 1, Rational(1));
  return g;
}

}  // namespace

TEST(Prune, DanglingLeaf) {
  auto g = path({{"x1", true}, {"v", false}, {"x2", true}});
  g.add_vertex("w");
  g.add_edge("v", "w", Rational(1));
  const auto pruned = prune_nonterminal_leaves(g);
  EXPECT_EQ(pruned, path({{"x1", true}, {"v", false}, {"x2", true}}));
}

TEST(Prune, FixedPointAndChains) {
  const auto cat = make_caterpillar();
  EXPECT_EQ(prune_nonterminal_leaves(cat), cat);
  auto g = path({{"x1", true}, {"v", false}, {"x2", true}});
  g.add_vertex("w1");
  g.add_vertex("w2");
  g.add_vertex("w3");
  g.add_edge("v", "w1", Rational(1));
  g.add_edge("w1", "w2", Rational(1));
  g.add_edge("w2", "w3", Rational(1));
  EXPECT_EQ(prune_nonterminal_leaves(g).vertex_count(), 3u);
  CapacitatedGraph cyc = path({{"a", true}, {"b", false}, {"c", true}});
  cyc.add_edge("a", "c", Rational(1));
  EXPECT_THROW(prune_nonterminal_leaves(cyc), Error);
}

TEST(Contract, PathCollapses) {
  const auto g = contract_degree2_nonterminals(path({{"x1", true}, {"v1", false}, {"v2", false}, {"x2", true}}));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.capacity(g.id("x1"), g.id("x2")), Rational(1));
}

TEST(Contract, StarUnchangedAndKeep) {
  const auto star = make_unit_star(4);
  EXPECT_EQ(contract_degree2_nonterminals(star), star);
  const auto cat = make_caterpillar();
  EXPECT_EQ(contract_degree2_nonterminals(cat, "v0"), cat);
  EXPECT_EQ(contract_degree2_nonterminals(cat).vertex_count(), 4u);
  EXPECT_THROW(contract_degree2_nonterminals(make_star({Rational(1), Rational(2)})), Error);
}

TEST(Contract, SizeBoundOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = prune_nonterminal_leaves(random_unit_tree(40, 6, seed));
    const auto split = split_at_internal_terminals(t);
    for (const auto& comp : split.components) {
      const auto c = contract_degree2_nonterminals(comp);
      EXPECT_LE(c.vertex_count(), 2 * c.terminal_count()) << "seed " << seed;
    }
  }
}

TEST(Split, PathThroughTerminal) {
  const auto g = path({{"x1", true}, {"t", true}, {"x2", true}});
  const auto s = split_at_internal_terminals(g);
  ASSERT_EQ(s.components.size(), 2u);
  ASSERT_EQ(s.plan.steps.size(), 1u);
  EXPECT_EQ(s.plan.steps[0].correspondence.pairs.size(), 1u);
  EXPECT_EQ(s.plan.steps[0].correspondence.pairs[0].first, "t");
  EXPECT_EQ(s.plan.steps[0].correspondence.pairs[0].second, "t#2");
  EXPECT_EQ(replay_merge_plan(s.components, s.plan), g);
}

TEST(Split, NoInternalTerminalAndSpider) {
  const auto cat = make_caterpillar();
  const auto s = split_at_internal_terminals(cat);
  EXPECT_EQ(s.components.size(), 1u);
  EXPECT_TRUE(s.plan.steps.empty());

  CapacitatedGraph spider;
  spider.add_vertex("c", true);
  for (int i = 1; i <= 3; ++i) {
    const std::string leg = "l" + std::to_string(i);
    const std::string foot = "f" + std::to_string(i);
    spider.add_vertex(leg);
    spider.add_vertex(foot, true);
    spider.add_edge("c", leg, Rational(1));
    spider.add_edge(leg, foot, Rational(1));
  }
  const auto sp = split_at_internal_terminals(spider);
  EXPECT_EQ(sp.components.size(), 3u);
  EXPECT_EQ(replay_merge_plan(sp.components, sp.plan), spider);
}

TEST(Split, ReplayReconstructsRandomTrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto t = prune_nonterminal_leaves(random_unit_tree(25, 8, seed));
    const auto s = split_at_internal_terminals(t);
    EXPECT_EQ(replay_merge_plan(s.components, s.plan), t) << "seed " << seed;
    for (const auto& comp : s.components) {
      for (VertexId v = 0; v < comp.vertex_count(); ++v) {
        if (comp.is_terminal(v)) EXPECT_LE(comp.degree(v), 1u);
      }
    }
  }
}

TEST(RootTree, StarAndCaterpillar) {
  const auto star = root_tree(make_unit_star(3));
  EXPECT_EQ(star.graph().name(star.root()), "v");
  EXPECT_EQ(star.child_count(star.root()), 3u);
  for (VertexId x : star.graph().terminals()) EXPECT_EQ(star.level(x), 1);

  const auto cat = root_tree(make_caterpillar());
  const auto& g = cat.graph();
  EXPECT_EQ(g.name(cat.root()), "v0");
  EXPECT_EQ(cat.level(g.id("v0")), 0);
  EXPECT_EQ(cat.level(g.id("x1")), 1);
  EXPECT_EQ(cat.level(g.id("v1")), 1);
  EXPECT_EQ(cat.level(g.id("x2")), 2);
  EXPECT_EQ(cat.level(g.id("x3")), 2);
  EXPECT_EQ(cat.child_count(g.id("v0")), 2u);
  EXPECT_EQ(cat.child_count(g.id("v1")), 2u);
  EXPECT_TRUE(cat.in_subtree(g.id("x2"), g.id("v1")));
  EXPECT_FALSE(cat.in_subtree(g.id("x1"), g.id("v1")));
  EXPECT_EQ(cat.edge_child(g.id("v1"), g.id("x2")), g.id("x2"));
  EXPECT_THROW(cat.edge_child(g.id("x1"), g.id("x2")), Error);
  ASSERT_EQ(cat.processing_order().size(), 2u);
  EXPECT_EQ(g.name(cat.processing_order()[0]), "v1");
}

TEST(RootTree, DegenerateAndErrors) {
  const auto edge = root_tree(path({{"x2", true}, {"x1", true}}));
  EXPECT_TRUE(edge.degenerate());
  EXPECT_EQ(edge.graph().name(edge.root()), "x1");
  try {
    root_tree(path({{"a", true}, {"b", true}, {"c", true}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoNonterminalAvailable);
  }
  auto g = path({{"x1", true}, {"v", false}, {"w", false}});
  EXPECT_THROW(root_tree(g), Error);
}

TEST(RootTree, Deterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto prepared = prepare_tree(random_unit_tree(20, 5, seed));
    for (const auto& comp : prepared.components) {
      if (comp.vertex_count() < 2 || (comp.vertex_count() > 2 && !choose_root(comp))) continue;
      const auto a = root_tree(comp);
      const auto b = root_tree(comp);
      EXPECT_EQ(a.root(), b.root());
      for (VertexId v = 0; v < comp.vertex_count(); ++v) {
        EXPECT_EQ(a.parent(v), b.parent(v));
        EXPECT_EQ(a.children(v), b.children(v));
      }
    }
  }
}

TEST(Preprocess, MincutsPreserved) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 6 + seed % 20;
    const std::size_t k = 2 + seed % 4;
    const auto t = random_unit_tree(n, k, seed);
    const auto prepared = prepare_tree(t);
    std::vector<CapacitatedGraph> contracted;
    for (const auto& comp : prepared.components) contracted.push_back(contract_degree2_nonterminals(comp));
    const auto rebuilt = replay_merge_plan(contracted, prepared.plan);
    CutQualityOptions options;
    options.exec = Execution::serial;
    const auto report = enumerate_cut_quality(t, rebuilt, options);
    EXPECT_EQ(report.min_ratio, Rational(1)) << "seed " << seed;
    EXPECT_EQ(report.max_ratio, Rational(1)) << "seed " << seed;
  }
}
