#include <gtest/gtest.h>

#include "sparsetree/error.hpp"
#include "sparsetree/graph.hpp"
#include "sparsetree/random_instances.hpp"

using namespace sparsetree;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

CapacitatedGraph star_at(const std::string& center) {
  CapacitatedGraph g;
  for (const char* x : {"x1", "x2", "x3"}) g.add_vertex(x, true);
  for (const char* x : {"x1", "x2", "x3"}) {
    if (center != x) g.add_edge(center, x, Rational(1));
  }
  return g;
}

}  // namespace

TEST(Graph, MergesParallelEdges) {
  CapacitatedGraph g;
  g.add_vertex("a", true);
  g.add_vertex("b", true);
  g.add_edge("a", "b", Rational(1));
  g.add_edge("b", "a", Rational(1));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.capacity(0, 1), Rational(2));
}

TEST(Graph, Rejections) {
  CapacitatedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  EXPECT_EQ(kind_of([&] { g.add_edge("a", "a", Rational(1)); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([&] { g.add_edge("a", "b", Rational(0)); }), ErrorKind::NonpositiveCapacity);
  EXPECT_EQ(kind_of([&] { g.add_vertex("a"); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([&] { g.id("zz"); }), ErrorKind::UnknownVertex);
}

TEST(Graph, ValidateInstance) {
  InstanceDescription d{{"x1", "v", "x2"}, {"x1", "x2"}, {{"x1", "v", Rational(1)}, {"v", "x2", Rational(1)}}};
  const auto g = validate_instance(d, {true, 2});
  EXPECT_EQ(g.terminal_count(), 2u);
  EXPECT_TRUE(g.is_tree());

  d.edges.push_back({"x1", "v", Rational(1)});
  EXPECT_EQ(validate_instance(d).capacity(0, 1), Rational(2));

  InstanceDescription bad = d;
  bad.terminals.push_back("nope");
  EXPECT_EQ(kind_of([&] { validate_instance(bad); }), ErrorKind::MissingTerminal);
  bad = d;
  bad.edges.push_back({"x1", "x2", Rational(0)});
  EXPECT_EQ(kind_of([&] { validate_instance(bad); }), ErrorKind::NonpositiveCapacity);
  bad = d;
  bad.edges.push_back({"x2", "x2", Rational(1)});
  EXPECT_EQ(kind_of([&] { validate_instance(bad); }), ErrorKind::SelfLoop);
  InstanceDescription split{{"a", "b", "c", "d"}, {"a", "c"}, {{"a", "b", Rational(1)}, {"c", "d", Rational(1)}}};
  EXPECT_NO_THROW(validate_instance(split));
  EXPECT_EQ(kind_of([&] { validate_instance(split, {true, 0}); }), ErrorKind::InvalidArgument);
}

TEST(Graph, NameBasedEquality) {
  CapacitatedGraph a, b;
  a.add_vertex("p", true);
  a.add_vertex("q", true);
  a.add_edge("p", "q", Rational(1, 2));
  b.add_vertex("q", true);
  b.add_vertex("p", true);
  b.add_edge("q", "p", Rational(1, 2));
  EXPECT_EQ(a, b);
  b.add_edge("q", "p", Rational(1, 2));
  EXPECT_FALSE(a == b);
}

TEST(Demand, Rules) {
  Demand d;
  d.set("b", "a", Rational(2));
  EXPECT_EQ(d.get("a", "b"), Rational(2));
  d.add("a", "b", Rational(1));
  EXPECT_EQ(d.get("b", "a"), Rational(3));
  EXPECT_THROW(d.set("a", "a", Rational(1)), Error);
  EXPECT_THROW(d.set("a", "b", Rational(-1)), Error);
  d.set("a", "b", Rational(0));
  EXPECT_TRUE(d.all_zero());
}

TEST(ConvexCombine, TwoStars) {
  const std::vector<CapacitatedGraph> graphs{star_at("x1"), star_at("x2")};
  const std::vector<Rational> weights{Rational(1, 2), Rational(1, 2)};
  const auto h = convex_combine(graphs, weights);
  EXPECT_EQ(h.capacity(h.id("x1"), h.id("x2")), Rational(1));
  EXPECT_EQ(h.capacity(h.id("x1"), h.id("x3")), Rational(1, 2));
  EXPECT_EQ(h.capacity(h.id("x2"), h.id("x3")), Rational(1, 2));
}

TEST(ConvexCombine, IdentityAndThreeContractions) {
  const std::vector<CapacitatedGraph> one{star_at("x1")};
  const std::vector<Rational> w1{Rational(1)};
  EXPECT_EQ(convex_combine(one, w1), star_at("x1"));

  const std::vector<CapacitatedGraph> three{star_at("x1"), star_at("x2"), star_at("x3")};
  const std::vector<Rational> w3(3, Rational(1, 3));
  const auto h = convex_combine(three, w3);
  for (const auto& e : h.edges()) EXPECT_EQ(e.capacity, Rational(2, 3));
  EXPECT_EQ(h.edge_count(), 3u);
}

TEST(ConvexCombine, Errors) {
  const std::vector<CapacitatedGraph> graphs{star_at("x1"), star_at("x2")};
  const std::vector<Rational> bad{Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(kind_of([&] { convex_combine(graphs, bad); }), ErrorKind::WeightSumNotOne);
  CapacitatedGraph other = star_at("x1");
  other.add_vertex("extra");
  const std::vector<CapacitatedGraph> mismatched{star_at("x1"), other};
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(kind_of([&] { convex_combine(mismatched, half); }), ErrorKind::VertexSetMismatch);
}

TEST(ConvexCombine, CutLinearity) {
  const std::vector<CapacitatedGraph> graphs{star_at("x1"), star_at("x2"), star_at("x3")};
  const std::vector<Rational> w{Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  const auto h = convex_combine(graphs, w);
  for (unsigned mask = 1; mask < 7; ++mask) {
    std::vector<bool> side(3);
    for (unsigned i = 0; i < 3; ++i) side[i] = (mask >> i) & 1;
    Rational expected;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<bool> s(3);
      for (VertexId v = 0; v < 3; ++v) s[graphs[i].id(h.name(v))] = side[v];
      expected += w[i] * graphs[i].boundary(s);
    }
    EXPECT_EQ(h.boundary(side), expected);
  }
}

TEST(PhiMerge, PathFromTwoEdges) {
  CapacitatedGraph g1, g2;
  g1.add_vertex("x1", true);
  g1.add_vertex("t", true);
  g1.add_edge("x1", "t", Rational(1));
  g2.add_vertex("t'", true);
  g2.add_vertex("x2", true);
  g2.add_edge("t'", "x2", Rational(1));
  const auto m = phi_merge(g1, g2, {{{"t", "t'"}}});
  EXPECT_EQ(m.vertex_count(), 3u);
  EXPECT_EQ(m.terminal_count(), 3u);
  EXPECT_EQ(m.capacity(m.id("x1"), m.id("t")), Rational(1));
  EXPECT_EQ(m.capacity(m.id("t"), m.id("x2")), Rational(1));
  EXPECT_FALSE(m.find("t'").has_value());
}

TEST(PhiMerge, SharedPairCapacitiesAdd) {
  auto k3 = [](const std::string& a, const std::string& b, const std::string& c) {
    CapacitatedGraph g;
    for (const auto& x : {a, b, c}) g.add_vertex(x, true);
    g.add_edge(a, b, Rational(1));
    g.add_edge(b, c, Rational(1));
    g.add_edge(a, c, Rational(1));
    return g;
  };
  const auto m = phi_merge(k3("a", "b", "c"), k3("a2", "b2", "d"), {{{"a", "a2"}, {"b", "b2"}}});
  EXPECT_EQ(m.terminal_count(), 4u);
  EXPECT_EQ(m.capacity(m.id("a"), m.id("b")), Rational(2));
  EXPECT_EQ(m.capacity(m.id("a"), m.id("d")), Rational(1));
}

TEST(PhiMerge, Errors) {
  CapacitatedGraph g1, g2;
  g1.add_vertex("a", true);
  g1.add_vertex("b", true);
  g1.add_vertex("v");
  g2.add_vertex("c", true);
  g2.add_vertex("d", true);
  g2.add_vertex("v");
  EXPECT_EQ(kind_of([&] { phi_merge(g1, g2, {{{"a", "c"}, {"b", "c"}}}); }), ErrorKind::NonInjectiveCorrespondence);
  EXPECT_EQ(kind_of([&] { phi_merge(g1, g2, {{{"a", "zz"}}}); }), ErrorKind::UnknownTerminal);
  EXPECT_EQ(kind_of([&] { phi_merge(g1, g2, {{{"v", "c"}}}); }), ErrorKind::UnknownTerminal);
  EXPECT_EQ(kind_of([&] { phi_merge(g1, g2, {{{"a", "c"}}}); }), ErrorKind::IdentifierCollision);
}

TEST(PhiMerge, AssociativeOnChain) {
  auto edge = [](const std::string& a, const std::string& b) {
    CapacitatedGraph g;
    g.add_vertex(a, true);
    g.add_vertex(b, true);
    g.add_edge(a, b, Rational(1));
    return g;
  };
  const auto left = phi_merge(phi_merge(edge("a", "b"), edge("b2", "c"), {{{"b", "b2"}}}), edge("c2", "d"),
                              {{{"c", "c2"}}});
  const auto right = phi_merge(edge("a", "b"), phi_merge(edge("b2", "c"), edge("c2", "d"), {{{"c", "c2"}}}),
                               {{{"b", "b2"}}});
  EXPECT_EQ(left, right);
}

TEST(Fixtures, Shapes) {
  const auto cat = make_caterpillar();
  EXPECT_TRUE(cat.is_tree());
  EXPECT_EQ(cat.terminal_count(), 3u);
  const auto star = make_unit_star(5);
  EXPECT_EQ(star.degree(star.id("v")), 5u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_unit_tree(30, 6, seed);
    EXPECT_TRUE(t.is_tree());
    EXPECT_EQ(t.terminal_count(), 6u);
    EXPECT_EQ(t, random_unit_tree(30, 6, seed));
  }
}
