#include <gtest/gtest.h>

#include "dmx/errors.hpp"
#include "dmx/ribbon.hpp"
#include "dmx/verify/generators.hpp"
#include "helpers.hpp"

using namespace dmx;
using testing_helpers::S;
using testing_helpers::sys;

namespace {

RibbonGraph loop(bool twisted) { return RibbonGraph::from_labels({{"a1", "a2"}}, {{"e", "a1", "a2", twisted}}); }

RibbonGraph theta() {
  return RibbonGraph::from_labels({{"a1", "b1", "c1"}, {"a2", "c2", "b2"}},
                                  {{"1", "a1", "a2", false}, {"2", "b1", "b2", false}, {"3", "c1", "c2", false}});
}

const RibbonGraph& named(const std::string& name) {
  static const auto graphs = verify::named_ribbon_graphs();
  for (const auto& g : graphs) {
    if (g.name == name) return g.graph;
  }
  throw std::runtime_error("no graph " + name);
}

std::vector<std::vector<int>> dart_rotations(const RibbonGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& rot : g.rotations()) {
    std::vector<int> darts;
    for (int h : rot) {
      const int e = g.edge_of(h);
      darts.push_back(2 * e + (g.edge(e).first_half == h ? 0 : 1));
    }
    out.push_back(darts);
  }
  return out;
}

int euler_genus(const RibbonGraph& g) {
  return 2 - g.vertex_count() + g.edge_count() - boundary_components(g, g.edge_ground().full());
}

}  // namespace

TEST(RibbonGraph, RejectsMalformedRotations) {
  EXPECT_THROW(RibbonGraph::from_labels({{"a1"}}, {{"e", "a1", "a2", false}}), InvalidArgument);
  EXPECT_THROW(RibbonGraph::from_labels({{"a1", "a1"}}, {{"e", "a1", "a1", false}}), InvalidArgument);
  EXPECT_THROW(RibbonGraph::from_labels({{"a1", "a2", "b1"}}, {{"e", "a1", "a2", false}}), InvalidArgument);
}

TEST(BoundaryComponents, HandTracedCases) {
  const RibbonGraph bare = RibbonGraph::from_labels({{}}, {});
  EXPECT_EQ(boundary_components(bare, S({})), 1);
  EXPECT_EQ(boundary_components(loop(false), S({1})), 2);
  EXPECT_EQ(boundary_components(loop(true), S({1})), 1);
  EXPECT_EQ(boundary_components(loop(false), S({})), 1);
  EXPECT_EQ(boundary_components(theta(), S({1, 2, 3})), 3);
  EXPECT_EQ(boundary_components(named("toroidal-theta"), S({1, 2, 3})), 1);
  EXPECT_EQ(boundary_components(named("torus-bouquet"), S({1, 2})), 1);
}

TEST(BoundaryComponents, TraceVisitsEveryCornerOnce) {
  const RibbonGraph& g = named("klein-bouquet");
  const BoundaryTrace t = trace_boundary(g, S({1, 2}));
  std::size_t points = 0;
  for (const auto& w : t.walks) points += w.points.size();
  EXPECT_EQ(points, 2U * static_cast<std::size_t>(g.half_edge_count()));
  EXPECT_EQ(static_cast<int>(t.walks.size()), t.components);
}

TEST(BoundaryComponents, MatchPermutationOracleOnUntwistedGraphs) {
  for (const auto& item : verify::ribbon_corpus(3, 150)) {
    SubsetMask twisted;
    for (int e = 0; e < item.graph.edge_count(); ++e) {
      if (item.graph.edge(e).twisted) twisted = twisted.with(e);
    }
    const RibbonGraph g = petrial(item.graph, twisted);
    const auto darts = dart_rotations(g);
    for (std::uint32_t a = 0; a < (1U << g.edge_count()); ++a) {
      EXPECT_EQ(boundary_components(g, SubsetMask(a)), oracle::orientable_faces(darts, a)) << item.name << " " << a;
    }
  }
}

TEST(QuasiTrees, Examples) {
  EXPECT_EQ(delta_matroid_of_ribbon(loop(false)).system(), SetSystem(GroundSet({"e"}), {S({})}));
  const DeltaMatroid m = delta_matroid_of_ribbon(loop(true));
  EXPECT_EQ(m.system(), SetSystem(GroundSet({"e"}), {S({}), S({1})}));
  EXPECT_EQ(parity(m), Parity::odd);
  EXPECT_EQ(delta_matroid_of_ribbon(theta()).system(), sys(3, {S({1}), S({2}), S({3})}));
  const RibbonGraph two_parts = RibbonGraph::from_labels({{"a1", "a2"}, {"b1", "b2"}},
                                                         {{"a", "a1", "a2", false}, {"b", "b1", "b2", false}});
  EXPECT_THROW(delta_matroid_of_ribbon(two_parts), InvalidArgument);
}

TEST(QuasiTrees, PlaneGraphsGiveTheirSpanningTrees) {
  // Plane square with a chord: 8 spanning trees of K4 minus an edge.
  const DeltaMatroid d = delta_matroid_of_ribbon(named("plane-square-chord"));
  EXPECT_EQ(d.family().size(), 8U);
  for (SubsetMask f : d.family()) EXPECT_EQ(f.size(), 3);
}

TEST(Petrial, Examples) {
  EXPECT_EQ(petrial(loop(false), S({1})), loop(true));
  const RibbonGraph& g = named("klein-bouquet");
  for (std::uint32_t a = 0; a < 4; ++a) EXPECT_EQ(petrial(petrial(g, SubsetMask(a)), SubsetMask(a)), g);
  const RibbonGraph all = petrial(theta(), S({1, 2, 3}));
  for (const auto& e : all.edges()) EXPECT_TRUE(e.twisted);
}

TEST(Orientability, Examples) {
  EXPECT_FALSE(is_orientable(loop(true)));
  EXPECT_TRUE(is_orientable(theta()));
  EXPECT_FALSE(is_orientable(named("twisted-digon")));
  // Twisting every edge at a vertex is a vertex flip.
  EXPECT_TRUE(is_orientable(named("twisted-theta")));
}

TEST(UnderlyingGraph, Examples) {
  EXPECT_TRUE(underlying_bipartite(theta()));
  EXPECT_FALSE(underlying_eulerian(theta()));
  EXPECT_FALSE(underlying_bipartite(loop(false)));
  EXPECT_TRUE(underlying_eulerian(loop(false)));
  const RibbonGraph& edge = named("single-edge");
  EXPECT_TRUE(underlying_bipartite(edge));
  EXPECT_FALSE(underlying_eulerian(edge));
}

TEST(NamedCorpus, NamesMatchTheSurfaces) {
  for (const auto& item : verify::named_ribbon_graphs()) {
    const RibbonGraph& g = item.graph;
    const int genus = euler_genus(g);
    const bool orientable = is_orientable(g);
    if (item.name.rfind("plane", 0) == 0 || item.name == "single-edge" || item.name == "edge-with-plane-loop") {
      EXPECT_EQ(genus, 0) << item.name;
    }
    if (item.name.rfind("toroidal", 0) == 0 || item.name == "torus-bouquet") {
      EXPECT_TRUE(orientable) << item.name;
      EXPECT_EQ(genus, 2) << item.name;
    }
    if (item.name.rfind("projective", 0) == 0 || item.name == "mobius-loop") {
      EXPECT_FALSE(orientable) << item.name;
      EXPECT_EQ(genus, 1) << item.name;
    }
    if (item.name == "klein-bouquet") {
      EXPECT_FALSE(orientable);
      EXPECT_EQ(genus, 2);
    }
    if (orientable) EXPECT_EQ(genus % 2, 0) << item.name;
    EXPECT_LE(g.edge_count(), 5);
    EXPECT_TRUE(g.is_connected());
  }
  EXPECT_GE(verify::named_ribbon_graphs().size(), 10U);
}
