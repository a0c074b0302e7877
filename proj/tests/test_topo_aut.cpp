#include <gtest/gtest.h>

#include <set>

#include "rigidspace/topo_aut.hpp"
#include "support.hpp"

using namespace rigidspace;
using Type = MoveGenerator::Type;

namespace
{

constexpr std::size_t kCap = 50000;

std::set<Type> types_of(const std::vector<MoveGenerator> &moves)
{
  std::set<Type> out;
  for (auto const &m : moves)
    out.insert(m.type);
  return out;
}

std::vector<ArrowPermutation> det_kernel(int n)
{
  return filter(all_arrow_permutations(n), [](const auto &p) { return det(to_matrix(p)) == 1; });
}

// Merge class c into the basepoint class.
FactorizedGraph absorb(const FactorizedGraph &g, std::size_t c)
{
  auto classes = g.classes();
  std::size_t const base = g.basepoint_class();
  classes[base].insert(classes[base].end(), classes[c].begin(), classes[c].end());
  classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(c));
  return FactorizedGraph(g.kind(), g.degree(), classes);
}

} // namespace

TEST(FactorizedGraph, Validation)
{
  EXPECT_THROW(FactorizedGraph(GraphKind::simple, 2, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(FactorizedGraph(GraphKind::simple, 2, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(FactorizedGraph(GraphKind::simple, 2, {{0, 1}, {2}, {}}), std::invalid_argument);
  EXPECT_THROW(FactorizedGraph(GraphKind::simple, 2, {{0, 1, -2}}), std::invalid_argument);
  EXPECT_NO_THROW(FactorizedGraph(GraphKind::double_, 2, {{0}, {1, -1, 2, -2}}));
}

TEST(FactorizedGraph, Shapes)
{
  auto const axes = FactorizedGraph::axes(2);
  EXPECT_TRUE(axes.equivalent(1, -1));
  EXPECT_FALSE(axes.equivalent(1, 2));
  EXPECT_FALSE(axes.equivalent(0, 1));
  auto const point = FactorizedGraph::point(GraphKind::double_, 2);
  EXPECT_TRUE(point.equivalent(0, -2));
  auto const blocks = FactorizedGraph::blocks(IntervalPartition({2, 1}));
  EXPECT_TRUE(blocks.equivalent(1, -2));
  EXPECT_FALSE(blocks.equivalent(2, 3));
  EXPECT_EQ(blocks.classes().size(), 3u);
}

TEST(AllowedGenerators, Examples)
{
  EXPECT_EQ(types_of(allowed_generators(FactorizedGraph::one(GraphKind::simple, 4))),
            std::set<Type>{Type::cycle3});
  EXPECT_EQ(types_of(allowed_generators(FactorizedGraph::axes(3))),
            (std::set<Type>{Type::signed_swap, Type::anti_swap}));
  EXPECT_EQ(types_of(allowed_generators(FactorizedGraph::one(GraphKind::double_, 3))),
            std::set<Type>{Type::cycle4});
}

TEST(AllowedGenerators, NothingForbiddenSurvives)
{
  for (auto const &g : {FactorizedGraph::discrete(GraphKind::double_, 3), FactorizedGraph::axes(3),
                        FactorizedGraph::one(GraphKind::double_, 3),
                        FactorizedGraph::blocks(IntervalPartition({2, 1})),
                        FactorizedGraph::point(GraphKind::double_, 3)})
    for (auto const &m : allowed_generators(g))
      EXPECT_FALSE(move_forbidden(g, m)) << to_string(m);
}

TEST(Moves, PermutationsAndReversibility)
{
  MoveGenerator const c4{Type::cycle4, 0, 1, 2};
  EXPECT_FALSE(c4.reversible());
  auto const p = c4.as_permutation(2);
  EXPECT_EQ(act(p, 1), 2);
  EXPECT_EQ(act(p, 2), -1);
  EXPECT_EQ(act(p, -1), -2);
  EXPECT_EQ(act(p, -2), 1);
  EXPECT_EQ(act(p, 0), 0);

  MoveGenerator const inv{Type::inversion, 1, 0, 0};
  EXPECT_TRUE(inv.reversible());
  EXPECT_EQ(inv.as_permutation(2), (ArrowPermutation{-1, 2}));

  MoveGenerator const c3{Type::cycle3, 1, 2, 3};
  EXPECT_FALSE(c3.reversible());
  EXPECT_EQ(compose(c3.as_permutation(3), compose(c3.as_permutation(3), c3.as_permutation(3))),
            ArrowPermutation::identity(3));
}

TEST(AutGroup, Examples)
{
  EXPECT_EQ(aut_group(FactorizedGraph::one(GraphKind::simple, 3), kCap).order(), 3u);
  auto const p2plus = aut_group(FactorizedGraph::one(GraphKind::double_, 2), kCap);
  EXPECT_EQ(p2plus.order(), 4u);
  EXPECT_EQ(p2plus.elements, det_kernel(2));
  EXPECT_EQ(aut_group(FactorizedGraph::point(GraphKind::double_, 2), kCap).order(), 8u);
  // Nothing is identified, so no exchange is prohibited.
  EXPECT_EQ(aut_group(FactorizedGraph::discrete(GraphKind::double_, 2), kCap).order(), 8u);
}

TEST(AutGroup, AlternatingOrders)
{
  EXPECT_EQ(aut_group(FactorizedGraph::one(GraphKind::simple, 3), kCap).order(), 3u);
  EXPECT_EQ(aut_group(FactorizedGraph::one(GraphKind::simple, 4), kCap).order(), 12u);
  EXPECT_EQ(aut_group(FactorizedGraph::one(GraphKind::simple, 5), kCap).order(), 60u);
  EXPECT_EQ(aut_group(FactorizedGraph::point(GraphKind::simple, 5), kCap).order(), 120u);
}

TEST(AutGroup, Bounds)
{
  EXPECT_THROW(aut_group(FactorizedGraph::point(GraphKind::double_, kMaxDoubleDegree + 1), kCap),
               std::invalid_argument);
  EXPECT_THROW(aut_group(FactorizedGraph::point(GraphKind::double_, 4), 10), ClosureOverflow);
}

TEST(ExpectedLabel, Examples)
{
  EXPECT_EQ(expected_label(FactorizedGraph::axes(2))->label, GroupLabel::P_n_minus);
  EXPECT_EQ(expected_label(FactorizedGraph::point(GraphKind::simple, 3))->label, GroupLabel::S_n);
  auto const pm = expected_label(FactorizedGraph::blocks(IntervalPartition({2, 1})));
  ASSERT_TRUE(pm);
  EXPECT_EQ(pm->label, GroupLabel::P_n_pm);
  EXPECT_EQ(pm->partition, IntervalPartition({2, 1}));
  EXPECT_EQ(expected_label(FactorizedGraph::one(GraphKind::double_, 3))->label, GroupLabel::P_n_plus);
  EXPECT_EQ(expected_label(FactorizedGraph::one(GraphKind::simple, 3))->label, GroupLabel::S_n_plus);
  EXPECT_FALSE(expected_label(FactorizedGraph::discrete(GraphKind::double_, 3)));
}

TEST(VerifyCase, Examples)
{
  auto const a = verify_case(FactorizedGraph::one(GraphKind::double_, 3), kCap);
  EXPECT_EQ(a.computed_order, 24u);
  EXPECT_TRUE(a.set_equal);
  auto const b = verify_case(FactorizedGraph::one(GraphKind::simple, 4), kCap);
  EXPECT_EQ(b.computed_order, 12u);
  EXPECT_TRUE(b.set_equal);
  auto const c = verify_case(FactorizedGraph::point(GraphKind::double_, 2), kCap);
  EXPECT_EQ(c.computed_order, 8u);
  EXPECT_TRUE(c.set_equal);
}

TEST(VerifyCase, CanonicalShapesUpToFour)
{
  for (int n = 2; n <= 4; ++n) {
    for (auto const &g : {FactorizedGraph::axes(n), FactorizedGraph::one(GraphKind::double_, n),
                          FactorizedGraph::point(GraphKind::double_, n)}) {
      auto const r = verify_case(g, kCap);
      EXPECT_TRUE(r.set_equal) << n;
    }
  }
  for (int n = 2; n <= 5; ++n)
    for (auto const &g : {FactorizedGraph::one(GraphKind::simple, n),
                          FactorizedGraph::point(GraphKind::simple, n)})
      EXPECT_TRUE(verify_case(g, kCap).set_equal) << n;
}

TEST(VerifyCase, BlockShapesReachEverything)
{
  // The allowed moves of a multi-block b-graph generate all of P_n, which is
  // the closure of the composite generators, not the composite-parity kernel.
  auto const r = verify_case(FactorizedGraph::blocks(IntervalPartition({2, 1})), kCap);
  EXPECT_EQ(r.computed_order, 48u);
  EXPECT_EQ(r.expected_order, 24u);
  EXPECT_FALSE(r.set_equal);
  ASSERT_TRUE(r.equals_generator_presentation);
  EXPECT_TRUE(*r.equals_generator_presentation);

  auto const ones = verify_case(FactorizedGraph::blocks(IntervalPartition({1, 1, 1})), kCap);
  EXPECT_TRUE(ones.set_equal);
}

TEST(Parse, GraphCases)
{
  auto const g = parse_graph_case("b:n=3:classes=blocks:2+1");
  EXPECT_EQ(g.kind(), GraphKind::double_);
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(g.classes().size(), 3u);
  EXPECT_EQ(parse_graph_case("d:n=4:classes=one").classes().size(), 2u);
  EXPECT_EQ(parse_graph_case("b:n=2:classes=point").classes().size(), 1u);
  EXPECT_THROW(parse_graph_case("q:n=2:classes=one"), std::invalid_argument);
  EXPECT_THROW(parse_graph_case("b:n=2:classes=blob"), std::invalid_argument);
  EXPECT_THROW(parse_graph_case("b:n=x:classes=one"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// properties

TEST(TopoProperty, AutomorphismsFixTheBasepointAndActConsistently)
{
  for (int n = 1; n <= 4; ++n)
    for (auto const &g : {FactorizedGraph::discrete(GraphKind::double_, n), FactorizedGraph::axes(n),
                          FactorizedGraph::one(GraphKind::double_, n),
                          FactorizedGraph::point(GraphKind::double_, n)}) {
      auto const group = aut_group(g, kCap);
      for (auto const &p : group.elements) {
        EXPECT_EQ(act(p, 0), 0);
        for (Node node : graph_nodes(GraphKind::double_, n))
          EXPECT_EQ(act(p, -node), -act(p, node));
        EXPECT_TRUE(preserves_classes(p, g)) << to_string(p);
      }
    }
}

TEST(TopoProperty, SimpleShapesPreserveClasses)
{
  for (int n = 1; n <= 5; ++n)
    for (auto const &g : {FactorizedGraph::discrete(GraphKind::simple, n),
                          FactorizedGraph::one(GraphKind::simple, n),
                          FactorizedGraph::point(GraphKind::simple, n)})
      for (auto const &p : aut_group(g, kCap).elements)
        EXPECT_TRUE(preserves_classes(p, g));
}

TEST(TopoProperty, AbsorbingIntoTheBasepointNeverShrinks)
{
  prop::Gen gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    int const n = gen.integer(1, 4);
    std::optional<FactorizedGraph> g;
    switch (gen.integer(0, 3)) {
    case 0: g = FactorizedGraph::discrete(GraphKind::double_, n); break;
    case 1: g = FactorizedGraph::axes(n); break;
    case 2: g = FactorizedGraph::blocks(gen.partition(n)); break;
    default: g = FactorizedGraph::discrete(GraphKind::simple, n); break;
    }
    if (g->classes().size() < 2)
      continue;
    std::size_t c = 0;
    do
      c = static_cast<std::size_t>(gen.integer(0, static_cast<int>(g->classes().size()) - 1));
    while (c == g->basepoint_class());
    auto const coarse = absorb(*g, c);
    auto const fine_group = aut_group(*g, kCap);
    auto const coarse_group = aut_group(coarse, kCap);
    EXPECT_TRUE(std::includes(coarse_group.elements.begin(), coarse_group.elements.end(),
                              fine_group.elements.begin(), fine_group.elements.end()));
  }
}

TEST(TopoProperty, GroupsAreClosedUnderComposition)
{
  for (auto const &g : {FactorizedGraph::axes(3), FactorizedGraph::one(GraphKind::double_, 3),
                        FactorizedGraph::one(GraphKind::simple, 4)}) {
    auto const group = aut_group(g, kCap);
    for (auto const &a : group.elements)
      for (auto const &b : group.elements)
        ASSERT_TRUE(group.contains(compose(a, b)));
  }
}
