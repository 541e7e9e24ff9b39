#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "random_groups.hpp"
#include "saxl/base_engine.hpp"
#include "saxl/constructions.hpp"
#include "saxl/error.hpp"
#include "saxl/perm_io.hpp"

using namespace saxl;

namespace {

PermGroup sym(std::size_t n) { return natural_group(NaturalKind::Sym, n); }
PermGroup alt(std::size_t n) { return natural_group(NaturalKind::Alt, n); }

std::vector<Permutation> all_elements(const PermGroup& g) {
  std::vector<Permutation> out;
  g.for_each_element([&](const Permutation& x) { out.push_back(x); });
  return out;
}

}  // namespace

TEST(BaseEngine, IsBase) {
  auto s4 = sym(4);
  EXPECT_TRUE(is_base(s4, std::vector<Point>{0, 1, 2}));
  EXPECT_FALSE(is_base(s4, std::vector<Point>{0, 1}));
  auto pgl5 = projective_group(ProjectiveKind::PGL, 5);
  for (Point a = 0; a < 6; ++a)
    for (Point b = a + 1; b < 6; ++b)
      for (Point c = b + 1; c < 6; ++c) EXPECT_TRUE(is_base(pgl5, std::vector<Point>{a, b, c}));
  EXPECT_THROW(is_base(s4, std::vector<Point>{7}), Error);
}

TEST(BaseEngine, KnownBaseSizes) {
  for (std::size_t n = 4; n <= 8; ++n) {
    EXPECT_EQ(base_size(sym(n)), n - 1);
    EXPECT_EQ(base_size(alt(n)), n - 2);
  }
  for (std::uint64_t q : {5, 7, 9}) {
    EXPECT_EQ(base_size(projective_group(ProjectiveKind::PGL, q)), 3u);
  }
  EXPECT_EQ(base_size(affine_deleted_module(5, 1)), 2u);
  EXPECT_EQ(base_size(PermGroup::trivial(4)), 0u);
  EXPECT_EQ(base_size(natural_group(NaturalKind::Sym, 2)), 1u);
  EXPECT_EQ(base_size(catalog_lookup("M11")), 4u);
  EXPECT_EQ(base_size(catalog_lookup("M12")), 5u);
}

TEST(BaseEngine, MinimalBasesOfSmallGroups) {
  auto s4 = minimal_bases(sym(4));
  EXPECT_EQ(s4.size(), 4u);
  auto agl = minimal_bases(agl1_subgroup(5, 4));
  EXPECT_EQ(agl.size(), 10u);
  EXPECT_EQ(agl.front(), (Edge{0, 1}));
  auto c4 = PermGroup::from_generators({parse_cycles("(1,2,3,4)", 4)}, 4);
  try {
    minimal_bases(c4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BaseSizeTooSmall);
  }
}

TEST(BaseEngine, EdgeBudget) {
  BaseSearchConfig cfg;
  cfg.max_edges = 5;
  try {
    minimal_bases(agl1_subgroup(5, 4), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
  BaseSearchConfig tight;
  tight.max_base_size = 3;
  EXPECT_THROW(base_size(sym(8), tight), Error);
}

TEST(BaseEngine, Adjacency) {
  auto s4 = sym(4);
  for (Point a = 0; a < 4; ++a)
    for (Point b = 0; b < 4; ++b)
      if (a != b) EXPECT_TRUE(is_adjacent(s4, a, b));
  auto s3 = sym(3);
  EXPECT_TRUE(is_adjacent(s3, 0, 2));
  EXPECT_FALSE(is_adjacent(s3, 1, 1));
  EXPECT_THROW(is_adjacent(s3, 0, 3), Error);
}

TEST(BaseEngine, ExtendToMinimalBase) {
  auto s4 = sym(4);
  auto e = extend_to_minimal_base(s4, std::vector<Point>{0, 1});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->size(), 3u);
  EXPECT_EQ((*e)[0], 0u);
  EXPECT_EQ((*e)[1], 1u);
  EXPECT_FALSE(extend_to_minimal_base(s4, std::vector<Point>{0, 1, 2, 3}));
  auto pgl5 = projective_group(ProjectiveKind::PGL, 5);
  auto f = extend_to_minimal_base(pgl5, std::vector<Point>{4});
  ASSERT_TRUE(f);
  EXPECT_EQ(f->size(), 3u);
  EXPECT_TRUE(std::count(f->begin(), f->end(), 4u));
  // A fixed point is never part of a minimum base.
  auto g = PermGroup::from_generators({parse_cycles("(1,2,3)", 4)}, 4);
  EXPECT_FALSE(extend_to_minimal_base(g, std::vector<Point>{3}));
}

// Deleted module for q = 5: vertex 0 and v = (1, -1, 0, 0), adjacency by
// brute force over all minimum bases.
TEST(BaseEngine, DeletedModuleAdjacencyMatchesEdges) {
  auto g = affine_deleted_module(5, 1);
  auto edges = minimal_bases(g);
  std::set<Edge> edge_set(edges.begin(), edges.end());
  Point v = 1 + 4 * 5;  // coordinates (1, 4, 0, 0): digits little-endian base 5
  bool expected = edge_set.count(Edge{0, v}) > 0;
  EXPECT_EQ(is_adjacent(g, 2, 0, v, {}), expected);
  for (Point b = 1; b < 125; ++b) {
    EXPECT_EQ(is_adjacent(g, 2, 0, b, {}), edge_set.count(Edge{0, b}) > 0) << b;
  }
}

TEST(BaseEngine, EdgeDumpRoundTrip) {
  EdgeDump dump{4, 3, minimal_bases(sym(4))};
  std::ostringstream out;
  write_edge_dump(out, dump);
  EXPECT_EQ(out.str(), "# degree 4, base_size 3, edges 4\n1,2,3\n1,2,4\n1,3,4\n2,3,4\n");
  std::istringstream in(out.str());
  auto back = read_edge_dump(in);
  EXPECT_EQ(back.edges, dump.edges);
  std::istringstream bad("# degree 4, base_size 3, edges 1\n1,2,5\n");
  EXPECT_THROW(read_edge_dump(bad), ParseError);
  std::istringstream short_edge("# degree 4, base_size 3, edges 1\n1,2\n");
  EXPECT_THROW(read_edge_dump(short_edge), ParseError);
}

// Random and named groups of degree <= 12 and order <= 5000 against the
// subset-enumeration oracle, plus structural properties of every edge set.
TEST(BaseEngineProperty, MatchesOracle) {
  std::mt19937 rng(31337);
  std::vector<PermGroup> groups;
  for (int i = 0; i < 80; ++i) groups.push_back(random_group(rng, 3 + rng() % 8, 5000));
  groups.push_back(sym(5));
  groups.push_back(alt(6));
  groups.push_back(projective_group(ProjectiveKind::PSL, 11));
  groups.push_back(projective_group(ProjectiveKind::PGL, 7));
  groups.push_back(agl1_subgroup(11, 5));
  for (const auto& g : groups) {
    auto elems = all_elements(g);
    std::size_t b = oracle::base_size(elems, g.degree());
    ASSERT_EQ(base_size(g), b);
    if (b < 2) continue;
    auto edges = minimal_bases(g);
    ASSERT_EQ(edges, oracle::minimal_bases(elems, g.degree(), b));
    std::set<Edge> edge_set(edges.begin(), edges.end());
    for (const auto& e : edges) {
      EXPECT_TRUE(is_base(g, e));
      for (std::size_t drop = 0; drop < e.size(); ++drop) {
        Edge smaller = e;
        smaller.erase(smaller.begin() + static_cast<long>(drop));
        EXPECT_FALSE(is_base(g, smaller));
      }
      for (const auto& x : g.generators()) {
        Edge image;
        for (Point p : e) image.push_back(x[p]);
        std::sort(image.begin(), image.end());
        EXPECT_TRUE(edge_set.count(image));
      }
    }
    // Adjacency agrees with the edge set on all pairs.
    for (Point a = 0; a < g.degree(); ++a) {
      for (Point c = a + 1; c < g.degree(); ++c) {
        bool together = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
          return std::count(e.begin(), e.end(), a) && std::count(e.begin(), e.end(), c);
        });
        EXPECT_EQ(is_adjacent(g, b, a, c, {}), together);
      }
    }
  }
}
