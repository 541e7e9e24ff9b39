#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "oracle.hpp"
#include "saxl/error.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/perm_io.hpp"

using namespace saxl;

namespace {

PermGroup group(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, n));
  return PermGroup::from_generators(gens, n);
}

PermGroup m11() { return group(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}); }

PermGroup m12() {
  return group(12, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"});
}

}  // namespace

TEST(PermGroup, SymmetricAndTrivialOrders) {
  EXPECT_EQ(group(4, {"(1,2)", "(1,2,3,4)"}).order(), 24);
  auto trivial = PermGroup::from_generators({}, 5);
  EXPECT_EQ(trivial.order(), 1);
  EXPECT_TRUE(trivial.base().empty());
  EXPECT_EQ(group(3, {"()"}).order(), 1);
  EXPECT_THROW(PermGroup::from_generators({}, 0), Error);
}

TEST(PermGroup, MathieuOrders) {
  EXPECT_EQ(m11().order(), 7920);
  EXPECT_EQ(m12().order(), 95040);
  EXPECT_TRUE(m11().is_k_transitive(4));
  EXPECT_FALSE(m11().is_k_transitive(5));
  EXPECT_TRUE(m12().is_k_transitive(5));
}

TEST(PermGroup, LargeSymmetricGroupOrder) {
  std::vector<Point> cycle(40);
  for (Point i = 0; i < 40; ++i) cycle[i] = i;
  auto g = PermGroup::from_generators(
      {Permutation::from_cycles(40, {{0, 1}}), Permutation::from_cycles(40, {cycle})}, 40);
  BigInt fact = 1;
  for (int i = 2; i <= 40; ++i) fact *= i;
  EXPECT_EQ(g.order(), fact);
}

TEST(PermGroup, MembershipInAlt4) {
  auto a4 = group(4, {"(1,2,3)", "(2,3,4)"});
  EXPECT_EQ(a4.order(), 12);
  EXPECT_TRUE(a4.contains(parse_cycles("(1,2)(3,4)", 4)));
  EXPECT_FALSE(a4.contains(parse_cycles("(1,2)", 4)));
  EXPECT_THROW(a4.contains(Permutation(5)), Error);
}

TEST(PermGroup, OrbitsAndStabilizers) {
  auto g = group(7, {"(1,2,3)", "(4,5)"});
  std::vector<std::vector<Point>> expected{{0, 1, 2}, {3, 4}, {5}, {6}};
  EXPECT_EQ(g.orbits(), expected);
  EXPECT_TRUE(g.fixes(5));
  EXPECT_FALSE(g.fixes(0));
  auto s5 = group(5, {"(1,2)", "(1,2,3,4,5)"});
  Point pts[] = {4, 1};
  auto stab = s5.pointwise_stabilizer(pts);
  EXPECT_EQ(stab.order(), 6);
  EXPECT_TRUE(stab.fixes(1));
  EXPECT_TRUE(stab.fixes(4));
  EXPECT_EQ(s5.stabilizer(2).order(), 24);
}

TEST(PermGroup, ChangeOfBasePrefix) {
  auto g = m11();
  Point prefix[] = {7, 3, 10};
  auto chain = g.chain_with_prefix(prefix);
  ASSERT_GE(chain.levels().size(), 3u);
  EXPECT_EQ(chain.levels()[0].base, 7u);
  EXPECT_EQ(chain.levels()[1].base, 3u);
  EXPECT_EQ(chain.levels()[2].base, 10u);
  EXPECT_EQ(chain.order(), 7920);
}

TEST(PermGroup, Predicates) {
  auto c4 = group(4, {"(1,2,3,4)"});
  EXPECT_TRUE(c4.is_transitive());
  EXPECT_FALSE(c4.is_primitive());
  EXPECT_TRUE(c4.is_semiregular());
  EXPECT_FALSE(c4.is_frobenius());
  // AGL(1,5) = <x+1, 2x>
  auto agl = group(5, {"(1,2,3,4,5)", "(2,3,5,4)"});
  EXPECT_EQ(agl.order(), 20);
  EXPECT_TRUE(agl.is_primitive());
  EXPECT_TRUE(agl.is_frobenius());
  EXPECT_TRUE(agl.is_k_transitive(2));
  EXPECT_FALSE(agl.is_k_transitive(3));
  EXPECT_THROW(agl.is_k_transitive(6), Error);
  EXPECT_TRUE(m11().is_primitive());
  EXPECT_FALSE(m11().is_frobenius());
}

TEST(PermGroup, SuborbitRepresentatives) {
  auto d8 = group(4, {"(1,2,3,4)", "(2,4)"});
  EXPECT_EQ(d8.suborbit_representatives(0), (std::vector<Point>{1, 2}));
  auto intrans = group(4, {"(1,2)"});
  EXPECT_THROW(intrans.suborbit_representatives(0), Error);
}

TEST(PermGroup, ElementEnumerationMatchesClosure) {
  auto g = group(6, {"(1,2,3)(4,5)", "(1,6)(2,3)"});
  auto elems = oracle::elements(g.generators(), 6);
  std::unordered_set<Permutation> seen;
  g.for_each_element([&](const Permutation& x) { EXPECT_TRUE(seen.insert(x).second); });
  EXPECT_EQ(BigInt(seen.size()), g.order());
  EXPECT_EQ(seen.size(), elems.size());
  for (const auto& x : elems) EXPECT_TRUE(seen.count(x));
}

// Random subgroups of Sym(n): chain order equals the closure size, and
// membership agrees with the closure on random permutations.
TEST(PermGroupProperty, RandomGroupsAgreeWithClosure) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<Permutation> gens;
    std::size_t k = rng() % 3;
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<Point> img(n);
      for (Point p = 0; p < n; ++p) img[p] = p;
      // Sparse generators keep some groups small.
      std::size_t swaps = 1 + rng() % 2;
      for (std::size_t s = 0; s < swaps; ++s) std::swap(img[rng() % n], img[rng() % n]);
      gens.emplace_back(std::move(img));
    }
    auto g = PermGroup::from_generators(gens, n);
    auto elems = oracle::elements(gens, n);
    ASSERT_EQ(g.order(), BigInt(elems.size()));
    std::unordered_set<Permutation> set(elems.begin(), elems.end());
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<Point> img(n);
      for (Point p = 0; p < n; ++p) img[p] = p;
      std::shuffle(img.begin(), img.end(), rng);
      Permutation x(std::move(img));
      EXPECT_EQ(g.contains(x), set.count(x) > 0);
    }
    for (Point p = 0; p < n; ++p) {
      auto stab = g.stabilizer(p);
      std::size_t expected = 0;
      for (const auto& e : elems) expected += e[p] == p;
      EXPECT_EQ(stab.order(), BigInt(expected));
    }
  }
}
