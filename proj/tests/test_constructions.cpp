#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <map>

#include "oracle.hpp"
#include "saxl/constructions.hpp"
#include "saxl/error.hpp"
#include "saxl/group_spec.hpp"
#include "saxl/perm_io.hpp"

using namespace saxl;

namespace {

std::map<std::size_t, int> suborbit_lengths(const PermGroup& g) {
  std::map<std::size_t, int> lengths;
  for (const auto& orbit : g.stabilizer(0).orbits()) ++lengths[orbit.size()];
  return lengths;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvariantViolation;
}

}  // namespace

TEST(Constructions, NaturalGroups) {
  EXPECT_EQ(natural_group(NaturalKind::Sym, 4).order(), 24);
  EXPECT_EQ(natural_group(NaturalKind::Alt, 5).order(), 60);
  auto a3 = natural_group(NaturalKind::Alt, 3);
  EXPECT_EQ(a3.order(), 3);
  EXPECT_EQ(natural_group(NaturalKind::Sym, 1).order(), 1);
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_EQ(natural_group(NaturalKind::Alt, n).order() * 2,
              natural_group(NaturalKind::Sym, n).order());
  }
  EXPECT_EQ(code_of([] { natural_group(NaturalKind::Alt, 2); }), Errc::DegreeTooSmall);
  EXPECT_EQ(code_of([] { natural_group(NaturalKind::Sym, 0); }), Errc::DegreeTooSmall);
}

TEST(Constructions, ProjectiveOrdersAgainstClosure) {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    for (auto kind : {ProjectiveKind::PSL, ProjectiveKind::PGL, ProjectiveKind::PGammaL}) {
      auto g = projective_group(kind, q);
      auto elems = oracle::elements(g.generators(), q + 1);
      EXPECT_EQ(BigInt(elems.size()), g.order()) << q;
    }
  }
  EXPECT_EQ(projective_group(ProjectiveKind::PGL, 5).order(), 120);
  EXPECT_EQ(projective_group(ProjectiveKind::PSL, 7).order(), 168);
  EXPECT_EQ(projective_group(ProjectiveKind::PGammaL, 8).order(), 1512);
  EXPECT_EQ(projective_group(ProjectiveKind::PGammaL, 9).order(), 1440);
  EXPECT_EQ(projective_group(ProjectiveKind::PGammaL, 27).order(), 3 * 27 * (27 * 27 - 1));
  std::string note;
  EXPECT_EQ(projective_group(ProjectiveKind::PSL, 8, &note).order(), 504);
  EXPECT_FALSE(note.empty());
  EXPECT_EQ(code_of([] { projective_group(ProjectiveKind::PGL, 6); }), Errc::NotPrimePower);
}

TEST(Constructions, PglIsSharplyThreeTransitive) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    auto g = projective_group(ProjectiveKind::PGL, q);
    EXPECT_TRUE(g.is_k_transitive(3)) << q;
    Point pts[] = {0, 1, static_cast<Point>(q)};
    EXPECT_TRUE(g.pointwise_stabilizer(pts).is_trivial()) << q;
  }
}

TEST(Constructions, AffineSubgroups) {
  auto agl = agl1_subgroup(5, 4);
  EXPECT_EQ(agl.order(), 20);
  EXPECT_TRUE(agl.is_frobenius());
  EXPECT_EQ(agl1_subgroup(7, 3).order(), 21);
  auto s3 = agl1_subgroup(3, 2);
  EXPECT_EQ(s3.order(), 6);
  EXPECT_EQ(s3.degree(), 3u);
  EXPECT_EQ(agl1_subgroup(9, 8).order(), 72);
  EXPECT_EQ(agl1_subgroup(8, 7).order(), 56);
  EXPECT_EQ(code_of([] { agl1_subgroup(7, 4); }), Errc::NotDivisor);
}

TEST(Constructions, DeletedModule) {
  auto g = affine_deleted_module(5, 1);
  EXPECT_EQ(g.degree(), 125u);
  EXPECT_EQ(g.order(), 125 * 24);
  EXPECT_TRUE(g.is_primitive());
  auto small = affine_deleted_module(3, 1);
  EXPECT_EQ(small.degree(), 3u);
  EXPECT_EQ(small.order(), 6);
  EXPECT_EQ(affine_deleted_module(2, 2, true).order(), 4 * 6);
  EXPECT_THROW(affine_deleted_module(4, 1), Error);
  EXPECT_EQ(code_of([] { affine_deleted_module(5, 2); }), Errc::DegreeCapExceeded);
}

TEST(Constructions, CosetActions) {
  auto s4 = natural_group(NaturalKind::Sym, 4);
  auto s3 = std::vector<Permutation>{parse_cycles("(2,3)", 4), parse_cycles("(2,3,4)", 4)};
  auto natural = coset_action(s4, s3);
  EXPECT_EQ(natural.degree(), 4u);
  EXPECT_EQ(natural.order(), 24);
  EXPECT_EQ(suborbit_lengths(natural), suborbit_lengths(s4));

  auto d8 = std::vector<Permutation>{parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)};
  auto on3 = coset_action(s4, d8);
  EXPECT_EQ(on3.degree(), 3u);
  EXPECT_EQ(on3.order(), 6);

  auto m11 = catalog_lookup("M11");
  Point zero[] = {0};
  auto stab = m11.pointwise_stabilizer(zero);
  auto again = coset_action(m11, stab.generators());
  EXPECT_EQ(again.degree(), 11u);
  EXPECT_EQ(again.order(), 7920);
  EXPECT_EQ(suborbit_lengths(again), suborbit_lengths(m11));

  auto a4 = natural_group(NaturalKind::Alt, 4);
  EXPECT_EQ(code_of([&] { coset_action(a4, {parse_cycles("(1,2)", 4)}); }), Errc::NotSubgroup);
  // Deterministic labels.
  auto twice = coset_action(s4, d8);
  EXPECT_EQ(twice.generators(), on3.generators());
}

TEST(Constructions, WreathProducts) {
  auto s3 = natural_group(NaturalKind::Sym, 3);
  auto s2 = natural_group(NaturalKind::Sym, 2);
  auto w = wreath_product_action(s3, 2, s2);
  EXPECT_EQ(w.degree(), 9u);
  EXPECT_EQ(w.order(), 72);
  auto s5 = natural_group(NaturalKind::Sym, 5);
  EXPECT_EQ(wreath_product_action(s5, 2, s2).order(), 28800);
  auto agl = agl1_subgroup(5, 4);
  auto w2 = wreath_product_action(agl, 2, PermGroup::trivial(2));
  EXPECT_EQ(w2.degree(), 25u);
  EXPECT_EQ(w2.order(), 400);
  EXPECT_TRUE(w2.is_transitive());
  auto elems = oracle::elements(w.generators(), 9);
  EXPECT_EQ(elems.size(), 72u);
}

TEST(Catalog, AllEntriesBuild) {
  for (const auto& entry : catalog_entries()) {
    auto g = catalog_lookup(entry.name);
    EXPECT_EQ(g.degree(), entry.degree) << entry.name;
    EXPECT_EQ(g.order(), BigInt(entry.order)) << entry.name;
    EXPECT_TRUE(g.is_primitive()) << entry.name;
  }
  EXPECT_EQ(catalog_lookup("PSL(3,3)").order(), 5616);
  EXPECT_EQ(catalog_lookup("PSL33_144").degree(), 144u);
  EXPECT_EQ(code_of([] { catalog_lookup("M13"); }), Errc::UnknownName);
}

TEST(GroupSpecParse, RoundTrips) {
  for (const char* text : {"S:5", "A:6", "TRIV:3", "PSL2:9", "PGL2:7", "PGammaL2:8", "AGL1:7:3",
                           "AFFDEL:5:1", "AFFDEL:2:2:even", "WR:S:3:2:S:2",
                           "WR:WR:S:2:2:S:2:2:A:3", "COSET:a.txt:b.txt", "CAT:M11"}) {
    EXPECT_EQ(parse_spec(text).to_string(), text);
  }
  auto spec = parse_spec("PGL2:7");
  EXPECT_EQ(spec.kind, GroupSpec::Kind::PGL2);
  EXPECT_EQ(spec.q, 7u);
  auto del = parse_spec("AFFDEL:5:1");
  EXPECT_EQ(del.kind, GroupSpec::Kind::AffDeletedModule);
  EXPECT_EQ(del.q, 5u);
  EXPECT_EQ(del.k, 1u);
}

TEST(GroupSpecParse, Errors) {
  try {
    parse_spec("PGL2:6");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  for (const char* bad : {"", "X:3", "S", "S:x", "A:2", "AGL1:7:4", "AFFDEL:4:1", "S:4:5",
                          "WR:S:3:2", "CAT:", "PSL2:-3", "S:99999999999999999999999"}) {
    EXPECT_THROW(parse_spec(bad), ParseError) << bad;
  }
}

TEST(GroupSpecBuild, TagsAndLabels) {
  auto pgl7 = build_group(parse_spec("PGL2:7"));
  EXPECT_TRUE(pgl7.has_tag("flag_case_v"));
  ASSERT_EQ(pgl7.point_labels.size(), 8u);
  EXPECT_EQ(pgl7.point_labels.back(), "inf");
  EXPECT_FALSE(build_group(parse_spec("PGL2:5")).has_tag("flag_case_v"));
  auto psl8 = build_group(parse_spec("PSL2:8"));
  EXPECT_EQ(psl8.notes.size(), 1u);
  EXPECT_TRUE(build_group(parse_spec("CAT:PGammaL2_8_pairs")).has_tag("flag_case_vi"));
  EXPECT_EQ(build_group(parse_spec("WR:S:3:2:S:2")).group.order(), 72);
}

TEST(GroupSpecBuild, CosetFromFiles) {
  std::string dir = ::testing::TempDir();
  {
    std::ofstream g(dir + "/g.txt"), h(dir + "/h.txt");
    g << "degree 5\n(1,2)\n(1,2,3,4,5)\n";
    h << "degree 5\n(1,2)\n(3,4)\n(3,4,5)\n";
  }
  auto built = build_group(parse_spec("COSET:" + dir + "/g.txt:" + dir + "/h.txt"));
  EXPECT_EQ(built.group.degree(), 10u);
  EXPECT_EQ(built.group.order(), 120);
  EXPECT_EQ(code_of([] { build_group(parse_spec("COSET:/nonexistent:/nonexistent")); }),
            Errc::IoError);
}

TEST(DegreeCap, EnvironmentOverride) {
  ::setenv("SAXL_MAX_DEGREE", "50", 1);
  EXPECT_EQ(degree_cap(), 50u);
  EXPECT_EQ(code_of([] { affine_deleted_module(5, 1); }), Errc::DegreeCapExceeded);
  ::setenv("SAXL_MAX_DEGREE", "garbage", 1);
  EXPECT_EQ(degree_cap(), 10000u);
  ::unsetenv("SAXL_MAX_DEGREE");
  EXPECT_EQ(degree_cap(), 10000u);
}
