#include <functional>
#include <numeric>

#include "saxl/constructions.hpp"
#include "saxl/error.hpp"
#include "saxl/perm_io.hpp"

namespace saxl {
namespace {

struct Builder {
  CatalogEntry entry;
  std::function<PermGroup()> build;
};

std::vector<Permutation> parse_all(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> out;
  for (const char* c : cycles) out.push_back(parse_cycles(c, n));
  return out;
}

std::vector<Permutation> m11_gens() {
  return parse_all(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
}

std::vector<Permutation> psl33_gens() {
  return parse_all(13, {"(2,8,11)(3,9,13)(4,10,12)", "(1,5,2)(3,6,8)(4,7,11)(10,13,12)"});
}

PermGroup from(std::vector<Permutation> gens, std::size_t n) {
  return PermGroup::from_generators(std::move(gens), n);
}

// Moebius maps and the Frobenius on the projective line of F_8, as
// permutations of the point indices used by projective_group.
std::vector<Permutation> pgammal_8_pair_stabilizer() {
  ProjectiveLine line(Field::of_order(8));
  const Field& f = line.field();
  const Point inf = line.infinity();
  auto perm = [&](auto map) {
    std::vector<Point> img(line.size());
    for (Point x = 0; x < line.size(); ++x) img[x] = map(x);
    return Permutation(std::move(img));
  };
  Field::Elem zeta = f.primitive_element();
  return {
      perm([&](Point x) { return x == inf ? inf : f.mul(zeta, x); }),
      perm([&](Point x) -> Point { return x == inf ? 0 : x == 0 ? inf : f.inv(x); }),
      perm([&](Point x) { return x == inf ? inf : f.frobenius(x); }),
  };
}

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = {
      {{"M11", 11, "7920", "Mathieu group M11, natural action", {}},
       [] { return from(m11_gens(), 11); }},
      {{"M12", 12, "95040", "Mathieu group M12, natural action", {}},
       [] {
         auto gens = m11_gens();
         for (auto& g : gens) {
           std::vector<Point> img(g.images().begin(), g.images().end());
           img.push_back(11);
           g = Permutation(std::move(img));
         }
         gens.push_back(parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12));
         return from(std::move(gens), 12);
       }},
      {{"PSL(3,3)", 13, "5616", "PSL(3,3) on the points of the projective plane",
        {}},
       [] { return from(psl33_gens(), 13); }},
      {{"M10", 10, "720", "M10 = PSL(2,9).2 outside PSigmaL(2,9), on the projective line", {}},
       [] {
         auto psl = projective_group(ProjectiveKind::PSL, 9);
         ProjectiveLine line(Field::of_order(9));
         const Field& f = line.field();
         std::vector<Point> img(line.size());
         for (Point x = 0; x < line.size(); ++x) {
           img[x] = line.is_infinity(x) ? x : f.mul(f.primitive_element(), f.frobenius(x));
         }
         auto gens = psl.generators();
         gens.emplace_back(std::move(img));
         return from(std::move(gens), 10);
       }},
      {{"M11_12", 12, "7920", "M11 on the cosets of PSL(2,11)", {}},
       [] {
         auto h = parse_all(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,4)(5,7)(6,9)(8,11)"});
         return coset_action(from(m11_gens(), 11), h);
       }},
      {{"S5_pairs", 10, "120", "Sym(5) on 2-subsets", {}},
       [] {
         auto s5 = natural_group(NaturalKind::Sym, 5);
         return coset_action(s5, parse_all(5, {"(1,2)", "(3,4)", "(3,4,5)"}));
       }},
      {{"PSL33_144", 144, "5616", "PSL(3,3) on the cosets of 13:3", {}},
       [] {
         auto h = parse_all(13, {"(1,2,5,3,8,9,12,10,6,4,11,13,7)",
                                 "(2,3,4)(5,12,9)(6,13,10)(7,11,8)"});
         return coset_action(from(psl33_gens(), 13), h);
       }},
      {{"PGammaL2_8_pairs", 36, "1512",
        "PGammaL(2,8) on unordered pairs of distinct projective points",
        {"flag_case_vi"}},
       [] {
         return coset_action(projective_group(ProjectiveKind::PGammaL, 8),
                             pgammal_8_pair_stabilizer());
       }},
      {{"2^6.D18", 64, "1152", "2^6:D18, affine on F_64 with stabilizer <x -> c x, x -> x^8>, c of order 9",
        {"affine"}},
       [] {
         Field f = Field::of_order(64);
         Field::Elem c = f.pow(f.primitive_element(), 7);
         std::vector<Permutation> gens;
         auto perm = [&](auto map) {
           std::vector<Point> img(64);
           for (Point x = 0; x < 64; ++x) img[x] = map(x);
           return Permutation(std::move(img));
         };
         for (Field::Elem b = 1; b < 64; b *= 2) {
           gens.push_back(perm([&](Point x) { return f.add(x, b); }));
         }
         gens.push_back(perm([&](Point x) { return f.mul(c, x); }));
         gens.push_back(perm([&](Point x) { return f.pow(x, 8); }));
         return from(std::move(gens), 64);
       }},
      {{"2^6.F42", 64, "2688",
        "2^6:(7:6), sum-zero vectors of F_2^7 with AGL(1,7) permuting coordinates",
        {"affine"}},
       [] {
         std::vector<Permutation> perms{
             Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
             Permutation::from_cycles(7, {{1, 3, 2, 6, 4, 5}}),  // i -> 3i mod 7
         };
         return deleted_module_action(Field::of_order(2), 7, perms);
       }},
  };
  return table;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return entries;
}

PermGroup catalog_lookup(const std::string& name) {
  for (const auto& b : builders()) {
    if (b.entry.name != name) continue;
    check_degree(b.entry.degree, name);
    PermGroup group = b.build();
    if (group.degree() != b.entry.degree || group.order() != BigInt(b.entry.order)) {
      throw Error(Errc::InvariantViolation, "catalog entry " + name + " built with order " +
                                                group.order().str());
    }
    return group;
  }
  throw Error(Errc::UnknownName, "no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_tags(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e.tags;
  }
  return {};
}

}  // namespace saxl
