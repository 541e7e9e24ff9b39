#ifndef SAXL_CONSTRUCTIONS_HPP
#define SAXL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "saxl/field.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

/// Largest degree any constructor will produce: 10000 unless the
/// SAXL_MAX_DEGREE environment variable holds a positive integer.
std::size_t degree_cap();

/// Throws DegreeCapExceeded when `degree` is above degree_cap().
void check_degree(std::uint64_t degree, const std::string& what);

enum class NaturalKind { Sym, Alt };
enum class ProjectiveKind { PSL, PGL, PGammaL };

/// Sym(n) for n >= 1, Alt(n) for n >= 3, on {0..n-1}.
PermGroup natural_group(NaturalKind kind, std::size_t n);

/// Action on the projective line of F_q (see ProjectiveLine for the point
/// numbering). PGammaL is PGL extended by the Frobenius map, of order
/// e q (q^2 - 1) for q = p^e. PSL over an even field is PGL; `note`, when given, receives
/// a remark whenever that normalization happens.
PermGroup projective_group(ProjectiveKind kind, std::uint64_t q,
                           std::string* note = nullptr);

/// <x -> x + c (c in F_q), x -> zeta^((q-1)/d) x>, of order q*d.
PermGroup agl1_subgroup(std::uint64_t q, std::uint64_t d);

/// The sum-zero vectors of F_q^n, n = q^k - 1, under translations and
/// coordinate permutations by Sym(n). Even q requires `allow_even`.
PermGroup affine_deleted_module(std::uint64_t q, std::uint64_t k, bool allow_even = false);

/// Sum-zero vectors of F_q^n as points, generated by translations and the
/// given coordinate permutations (of degree n). Point index: coordinates
/// 0..n-2 as base-q digits, least significant first.
PermGroup deleted_module_action(const Field& field, std::size_t n,
                                const std::vector<Permutation>& coordinate_perms);

/// Point index of a sum-zero vector in deleted_module_action. Throws
/// InvariantViolation when the coordinates do not sum to zero.
Point deleted_module_point(const Field& field, const std::vector<Field::Elem>& vector);

/// Right-coset action of G on the cosets of H = <h_gens>. Throws NotSubgroup
/// or DegreeCapExceeded.
PermGroup coset_action(const PermGroup& g, const std::vector<Permutation>& h_gens);

/// Product action of L wr P on Delta^k (P of degree k). Point
/// (x_0, ..., x_{k-1}) has index sum x_i * |Delta|^i.
PermGroup wreath_product_action(const PermGroup& l, std::size_t k, const PermGroup& p);

struct CatalogEntry {
  std::string name;
  std::size_t degree;
  std::string order;  // decimal
  std::string description;
  std::vector<std::string> tags;
};

/// Entries in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog group and checks its order. Throws UnknownName.
PermGroup catalog_lookup(const std::string& name);

/// Tags of a catalog entry (empty for unknown names).
std::vector<std::string> catalog_tags(const std::string& name);

}  // namespace saxl

#endif  // SAXL_CONSTRUCTIONS_HPP
