#ifndef SAXL_PERM_GROUP_HPP
#define SAXL_PERM_GROUP_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "saxl/permutation.hpp"
#include "saxl/stab_chain.hpp"

namespace saxl {

/// A permutation group on {0, ..., degree-1} together with a verified
/// stabilizer chain. Immutable after construction; copies share the chain.
class PermGroup {
 public:
  /// Builds the chain by deterministic Schreier-Sims. When `known_order` is
  /// given, construction stops once the chain reaches that order, so it must
  /// be correct; callers that cannot vouch for it should leave it empty.
  static PermGroup from_generators(std::vector<Permutation> gens,
                                   std::size_t degree,
                                   std::optional<BigInt> known_order = {},
                                   const Deadline* deadline = nullptr);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  const StabChain& chain() const noexcept { return *chain_; }

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  bool contains(const Permutation& p) const;

  /// Orbit of `point`, listed in BFS order (generators applied in order).
  std::vector<Point> orbit(Point point) const;

  /// All orbits, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;

  /// orbit_id[p] = index of p's orbit in orbits().
  std::vector<std::size_t> orbit_ids() const;

  /// Points fixed by the whole group.
  bool fixes(Point point) const;

  /// G_(S), via a change of base that puts S first.
  PermGroup pointwise_stabilizer(std::span<const Point> points,
                                 const Deadline* deadline = nullptr) const;
  PermGroup stabilizer(Point point, const Deadline* deadline = nullptr) const;

  /// A chain for the same group whose base starts with `prefix`; prefix
  /// levels with trivial basic orbits are kept.
  StabChain chain_with_prefix(std::span<const Point> prefix,
                              const Deadline* deadline = nullptr) const;

  bool is_transitive() const;
  bool is_k_transitive(std::size_t k) const;
  bool is_primitive() const;
  bool is_semiregular() const;
  bool is_frobenius() const;

  /// Smallest point of each orbit of G_alpha on the remaining points.
  std::vector<Point> suborbit_representatives(Point alpha) const;

  /// Visits every element exactly once (in chain order).
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> gens,
            std::shared_ptr<const StabChain> chain);

  void check_point(Point p) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabChain> chain_;
  BigInt order_ = 1;
};

/// Free-function spellings of the group entry points.
PermGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree);

}  // namespace saxl

#endif  // SAXL_PERM_GROUP_HPP
