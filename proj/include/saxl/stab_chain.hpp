#ifndef SAXL_STAB_CHAIN_HPP
#define SAXL_STAB_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "saxl/budget.hpp"
#include "saxl/permutation.hpp"

namespace saxl {

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// strong generators that fix all earlier base points, with an explicit
/// inverse transversal (inv_transversal[i] maps orbit[i] back to base).
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;
  std::vector<Permutation> inv_transversal;

  bool in_orbit(Point p) const { return position[p] >= 0; }
  std::size_t orbit_size() const { return orbit.size(); }
};

/// Deterministic Schreier-Sims stabilizer chain. Immutable once built.
class StabChain {
 public:
  struct Options {
    /// Points that must open the base, in order.
    std::vector<Point> base_prefix;
    /// When known, construction stops as soon as the orbit product reaches
    /// it; a mismatch after full verification is an InvariantViolation.
    std::optional<BigInt> known_order;
    /// Keep prefix levels whose basic orbit is a single point.
    bool keep_trivial_levels = false;
    const Deadline* deadline = nullptr;
  };

  struct SiftResult {
    Permutation residue;
    /// Index of the level where sifting stopped; levels().size() when the
    /// element passed through every level.
    std::size_t level;
  };

  StabChain() = default;

  static StabChain build(std::size_t degree, std::span<const Permutation> gens,
                         const Options& options);
  static StabChain build(std::size_t degree, std::span<const Permutation> gens) {
    return build(degree, gens, Options{});
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  BigInt order() const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  /// The chain of the stabilizer of the first `from_level` base points, with
  /// single-point levels removed.
  StabChain tail(std::size_t from_level) const;

  /// Union of the generators stored on all levels, in order of first use.
  std::vector<Permutation> strong_generators() const;

 private:
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

}  // namespace saxl

#endif  // SAXL_STAB_CHAIN_HPP
