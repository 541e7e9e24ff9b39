// Internal: a subgroup representation for the base searches. Large groups
// keep their stabilizer chain; once |H| * degree is small the elements are
// listed explicitly and stabilizers become filters.
#ifndef SAXL_SRC_SEARCH_GROUP_HPP
#define SAXL_SRC_SEARCH_GROUP_HPP

#include <optional>
#include <vector>

#include "saxl/budget.hpp"
#include "saxl/perm_group.hpp"

namespace saxl::detail {

class SearchGroup {
 public:
  explicit SearchGroup(const PermGroup& g, const Deadline* deadline = nullptr);

  std::size_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// orbit_size()[p] = size of the orbit containing p.
  const std::vector<std::size_t>& orbit_size() const { return orbit_size_; }
  /// Smallest point of each orbit, increasing.
  const std::vector<Point>& orbit_reps() const { return reps_; }
  std::size_t max_orbit() const { return max_orbit_; }

  SearchGroup stabilizer(Point p) const;

 private:
  SearchGroup() = default;
  void finish();

  std::size_t degree_ = 0;
  BigInt order_ = 1;
  std::optional<PermGroup> chain_;
  std::vector<Permutation> elements_;  // used when chain_ is empty
  std::vector<std::size_t> orbit_size_;
  std::vector<Point> reps_;
  std::size_t max_orbit_ = 1;
  const Deadline* deadline_ = nullptr;
};

/// log-free lower bound: smallest t with m^t >= order (m >= 2), or 0 for the
/// trivial group.
std::size_t min_levels(const BigInt& order, std::size_t m);

}  // namespace saxl::detail

#endif  // SAXL_SRC_SEARCH_GROUP_HPP
