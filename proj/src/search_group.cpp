#include "search_group.hpp"

#include <algorithm>

namespace saxl::detail {
namespace {

// Element lists are used below this many stored image entries.
constexpr std::size_t kExplicitEntries = std::size_t{1} << 22;

bool small_enough(const BigInt& order, std::size_t degree) {
  return order * degree <= kExplicitEntries;
}

}  // namespace

SearchGroup::SearchGroup(const PermGroup& g, const Deadline* deadline)
    : degree_(g.degree()), order_(g.order()), deadline_(deadline) {
  if (small_enough(order_, degree_)) {
    g.for_each_element([this](const Permutation& x) { elements_.push_back(x); });
  } else {
    chain_ = g;
  }
  finish();
}

void SearchGroup::finish() {
  orbit_size_.assign(degree_, 1);
  reps_.clear();
  max_orbit_ = 1;
  std::vector<std::vector<Point>> orbits;
  if (chain_) {
    orbits = chain_->orbits();
  } else {
    std::vector<bool> seen(degree_, false);
    std::vector<bool> in_orbit(degree_, false);
    for (Point p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      std::vector<Point> orbit;
      for (const auto& x : elements_) {
        Point q = x[p];
        if (!in_orbit[q]) {
          in_orbit[q] = true;
          orbit.push_back(q);
        }
      }
      for (Point q : orbit) {
        seen[q] = true;
        in_orbit[q] = false;
      }
      orbits.push_back(std::move(orbit));
    }
  }
  for (const auto& orbit : orbits) {
    Point rep = orbit.front();
    for (Point q : orbit) {
      orbit_size_[q] = orbit.size();
      rep = std::min(rep, q);
    }
    reps_.push_back(rep);
    max_orbit_ = std::max(max_orbit_, orbit.size());
  }
  std::sort(reps_.begin(), reps_.end());
}

SearchGroup SearchGroup::stabilizer(Point p) const {
  if (deadline_) deadline_->check("base search");
  SearchGroup result;
  result.degree_ = degree_;
  result.deadline_ = deadline_;
  if (chain_) {
    PermGroup stab = chain_->stabilizer(p, deadline_);
    result.order_ = stab.order();
    if (small_enough(result.order_, degree_)) {
      stab.for_each_element([&](const Permutation& x) { result.elements_.push_back(x); });
    } else {
      result.chain_ = std::move(stab);
    }
  } else {
    for (const auto& x : elements_) {
      if (x[p] == p) result.elements_.push_back(x);
    }
    result.order_ = result.elements_.size();
  }
  result.finish();
  return result;
}

std::size_t min_levels(const BigInt& order, std::size_t m) {
  if (order <= 1) return 0;
  if (m < 2) return static_cast<std::size_t>(-1);
  std::size_t t = 0;
  BigInt power = 1;
  while (power < order) {
    power *= m;
    ++t;
  }
  return t;
}

}  // namespace saxl::detail
