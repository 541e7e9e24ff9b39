#include "saxl/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "saxl/error.hpp"

namespace saxl {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }

  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Merges the classes; the smaller representative wins.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Point> parent_;
};

std::vector<Point> bfs_orbit(const std::vector<Permutation>& gens, Point start,
                             std::vector<bool>& seen) {
  std::vector<Point> orbit{start};
  seen[start] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      Point q = g[orbit[i]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::shared_ptr<const StabChain> chain)
    : degree_(degree), gens_(std::move(gens)), chain_(std::move(chain)) {
  order_ = chain_->order();
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens,
                                     std::size_t degree,
                                     std::optional<BigInt> known_order,
                                     const Deadline* deadline) {
  if (degree == 0) {
    throw Error(Errc::DegreeTooSmall, "permutation groups need degree >= 1");
  }
  std::vector<Permutation> kept;
  std::set<Permutation> seen;
  for (auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(Errc::MixedDegree, "generator of degree " +
                                         std::to_string(g.degree()) +
                                         " for a group of degree " +
                                         std::to_string(degree));
    }
    if (!g.is_identity() && seen.insert(g).second) kept.push_back(std::move(g));
  }
  StabChain::Options options;
  options.known_order = std::move(known_order);
  options.deadline = deadline;
  auto chain = std::make_shared<const StabChain>(StabChain::build(degree, kept, options));
  return PermGroup(degree, std::move(kept), std::move(chain));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return from_generators({}, degree);
}

PermGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree) {
  return PermGroup::from_generators(std::move(gens), degree);
}

void PermGroup::check_point(Point p) const {
  if (p >= degree_) {
    throw Error(Errc::PointOutOfRange, "point " + std::to_string(p) +
                                           " outside degree " +
                                           std::to_string(degree_));
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> result;
  for (const auto& level : chain_->levels()) result.push_back(level.base);
  return result;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> result;
  for (const auto& level : chain_->levels()) result.push_back(level.orbit_size());
  return result;
}

bool PermGroup::contains(const Permutation& p) const { return chain_->contains(p); }

std::vector<Point> PermGroup::orbit(Point point) const {
  check_point(point);
  std::vector<bool> seen(degree_, false);
  return bfs_orbit(gens_, point, seen);
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orbit = bfs_orbit(gens_, p, seen);
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<std::size_t> PermGroup::orbit_ids() const {
  std::vector<std::size_t> ids(degree_);
  auto all = orbits();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (Point p : all[i]) ids[p] = i;
  }
  return ids;
}

bool PermGroup::fixes(Point point) const {
  check_point(point);
  return std::all_of(gens_.begin(), gens_.end(),
                     [point](const Permutation& g) { return g[point] == point; });
}

StabChain PermGroup::chain_with_prefix(std::span<const Point> prefix,
                                       const Deadline* deadline) const {
  StabChain::Options options;
  options.base_prefix.assign(prefix.begin(), prefix.end());
  options.known_order = order_;
  options.keep_trivial_levels = true;
  options.deadline = deadline;
  auto strong = chain_->strong_generators();
  return StabChain::build(degree_, strong, options);
}

PermGroup PermGroup::stabilizer(Point point, const Deadline* deadline) const {
  check_point(point);
  if (fixes(point)) return *this;
  const auto& levels = chain_->levels();
  StabChain tail;
  if (!levels.empty() && levels.front().base == point) {
    tail = chain_->tail(1);
  } else {
    Point prefix[] = {point};
    tail = chain_with_prefix(prefix, deadline).tail(1);
  }
  std::vector<Permutation> gens;
  if (!tail.levels().empty()) gens = tail.levels().front().gens;
  return PermGroup(degree_, std::move(gens),
                   std::make_shared<const StabChain>(std::move(tail)));
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points,
                                          const Deadline* deadline) const {
  auto sorted = normalize_points(points, degree_);
  PermGroup result = *this;
  for (Point p : sorted) {
    if (result.is_trivial()) break;
    result = result.stabilizer(p, deadline);
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermGroup::is_k_transitive(std::size_t k) const {
  if (k > degree_) {
    throw Error(Errc::KTooLarge, "k = " + std::to_string(k) +
                                     " exceeds degree " + std::to_string(degree_));
  }
  PermGroup current = *this;
  for (std::size_t i = 0; i < k; ++i) {
    // After stabilizing 0..i-1 the group must be transitive on the rest.
    Point next = static_cast<Point>(i);
    if (current.orbit(next).size() != degree_ - i) return false;
    current = current.stabilizer(next);
  }
  return true;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) return false;
  for (Point beta : suborbit_representatives(0)) {
    // Smallest block containing {0, beta} by union-find closure.
    UnionFind classes(degree_);
    classes.unite(0, beta);
    std::vector<std::pair<Point, Point>> pending{{0, beta}};
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      for (const auto& g : gens_) {
        Point x = classes.find(g[a]);
        Point y = classes.find(g[b]);
        if (classes.unite(x, y)) pending.emplace_back(x, y);
      }
    }
    Point root = classes.find(0);
    for (Point p = 0; p < degree_; ++p) {
      if (classes.find(p) != root) return false;
    }
  }
  return true;
}

bool PermGroup::is_semiregular() const {
  for (const auto& orbit : orbits()) {
    if (BigInt(orbit.size()) != order_) return false;
  }
  return true;
}

bool PermGroup::is_frobenius() const {
  if (!is_transitive() || is_semiregular()) return false;
  PermGroup point_stab = stabilizer(0);
  for (const auto& orbit : point_stab.orbits()) {
    if (orbit.size() == 1 && orbit.front() == 0) continue;
    if (BigInt(orbit.size()) != point_stab.order()) return false;
  }
  return true;
}

std::vector<Point> PermGroup::suborbit_representatives(Point alpha) const {
  check_point(alpha);
  if (!is_transitive()) {
    throw Error(Errc::NotTransitive, "suborbits need a transitive group");
  }
  std::vector<Point> reps;
  for (const auto& orbit : stabilizer(alpha).orbits()) {
    if (orbit.front() == alpha && orbit.size() == 1) continue;
    reps.push_back(orbit.front());
  }
  return reps;
}

void PermGroup::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  const auto& levels = chain_->levels();
  std::vector<std::vector<Permutation>> transversals;
  for (const auto& level : levels) {
    std::vector<Permutation> reps;
    for (const auto& inv : level.inv_transversal) reps.push_back(inv.inverse());
    transversals.push_back(std::move(reps));
  }
  // Every element factors uniquely as u_m * ... * u_1 with u_l from level l.
  std::function<void(std::size_t, const Permutation&)> descend =
      [&](std::size_t remaining, const Permutation& acc) {
        if (remaining == 0) {
          visit(acc);
          return;
        }
        for (const auto& u : transversals[remaining - 1]) descend(remaining - 1, acc * u);
      };
  descend(levels.size(), Permutation(degree_));
}

}  // namespace saxl
