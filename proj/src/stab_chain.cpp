#include "saxl/stab_chain.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "saxl/error.hpp"

namespace saxl {
namespace {

// Explicit transversals cost degree * orbit entries per level; refuse chains
// that would need more than ~1 GiB of them.
constexpr std::size_t kMaxTransversalEntries = std::size_t{1} << 28;

class Builder {
 public:
  Builder(std::size_t degree, const Deadline* deadline)
      : degree_(degree), deadline_(deadline) {}

  std::vector<ChainLevel>& levels() { return levels_; }

  void add_level(Point base) {
    ChainLevel level;
    level.base = base;
    level.position.assign(degree_, -1);
    level.position[base] = 0;
    level.orbit.push_back(base);
    level.inv_transversal.emplace_back(degree_);
    levels_.push_back(std::move(level));
    applied_.emplace_back();
    checked_.emplace_back();
    account(1);
  }

  void add_generator(std::size_t l, const Permutation& g) {
    levels_[l].gens.push_back(g);
    applied_[l].push_back(0);
    checked_[l].push_back(0);
    extend_orbit(l);
  }

  BigInt order() const {
    BigInt result = 1;
    for (const auto& level : levels_) result *= level.orbit_size();
    return result;
  }

  StabChain::SiftResult sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const ChainLevel& level = levels_[l];
      Point image = g[level.base];
      if (!level.in_orbit(image)) return {std::move(g), l};
      g *= level.inv_transversal[level.position[image]];
    }
    return {std::move(g), levels_.size()};
  }

  /// Runs the Schreier-Sims verification loop. Returns early once the
  /// orbit product equals `target`.
  void complete(const std::optional<BigInt>& target) {
    if (target && order() == *target) return;
    std::size_t ticks = 0;
    long i = static_cast<long>(levels_.size()) - 1;
    while (i >= 0) {
      bool extended = false;
      auto& level = levels_[i];
      for (std::size_t s = 0; !extended && s < level.gens.size(); ++s) {
        while (checked_[i][s] < level.orbit.size()) {
          if ((++ticks & 0xff) == 0 && deadline_) {
            deadline_->check("stabilizer chain construction");
          }
          std::size_t t = checked_[i][s]++;
          Permutation h = schreier_generator(level, t, s);
          if (h.is_identity()) continue;
          auto [residue, j] = sift(std::move(h), i + 1);
          if (j == levels_.size() && residue.is_identity()) continue;
          if (j == levels_.size()) add_level(*residue.smallest_moved_point());
          for (std::size_t l = i + 1; l <= j; ++l) add_generator(l, residue);
          if (target && order() == *target) return;
          i = static_cast<long>(j);
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

 private:
  // u_beta * x * u_{beta^x}^{-1}, where u maps the base point to beta.
  Permutation schreier_generator(const ChainLevel& level, std::size_t t,
                                 std::size_t s) const {
    const Permutation& x = level.gens[s];
    Point gamma = x[level.orbit[t]];
    Permutation u_beta = level.inv_transversal[t].inverse();
    const Permutation& back = level.inv_transversal[level.position[gamma]];
    std::vector<Point> images(degree_);
    for (Point p = 0; p < degree_; ++p) images[p] = back[x[u_beta[p]]];
    return Permutation(std::move(images));
  }

  void extend_orbit(std::size_t l) {
    ChainLevel& level = levels_[l];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t s = 0; s < level.gens.size(); ++s) {
        const Permutation& x = level.gens[s];
        std::optional<Permutation> x_inv;
        while (applied_[l][s] < level.orbit.size()) {
          std::size_t t = applied_[l][s]++;
          Point gamma = x[level.orbit[t]];
          if (level.in_orbit(gamma)) continue;
          if (!x_inv) x_inv = x.inverse();
          level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(gamma);
          level.inv_transversal.push_back(*x_inv * level.inv_transversal[t]);
          account(1);
          grew = true;
        }
      }
    }
  }

  void account(std::size_t transversals) {
    entries_ += transversals * degree_;
    if (entries_ > kMaxTransversalEntries) {
      throw Error(Errc::BudgetExceeded,
                  "stabilizer chain transversals exceed memory budget at degree " +
                      std::to_string(degree_));
    }
  }

  std::size_t degree_;
  const Deadline* deadline_;
  std::vector<ChainLevel> levels_;
  std::vector<std::vector<std::size_t>> applied_;
  std::vector<std::vector<std::size_t>> checked_;
  std::size_t entries_ = 0;
};

}  // namespace

StabChain StabChain::build(std::size_t degree, std::span<const Permutation> gens,
                           const Options& options) {
  std::vector<Permutation> distinct;
  {
    std::set<Permutation> seen;
    for (const auto& g : gens) {
      if (g.degree() != degree) {
        throw Error(Errc::MixedDegree, "generator of degree " +
                                           std::to_string(g.degree()) +
                                           " in a group of degree " +
                                           std::to_string(degree));
      }
      if (g.is_identity() || !seen.insert(g).second) continue;
      distinct.push_back(g);
    }
  }

  Builder builder(degree, options.deadline);
  {
    std::vector<bool> used(degree, false);
    for (Point p : options.base_prefix) {
      if (p >= degree) {
        throw Error(Errc::PointOutOfRange, "base point " + std::to_string(p) +
                                               " outside degree " +
                                               std::to_string(degree));
      }
      if (used[p]) continue;
      used[p] = true;
      builder.add_level(p);
    }
  }

  auto& levels = builder.levels();
  auto fixes_base = [&levels](const Permutation& g) {
    return std::all_of(levels.begin(), levels.end(),
                       [&g](const ChainLevel& l) { return g[l.base] == l.base; });
  };
  // Extend the base by the smallest point moved by any generator that still
  // fixes every base point.
  for (;;) {
    std::optional<Point> next;
    for (const auto& g : distinct) {
      if (!fixes_base(g)) continue;
      Point p = *g.smallest_moved_point();
      if (!next || p < *next) next = p;
    }
    if (!next) break;
    builder.add_level(*next);
  }
  for (const auto& g : distinct) {
    std::size_t j = 0;
    while (g[levels[j].base] == levels[j].base) ++j;
    for (std::size_t l = 0; l <= j; ++l) builder.add_generator(l, g);
  }

  builder.complete(options.known_order);
  if (options.known_order && builder.order() != *options.known_order) {
    throw Error(Errc::InvariantViolation,
                "chain order " + builder.order().str() +
                    " differs from expected order " + options.known_order->str());
  }

  StabChain chain;
  chain.degree_ = degree;
  chain.levels_ = std::move(levels);
  if (!options.keep_trivial_levels) {
    std::erase_if(chain.levels_,
                  [](const ChainLevel& l) { return l.orbit_size() == 1; });
  }
  return chain;
}

BigInt StabChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit_size();
  return result;
}

StabChain::SiftResult StabChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    Point image = g[level.base];
    if (!level.in_orbit(image)) return {std::move(g), l};
    g *= level.inv_transversal[level.position[image]];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw Error(Errc::MixedDegree, "permutation of degree " +
                                       std::to_string(g.degree()) +
                                       " tested against group of degree " +
                                       std::to_string(degree_));
  }
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

StabChain StabChain::tail(std::size_t from_level) const {
  StabChain result;
  result.degree_ = degree_;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    if (levels_[l].orbit_size() > 1) result.levels_.push_back(levels_[l]);
  }
  return result;
}

std::vector<Permutation> StabChain::strong_generators() const {
  std::vector<Permutation> result;
  std::set<Permutation> seen;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (seen.insert(g).second) result.push_back(g);
    }
  }
  return result;
}

}  // namespace saxl
