// Brute-force reference implementations used only by the tests. They work on
// explicit element lists, so keep inputs small.
#ifndef SAXL_TESTS_ORACLE_HPP
#define SAXL_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "saxl/permutation.hpp"

namespace oracle {

using saxl::Permutation;
using saxl::Point;

/// All elements of <gens> by closure under right multiplication.
inline std::vector<Permutation> elements(const std::vector<Permutation>& gens,
                                         std::size_t degree) {
  std::unordered_set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> out{Permutation(degree)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = out[i] * g;
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

/// Fixed-point set of each element as a bitmask (degree <= 64).
inline std::vector<std::uint64_t> fix_masks(const std::vector<Permutation>& elems) {
  std::vector<std::uint64_t> masks;
  masks.reserve(elems.size());
  for (const auto& g : elems) {
    std::uint64_t m = 0;
    for (Point p = 0; p < g.degree(); ++p) {
      if (g[p] == p) m |= std::uint64_t{1} << p;
    }
    masks.push_back(m);
  }
  return masks;
}

/// B is a base iff no nonidentity element fixes all of B.
inline bool is_base(const std::vector<std::uint64_t>& masks, std::uint64_t full,
                    std::uint64_t subset) {
  for (auto m : masks) {
    if (m != full && (m & subset) == subset) return false;
  }
  return true;
}

/// Smallest base size by trying every subset in order of size.
inline std::size_t base_size(const std::vector<Permutation>& elems, std::size_t degree) {
  auto masks = fix_masks(elems);
  std::uint64_t full = degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
  for (std::size_t k = 0; k <= degree; ++k) {
    std::vector<bool> pick(degree, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < degree; ++i) {
        if (pick[i]) s |= std::uint64_t{1} << i;
      }
      if (is_base(masks, full, s)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return degree;
}

/// Minimal bases of size b as sorted point lists, in lexicographic order.
inline std::vector<std::vector<Point>> minimal_bases(const std::vector<Permutation>& elems,
                                                     std::size_t degree, std::size_t b) {
  auto masks = fix_masks(elems);
  std::uint64_t full = degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
  std::vector<std::vector<Point>> out;
  std::vector<bool> pick(degree, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(b), true);
  do {
    std::uint64_t s = 0;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < degree; ++i) {
      if (pick[i]) {
        s |= std::uint64_t{1} << i;
        pts.push_back(static_cast<Point>(i));
      }
    }
    if (is_base(masks, full, s)) out.push_back(pts);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Least number of common neighbours over all k-subsets of the vertices,
/// from the edge list alone (degree <= 64); 0 when k exceeds the degree.
inline std::size_t gossip(std::size_t degree, const std::vector<std::vector<Point>>& edges,
                          std::size_t k) {
  if (k > degree) return 0;
  std::vector<std::uint64_t> adj(degree, 0);
  for (const auto& e : edges) {
    for (Point u : e) {
      for (Point v : e) {
        if (u != v) adj[u] |= std::uint64_t{1} << v;
      }
    }
  }
  std::uint64_t full = degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1;
  std::size_t best = degree;
  std::vector<bool> pick(degree, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::uint64_t common = full;
    for (std::size_t i = 0; i < degree; ++i) {
      if (pick[i]) common &= adj[i];
    }
    best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(common)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace oracle

#endif  // SAXL_TESTS_ORACLE_HPP
