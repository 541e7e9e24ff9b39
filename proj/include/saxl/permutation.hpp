#ifndef SAXL_PERMUTATION_HPP
#define SAXL_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace saxl {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}. Permutations act on the right, so
/// `(a * b)` first applies `a` and then `b`: p^(ab) = (p^a)^b.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image table; throws InvalidPermutation unless it
  /// is a bijection on {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles over 0-indexed points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::optional<Point> smallest_moved_point() const noexcept;
  std::vector<Point> fixed_points() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// this := this * rhs, without allocating.
  Permutation& operator*=(const Permutation& rhs);

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Sorts and deduplicates a point set; throws PointOutOfRange for points
/// outside {0, ..., degree-1}.
std::vector<Point> normalize_points(std::span<const Point> points,
                                    std::size_t degree);

}  // namespace saxl

template <>
struct std::hash<saxl::Permutation> {
  std::size_t operator()(const saxl::Permutation& p) const noexcept;
};

#endif  // SAXL_PERMUTATION_HPP
