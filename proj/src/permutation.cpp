#include "saxl/permutation.hpp"

#include <algorithm>
#include <string>

#include "saxl/error.hpp"

namespace saxl {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::MixedDegree: return "MixedDegree";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotDivisor: return "NotDivisor";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BaseSizeTooSmall: return "BaseSizeTooSmall";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NoCommonVertex: return "NoCommonVertex";
    case Errc::EmptyHypergraph: return "EmptyHypergraph";
    case Errc::ParseError: return "ParseError";
    case Errc::ManifestError: return "ManifestError";
    case Errc::IoError: return "IoError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(Errc::InvalidPermutation,
                  "image table is not a bijection on " +
                      std::to_string(images_.size()) + " points");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw Error(Errc::PointOutOfRange,
                    "cycle point " + std::to_string(std::max(from, to)) +
                        " outside degree " + std::to_string(degree));
      }
      if (used[from]) {
        throw Error(Errc::InvalidPermutation,
                    "point " + std::to_string(from) + " repeated in cycles");
      }
      used[from] = true;
      result.images_[from] = to;
    }
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return std::nullopt;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> result;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) result.push_back(static_cast<Point>(i));
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree()) {
    throw Error(Errc::MixedDegree, "cannot compose permutations of degree " +
                                       std::to_string(degree()) + " and " +
                                       std::to_string(rhs.degree()));
  }
  for (auto& image : images_) image = rhs.images_[image];
  return *this;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  Permutation result = lhs;
  result *= rhs;
  return result;
}

std::vector<Point> normalize_points(std::span<const Point> points,
                                    std::size_t degree) {
  std::vector<Point> result(points.begin(), points.end());
  for (Point p : result) {
    if (p >= degree) {
      throw Error(Errc::PointOutOfRange, "point " + std::to_string(p) +
                                             " outside degree " +
                                             std::to_string(degree));
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace saxl

std::size_t std::hash<saxl::Permutation>::operator()(
    const saxl::Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ull;
  for (saxl::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
