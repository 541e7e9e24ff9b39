#ifndef SAXL_BASE_ENGINE_HPP
#define SAXL_BASE_ENGINE_HPP

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "saxl/budget.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

struct BaseSearchConfig {
  std::size_t max_base_size = 16;
  std::size_t max_edges = 5'000'000;
  std::optional<std::chrono::duration<double>> time_budget;
  /// Shared deadline; takes precedence over time_budget when set.
  const Deadline* deadline = nullptr;
};

using Edge = std::vector<Point>;

/// True iff the pointwise stabilizer of `points` is trivial.
bool is_base(const PermGroup& g, std::span<const Point> points);

/// Exact minimum base size. Throws BudgetExceeded when the answer would need
/// a search beyond cfg.max_base_size or past the deadline.
std::size_t base_size(const PermGroup& g, const BaseSearchConfig& cfg = {});

/// A minimum base in increasing order (empty for the trivial group).
std::vector<Point> find_minimum_base(const PermGroup& g, const BaseSearchConfig& cfg = {});

/// All bases of size b(G), each sorted, in lexicographic order. Throws
/// BaseSizeTooSmall when b(G) < 2 and BudgetExceeded past max_edges.
std::vector<Edge> minimal_bases(const PermGroup& g, const BaseSearchConfig& cfg = {});

/// Same, with b(G) already known.
std::vector<Edge> minimal_bases(const PermGroup& g, std::size_t b, const BaseSearchConfig& cfg);

/// True iff alpha and beta lie together in some minimum base.
bool is_adjacent(const PermGroup& g, Point alpha, Point beta, const BaseSearchConfig& cfg = {});
bool is_adjacent(const PermGroup& g, std::size_t b, Point alpha, Point beta,
                 const BaseSearchConfig& cfg);

/// A minimum base containing `partial`, sorted, or nullopt if none exists.
std::optional<Edge> extend_to_minimal_base(const PermGroup& g, std::span<const Point> partial,
                                           const BaseSearchConfig& cfg = {});

struct EdgeDump {
  std::size_t degree = 0;
  std::size_t base_size = 0;
  std::vector<Edge> edges;
};

/// "# degree N, base_size B, edges E" followed by one 1-indexed,
/// comma-separated edge per line.
void write_edge_dump(std::ostream& out, const EdgeDump& dump);
EdgeDump read_edge_dump(std::istream& in);
EdgeDump read_edge_dump(const std::filesystem::path& path);

}  // namespace saxl

#endif  // SAXL_BASE_ENGINE_HPP
