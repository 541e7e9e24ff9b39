#ifndef SAXL_HYPERGRAPH_HPP
#define SAXL_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "saxl/base_engine.hpp"
#include "saxl/budget.hpp"
#include "saxl/permutation.hpp"

namespace saxl {

/// Vertices 0..n-1; edges are sorted, non-empty, pairwise distinct vertex sets.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts each edge; throws PointOutOfRange or InvariantViolation (empty
  /// edge, repeated vertex, duplicate edge).
  Hypergraph(std::size_t n_vertices, std::vector<Edge> edges);

  static Hypergraph from_edge_dump(const EdgeDump& dump);

  std::size_t n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Indices of the edges containing v.
  const std::vector<std::size_t>& incidence(Point v) const;

  std::size_t degree(Point v) const { return incidence(v).size(); }
  /// Union of the edges through v, minus v; sorted.
  std::vector<Point> neighbourhood(Point v) const;

  /// Common edge size, or nullopt if edges differ in size (or there are none).
  std::optional<std::size_t> uniformity() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// The graph on the same vertices with uv an edge iff u != v share an edge;
/// returned as a 2-uniform hypergraph.
Hypergraph two_section(const Hypergraph& h);

/// Connected components of the 2-section, each sorted, by smallest vertex.
std::vector<std::vector<Point>> connectivity(const Hypergraph& h);

/// Diameter of the 2-section; nullopt when it is disconnected.
std::optional<std::size_t> diameter(const Hypergraph& h);

/// Least number of common neighbours of n distinct vertices (0 if n exceeds
/// the vertex count). With `vertex_transitive`, only subsets containing
/// vertex 0 are examined.
std::size_t gossip_number(const Hypergraph& h, std::size_t n, bool vertex_transitive = false,
                          const Deadline* deadline = nullptr);

/// A set of n vertices attaining gossip_number, or nullopt when n exceeds the
/// vertex count.
std::optional<std::vector<Point>> gossip_witness(const Hypergraph& h, std::size_t n,
                                                 bool vertex_transitive = false,
                                                 const Deadline* deadline = nullptr);

/// Common neighbours of a vertex set, sorted.
std::vector<Point> common_neighbours(const Hypergraph& h, const std::vector<Point>& vertices);

struct FlagTourVerdict {
  bool has_tour = false;
  bool odd_vertex_count = false;
  std::optional<Point> odd_degree_vertex;  // smallest, if any
};

/// Parity criterion: an even number of vertices, all of even degree.
/// Throws EmptyHypergraph when there are no edges.
FlagTourVerdict has_flag_spanning_tour(const Hypergraph& h);

/// v_0, E_1, v_1, ..., E_s, v_s with v_{i-1}, v_i in E_i.
struct SArc {
  std::vector<Point> vertices;     // s + 1 entries
  std::vector<std::size_t> edges;  // s edge indices
};

/// All s-arcs, in lexicographic order of (v_0, E_1, v_1, ...). Consecutive
/// vertices differ, v_{i-1} != v_{i+1}, and E_i != E_{i+1}. Throws
/// BudgetExceeded beyond `cap` arcs.
std::vector<SArc> enumerate_s_arcs(const Hypergraph& h, std::size_t s, std::size_t cap);

struct Ray {
  std::size_t edge;
  std::vector<Point> order;
};

/// Every ordering of every edge. Throws BudgetExceeded beyond `cap` rays.
std::vector<Ray> rays(const Hypergraph& h, std::size_t cap);

}  // namespace saxl

#endif  // SAXL_HYPERGRAPH_HPP
