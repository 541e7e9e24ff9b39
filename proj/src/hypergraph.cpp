#include "saxl/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "saxl/error.hpp"

namespace saxl {
namespace {

using Bits = std::vector<std::uint64_t>;

void check_vertex(const Hypergraph& h, Point v) {
  if (v >= h.n_vertices()) {
    throw Error(Errc::PointOutOfRange, "vertex " + std::to_string(v) + " outside " +
                                           std::to_string(h.n_vertices()) + " vertices");
  }
}

std::vector<Bits> neighbour_bits(const Hypergraph& h) {
  const std::size_t n = h.n_vertices(), words = (n + 63) / 64;
  std::vector<Bits> bits(n, Bits(words, 0));
  for (const auto& e : h.edges()) {
    for (Point u : e) {
      for (Point v : e) {
        if (u != v) bits[u][v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }
  return bits;
}

std::vector<std::vector<Point>> adjacency(const Hypergraph& h) {
  std::vector<std::vector<Point>> adj(h.n_vertices());
  for (Point v = 0; v < h.n_vertices(); ++v) adj[v] = h.neighbourhood(v);
  return adj;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Minimum common-neighbourhood size over n-subsets, with a witness.
class GossipSearch {
 public:
  GossipSearch(const Hypergraph& h, std::size_t n, const Deadline* deadline)
      : bits_(neighbour_bits(h)), n_(n), deadline_(deadline) {}

  void run(bool vertex_transitive) {
    const std::size_t words = bits_.empty() ? 0 : bits_[0].size();
    Bits all(words, ~std::uint64_t{0});
    std::vector<Point> chosen;
    if (vertex_transitive) {
      chosen.push_back(0);
      descend(1, bits_[0], chosen);
    } else {
      descend(0, all, chosen);
    }
  }

  std::size_t best = static_cast<std::size_t>(-1);
  std::vector<Point> witness;

 private:
  // Subsets of increasing vertices; the first chosen vertex bounds the rest.
  void descend(Point from, const Bits& acc, std::vector<Point>& chosen) {
    if (best == 0) return;
    if (chosen.size() == n_) {
      std::size_t c = popcount(acc);
      if (c < best) {
        best = c;
        witness = chosen;
      }
      return;
    }
    if ((++ticks_ & 0xfff) == 0 && deadline_) deadline_->check("gossip number");
    const std::size_t remaining = n_ - chosen.size();
    for (Point v = from; v + remaining <= bits_.size(); ++v) {
      Bits next(acc.size());
      for (std::size_t w = 0; w < acc.size(); ++w) next[w] = acc[w] & bits_[v][w];
      chosen.push_back(v);
      descend(v + 1, next, chosen);
      chosen.pop_back();
      if (best == 0) return;
    }
  }

  std::vector<Bits> bits_;
  std::size_t n_;
  const Deadline* deadline_;
  std::size_t ticks_ = 0;
};

}  // namespace

Hypergraph::Hypergraph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)), incidence_(n_vertices) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    std::sort(e.begin(), e.end());
    if (e.empty()) throw Error(Errc::InvariantViolation, "empty hyperedge");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(Errc::InvariantViolation, "hyperedge repeats a vertex");
    }
    if (e.back() >= n_) {
      throw Error(Errc::PointOutOfRange, "hyperedge vertex " + std::to_string(e.back()) +
                                             " outside " + std::to_string(n_) + " vertices");
    }
    if (!seen.insert(e).second) throw Error(Errc::InvariantViolation, "duplicate hyperedge");
    for (Point v : e) incidence_[v].push_back(i);
  }
}

Hypergraph Hypergraph::from_edge_dump(const EdgeDump& dump) {
  return Hypergraph(dump.degree, dump.edges);
}

const std::vector<std::size_t>& Hypergraph::incidence(Point v) const {
  check_vertex(*this, v);
  return incidence_[v];
}

std::vector<Point> Hypergraph::neighbourhood(Point v) const {
  std::vector<Point> out;
  for (std::size_t i : incidence(v)) {
    for (Point u : edges_[i]) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::size_t> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  std::size_t k = edges_.front().size();
  for (const auto& e : edges_) {
    if (e.size() != k) return std::nullopt;
  }
  return k;
}

Hypergraph two_section(const Hypergraph& h) {
  std::vector<Edge> pairs;
  for (Point v = 0; v < h.n_vertices(); ++v) {
    for (Point u : h.neighbourhood(v)) {
      if (v < u) pairs.push_back({v, u});
    }
  }
  return Hypergraph(h.n_vertices(), std::move(pairs));
}

std::vector<std::vector<Point>> connectivity(const Hypergraph& h) {
  auto adj = adjacency(h);
  std::vector<bool> seen(h.n_vertices(), false);
  std::vector<std::vector<Point>> components;
  for (Point s = 0; s < h.n_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Point u : adj[comp[i]]) {
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::optional<std::size_t> diameter(const Hypergraph& h) {
  const std::size_t n = h.n_vertices();
  auto adj = adjacency(h);
  std::size_t diam = 0;
  std::vector<std::size_t> dist(n);
  for (Point s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), static_cast<std::size_t>(-1));
    dist[s] = 0;
    std::deque<Point> queue{s};
    std::size_t reached = 1;
    while (!queue.empty()) {
      Point v = queue.front();
      queue.pop_front();
      for (Point u : adj[v]) {
        if (dist[u] == static_cast<std::size_t>(-1)) {
          dist[u] = dist[v] + 1;
          diam = std::max(diam, dist[u]);
          ++reached;
          queue.push_back(u);
        }
      }
    }
    if (reached != n) return std::nullopt;
  }
  return diam;
}

std::optional<std::vector<Point>> gossip_witness(const Hypergraph& h, std::size_t n,
                                                 bool vertex_transitive,
                                                 const Deadline* deadline) {
  if (n == 0) throw Error(Errc::InvariantViolation, "gossip numbers start at n = 1");
  if (n > h.n_vertices()) return std::nullopt;
  GossipSearch search(h, n, deadline);
  search.run(vertex_transitive);
  return search.witness;
}

std::size_t gossip_number(const Hypergraph& h, std::size_t n, bool vertex_transitive,
                          const Deadline* deadline) {
  auto witness = gossip_witness(h, n, vertex_transitive, deadline);
  if (!witness) return 0;
  return common_neighbours(h, *witness).size();
}

std::vector<Point> common_neighbours(const Hypergraph& h, const std::vector<Point>& vertices) {
  std::vector<Point> common;
  bool first = true;
  for (Point v : vertices) {
    auto nb = h.neighbourhood(v);
    if (first) {
      common = std::move(nb);
      first = false;
      continue;
    }
    std::vector<Point> next;
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

FlagTourVerdict has_flag_spanning_tour(const Hypergraph& h) {
  if (h.edges().empty()) {
    throw Error(Errc::EmptyHypergraph, "flag-spanning tours need at least one edge");
  }
  FlagTourVerdict verdict;
  verdict.odd_vertex_count = h.n_vertices() % 2 == 1;
  for (Point v = 0; v < h.n_vertices(); ++v) {
    if (h.degree(v) % 2 == 1) {
      verdict.odd_degree_vertex = v;
      break;
    }
  }
  verdict.has_tour = !verdict.odd_vertex_count && !verdict.odd_degree_vertex;
  return verdict;
}

std::vector<SArc> enumerate_s_arcs(const Hypergraph& h, std::size_t s, std::size_t cap) {
  if (s == 0) throw Error(Errc::InvariantViolation, "s-arcs need s >= 1");
  std::vector<SArc> out;
  SArc current;
  std::function<void()> extend = [&] {
    if (current.edges.size() == s) {
      if (out.size() >= cap) {
        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(cap) + " s-arcs");
      }
      out.push_back(current);
      return;
    }
    const Point v = current.vertices.back();
    for (std::size_t e : h.incidence(v)) {
      if (!current.edges.empty() && current.edges.back() == e) continue;
      for (Point w : h.edges()[e]) {
        if (w == v) continue;
        std::size_t k = current.vertices.size();
        if (k >= 2 && current.vertices[k - 2] == w) continue;
        current.edges.push_back(e);
        current.vertices.push_back(w);
        extend();
        current.vertices.pop_back();
        current.edges.pop_back();
      }
    }
  };
  for (Point v = 0; v < h.n_vertices(); ++v) {
    current.vertices = {v};
    current.edges.clear();
    extend();
  }
  return out;
}

std::vector<Ray> rays(const Hypergraph& h, std::size_t cap) {
  std::vector<Ray> out;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    Ray ray{i, h.edges()[i]};
    do {
      if (out.size() >= cap) {
        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(cap) + " rays");
      }
      out.push_back(ray);
    } while (std::next_permutation(ray.order.begin(), ray.order.end()));
  }
  return out;
}

}  // namespace saxl
