#include "saxl/base_engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "saxl/error.hpp"
#include "search_group.hpp"

namespace saxl {
namespace {

using detail::SearchGroup;

class Search {
 public:
  explicit Search(const BaseSearchConfig& cfg)
      : cfg_(cfg), own_(cfg.time_budget), deadline_(cfg.deadline ? cfg.deadline : &own_) {}

  const Deadline* deadline() const { return deadline_; }

  /// Looks for at most t further points that make `h` trivial, trying one
  /// representative per orbit. Appends the witness to `out` on success.
  bool find(const SearchGroup& h, std::size_t t, std::vector<Point>& out) {
    if (h.is_trivial()) return true;
    if (t == 0) return false;
    if (!room(h.order(), h.max_orbit(), t)) return false;
    const auto& size = h.orbit_size();
    if (t == 1) {
      for (Point p = 0; p < h.degree(); ++p) {
        if (h.order() == size[p]) {
          out.push_back(p);
          return true;
        }
      }
      return false;
    }
    // Big orbits first: they cut the group down fastest.
    std::vector<Point> reps;
    for (Point r : h.orbit_reps()) {
      if (size[r] > 1) reps.push_back(r);
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [&](Point a, Point b) { return size[a] > size[b]; });
    for (Point r : reps) {
      out.push_back(r);
      if (find(h.stabilizer(r), t - 1, out)) return true;
      out.pop_back();
    }
    return false;
  }

  /// Calls emit(tail) for every increasing tuple of points >= from, of
  /// length r, in which each point strictly shrinks the stabilizer and the
  /// last one leaves it trivial.
  template <class Emit>
  void enumerate(const SearchGroup& h, std::size_t r, Point from, std::vector<Point>& chosen,
                 Emit& emit) {
    if (h.is_trivial() || r == 0) return;
    const auto& size = h.orbit_size();
    const std::size_t n = h.degree();
    std::size_t largest = 1;
    for (Point p = from; p < n; ++p) largest = std::max(largest, size[p]);
    if (!room(h.order(), largest, r)) return;
    if (r == 1) {
      for (Point p = from; p < n; ++p) {
        if (h.order() == size[p]) {
          chosen.push_back(p);
          emit(chosen);
          chosen.pop_back();
        }
      }
      return;
    }
    for (Point p = from; p < n; ++p) {
      if (size[p] == 1) continue;
      chosen.push_back(p);
      enumerate(h.stabilizer(p), r - 1, p + 1, chosen, emit);
      chosen.pop_back();
    }
  }

 private:
  // Can a group of this order be cut down by t points with orbits <= m?
  static bool room(const BigInt& order, std::size_t m, std::size_t t) {
    BigInt cap = 1;
    for (std::size_t i = 0; i < t && cap < order; ++i) cap *= m;
    return cap >= order;
  }

  const BaseSearchConfig& cfg_;
  Deadline own_;
  const Deadline* deadline_;
};

// Edges of a fixed size stored back to back; the hash set holds offsets.
class EdgeStore {
 public:
  explicit EdgeStore(std::size_t b) : b_(b), set_(16, Hash{this}, Eq{this}) {}

  bool insert(const std::vector<Point>& sorted_edge) {
    std::uint32_t id = static_cast<std::uint32_t>(count());
    data_.insert(data_.end(), sorted_edge.begin(), sorted_edge.end());
    if (set_.insert(id).second) return true;
    data_.resize(data_.size() - b_);
    return false;
  }

  std::size_t count() const { return data_.size() / b_; }
  const Point* edge(std::size_t i) const { return data_.data() + i * b_; }

  std::vector<Edge> sorted() const {
    std::vector<std::uint32_t> order(count());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](std::uint32_t x, std::uint32_t y) {
      return std::lexicographical_compare(edge(x), edge(x) + b_, edge(y), edge(y) + b_);
    });
    std::vector<Edge> out;
    out.reserve(order.size());
    for (auto i : order) out.emplace_back(edge(i), edge(i) + b_);
    return out;
  }

 private:
  struct Hash {
    const EdgeStore* s;
    std::size_t operator()(std::uint32_t id) const {
      std::size_t h = 1469598103934665603ull;
      const Point* e = s->edge(id);
      for (std::size_t i = 0; i < s->b_; ++i) h = (h ^ e[i]) * 1099511628211ull;
      return h;
    }
  };
  struct Eq {
    const EdgeStore* s;
    bool operator()(std::uint32_t x, std::uint32_t y) const {
      return std::equal(s->edge(x), s->edge(x) + s->b_, s->edge(y));
    }
  };

  std::size_t b_;
  std::vector<Point> data_;
  std::unordered_set<std::uint32_t, Hash, Eq> set_;
};

void check_points(const PermGroup& g, std::initializer_list<Point> points) {
  for (Point p : points) {
    if (p >= g.degree()) {
      throw Error(Errc::PointOutOfRange, "point " + std::to_string(p) + " outside degree " +
                                             std::to_string(g.degree()));
    }
  }
}

std::size_t chain_length(const PermGroup& g) { return g.chain().levels().size(); }

}  // namespace

bool is_base(const PermGroup& g, std::span<const Point> points) {
  return g.pointwise_stabilizer(points).is_trivial();
}

std::vector<Point> find_minimum_base(const PermGroup& g, const BaseSearchConfig& cfg) {
  if (g.is_trivial()) return {};
  Search search(cfg);
  SearchGroup root(g, search.deadline());
  const std::size_t upper = chain_length(g);  // the chain base is a base
  for (std::size_t t = detail::min_levels(g.order(), root.max_orbit()); t < upper; ++t) {
    if (t > cfg.max_base_size) {
      throw Error(Errc::BudgetExceeded,
                  "base size search passed max_base_size = " + std::to_string(cfg.max_base_size));
    }
    std::vector<Point> witness;
    if (search.find(root, t, witness)) {
      std::sort(witness.begin(), witness.end());
      return witness;
    }
  }
  auto base = g.base();
  std::sort(base.begin(), base.end());
  return base;
}

std::size_t base_size(const PermGroup& g, const BaseSearchConfig& cfg) {
  return find_minimum_base(g, cfg).size();
}

std::vector<Edge> minimal_bases(const PermGroup& g, const BaseSearchConfig& cfg) {
  return minimal_bases(g, base_size(g, cfg), cfg);
}

std::vector<Edge> minimal_bases(const PermGroup& g, std::size_t b, const BaseSearchConfig& cfg) {
  if (b < 2) {
    throw Error(Errc::BaseSizeTooSmall,
                "Saxl hypergraphs need base size >= 2, got " + std::to_string(b));
  }
  Search search(cfg);
  SearchGroup root(g, search.deadline());
  EdgeStore store(b);
  auto over_budget = [&] {
    if (store.count() > cfg.max_edges) {
      throw Error(Errc::BudgetExceeded,
                  "more than " + std::to_string(cfg.max_edges) + " minimum bases");
    }
  };

  // Bases through one point of each orbit; the rest are their images.
  std::vector<Point> sorted(b);
  for (const auto& orbit : g.orbits()) {
    if (orbit.size() == 1) continue;
    const Point alpha = orbit.front();
    std::vector<Point> chosen;
    auto emit = [&](const std::vector<Point>& tail) {
      std::copy(tail.begin(), tail.end(), sorted.begin());
      sorted.back() = alpha;
      std::sort(sorted.begin(), sorted.end());
      store.insert(sorted);
      over_budget();
    };
    search.enumerate(root.stabilizer(alpha), b - 1, 0, chosen, emit);
  }

  const auto& gens = g.generators();
  for (std::size_t i = 0; i < store.count(); ++i) {
    if ((i & 0xfff) == 0) search.deadline()->check("minimum base closure");
    for (const auto& x : gens) {
      const Point* e = store.edge(i);
      for (std::size_t j = 0; j < b; ++j) sorted[j] = x[e[j]];
      std::sort(sorted.begin(), sorted.end());
      store.insert(sorted);
    }
    over_budget();
  }
  return store.sorted();
}

bool is_adjacent(const PermGroup& g, Point alpha, Point beta, const BaseSearchConfig& cfg) {
  return is_adjacent(g, base_size(g, cfg), alpha, beta, cfg);
}

bool is_adjacent(const PermGroup& g, std::size_t b, Point alpha, Point beta,
                 const BaseSearchConfig& cfg) {
  check_points(g, {alpha, beta});
  if (b < 2) {
    throw Error(Errc::BaseSizeTooSmall, "adjacency needs base size >= 2");
  }
  if (alpha == beta) return false;
  Search search(cfg);
  SearchGroup h = SearchGroup(g, search.deadline()).stabilizer(alpha).stabilizer(beta);
  std::vector<Point> witness;
  return search.find(h, b - 2, witness);
}

std::optional<Edge> extend_to_minimal_base(const PermGroup& g, std::span<const Point> partial,
                                           const BaseSearchConfig& cfg) {
  auto points = normalize_points(partial, g.degree());
  if (points.size() != partial.size()) return std::nullopt;  // repeated points
  const std::size_t b = base_size(g, cfg);
  if (points.size() > b) return std::nullopt;
  Search search(cfg);
  SearchGroup h(g, search.deadline());
  for (Point p : points) h = h.stabilizer(p);
  std::vector<Point> witness;
  if (!search.find(h, b - points.size(), witness)) return std::nullopt;
  witness.insert(witness.end(), points.begin(), points.end());
  if (witness.size() != b) return std::nullopt;
  std::sort(witness.begin(), witness.end());
  return witness;
}

void write_edge_dump(std::ostream& out, const EdgeDump& dump) {
  out << "# degree " << dump.degree << ", base_size " << dump.base_size << ", edges "
      << dump.edges.size() << '\n';
  for (const auto& e : dump.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i] + 1;
    out << '\n';
  }
}

EdgeDump read_edge_dump(std::istream& in) {
  EdgeDump dump;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(0, "empty edge dump");
  unsigned long long n = 0, b = 0, e = 0;
  char tail = 0;
  if (std::sscanf(line.c_str(), "# degree %llu, base_size %llu, edges %llu%c", &n, &b, &e,
                  &tail) != 3) {
    throw ParseError(0, "expected header '# degree N, base_size B, edges E'");
  }
  dump.degree = n;
  dump.base_size = b;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Edge edge;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != field.size() || v == 0 || v > n) {
        throw ParseError(0, "line " + std::to_string(line_no) + ": bad point '" + field + "'");
      }
      edge.push_back(static_cast<Point>(v - 1));
    }
    std::sort(edge.begin(), edge.end());
    if (edge.size() != b || std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(0, "line " + std::to_string(line_no) + ": edge is not a " +
                              std::to_string(b) + "-set");
    }
    dump.edges.push_back(std::move(edge));
  }
  if (dump.edges.size() != e) {
    throw ParseError(0, "header promises " + std::to_string(e) + " edges, found " +
                            std::to_string(dump.edges.size()));
  }
  return dump;
}

EdgeDump read_edge_dump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return read_edge_dump(in);
}

}  // namespace saxl
