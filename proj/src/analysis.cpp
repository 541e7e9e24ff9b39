#include "saxl/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "saxl/error.hpp"
#include "search_group.hpp"

namespace saxl {
namespace {

using detail::SearchGroup;

// Direct K(n) enumeration is limited to small degrees.
constexpr std::size_t kDirectKnDegree = 100;
// Recursion nodes kept in a K(n) certificate.
constexpr std::size_t kMaxKnNodes = 4096;
// Element-by-element ray check up to this group order.
constexpr std::size_t kAllElementsOrder = 100'000;

class ScopedDeadline {
 public:
  explicit ScopedDeadline(const BaseSearchConfig& cfg)
      : own_(cfg.time_budget), ptr_(cfg.deadline ? cfg.deadline : &own_) {}
  const Deadline* get() const { return ptr_; }

 private:
  Deadline own_;
  const Deadline* ptr_;
};

void tick(const Deadline* deadline, const char* what) {
  if (deadline) deadline->check(what);
}

bool contains(const Edge& e, Point p) { return std::binary_search(e.begin(), e.end(), p); }

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

Edge image(const Edge& e, const Permutation& g) {
  Edge out;
  out.reserve(e.size());
  for (Point p : e) out.push_back(g[p]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

struct TupleHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Point p : v) h = (h ^ p) * 0x100000001b3ull;
    return h;
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Word-packed 2-section neighbourhoods.
class Adjacency {
 public:
  explicit Adjacency(const Hypergraph& h) : words_((h.n_vertices() + 63) / 64) {
    rows_.assign(h.n_vertices(), std::vector<std::uint64_t>(words_, 0));
    for (const auto& e : h.edges()) {
      for (Point u : e) {
        for (Point v : e) {
          if (u != v) rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
        }
      }
    }
  }

  // Smallest common neighbour of a and b other than a and b.
  std::optional<Point> common(Point a, Point b) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = rows_[a][w] & rows_[b][w];
      while (bits) {
        Point p = static_cast<Point>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
        if (p != a && p != b) return p;
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// An edge through both u and v.
std::optional<Edge> edge_through(const Hypergraph& h, Point u, Point v) {
  for (std::size_t i : h.incidence(u)) {
    if (contains(h.edges()[i], v)) return h.edges()[i];
  }
  return std::nullopt;
}

std::vector<std::pair<Point, Point>> pairs_to_check(const SaxlInstance& s) {
  std::vector<std::pair<Point, Point>> pairs;
  if (s.transitive) {
    for (Point beta : s.suborbit_reps) pairs.emplace_back(0, beta);
    return pairs;
  }
  Point n = static_cast<Point>(s.group.degree());
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

void require_edge(const SaxlInstance& s, const Edge& e, Point through, const char* name) {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == s.b &&
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
            (sorted.empty() || sorted.back() < s.group.degree()) && is_base(s.group, sorted);
  if (!ok) throw Error(Errc::NotAnEdge, std::string(name) + " is not a minimum base");
  if (!contains(sorted, through)) {
    throw Error(Errc::NotAnEdge, std::string(name) + " does not contain point " +
                                     std::to_string(through));
  }
}

// Replaces `moved` in e by its image under an element fixing the rest of e.
Edge swap_out(const PermGroup& g, const Edge& e, Point moved) {
  Edge rest;
  for (Point p : e) {
    if (p != moved) rest.push_back(p);
  }
  PermGroup k = g.pointwise_stabilizer(rest);
  if (k.is_trivial()) throw Error(Errc::InvariantViolation, "edge minus a point is a base");
  const Permutation& x = k.generators().front();
  if (x[moved] == moved) {
    throw Error(Errc::InvariantViolation, "stabilizer element fixes a full minimum base");
  }
  return image(e, x);
}

struct KnSearch {
  std::size_t degree;
  const Deadline* deadline;
  KnCertificate* cert;

  bool recurse(const SearchGroup& h, std::vector<Point>& path, std::vector<bool>& removed,
               std::size_t n) {
    tick(deadline, "K(n) recursion");
    std::size_t node = cert->nodes.size();
    if (node < kMaxKnNodes) cert->nodes.push_back({path, h.order(), false});
    bool holds = true;
    if (n == 0) {
      holds = h.is_trivial();
    } else if ((h.is_trivial() && n == 1) || degree - path.size() < n) {
      holds = false;
    } else {
      for (Point rep : h.orbit_reps()) {
        if (removed[rep]) continue;
        path.push_back(rep);
        removed[rep] = true;
        bool ok = recurse(h.stabilizer(rep), path, removed, n - 1);
        removed[rep] = false;
        path.pop_back();
        if (!ok) {
          holds = false;
          break;
        }
      }
    }
    if (!holds && !cert->failing_path) cert->failing_path = path;
    if (node < kMaxKnNodes) cert->nodes[node].holds = holds;
    return holds;
  }

  // Every (n-1)-subset S has G_S nontrivial and semiregular off S.
  bool direct(const SearchGroup& h, std::vector<Point>& subset, Point start, std::size_t n) {
    tick(deadline, "K(n) enumeration");
    if (h.is_trivial()) return false;
    if (subset.size() + 1 == n) {
      for (Point p = 0; p < degree; ++p) {
        if (std::find(subset.begin(), subset.end(), p) != subset.end()) continue;
        if (BigInt(h.orbit_size()[p]) != h.order()) return false;
      }
      return true;
    }
    std::size_t need = n - 1 - subset.size();
    for (Point p = start; p + need <= degree; ++p) {
      subset.push_back(p);
      bool ok = direct(h.stabilizer(p), subset, p + 1, n);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

SaxlInstance build_saxl(const PermGroup& g, const BaseSearchConfig& cfg) {
  ScopedDeadline scoped(cfg);
  BaseSearchConfig inner = cfg;
  inner.deadline = scoped.get();
  std::size_t b = base_size(g, inner);
  if (b < 2) {
    throw Error(Errc::BaseSizeTooSmall,
                "Saxl hypergraphs need b(G) >= 2, got " + std::to_string(b));
  }
  auto edges = minimal_bases(g, b, inner);
  SaxlInstance s{g, b, Hypergraph(g.degree(), std::move(edges)), g.is_transitive(), {}};
  const auto& all = s.hypergraph.edges();
  if (s.hypergraph.uniformity() != b) {
    throw Error(Errc::InvariantViolation, "edge set is not b-uniform");
  }
  if (!std::is_sorted(all.begin(), all.end())) {
    throw Error(Errc::InvariantViolation, "edge list is not sorted");
  }
  for (const auto& x : g.generators()) {
    for (const auto& e : all) {
      if (!std::binary_search(all.begin(), all.end(), image(e, x))) {
        throw Error(Errc::InvariantViolation, "edge set is not invariant under the group");
      }
    }
  }
  if (s.transitive) s.suborbit_reps = g.suborbit_representatives(0);
  return s;
}

ValencyCheck valency_check(const SaxlInstance& s, const BaseSearchConfig& cfg) {
  if (!s.transitive) throw Error(Errc::NotTransitive, "valency formula needs a transitive group");
  ScopedDeadline scoped(cfg);
  const Deadline* deadline = scoped.get();
  const PermGroup stab = s.group.stabilizer(0, deadline);
  const std::size_t depth = s.b - 1;

  // Ordered (b-1)-bases of G_0, each point strictly shrinking the stabilizer.
  std::vector<std::vector<Point>> tuples;
  std::vector<Point> current;
  std::function<void(const SearchGroup&)> walk = [&](const SearchGroup& h) {
    if (current.size() == depth) {
      if (h.is_trivial()) tuples.push_back(current);
      return;
    }
    BigInt bound = 1;
    for (std::size_t i = current.size(); i < depth; ++i) bound *= h.max_orbit();
    if (h.order() > bound) return;
    for (Point p = 0; p < h.degree(); ++p) {
      if (h.orbit_size()[p] == 1) continue;
      current.push_back(p);
      walk(h.stabilizer(p));
      current.pop_back();
    }
  };
  walk(SearchGroup(stab, deadline));

  std::unordered_map<std::vector<Point>, std::size_t, TupleHash> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], i);
  UnionFind classes(tuples.size());
  std::size_t orbits = tuples.size();
  std::vector<Point> moved(depth);
  for (const auto& x : stab.generators()) {
    tick(deadline, "valency orbit count");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      for (std::size_t j = 0; j < depth; ++j) moved[j] = x[tuples[i][j]];
      auto it = index.find(moved);
      if (it == index.end()) {
        throw Error(Errc::InvariantViolation, "ordered bases are not closed under G_0");
      }
      if (classes.unite(i, it->second)) --orbits;
    }
  }

  ValencyCheck out;
  out.d_direct = s.hypergraph.degree(0);
  out.orbit_count = orbits;
  out.ordered_bases = tuples.size();
  out.point_stabilizer_order = stab.order();
  BigInt numerator = BigInt(orbits) * stab.order();
  BigInt denom = factorial(depth);
  out.d_formula = numerator / denom;
  if (out.d_formula * denom != numerator) out.d_formula = -1;
  return out;
}

KnCertificate is_kn_complete(const PermGroup& g, std::size_t n, const BaseSearchConfig& cfg) {
  ScopedDeadline scoped(cfg);
  KnCertificate cert;
  cert.n = n;
  KnSearch search{g.degree(), scoped.get(), &cert};
  SearchGroup root(g, scoped.get());
  std::vector<Point> path;
  std::vector<bool> removed(g.degree(), false);
  cert.recursive = search.recurse(root, path, removed, n);
  if (g.degree() <= kDirectKnDegree) {
    cert.direct_checked = true;
    if (n == 0) {
      cert.direct = g.is_trivial();
    } else if (g.degree() < n) {
      cert.direct = false;
    } else {
      std::vector<Point> subset;
      cert.direct = search.direct(root, subset, 0, n);
    }
    if (cert.direct != cert.recursive) {
      throw Error(Errc::InvariantViolation, "K(n) recursion and direct enumeration disagree");
    }
  }
  cert.complete = cert.recursive;
  if (cert.recursive) cert.failing_path.reset();
  if (cert.complete && n >= 2) cert.transitivity_consistent = g.is_k_transitive(n - 1);
  return cert;
}

ConjectureVerdict check_cnc(const SaxlInstance& s, const Deadline* deadline) {
  ConjectureVerdict verdict;
  Adjacency adj(s.hypergraph);
  std::vector<PairWitness> certificates;
  for (auto [a, b] : pairs_to_check(s)) {
    tick(deadline, "common neighbour check");
    ++verdict.pairs_checked;
    auto gamma = adj.common(a, b);
    if (!gamma) {
      verdict.witnesses.push_back({a, b, std::nullopt, std::nullopt, std::nullopt});
      continue;
    }
    certificates.push_back(
        {a, b, gamma, edge_through(s.hypergraph, a, *gamma), edge_through(s.hypergraph, b, *gamma)});
  }
  if (verdict.witnesses.empty()) {
    verdict.status = VerdictStatus::Holds;
    verdict.witnesses = std::move(certificates);
  } else {
    verdict.status = VerdictStatus::Fails;
    verdict.reason = "pair without a common neighbour";
  }
  return verdict;
}

ConjectureVerdict check_cnc_by_adjacency(const PermGroup& g, std::size_t b,
                                         const BaseSearchConfig& cfg) {
  ScopedDeadline scoped(cfg);
  BaseSearchConfig inner = cfg;
  inner.deadline = scoped.get();
  const Point n = static_cast<Point>(g.degree());
  std::vector<std::pair<Point, Point>> pairs;
  if (g.is_transitive()) {
    for (Point beta : g.suborbit_representatives(0)) pairs.emplace_back(0, beta);
  } else {
    for (Point a = 0; a < n; ++a) {
      for (Point c = a + 1; c < n; ++c) pairs.emplace_back(a, c);
    }
  }
  std::vector<std::vector<std::int8_t>> memo(n, std::vector<std::int8_t>(n, -1));
  auto adjacent = [&](Point u, Point v) {
    auto& slot = memo[std::min(u, v)][std::max(u, v)];
    if (slot < 0) slot = is_adjacent(g, b, u, v, inner) ? 1 : 0;
    return slot == 1;
  };
  ConjectureVerdict verdict;
  std::vector<PairWitness> certificates;
  for (auto [a, c] : pairs) {
    ++verdict.pairs_checked;
    std::optional<Point> gamma;
    for (Point x = 0; x < n && !gamma; ++x) {
      if (x != a && x != c && adjacent(a, x) && adjacent(c, x)) gamma = x;
    }
    if (!gamma) {
      verdict.witnesses.push_back({a, c, std::nullopt, std::nullopt, std::nullopt});
      continue;
    }
    Point ag[] = {a, *gamma};
    Point cg[] = {c, *gamma};
    certificates.push_back({a, c, gamma, extend_to_minimal_base(g, ag, inner),
                            extend_to_minimal_base(g, cg, inner)});
  }
  if (verdict.witnesses.empty()) {
    verdict.status = VerdictStatus::Holds;
    verdict.witnesses = std::move(certificates);
  } else {
    verdict.status = VerdictStatus::Fails;
    verdict.reason = "pair without a common neighbour";
  }
  return verdict;
}

ConjectureVerdict check_edge_disjoint_cnc(const SaxlInstance& s, const Deadline* deadline) {
  ConjectureVerdict verdict;
  const auto& h = s.hypergraph;
  if (2 * s.b - 1 > s.group.degree()) {
    verdict.status = VerdictStatus::Fails;
    verdict.reason = "2b - 1 = " + std::to_string(2 * s.b - 1) + " exceeds |Omega| = " +
                     std::to_string(s.group.degree()) +
                     ", so two edges always share at least two points";
    verdict.witnesses.push_back({0, 1, std::nullopt, std::nullopt, std::nullopt});
    verdict.pairs_checked = 1;
    return verdict;
  }
  std::vector<PairWitness> certificates;
  for (auto [a, b] : pairs_to_check(s)) {
    ++verdict.pairs_checked;
    std::optional<PairWitness> found;
    for (std::size_t i : h.incidence(a)) {
      const Edge& ea = h.edges()[i];
      if (contains(ea, b)) continue;
      tick(deadline, "edge-disjoint common neighbour check");
      for (std::size_t j : h.incidence(b)) {
        const Edge& eb = h.edges()[j];
        if (contains(eb, a) || intersection_size(ea, eb) != 1) continue;
        Point gamma = 0;
        for (Point p : ea) {
          if (contains(eb, p)) gamma = p;
        }
        found = PairWitness{a, b, gamma, ea, eb};
        break;
      }
      if (found) break;
    }
    if (found) {
      certificates.push_back(*found);
    } else {
      verdict.witnesses.push_back({a, b, std::nullopt, std::nullopt, std::nullopt});
    }
  }
  if (verdict.witnesses.empty()) {
    verdict.status = VerdictStatus::Holds;
    verdict.witnesses = std::move(certificates);
  } else {
    verdict.status = VerdictStatus::Fails;
    verdict.reason = "no pair of edges meeting in exactly one further vertex";
  }
  return verdict;
}

DisjointifyResult disjointify_edges(const SaxlInstance& s, Point alpha, Point beta,
                                    const Edge& e_alpha, const Edge& e_beta) {
  if (alpha == beta) throw Error(Errc::InvariantViolation, "alpha and beta coincide");
  require_edge(s, e_alpha, alpha, "E_alpha");
  require_edge(s, e_beta, beta, "E_beta");
  Edge ea = e_alpha;
  Edge eb = e_beta;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::optional<Point> gamma;
  for (Point p : ea) {
    if (p != alpha && p != beta && contains(eb, p)) {
      gamma = p;
      break;
    }
  }
  if (!gamma) throw Error(Errc::NoCommonVertex, "edges share no vertex outside {alpha, beta}");
  const std::size_t before = intersection_size(ea, eb);

  if (contains(eb, alpha)) eb = swap_out(s.group, eb, alpha);
  if (contains(ea, beta)) ea = swap_out(s.group, ea, beta);

  bool ok = contains(ea, alpha) && contains(eb, beta) && contains(ea, *gamma) &&
            contains(eb, *gamma) && !(contains(ea, beta) && contains(eb, beta)) &&
            !(contains(ea, alpha) && contains(eb, alpha)) &&
            intersection_size(ea, eb) <= before;
  if (!ok) throw Error(Errc::InvariantViolation, "edge disjointification postcondition failed");
  return {std::move(ea), std::move(eb), *gamma};
}

GossipProfile gossip_profile(const SaxlInstance& s, std::size_t n_max, const Deadline* deadline) {
  GossipProfile out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto witness = gossip_witness(s.hypergraph, n, s.transitive, deadline);
    if (!witness) {
      out.values.push_back(0);
      out.witnesses.emplace_back();
      continue;
    }
    out.values.push_back(common_neighbours(s.hypergraph, *witness).size());
    out.witnesses.push_back(std::move(*witness));
  }
  if (s.b >= 3 && n_max >= 2) out.g2_dichotomy = out.values[1] != 1;
  return out;
}

FlagTourReport flag_tour_verdict(const SaxlInstance& s, const std::vector<std::string>& tags) {
  FlagTourReport out;
  out.parity = has_flag_spanning_tour(s.hypergraph);
  auto tagged = [&tags](const char* t) { return std::find(tags.begin(), tags.end(), t) != tags.end(); };
  if ((s.b == 3 || s.b == 4) && s.group.is_primitive()) {
    if (s.group.degree() % 2 == 1) {
      out.matched_case = "ii";
    } else if (tagged("flag_case_v")) {
      out.matched_case = "v";
    } else if (tagged("flag_case_vi")) {
      out.matched_case = "vi";
    }
  }
  out.consistent = !out.matched_case || !out.parity.has_tour;
  return out;
}

std::optional<std::size_t> common_valency(const SaxlInstance& s) {
  const auto& h = s.hypergraph;
  if (h.n_vertices() == 0) return std::nullopt;
  std::size_t d = h.degree(0);
  for (Point v = 1; v < h.n_vertices(); ++v) {
    if (h.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::size_t> prime_valency_scan(const std::vector<const SaxlInstance*>& instances) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const SaxlInstance& s = *instances[i];
    if (!s.transitive || (s.b != 3 && s.b != 4)) continue;
    auto d = common_valency(s);
    if (d && is_prime_number(*d)) hits.push_back(i);
  }
  return hits;
}

RaySemiregularity rays_semiregular_check(const SaxlInstance& s, const Deadline* deadline) {
  RaySemiregularity out;
  const auto& h = s.hypergraph;
  out.ray_count = BigInt(h.edges().size()) * factorial(s.b);
  std::vector<bool> fixed(s.group.degree());
  std::size_t ticks = 0;
  auto check = [&](const Permutation& x) {
    if (!out.semiregular || x.is_identity()) return;
    if ((++ticks & 0x3ff) == 0) tick(deadline, "ray semiregularity check");
    ++out.elements_checked;
    std::size_t count = 0;
    for (Point p = 0; p < fixed.size(); ++p) count += (fixed[p] = x[p] == p);
    if (count < s.b) return;
    for (Point p = 0; p < fixed.size(); ++p) {
      if (!fixed[p]) continue;
      for (std::size_t i : h.incidence(p)) {
        const Edge& e = h.edges()[i];
        if (std::all_of(e.begin(), e.end(), [&](Point q) { return fixed[q]; })) {
          out.semiregular = false;
          out.fixed_ray_edge = e;
          return;
        }
      }
    }
  };
  if (s.group.order() <= kAllElementsOrder) {
    out.all_elements = true;
    s.group.for_each_element(check);
  } else {
    for (const auto& x : s.group.generators()) check(x);
  }
  return out;
}

std::vector<InvariantResult> check_invariants(const SaxlInstance& s, std::size_t gossip_max,
                                              const BaseSearchConfig& cfg) {
  ScopedDeadline scoped(cfg);
  const Deadline* deadline = scoped.get();
  const auto& h = s.hypergraph;
  const auto& edges = h.edges();
  std::vector<InvariantResult> out;

  out.push_back({"uniformity", true, h.uniformity() == s.b, "every edge has b vertices"});

  bool invariant = true;
  for (const auto& x : s.group.generators()) {
    for (const auto& e : edges) {
      if (!std::binary_search(edges.begin(), edges.end(), image(e, x))) invariant = false;
    }
  }
  out.push_back({"edge_invariance", true, invariant, "generators permute the edges"});

  if (s.transitive) {
    auto d = common_valency(s);
    out.push_back({"vertex_regularity", true, d.has_value(), "transitive group, equal degrees"});
    auto v = valency_check(s, cfg);
    out.push_back({"valency_formula", true, v.agrees(),
                   "d = " + std::to_string(v.d_direct) + ", formula " + v.d_formula.str()});
  } else {
    out.push_back({"vertex_regularity", false, true, "group is intransitive"});
    out.push_back({"valency_formula", false, true, "group is intransitive"});
  }

  auto profile = gossip_profile(s, gossip_max, deadline);
  bool monotone = true;
  const auto& g = profile.values;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] < g[j]) monotone = false;
      if (g[j] > 0 && g[i] + i < g[j] + j) monotone = false;
    }
  }
  out.push_back({"gossip_monotone", true, monotone, "g_i >= g_j and g_i + i >= g_j + j"});
  out.push_back({"g2_dichotomy", profile.g2_dichotomy.has_value(),
                 profile.g2_dichotomy.value_or(true), "b >= 3 implies g_2 != 1"});

  auto rays = rays_semiregular_check(s, deadline);
  out.push_back({"rays_semiregular", true, rays.semiregular,
                 std::to_string(rays.elements_checked) + " elements checked"});

  auto kn = is_kn_complete(s.group, s.b, cfg);
  out.push_back({"complete_implies_transitive", kn.complete,
                 kn.transitivity_consistent.value_or(true),
                 kn.complete ? "K(b) holds" : "K(b) fails"});

  if (s.b <= s.group.degree() && s.group.is_k_transitive(s.b)) {
    BigInt all = 1;
    for (std::size_t i = 0; i < s.b; ++i) all = all * (s.group.degree() - i) / (i + 1);
    out.push_back({"homogeneous_complete", true, BigInt(edges.size()) == all,
                   "b-transitive group, all b-sets are edges"});
  } else {
    out.push_back({"homogeneous_complete", false, true, "group is not b-transitive"});
  }

  if (s.group.is_primitive()) {
    out.push_back({"primitive_connected", true, connectivity(h).size() == 1,
                   "primitive group, connected 2-section"});
  } else {
    out.push_back({"primitive_connected", false, true, "group is imprimitive"});
  }
  return out;
}

}  // namespace saxl
