#ifndef SAXL_ANALYSIS_HPP
#define SAXL_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "saxl/base_engine.hpp"
#include "saxl/hypergraph.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

/// A group with its full Saxl hypergraph (edges = minimum bases).
struct SaxlInstance {
  PermGroup group;
  std::size_t b = 0;
  Hypergraph hypergraph;
  bool transitive = false;
  /// Suborbit representatives of vertex 0 (transitive groups only).
  std::vector<Point> suborbit_reps;
};

/// Throws BaseSizeTooSmall, BudgetExceeded, or InvariantViolation if the
/// edge set is not b-uniform or not invariant under the generators.
SaxlInstance build_saxl(const PermGroup& g, const BaseSearchConfig& cfg = {});

struct ValencyCheck {
  std::size_t d_direct = 0;
  BigInt d_formula = 0;
  std::size_t orbit_count = 0;       // G_alpha-orbits on ordered (b-1)-bases
  std::size_t ordered_bases = 0;     // |B|
  BigInt point_stabilizer_order = 0;
  bool agrees() const { return d_formula == d_direct; }
};

/// Throws NotTransitive.
ValencyCheck valency_check(const SaxlInstance& s, const BaseSearchConfig& cfg = {});

struct KnNode {
  std::vector<Point> path;  // points stabilized so far
  BigInt order = 1;
  bool holds = false;
};

struct KnCertificate {
  std::size_t n = 0;
  bool complete = false;
  bool recursive = false;
  bool direct_checked = false;
  bool direct = false;
  /// Nodes of the recursion (one per orbit representative visited).
  std::vector<KnNode> nodes;
  /// For a negative answer, the stabilized points where the recursion failed.
  std::optional<std::vector<Point>> failing_path;
  /// Whether K(n), n >= 2, came with (n-1)-transitivity, as it must.
  std::optional<bool> transitivity_consistent;
};

/// K(n)-completeness by the point-stabilizer recursion and, for degree at
/// most 100, by direct enumeration; the two must agree (InvariantViolation).
KnCertificate is_kn_complete(const PermGroup& g, std::size_t n, const BaseSearchConfig& cfg = {});

enum class VerdictStatus { Holds, Fails, Unknown };

struct PairWitness {
  Point alpha = 0, beta = 0;
  std::optional<Point> gamma;
  std::optional<Edge> e_alpha, e_beta;
};

struct ConjectureVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::size_t pairs_checked = 0;
  /// Failing pairs, or for a holding verdict one certificate per pair.
  std::vector<PairWitness> witnesses;
  std::string reason;
};

/// Any two vertices share a neighbour in the 2-section. Transitive groups
/// check (0, beta) for each suborbit representative beta, others all pairs.
ConjectureVerdict check_cnc(const SaxlInstance& s, const Deadline* deadline = nullptr);

/// The same check through the stabilizer adjacency test, for groups whose
/// edge set is too large to enumerate.
ConjectureVerdict check_cnc_by_adjacency(const PermGroup& g, std::size_t b,
                                         const BaseSearchConfig& cfg = {});

/// Edges E_a through a and E_b through b meeting in a single vertex outside
/// {a, b}. When 2b - 1 > |Omega| this is impossible and the verdict fails
/// on the counting bound.
ConjectureVerdict check_edge_disjoint_cnc(const SaxlInstance& s,
                                          const Deadline* deadline = nullptr);

struct DisjointifyResult {
  Edge e_alpha, e_beta;
  Point gamma = 0;
};

/// Moves alpha out of E_beta and beta out of E_alpha while keeping a common
/// vertex gamma, without enlarging the intersection. Throws NotAnEdge or
/// NoCommonVertex.
DisjointifyResult disjointify_edges(const SaxlInstance& s, Point alpha, Point beta,
                                    const Edge& e_alpha, const Edge& e_beta);

struct GossipProfile {
  std::vector<std::size_t> values;                // g_1 .. g_{n_max}
  std::vector<std::vector<Point>> witnesses;      // a minimizing vertex set per n
  /// b >= 3 implies g_2 != 1; nullopt when it does not apply.
  std::optional<bool> g2_dichotomy;
};

GossipProfile gossip_profile(const SaxlInstance& s, std::size_t n_max,
                             const Deadline* deadline = nullptr);

struct FlagTourReport {
  FlagTourVerdict parity;
  std::optional<std::string> matched_case;  // "ii", "v" or "vi"
  bool consistent = true;                   // parity agrees with the case
};

/// `tags` are the construction tags of the group ("flag_case_v", ...).
FlagTourReport flag_tour_verdict(const SaxlInstance& s, const std::vector<std::string>& tags);

/// Common vertex degree when all vertices have the same degree.
std::optional<std::size_t> common_valency(const SaxlInstance& s);

/// Indices of the transitive instances with b in {3, 4} whose common vertex
/// degree is prime.
std::vector<std::size_t> prime_valency_scan(const std::vector<const SaxlInstance*>& instances);

struct RaySemiregularity {
  bool semiregular = true;
  std::size_t elements_checked = 0;
  bool all_elements = false;
  BigInt ray_count = 0;
  std::optional<Edge> fixed_ray_edge;  // only on failure, which means a bug
};

/// No nontrivial element checked fixes an ordered edge. All elements are
/// checked when |G| <= 100000, the generators otherwise.
RaySemiregularity rays_semiregular_check(const SaxlInstance& s,
                                         const Deadline* deadline = nullptr);

struct InvariantResult {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

/// Structural checks: uniformity, equal vertex degrees (transitive), edge
/// invariance, gossip monotonicity, ray semiregularity, K(b) implies
/// (b-1)-transitivity, primitive implies connected.
std::vector<InvariantResult> check_invariants(const SaxlInstance& s, std::size_t gossip_max,
                                              const BaseSearchConfig& cfg = {});

}  // namespace saxl

#endif  // SAXL_ANALYSIS_HPP
