#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scree/chip_firing.hpp"
#include "scree/multigraph.hpp"
#include "scree/scramble.hpp"
#include "scree/tree_cut.hpp"

namespace scree {

struct ScwOptions {
  int max_vertices = 9;
  // Work units (subset pairs visited); 0 = unlimited.
  std::uint64_t budget = 0;
  // Only allow nonempty bags that induce connected subgraphs.
  bool require_connected_bags = false;
  bool allow_empty_bags = true;
};

struct ScwResult {
  int value = 0;
  TreeCutDecomposition decomposition;
  std::uint64_t work = 0;
};

// Exact screewidth by dynamic programming over vertex subsets. A rooted
// subtree is described by its vertex set S; it fits width k when
// |E(S, S^c)| <= k and some bag X ⊆ S with children partitioning S - X into
// fitting subtrees satisfies |X| + adh <= k, where
// 2·adh = Σ|E(S_i, S_i^c)| + |E(S, S^c)| - |E(X, X^c)|. The minimal child cut
// sum is itself a subset DP, so each k costs O(3^n). k is found by binary
// search between min(n, λ) and the best constructive upper bound.
// Throws BudgetExceeded if |V| > max_vertices or the budget runs out.
// With require_connected_bags or without allow_empty_bags the result may be
// larger than scw; if no decomposition exists at all, throws
// PreconditionFailed.
ScwResult scw_exact(const Multigraph& g, const ScwOptions& options = {});

// Decides whether some decomposition has width <= k.
std::optional<TreeCutDecomposition> scw_decide(const Multigraph& g, int k, const ScwOptions& options = {});

struct SnOptions {
  int max_vertices = 8;
  // Search nodes; 0 = unlimited.
  std::uint64_t budget = 0;
  // Known upper bound on sn (for example from scw_exact); 0 = none.
  int upper_bound = 0;
};

struct SnResult {
  int value = 0;
  Scramble scramble;
  std::uint64_t work = 0;
};

// Exact scramble number. The singleton scramble gives sn >= min(n, λ); then
// for k = lower + 1, ... a backtracking search looks for connected eggs such
// that every (k-1)-set of vertices misses some egg (h >= k) and any two
// disjoint eggs are joined by >= k edge-disjoint paths (e >= k), stopping at
// the first k that fails. Throws BudgetExceeded.
SnResult sn_exact(const Multigraph& g, const SnOptions& options = {});

// Scramble of order >= k, if one exists.
std::optional<Scramble> sn_decide(const Multigraph& g, int k, const SnOptions& options = {});

// Eggs {v} for every vertex.
Scramble singleton_scramble(const Multigraph& g);

struct DeltaBoundReport {
  int value = 0;  // n - α(G)
  std::optional<int> scw;
  std::optional<int> sn;
  bool agrees = true;
};

// For simple G with minimum valence >= floor(n/2) + 1, returns n - α(G) and
// the exact solvers' values where they fit the default caps. Throws
// PreconditionFailed.
DeltaBoundReport delta_bound_check(const Multigraph& g, const ScwOptions& scw = {}, const SnOptions& sn = {});

// Node whose removal leaves every component with at most floor(L/2) of the
// tree's L leaves (smallest such index). Throws NotATree.
int leaf_centroid(const Multigraph& tree);
// Leaf pairs lying in different components of T - node.
long long geodesics_through(const Multigraph& tree, int node);
// All trees with `leaves` leaves whose internal vertices are trivalent, up
// to isomorphism. leaves >= 2.
std::vector<Multigraph> trivalent_trees(int leaves);

enum class BoundSource { kMachine, kCited };

struct Bound {
  int value = 0;
  BoundSource source = BoundSource::kMachine;
  std::string reason;
};

struct BoundsLedger {
  std::string invariant;  // "sn", "scw" or "gon"
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  bool proven_equal() const;
  // Both bounds present, equal, and machine-derived.
  bool machine_proven() const;
};

struct CitedBound {
  std::string invariant;
  bool is_lower = true;
  int value = 0;
  std::string citation;
};

struct SandwichInput {
  std::optional<TreeCutDecomposition> decomposition;
  std::optional<Scramble> scramble;
  std::optional<Divisor> divisor;
  std::vector<CitedBound> cited;
  bool run_exact = true;
  ScwOptions scw;
  SnOptions sn;
  int gonality_max_degree = 0;  // 0 = skip the gonality search
  std::uint64_t gonality_budget = 0;
};

// Combines certificates, exact solves and cited bounds into intervals for
// sn, scw and gon, using sn <= scw and sn <= gon. Certificates are verified
// first (a divisor must be effective with positive rank). Throws
// InconsistentCertificates if some lower bound exceeds an upper bound.
std::vector<BoundsLedger> sandwich(const Multigraph& g, const SandwichInput& input);

}  // namespace scree
