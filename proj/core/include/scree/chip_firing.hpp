#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scree/multigraph.hpp"
#include "scree/tree_cut.hpp"
#include "scree/vertex_set.hpp"

namespace scree {

using Chips = std::int64_t;

// Integer chip count per vertex index.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n) : chips_(n, 0) {}
  explicit Divisor(std::vector<Chips> chips) : chips_(std::move(chips)) {}
  // `count` chips on vertex v, zero elsewhere.
  static Divisor single(std::size_t n, int v, Chips count);
  // One chip on every vertex of s.
  static Divisor indicator(const VertexSet& s);

  std::size_t size() const noexcept { return chips_.size(); }
  Chips operator[](int v) const { return chips_[static_cast<std::size_t>(v)]; }
  Chips& operator[](int v) { return chips_[static_cast<std::size_t>(v)]; }
  const std::vector<Chips>& chips() const noexcept { return chips_; }
  Chips degree() const noexcept;
  bool is_effective() const noexcept;
  VertexSet support() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

 private:
  std::vector<Chips> chips_;
};

// times_fired[v]; applying it to D gives D - L·f.
struct FiringScript {
  std::vector<Chips> times_fired;
  Chips max() const noexcept;
  // Shifts so the minimum entry is 0.
  void normalize();
};

// Every vertex of U sends one chip along each edge leaving U.
Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& u);
// D - L·f.
Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& f);

struct Reduction {
  Divisor reduced;
  FiringScript script;  // reduced = apply_script(D, script), normalized
};

// The q-reduced divisor equivalent to D: first the debt off q is cleared by
// firing distance balls around q from the outside in, then Dhar's burning
// algorithm fires the unburnt set as often as it stays legal, until every
// vertex burns.
Reduction q_reduce(const Multigraph& g, const Divisor& d, int q);
// True when D is effective off q and a fire started at q burns everything.
bool is_q_reduced(const Multigraph& g, const Divisor& d, int q);
// Largest subset of `allowed` that can fire without debt, via burning from
// the complement of `allowed`. Empty if none.
VertexSet maximal_legal_firing(const Multigraph& g, const Divisor& d, const VertexSet& allowed);

bool are_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);
// For every q the q-reduced form carries a chip on q.
bool has_positive_rank(const Multigraph& g, const Divisor& d);

struct GonalityResult {
  int value = 0;
  Divisor witness;  // q0-reduced, q0 = vertex 0
  std::uint64_t candidates = 0;
};

// Smallest degree d <= max_degree with a positive-rank divisor. Only
// divisors that are reduced with respect to vertex 0 and carry a chip there
// are examined (one per class), in a fixed depth-first order; non-reduced
// partial assignments are pruned since adding chips keeps them non-reduced.
// Throws BudgetExceeded when nothing is found up to max_degree or more than
// `budget` candidates are examined (0 = unlimited).
GonalityResult gonality(const Multigraph& g, int max_degree, std::uint64_t budget = 0);
// Same search; empty when every degree up to max_degree was ruled out, which
// proves gon(G) > max_degree. Throws BudgetExceeded only for the budget.
std::optional<GonalityResult> gonality_up_to(const Multigraph& g, int max_degree, std::uint64_t budget = 0);

// Firing script f with D' = D - L·f, normalized to min 0. Solved by
// fraction-free elimination on the Laplacian with the row and column of
// vertex 0 removed. Throws NotEquivalent.
FiringScript firing_script_between(const Multigraph& g, const Divisor& from, const Divisor& to);
// Same script via q-reductions of both divisors at vertex 0.
FiringScript firing_script_by_reduction(const Multigraph& g, const Divisor& from, const Divisor& to);

struct LevelSetChain {
  FiringScript script;
  std::vector<VertexSet> sets;           // U_1 ⊆ U_2 ⊆ ... in firing order
  std::vector<Divisor> intermediates;    // from, after U_1, ..., to
};

// U_i = {f >= max f - i + 1}. Throws NotEquivalent, or
// NonEffectiveIntermediate if some intermediate has debt.
LevelSetChain level_set_decomposition(const Multigraph& g, const Divisor& from, const Divisor& to);

// All effective divisors equivalent to D, sorted. Throws BudgetExceeded when
// more than `cap` candidates of degree deg D would be examined.
std::vector<Divisor> effective_class(const Multigraph& g, const Divisor& d, std::uint64_t cap = 1'000'000);

struct PartitionReport {
  bool partitions = false;
  std::vector<Divisor> members;  // the effective class
};

// Enumerates the effective class; true iff supports are pairwise disjoint
// and cover V(G).
PartitionReport partitions_vertices(const Multigraph& g, const Divisor& d, std::uint64_t cap = 1'000'000);
// Polynomial test: D partitions V(G) iff for every q the q-reduced form R_q
// has a chip on q and R_q - q is p-reduced for every p. The class is then
// {R_q}. Empty optional when D does not partition.
std::optional<std::vector<Divisor>> partition_class_by_reduction(const Multigraph& g, const Divisor& d);

struct DecompositionFromDivisor {
  TreeCutDecomposition decomposition;
  std::vector<Divisor> divisor_per_node;
};

// Nodes are the effective class members, bags their supports, links join
// members one subset-firing apart. Throws NotPartitioning, or NotATree.
DecompositionFromDivisor decomposition_from_partitioning_divisor(const Multigraph& g, const Divisor& d);

enum class DharStrategy {
  // target: the class member with a chip on u reachable in fewest moves
  kMinMoves,
  // target: fire maximal legal sets avoiding u until u holds a chip
  kDharMaximal,
};

struct DharStep {
  int vertex = 0;          // u
  int node = 0;            // node split, in the decomposition before the step
  Divisor start;           // D_k
  Divisor target;          // D''
  std::vector<VertexSet> chain;
  int width_after = 0;
};

struct DharGuidedResult {
  TreeCutDecomposition decomposition;  // after normalize_empty_bags
  std::vector<DharStep> trace;
  int width = 0;
};

// Grows a decomposition from the trivial one: repeatedly take the smallest
// vertex u not yet in the support of any divisor seen, the node k holding u
// and its divisor D_k, pick a target D'' ~ D with u in its support, and
// split bag X_k along the level sets B_0 ⊆ ... ⊆ B_{m-1} of the script from
// D_k to D'' into the path X∩B_0, X∩(B_j - B_{j-1}), X - B_{m-1}. Former
// neighbors of k are reattached one by one to the path node giving the
// smallest width. Requires D effective with positive rank
// (PreconditionFailed otherwise).
DharGuidedResult dhar_guided_decomposition(const Multigraph& g, const Divisor& d, DharStrategy strategy,
                                           std::uint64_t class_cap = 1'000'000);

}  // namespace scree
