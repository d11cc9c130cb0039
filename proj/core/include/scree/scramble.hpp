#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scree/multigraph.hpp"
#include "scree/tree_cut.hpp"
#include "scree/vertex_set.hpp"

namespace scree {

// Nonnegative count or infinity.
class ExtCount {
 public:
  static ExtCount of(int value) { return ExtCount(value, false); }
  static ExtCount infinity() { return ExtCount(0, true); }
  bool is_infinite() const noexcept { return infinite_; }
  // Precondition: finite.
  int value() const noexcept { return value_; }
  std::string to_string() const;
  friend bool operator==(const ExtCount&, const ExtCount&) = default;
  friend std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b);

 private:
  ExtCount(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

// Nonempty, pairwise distinct, connected eggs on one graph.
class Scramble {
 public:
  // Throws EmptyEgg, DisconnectedEgg, DuplicateEgg, GraphMismatch.
  static Scramble validate(std::shared_ptr<const Multigraph> graph, std::vector<VertexSet> eggs);
  // Eggs given by vertex ids; throws UnknownVertex as well.
  static Scramble validate(const Multigraph& graph, const std::vector<std::vector<std::string>>& eggs);

  const Multigraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Multigraph>& graph_ptr() const noexcept { return graph_; }
  const std::vector<VertexSet>& eggs() const noexcept { return eggs_; }

 private:
  std::shared_ptr<const Multigraph> graph_;
  std::vector<VertexSet> eggs_;
};

struct HittingResult {
  int value = 0;
  VertexSet witness;
};

struct EggCutResult {
  ExtCount value = ExtCount::infinity();
  // Present when finite: the separated egg pair, the side A containing the
  // first egg, and the cut edges E(A, A^c).
  std::optional<std::pair<int, int>> eggs;
  VertexSet side;
  EdgeMultiset cut;
};

struct OrderReport {
  HittingResult hitting;
  EggCutResult egg_cut;
  int order = 0;
};

// h(S), exact, branching on the vertices of a smallest unhit egg.
HittingResult hitting_number(const Scramble& s);
// e(S): minimum over disjoint egg pairs of the max-flow min cut between them.
EggCutResult egg_cut_number(const Scramble& s);
// min(h, e).
OrderReport order(const Scramble& s);

}  // namespace scree
