#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scree/multigraph.hpp"
#include "scree/vertex_set.hpp"

namespace scree {

// Multiset of graph edges: each entry carries the number of copies counted.
struct EdgeMultiset {
  std::vector<Edge> edges;
  int size() const noexcept;
};

struct WidthReport {
  int link_width = 0;
  int bag_width = 0;
  int width = 0;
  std::optional<int> witness_link;  // index into links()
  std::optional<int> witness_node;
};

// A tree of nodes with disjoint (possibly empty) bags covering V(G).
// Immutable once validated.
class TreeCutDecomposition {
 public:
  // Throws NotATree, UnknownNode, BagsOverlap, BagsMissVertices.
  static TreeCutDecomposition validate(std::shared_ptr<const Multigraph> graph,
                                       std::vector<std::string> node_names,
                                       std::vector<std::pair<int, int>> links,
                                       std::vector<VertexSet> bags);
  // Same, with nodes, links and bag members given by name.
  static TreeCutDecomposition validate(
      const Multigraph& graph, std::vector<std::string> node_names,
      const std::vector<std::pair<std::string, std::string>>& links,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& bags);
  // One node holding every vertex.
  static TreeCutDecomposition trivial(const Multigraph& graph);

  const Multigraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Multigraph>& graph_ptr() const noexcept { return graph_; }
  int num_nodes() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& node_name(int b) const { return names_.at(static_cast<std::size_t>(b)); }
  const std::vector<std::string>& node_names() const noexcept { return names_; }
  int node_index(std::string_view name) const;  // throws UnknownNode
  const std::vector<std::pair<int, int>>& links() const noexcept { return links_; }
  int link_index(int a, int b) const;  // throws UnknownLink
  const VertexSet& bag(int b) const { return bags_.at(static_cast<std::size_t>(b)); }
  const std::vector<VertexSet>& bags() const noexcept { return bags_; }
  const std::vector<int>& tree_neighbors(int b) const { return adj_.at(static_cast<std::size_t>(b)); }
  // Node whose bag holds vertex v.
  int node_of(int v) const { return node_of_.at(static_cast<std::size_t>(v)); }
  // Nodes on the tree path from a to b, inclusive.
  std::vector<int> tree_path(int a, int b) const;

  EdgeMultiset link_adhesion(int link) const;
  EdgeMultiset node_adhesion(int node) const;
  // |adh(l)| and |adh(b)| for every link and node, computed in one pass.
  std::vector<int> link_adhesion_sizes() const;
  std::vector<int> node_adhesion_sizes() const;
  WidthReport width() const;

 private:
  void index_tree();

  std::shared_ptr<const Multigraph> graph_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> links_;
  std::vector<VertexSet> bags_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> node_of_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

// Deletes empty leaves, smooths empty 2-valent nodes and splits empty nodes
// of valence k >= 4 into nodes of valence 3 and k-1 (the new node takes the
// first two neighbors), until every empty node is trivalent. Never increases
// width; nonempty bags are kept as sets.
TreeCutDecomposition normalize_empty_bags(const TreeCutDecomposition& d);

// T = K_2 with bags A and A^c. Throws BadPartition unless A is proper and nonempty.
TreeCutDecomposition from_bipartition(const Multigraph& g, const VertexSet& a);

// T = K_{1,|S|}: center bag V - S, one leaf per vertex of S. Throws NotIndependent.
TreeCutDecomposition star_from_independent_set(const Multigraph& g, const VertexSet& s);

// Same tree on G□H with every bag B replaced by B × V(H).
TreeCutDecomposition product_lift(const TreeCutDecomposition& d, const Multigraph& h);

// Decomposition of join_by_bridge(G1, G2, u, v): the two trees joined by a
// link between the nodes holding u and v. Node names get prefixes "a:" and
// "b:". Throws EndpointNotFound.
TreeCutDecomposition bridge_join(const TreeCutDecomposition& d1, const TreeCutDecomposition& d2,
                                 std::string_view u, std::string_view v);

// Caterpillar tree with one leaf per bulb of families::quadratic_gap(n) and
// empty trivalent spine nodes. Throws ShapeMismatch if g is not that graph.
TreeCutDecomposition caterpillar_decomposition(const Multigraph& g, int n);

// Bags drawn as clusters, tree links as bold dashed edges between cluster
// anchors, graph edges labeled with multiplicity.
std::string to_dot(const TreeCutDecomposition& d);

}  // namespace scree
