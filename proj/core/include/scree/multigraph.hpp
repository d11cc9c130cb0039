#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scree/vertex_set.hpp"

namespace scree {

// Undirected edge between vertex indices u < v carrying `multiplicity`
// parallel copies.
struct Edge {
  int u = 0;
  int v = 0;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge given by vertex ids, as accepted by Multigraph::build.
struct EdgeSpec {
  std::string u;
  std::string v;
  int multiplicity = 1;
};

// Finite, connected, loopless multigraph with opaque string vertex ids.
// Vertices keep insertion order; that order is the canonical order used by
// every search in the library. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;

  // Repeated pairs (in either orientation) sum their multiplicities.
  // Throws SelfLoop, UnknownVertex, DuplicateVertex, BadParams, Disconnected.
  static Multigraph build(std::vector<std::string> vertices, std::span<const EdgeSpec> edges);
  static Multigraph build(std::vector<std::string> vertices, std::span<const Edge> edges);

  // Splits a possibly disconnected vertex/edge description into its
  // connected components, each a valid Multigraph (in vertex order).
  static std::vector<Multigraph> components(std::vector<std::string> vertices,
                                            std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  // Number of edges counted with multiplicity.
  int num_edges() const noexcept { return total_edges_; }
  // Distinct adjacent pairs, sorted by (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Throws UnknownVertex.
  int index_of(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  int multiplicity(int u, int v) const noexcept {
    return mult_[static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v)];
  }
  // (neighbor, multiplicity) pairs in increasing neighbor order.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int valence(int v) const noexcept { return valence_[static_cast<std::size_t>(v)]; }

  bool is_simple() const noexcept;
  bool is_tree() const noexcept;

  // |E(A, B)| with multiplicity; A and B need not be disjoint (shared
  // vertices contribute nothing).
  int edges_between(const VertexSet& a, const VertexSet& b) const;
  // |E(A, A^c)|.
  int cut(const VertexSet& a) const;
  // True when G[S] is nonempty and connected.
  bool induces_connected(const VertexSet& s) const;
  // Connected components of G[S], each as a vertex set, in order of smallest member.
  std::vector<VertexSet> components_of(const VertexSet& s) const;

  VertexSet empty_set() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }
  VertexSet set_of(std::span<const std::string> names) const;

  // Content hash over vertex ids (in order) and edges; identifies the graph
  // in certificates.
  std::string hash() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  static Multigraph assemble(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> mult_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> valence_;
  std::vector<Edge> edges_;
  int total_edges_ = 0;
};

// Graphviz DOT text with `label=<multiplicity>` on every edge.
std::string to_dot(const Multigraph& g, std::string_view graph_name = "G");

}  // namespace scree
