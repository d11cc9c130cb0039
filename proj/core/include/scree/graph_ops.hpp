#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scree/multigraph.hpp"

namespace scree {

// G□H. Vertex (g, h) is named "g.h" and has index g * |V(H)| + h.
Multigraph cartesian_product(const Multigraph& g, const Multigraph& h);

// G∘(H, root): one copy of H glued at `root` onto every vertex g of G. The
// glued vertex keeps the name g; other vertices of copy g are named "g:h".
// Vertex order: all of G first, then the copies in order of g.
Multigraph rooted_product(const Multigraph& g, const Multigraph& h, std::string_view root);

// Prefixes every vertex id.
Multigraph relabel(const Multigraph& g, std::string_view prefix);

// Disjoint union of two graphs plus one edge u–v (u in a, v in b).
// Vertex ids must be disjoint.
Multigraph join_by_bridge(const Multigraph& a, const Multigraph& b, std::string_view u,
                          std::string_view v);

// Removes one copy of u–v and inserts a new 2-valent vertex between its ends.
// The new vertex is named `new_name`, or "u~v" (made unique) when empty.
Multigraph subdivide(const Multigraph& g, std::string_view u, std::string_view v,
                     std::string new_name = {});

// Smoothing at a 2-valent vertex with two distinct neighbors.
// Throws NotTwoValent otherwise.
Multigraph smooth(const Multigraph& g, std::string_view vertex);

// Edges of multiplicity one whose removal disconnects the graph, as (u, v)
// index pairs with u < v in edge order.
std::vector<std::pair<int, int>> bridges(const Multigraph& g);

// Deletes bridge u–v; returns (component of u, component of v).
// Throws NotABridge.
std::pair<Multigraph, Multigraph> delete_bridge_split(const Multigraph& g, std::string_view u,
                                                      std::string_view v);

// G[S]; throws Disconnected if G[S] is not connected.
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s);
// Components of G[S] as separate graphs.
std::vector<Multigraph> induced_components(const Multigraph& g, const VertexSet& s);

// Merges v into u, dropping the u–v edges; u keeps its name.
Multigraph contract(const Multigraph& g, std::string_view u, std::string_view v);

// Copy of g with `count` parallel copies of u–v removed. Throws Disconnected
// if the result is disconnected.
Multigraph remove_edges(const Multigraph& g, int u, int v, int count = 1);

}  // namespace scree
