#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "scree/multigraph.hpp"

namespace scree::families {

// Vertex ids are decimal indices unless stated otherwise.

Multigraph path(int n);                       // P_n
Multigraph star(int n);                       // K_{1,n}; center "0"
// CCG_n, n even: path of length n/2 + 1 with a leaf on every internal vertex.
Multigraph cubic_caterpillar(int n);
// Caterpillar with `leaves` >= 3 leaves and all internal vertices trivalent.
Multigraph caterpillar_with_leaves(int leaves);
Multigraph cycle(int n);                      // C_n, n >= 3
Multigraph complete(int n);                   // K_n
Multigraph complete_multigraph(int n, int m); // K_n^m
// K_{n1,...,nk}; vertex "i.j" is the j-th vertex of part i.
Multigraph complete_multipartite(std::span<const int> parts);
Multigraph banana(int multiplicity);          // B_{2,l}
// Outer cycle o0..o4, spokes o_i–i_i, inner pentagram i_i–i_{i+2}.
Multigraph petersen();
Multigraph grid(int m, int n);                // P_m □ P_n
Multigraph stacked_prism(int m, int n);       // Y_{m,n} = C_m □ P_n
Multigraph torus(int m, int n);               // T_{m,n} = C_m □ C_n
Multigraph hypercube(int n);                  // Q_n = K_2^{□n}
Multigraph rook(int m, int n);                // R_{m,n} = K_m □ K_n
// G_m: P_{2m-2} with every edge doubled.
Multigraph doubled_path(int m);
// G'_m: G_m with one edge of each doubled pair subdivided m-2 times.
// The leftmost vertex is "0".
Multigraph subdivided_doubled_path(int m);
// H_n: P_n with every edge replaced by n parallel edges.
Multigraph multipath(int n);
// Ĝ: |V(G)| new vertices "^0", "^1", ... adjacent to every other vertex.
// Requires G simple.
Multigraph hat_gadget(const Multigraph& g);
// Sierpinski gasket graph; level 0 is a triangle, level k glues three
// copies of level k-1 at their corners. Vertex "x_y" sits at lattice point
// (x, y).
Multigraph sierpinski(int level);
// K_n ∘ K_n^m with m = C(n,2) + 1. Central vertices "0".."n-1"; bulb i
// holds "i" and "i:1".."i:(n-1)".
Multigraph quadratic_gap(int n);
// K_3 ∘ B_{2,3}: a triangle with a triple-edge pendant at each corner.
Multigraph banana_triangle();
// G'_m (prefix "g") joined by a bridge from its leftmost vertex to the
// last vertex of H_n (prefix "h"). Requires m >= n > 1.
Multigraph triple_construction(int n, int m);
// quadratic_gap(n) joined by a bridge to K_{t+1} (prefix "k"),
// t = quadratic_gap_width(n) - gap, so scw - sn = gap.
Multigraph gap_bridge(int n, int gap);
// K_3 ∘ K_n^l: a triangle with a copy of K_n^l glued at each corner.
Multigraph bulb_triangle(int n, int l);
// Eight-vertex graph whose optimal decompositions need a disconnected bag:
// u1=u2, v1=v2, w1=w2 doubled, x adjacent to u1 v1 w1, y to u2 v2 w2.
Multigraph disconnected_bag_graph();
// Seven-vertex simple graph with scw = sn = 3 whose contraction of 4–5
// (minor_pair(true)) has scw = sn = 4.
Multigraph minor_pair(bool contracted);
// P_3 with its first edge doubled: 0=1–2. Its square under □ has
// sn = scw = 4 and gonality 5.
Multigraph doubled_edge_path();
// Nine-vertex graph of gonality 2 carrying a degree-4 positive-rank divisor
// (dhar_choice_divisor) on which the Dhar-guided construction reaches width
// 6 with fewest-move targets and width 4 with Dhar-maximal targets.
Multigraph dhar_choice_graph();
// Chips for dhar_choice_graph(): 1 on "3", 3 on "5".
std::vector<std::pair<std::string, int>> dhar_choice_chips();
// Chips for sierpinski(2): 2 on each of the corners "4_0" and "0_4", 1 on
// "2_1" and "1_2". Degree 6, positive rank.
std::vector<std::pair<std::string, int>> sierpinski_chips();

// ceil(n(n+2)/4) - 1.
int quadratic_gap_width(int n);

// Dispatch by family name; see the CLI help for the list.
// Throws BadParams for unknown names or invalid parameters.
Multigraph by_name(std::string_view name, std::span<const int> params);
std::vector<std::string_view> names();

}  // namespace scree::families
