#pragma once

#include "scree/multigraph.hpp"
#include "scree/vertex_set.hpp"

namespace scree {

// Minimum edge cut (A, A^c) with its multiplicity-weighted size.
struct CutResult {
  int value = 0;
  VertexSet side;  // A; contains vertex 0 for global cuts
};

// λ(G) via Stoer–Wagner. Requires |V| >= 2.
CutResult edge_connectivity(const Multigraph& g);

// Minimum |E(A, A^c)| over A ⊇ sources with A ∩ sinks = ∅, via max-flow with
// each terminal set contracted. The returned side is the source side of the
// residual cut; when the terminal sets induce connected subgraphs both sides
// induce connected subgraphs. Throws BadParams if the sets intersect or
// either is empty.
CutResult min_cut_between(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks);

struct IndependentSetResult {
  int value = 0;
  VertexSet witness;
};

// α(G), exact. Parallel edges count as a single adjacency. |V| <= 64.
IndependentSetResult independence_number(const Multigraph& g);

bool is_independent(const Multigraph& g, const VertexSet& s);

}  // namespace scree
