#pragma once

// Random instance generators and brute-force reference implementations.
// Nothing here calls the library's algorithms; only the data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scree/chip_firing.hpp"
#include "scree/multigraph.hpp"
#include "scree/scramble.hpp"
#include "scree/tree_cut.hpp"

namespace oracle {

using scree::Edge;
using scree::Multigraph;
using Rng = std::mt19937_64;

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Uniform labeled tree on n vertices via a Pruefer sequence.
inline std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& seq, int n) {
  std::vector<std::pair<int, int>> edges;
  if (n == 2) return {{0, 1}};
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

inline Multigraph random_tree(Rng& rng, int n) {
  if (n == 1) return Multigraph::build(numbered(1), std::vector<Edge>{});
  std::vector<int> seq;
  for (int i = 0; i + 2 < n; ++i) seq.push_back(uniform(rng, 0, n - 1));
  std::vector<Edge> edges;
  for (auto [u, v] : pruefer_tree(seq, n)) edges.push_back({u, v, 1});
  return Multigraph::build(numbered(n), edges);
}

// Random spanning tree plus extra edges with probability p; multiplicities
// uniform in 1..max_mult.
inline Multigraph random_connected(Rng& rng, int n, int max_mult, double p) {
  std::map<std::pair<int, int>, int> mult;
  if (n >= 2) {
    std::vector<int> seq;
    for (int i = 0; i + 2 < n; ++i) seq.push_back(uniform(rng, 0, n - 1));
    for (auto e : pruefer_tree(seq, n)) mult[e] = uniform(rng, 1, max_mult);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!mult.count({u, v}) && coin(rng)) mult[{u, v}] = uniform(rng, 1, max_mult);
    }
  }
  std::vector<Edge> edges;
  for (auto [e, m] : mult) edges.push_back({e.first, e.second, m});
  return Multigraph::build(numbered(n), edges);
}

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

inline int cut_mask(const Multigraph& g, std::uint32_t a) {
  int c = 0;
  for (const auto& e : g.edges()) {
    if (((a >> e.u) & 1U) != ((a >> e.v) & 1U)) c += e.multiplicity;
  }
  return c;
}

inline bool connected_mask(const Multigraph& g, std::uint32_t s) {
  if (s == 0) return false;
  std::uint32_t seen = s & (~s + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.edges()) {
      const bool iu = (seen >> e.u) & 1U;
      const bool iv = (seen >> e.v) & 1U;
      if (iu != iv && ((s >> e.u) & 1U) && ((s >> e.v) & 1U)) {
        seen |= (1U << e.u) | (1U << e.v);
        grew = true;
      }
    }
  }
  return seen == s;
}

inline std::uint32_t mask_of(const scree::VertexSet& s) {
  std::uint32_t m = 0;
  for (int v : s.members()) m |= 1U << v;
  return m;
}

// λ(G) over every bipartition.
inline int edge_connectivity(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t a = 1; a + 1 < (1U << n); a += 2) best = std::min(best, cut_mask(g, a));
  return best;
}

inline bool independent_mask(const Multigraph& g, std::uint32_t s) {
  for (const auto& e : g.edges()) {
    if (((s >> e.u) & 1U) && ((s >> e.v) & 1U)) return false;
  }
  return true;
}

inline int independence_number(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (independent_mask(g, s)) best = std::max(best, popcount(s));
  }
  return best;
}

// Width of a decomposition given as tree links and a node per vertex, from
// the definitions: each edge whose ends sit in different nodes loads every
// link and every interior node of the tree path between them.
struct Width {
  int width = 0;
  int link_width = 0;
  std::vector<int> link_adhesion;
  std::vector<int> node_adhesion;
};

inline std::vector<int> tree_path(int m, const std::vector<std::pair<int, int>>& links, int a, int b) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (auto [x, y] : links) {
    adj[static_cast<std::size_t>(x)].push_back(y);
    adj[static_cast<std::size_t>(y)].push_back(x);
  }
  std::vector<int> prev(static_cast<std::size_t>(m), -1);
  std::queue<int> q;
  q.push(a);
  prev[static_cast<std::size_t>(a)] = a;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (prev[static_cast<std::size_t>(y)] < 0) {
        prev[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

inline Width width_of(const Multigraph& g, int m, const std::vector<std::pair<int, int>>& links,
                      const std::vector<int>& node_of) {
  Width w;
  w.link_adhesion.assign(links.size(), 0);
  w.node_adhesion.assign(static_cast<std::size_t>(m), 0);
  std::map<std::pair<int, int>, int> link_index;
  for (std::size_t i = 0; i < links.size(); ++i) {
    link_index[{links[i].first, links[i].second}] = static_cast<int>(i);
    link_index[{links[i].second, links[i].first}] = static_cast<int>(i);
  }
  for (const auto& e : g.edges()) {
    const int a = node_of[static_cast<std::size_t>(e.u)];
    const int b = node_of[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    auto path = tree_path(m, links, a, b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      w.link_adhesion[static_cast<std::size_t>(link_index[{path[i], path[i + 1]}])] += e.multiplicity;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) w.node_adhesion[static_cast<std::size_t>(path[i])] += e.multiplicity;
  }
  std::vector<int> bag(static_cast<std::size_t>(m), 0);
  for (int x : node_of) ++bag[static_cast<std::size_t>(x)];
  for (int l : w.link_adhesion) w.link_width = std::max(w.link_width, l);
  w.width = w.link_width;
  for (int b = 0; b < m; ++b) {
    w.width = std::max(w.width, bag[static_cast<std::size_t>(b)] + w.node_adhesion[static_cast<std::size_t>(b)]);
  }
  return w;
}

inline Width width_of(const scree::TreeCutDecomposition& d) {
  std::vector<int> node_of(d.graph().num_vertices(), -1);
  for (int b = 0; b < d.num_nodes(); ++b) {
    for (int v : d.bag(b).members()) node_of[static_cast<std::size_t>(v)] = b;
  }
  return width_of(d.graph(), d.num_nodes(), d.links(), node_of);
}

// Minimum width over every labeled tree on up to max_nodes nodes and every
// assignment of vertices to nodes.
inline int screewidth(const Multigraph& g, int max_nodes) {
  const int n = static_cast<int>(g.num_vertices());
  int best = n;
  for (int m = 2; m <= max_nodes; ++m) {
    std::vector<int> seq(static_cast<std::size_t>(std::max(0, m - 2)), 0);
    while (true) {
      const auto links = pruefer_tree(seq, m);
      // path[a][b]: link indices and interior nodes between a and b
      std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> path(
          static_cast<std::size_t>(m), std::vector<std::pair<std::vector<int>, std::vector<int>>>(static_cast<std::size_t>(m)));
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          auto p = tree_path(m, links, a, b);
          auto& [ls, ns] = path[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            for (std::size_t l = 0; l < links.size(); ++l) {
              if ((links[l].first == p[i] && links[l].second == p[i + 1]) ||
                  (links[l].second == p[i] && links[l].first == p[i + 1])) {
                ls.push_back(static_cast<int>(l));
              }
            }
            if (i > 0) ns.push_back(p[i]);
          }
        }
      }
      std::vector<int> node_of(static_cast<std::size_t>(n), 0);
      std::vector<int> link_load(links.size());
      std::vector<int> node_load(static_cast<std::size_t>(m));
      while (true) {
        std::fill(link_load.begin(), link_load.end(), 0);
        std::fill(node_load.begin(), node_load.end(), 0);
        for (int v : node_of) ++node_load[static_cast<std::size_t>(v)];
        for (const auto& e : g.edges()) {
          const int a = node_of[static_cast<std::size_t>(e.u)];
          const int b = node_of[static_cast<std::size_t>(e.v)];
          if (a == b) continue;
          const auto& [ls, ns] = path[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          for (int l : ls) link_load[static_cast<std::size_t>(l)] += e.multiplicity;
          for (int x : ns) node_load[static_cast<std::size_t>(x)] += e.multiplicity;
        }
        int w = 0;
        for (int x : link_load) w = std::max(w, x);
        for (int x : node_load) w = std::max(w, x);
        best = std::min(best, w);
        int i = 0;
        while (i < n && ++node_of[static_cast<std::size_t>(i)] == m) node_of[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
      }
      int j = 0;
      while (j < m - 2 && ++seq[static_cast<std::size_t>(j)] == m) seq[static_cast<std::size_t>(j++)] = 0;
      if (j == m - 2) break;
    }
  }
  return best;
}

inline int hitting_number(const std::vector<std::uint32_t>& eggs, int n) {
  for (int size = 0; size <= n; ++size) {
    for (std::uint32_t h = 0; h < (1U << n); ++h) {
      if (popcount(h) != size) continue;
      if (std::all_of(eggs.begin(), eggs.end(), [h](std::uint32_t e) { return (e & h) != 0; })) return size;
    }
  }
  return n;
}

// Empty optional means infinity.
inline std::optional<int> egg_cut_number(const Multigraph& g, const std::vector<std::uint32_t>& eggs) {
  const int n = static_cast<int>(g.num_vertices());
  std::optional<int> best;
  for (std::size_t i = 0; i < eggs.size(); ++i) {
    for (std::size_t j = 0; j < eggs.size(); ++j) {
      if (i == j || (eggs[i] & eggs[j]) != 0) continue;
      for (std::uint32_t a = 0; a < (1U << n); ++a) {
        if ((a & eggs[i]) != eggs[i] || (a & eggs[j]) != 0) continue;
        const int c = cut_mask(g, a);
        if (!best || c < *best) best = c;
      }
    }
  }
  return best;
}

inline int scramble_order(const Multigraph& g, const std::vector<std::uint32_t>& eggs) {
  const int h = hitting_number(eggs, static_cast<int>(g.num_vertices()));
  const auto e = egg_cut_number(g, eggs);
  return e ? std::min(h, *e) : h;
}

// Maximum order over every set of connected eggs; small graphs only.
inline int scramble_number(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::uint32_t> connected;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (connected_mask(g, s)) connected.push_back(s);
  }
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << connected.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    std::vector<std::uint32_t> eggs;
    for (std::size_t i = 0; i < connected.size(); ++i) {
      if ((pick >> i) & 1U) eggs.push_back(connected[i]);
    }
    best = std::max(best, scramble_order(g, eggs));
  }
  return best;
}

// Chip-firing by definition.
using Chips = std::vector<long long>;

inline Chips fire(const Multigraph& g, Chips d, std::uint32_t s) {
  for (const auto& e : g.edges()) {
    const bool iu = (s >> e.u) & 1U;
    const bool iv = (s >> e.v) & 1U;
    if (iu && !iv) {
      d[static_cast<std::size_t>(e.u)] -= e.multiplicity;
      d[static_cast<std::size_t>(e.v)] += e.multiplicity;
    } else if (iv && !iu) {
      d[static_cast<std::size_t>(e.v)] -= e.multiplicity;
      d[static_cast<std::size_t>(e.u)] += e.multiplicity;
    }
  }
  return d;
}

inline bool effective(const Chips& d) {
  return std::all_of(d.begin(), d.end(), [](long long c) { return c >= 0; });
}

// Every effective divisor equivalent to effective d, by closing under legal
// subset firings (any script between effective divisors splits into legal
// level-set firings).
inline std::set<Chips> effective_class(const Multigraph& g, const Chips& d) {
  const int n = static_cast<int>(g.num_vertices());
  std::set<Chips> seen{d};
  std::vector<Chips> stack{d};
  while (!stack.empty()) {
    Chips cur = stack.back();
    stack.pop_back();
    for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) {
      Chips next = fire(g, cur, s);
      if (effective(next) && seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

inline bool positive_rank(const Multigraph& g, const Chips& d) {
  if (!effective(d)) return false;
  std::vector<bool> covered(g.num_vertices(), false);
  for (const auto& e : effective_class(g, d)) {
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0) covered[v] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

// Smallest degree of a positive-rank divisor, searched up to max_degree.
inline std::optional<int> gonality(const Multigraph& g, int max_degree) {
  const int n = static_cast<int>(g.num_vertices());
  for (int deg = 1; deg <= max_degree; ++deg) {
    Chips d(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int)> place = [&](int v, int left) -> bool {
      if (v == n - 1) {
        d[static_cast<std::size_t>(v)] = left;
        const bool ok = positive_rank(g, d);
        d[static_cast<std::size_t>(v)] = 0;
        return ok;
      }
      for (int c = left; c >= 0; --c) {
        d[static_cast<std::size_t>(v)] = c;
        if (place(v + 1, left - c)) return true;
      }
      d[static_cast<std::size_t>(v)] = 0;
      return false;
    };
    if (place(0, deg)) return deg;
  }
  return std::nullopt;
}

// D is q-reduced: effective off q and no nonempty S ⊆ V - q fires legally.
inline bool q_reduced(const Multigraph& g, const Chips& d, int q) {
  const int n = static_cast<int>(g.num_vertices());
  for (int v = 0; v < n; ++v) {
    if (v != q && d[static_cast<std::size_t>(v)] < 0) return false;
  }
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if ((s >> q) & 1U) continue;
    Chips next = fire(g, d, s);
    bool legal = true;
    for (int v = 0; v < n; ++v) {
      if (((s >> v) & 1U) && next[static_cast<std::size_t>(v)] < 0) legal = false;
    }
    if (legal) return false;
  }
  return true;
}

// Supports of the class members are pairwise disjoint and cover V.
inline bool partitions(const Multigraph& g, const Chips& d) {
  std::uint32_t seen = 0;
  for (const auto& e : effective_class(g, d)) {
    std::uint32_t supp = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > 0) supp |= 1U << v;
    }
    if ((supp & seen) != 0) return false;
    seen |= supp;
  }
  return seen == (1U << g.num_vertices()) - 1;
}

inline Chips chips_of(const scree::Divisor& d) { return Chips(d.chips().begin(), d.chips().end()); }

// Leaf pairs of a tree separated by removing `node`.
inline long long geodesics_through(const Multigraph& t, int node) {
  const int n = static_cast<int>(t.num_vertices());
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (t.valence(v) == 1) leaves.push_back(v);
  }
  long long count = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      std::vector<std::pair<int, int>> links;
      for (const auto& e : t.edges()) links.emplace_back(e.u, e.v);
      auto path = tree_path(n, links, leaves[i], leaves[j]);
      if (node != leaves[i] && node != leaves[j] && std::find(path.begin(), path.end(), node) != path.end()) ++count;
    }
  }
  return count;
}

}  // namespace oracle
