#include "scree/graph_ops.hpp"

#include <algorithm>
#include <functional>

#include "scree/error.hpp"

namespace scree {

Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
  const int ng = static_cast<int>(g.num_vertices());
  const int nh = static_cast<int>(h.num_vertices());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ng * nh));
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) names.push_back(g.name(a) + "." + h.name(b));
  }
  std::vector<Edge> edges;
  for (int a = 0; a < ng; ++a) {
    for (const auto& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v, e.multiplicity});
  }
  for (int b = 0; b < nh; ++b) {
    for (const auto& e : g.edges()) edges.push_back({e.u * nh + b, e.v * nh + b, e.multiplicity});
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph rooted_product(const Multigraph& g, const Multigraph& h, std::string_view root) {
  const int r = h.index_of(root);
  const int ng = static_cast<int>(g.num_vertices());
  const int nh = static_cast<int>(h.num_vertices());
  std::vector<std::string> names = g.names();
  // index of copy-vertex (a, x) for x != r
  auto index = [&](int a, int x) {
    if (x == r) return a;
    return ng + a * (nh - 1) + (x < r ? x : x - 1);
  };
  for (int a = 0; a < ng; ++a) {
    for (int x = 0; x < nh; ++x) {
      if (x != r) names.push_back(g.name(a) + ":" + h.name(x));
    }
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int a = 0; a < ng; ++a) {
    for (const auto& e : h.edges()) edges.push_back({index(a, e.u), index(a, e.v), e.multiplicity});
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph relabel(const Multigraph& g, std::string_view prefix) {
  std::vector<std::string> names;
  for (const auto& n : g.names()) names.push_back(std::string(prefix) + n);
  return Multigraph::build(std::move(names), g.edges());
}

Multigraph join_by_bridge(const Multigraph& a, const Multigraph& b, std::string_view u,
                          std::string_view v) {
  const int iu = a.index_of(u);
  const int iv = b.index_of(v);
  const int na = static_cast<int>(a.num_vertices());
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names()) {
    if (a.has_vertex(n)) throw Error(Errc::kDuplicateVertex, "vertex '" + n + "' in both graphs");
    names.push_back(n);
  }
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + na, e.v + na, e.multiplicity});
  edges.push_back({iu, iv + na, 1});
  return Multigraph::build(std::move(names), edges);
}

Multigraph subdivide(const Multigraph& g, std::string_view u, std::string_view v, std::string new_name) {
  const int iu = g.index_of(u);
  const int iv = g.index_of(v);
  if (g.multiplicity(iu, iv) == 0) throw Error(Errc::kBadParams, "no edge to subdivide");
  if (new_name.empty()) {
    new_name = std::string(u) + "~" + std::string(v);
    std::string base = new_name;
    for (int k = 2; g.has_vertex(new_name); ++k) new_name = base + "#" + std::to_string(k);
  }
  std::vector<std::string> names = g.names();
  names.push_back(new_name);
  const int x = static_cast<int>(g.num_vertices());
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if ((e.u == std::min(iu, iv)) && (e.v == std::max(iu, iv))) {
      if (e.multiplicity > 1) edges.push_back({e.u, e.v, e.multiplicity - 1});
    } else {
      edges.push_back(e);
    }
  }
  edges.push_back({iu, x, 1});
  edges.push_back({x, iv, 1});
  return Multigraph::build(std::move(names), edges);
}

Multigraph smooth(const Multigraph& g, std::string_view vertex) {
  const int x = g.index_of(vertex);
  const auto& nbrs = g.neighbors(x);
  if (g.valence(x) != 2 || nbrs.size() != 2) {
    throw Error(Errc::kNotTwoValent, "vertex '" + std::string(vertex) + "' is not 2-valent with distinct neighbors");
  }
  const int a = nbrs[0].first;
  const int b = nbrs[1].first;
  std::vector<std::string> names;
  std::vector<int> remap(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(g.num_vertices()); ++i) {
    if (i == x) continue;
    remap[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
    names.push_back(g.name(i));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    edges.push_back({remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)], e.multiplicity});
  }
  edges.push_back({remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)], 1});
  return Multigraph::build(std::move(names), edges);
}

std::vector<std::pair<int, int>> bridges(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> found;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    for (auto [w, m] : g.neighbors(v)) {
      if (w == parent && m == 1) continue;
      if (disc[static_cast<std::size_t>(w)] >= 0) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      } else {
        dfs(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)] && m == 1) {
          found.emplace_back(std::min(v, w), std::max(v, w));
        }
      }
    }
  };
  dfs(0, -1);
  std::sort(found.begin(), found.end());
  return found;
}

std::pair<Multigraph, Multigraph> delete_bridge_split(const Multigraph& g, std::string_view u,
                                                      std::string_view v) {
  const int iu = g.index_of(u);
  const int iv = g.index_of(v);
  auto all = bridges(g);
  if (std::find(all.begin(), all.end(), std::make_pair(std::min(iu, iv), std::max(iu, iv))) == all.end()) {
    throw Error(Errc::kNotABridge, std::string(u) + "-" + std::string(v) + " is not a bridge");
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!(e.u == std::min(iu, iv) && e.v == std::max(iu, iv))) edges.push_back(e);
  }
  auto parts = Multigraph::components(g.names(), edges);
  if (parts.size() != 2) throw Error(Errc::kNotABridge, "bridge deletion did not split in two");
  if (parts[0].has_vertex(u)) return {std::move(parts[0]), std::move(parts[1])};
  return {std::move(parts[1]), std::move(parts[0])};
}

std::vector<Multigraph> induced_components(const Multigraph& g, const VertexSet& s) {
  std::vector<std::string> names;
  std::vector<int> local(g.num_vertices(), -1);
  for (int v : s.members()) {
    local[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) {
      edges.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.multiplicity});
    }
  }
  return Multigraph::components(std::move(names), edges);
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::kBadParams, "empty vertex subset");
  auto parts = induced_components(g, s);
  if (parts.size() != 1) throw Error(Errc::kDisconnected, "induced subgraph is disconnected");
  return std::move(parts[0]);
}

Multigraph remove_edges(const Multigraph& g, int u, int v, int count) {
  if (count < 1 || g.multiplicity(u, v) < count) throw Error(Errc::kBadParams, "not enough parallel edges to remove");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == std::min(u, v) && e.v == std::max(u, v)) {
      if (e.multiplicity > count) edges.push_back({e.u, e.v, e.multiplicity - count});
    } else {
      edges.push_back(e);
    }
  }
  return Multigraph::build(g.names(), edges);
}

Multigraph contract(const Multigraph& g, std::string_view u, std::string_view v) {
  const int a = g.index_of(u);
  const int b = g.index_of(v);
  if (a == b) throw Error(Errc::kBadParams, "cannot contract a vertex with itself");
  if (g.multiplicity(a, b) == 0) throw Error(Errc::kBadParams, "contracted vertices must be adjacent");
  std::vector<std::string> names;
  std::vector<int> map(g.num_vertices(), -1);
  for (int x = 0; x < static_cast<int>(g.num_vertices()); ++x) {
    if (x == b) continue;
    map[static_cast<std::size_t>(x)] = static_cast<int>(names.size());
    names.push_back(g.name(x));
  }
  map[static_cast<std::size_t>(b)] = map[static_cast<std::size_t>(a)];
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int x = map[static_cast<std::size_t>(e.u)];
    const int y = map[static_cast<std::size_t>(e.v)];
    if (x != y) edges.push_back({std::min(x, y), std::max(x, y), e.multiplicity});
  }
  return Multigraph::build(std::move(names), edges);
}

}  // namespace scree
