#include "scree/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "scree/error.hpp"
#include "scree/graph_ops.hpp"

namespace scree::families {

namespace {

std::vector<std::string> numbered(int n, const std::string& prefix = {}) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kBadParams, what);
}

}  // namespace

Multigraph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return Multigraph::build(numbered(n), edges);
}

Multigraph star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i, 1});
  return Multigraph::build(numbered(n + 1), edges);
}

Multigraph caterpillar_with_leaves(int leaves) {
  require(leaves >= 3, "caterpillar needs at least 3 leaves");
  // spine s0..s_{L-3}; s0 carries two leaves, s_last carries two leaves,
  // every other spine vertex carries one.
  const int spine = leaves - 2;
  std::vector<std::string> names;
  for (int i = 0; i < spine; ++i) names.push_back("s" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1, 1});
  int next = spine;
  auto add_leaf = [&](int at) {
    names.push_back("l" + std::to_string(next - spine));
    edges.push_back({at, next, 1});
    ++next;
  };
  add_leaf(0);
  for (int i = 0; i < spine; ++i) add_leaf(i);
  add_leaf(spine - 1);
  return Multigraph::build(std::move(names), edges);
}

Multigraph cubic_caterpillar(int n) {
  require(n >= 2 && n % 2 == 0, "CCG_n needs even n >= 2");
  return caterpillar_with_leaves(n / 2 + 2);
}

Multigraph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return Multigraph::build(numbered(n), edges);
}

Multigraph complete_multigraph(int n, int m) {
  require(n >= 1 && m >= 1, "complete multigraph needs n >= 1, m >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, m});
  }
  return Multigraph::build(numbered(n), edges);
}

Multigraph complete(int n) { return complete_multigraph(n, 1); }

Multigraph complete_multipartite(std::span<const int> parts) {
  require(parts.size() >= 2, "multipartite graph needs at least two parts");
  std::vector<std::string> names;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "parts must be nonempty");
    for (int j = 0; j < parts[p]; ++j) {
      names.push_back(std::to_string(p) + "." + std::to_string(j));
      part_of.push_back(static_cast<int>(p));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      if (part_of[a] != part_of[b]) edges.push_back({static_cast<int>(a), static_cast<int>(b), 1});
    }
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph banana(int multiplicity) {
  require(multiplicity >= 1, "banana needs multiplicity >= 1");
  std::vector<Edge> edges{{0, 1, multiplicity}};
  return Multigraph::build(numbered(2), edges);
}

Multigraph petersen() {
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) names.push_back("i" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1});
    edges.push_back({i, 5 + i, 1});
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph grid(int m, int n) { return cartesian_product(path(m), path(n)); }
Multigraph stacked_prism(int m, int n) { return cartesian_product(cycle(m), path(n)); }
Multigraph torus(int m, int n) { return cartesian_product(cycle(m), cycle(n)); }
Multigraph rook(int m, int n) { return cartesian_product(complete(m), complete(n)); }

Multigraph hypercube(int n) {
  require(n >= 1, "hypercube needs n >= 1");
  Multigraph g = path(2);
  for (int i = 1; i < n; ++i) g = cartesian_product(g, path(2));
  return g;
}

Multigraph doubled_path(int m) {
  require(m >= 2, "doubled path needs m >= 2");
  const int n = 2 * m - 2;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 2});
  return Multigraph::build(numbered(n), edges);
}

Multigraph subdivided_doubled_path(int m) {
  require(m >= 2, "subdivided doubled path needs m >= 2");
  const int n = 2 * m - 2;
  std::vector<std::string> names = numbered(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, 1});
    int prev = i;
    for (int k = 1; k <= m - 2; ++k) {
      names.push_back(std::to_string(i) + "-" + std::to_string(i + 1) + "." + std::to_string(k));
      int cur = static_cast<int>(names.size()) - 1;
      edges.push_back({prev, cur, 1});
      prev = cur;
    }
    edges.push_back({prev, i + 1, 1});
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph multipath(int n) {
  require(n >= 1, "multipath needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, n});
  return Multigraph::build(numbered(n), edges);
}

Multigraph hat_gadget(const Multigraph& g) {
  require(g.is_simple(), "hat gadget needs a simple graph");
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::string> names = g.names();
  for (int i = 0; i < n; ++i) {
    std::string name = "^" + std::to_string(i);
    require(!g.has_vertex(name), "vertex id clash in hat gadget");
    names.push_back(name);
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int a = n; a < 2 * n; ++a) {
    for (int b = 0; b < a; ++b) edges.push_back({b, a, 1});
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph sierpinski(int level) {
  require(level >= 0 && level <= 6, "sierpinski level must be in [0, 6]");
  const int side = 1 << level;
  std::map<std::pair<int, int>, int> id;  // (y, x) -> index, sorted
  std::vector<std::array<std::pair<int, int>, 3>> triangles;
  auto rec = [&](auto&& self, int x, int y, int s) -> void {
    if (s == 1) {
      triangles.push_back({{{x, y}, {x + 1, y}, {x, y + 1}}});
      return;
    }
    int h = s / 2;
    self(self, x, y, h);
    self(self, x + h, y, h);
    self(self, x, y + h, h);
  };
  rec(rec, 0, 0, side);
  for (const auto& t : triangles) {
    for (auto [x, y] : t) id.emplace(std::make_pair(y, x), 0);
  }
  std::vector<std::string> names;
  for (auto& [key, idx] : id) {
    idx = static_cast<int>(names.size());
    names.push_back(std::to_string(key.second) + "_" + std::to_string(key.first));
  }
  std::vector<Edge> edges;
  for (const auto& t : triangles) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        edges.push_back({id.at({t[a].second, t[a].first}), id.at({t[b].second, t[b].first}), 1});
      }
    }
  }
  return Multigraph::build(std::move(names), edges);
}

Multigraph quadratic_gap(int n) {
  require(n >= 2, "quadratic gap family needs n >= 2");
  return rooted_product(complete(n), complete_multigraph(n, n * (n - 1) / 2 + 1), "0");
}

Multigraph banana_triangle() { return rooted_product(complete(3), banana(3), "0"); }

Multigraph triple_construction(int n, int m) {
  require(n > 1 && m >= n, "triple construction needs m >= n > 1");
  Multigraph left = relabel(subdivided_doubled_path(m), "g");
  Multigraph right = relabel(multipath(n), "h");
  return join_by_bridge(left, right, "g0", "h" + std::to_string(n - 1));
}

int quadratic_gap_width(int n) { return (n * (n + 2) + 3) / 4 - 1; }

Multigraph gap_bridge(int n, int gap) {
  const int t = quadratic_gap_width(n) - gap;
  require(gap >= 0 && t >= n, "gap must lie in [0, width - n]");
  return join_by_bridge(quadratic_gap(n), relabel(complete(t + 1), "k"), "0", "k0");
}

Multigraph bulb_triangle(int n, int l) {
  require(n >= 2 && l >= 1, "bulb triangle needs n >= 2 and l >= 1");
  return rooted_product(complete(3), complete_multigraph(n, l), "0");
}

Multigraph disconnected_bag_graph() {
  std::vector<std::string> names{"u1", "u2", "v1", "v2", "w1", "w2", "x", "y"};
  std::vector<Edge> edges{{0, 1, 2}, {2, 3, 2}, {4, 5, 2}, {6, 0, 1}, {6, 2, 1},
                          {6, 4, 1}, {7, 1, 1}, {7, 3, 1}, {7, 5, 1}};
  return Multigraph::build(std::move(names), edges);
}

Multigraph minor_pair(bool contracted) {
  std::vector<Edge> edges{{0, 1, 1}, {0, 2, 1}, {0, 4, 1}, {1, 2, 1}, {1, 6, 1}, {2, 4, 1},
                          {2, 6, 1}, {3, 5, 1}, {3, 6, 1}, {4, 5, 1}, {5, 6, 1}};
  Multigraph g = Multigraph::build(numbered(7), edges);
  return contracted ? contract(g, "4", "5") : g;
}

Multigraph doubled_edge_path() {
  std::vector<Edge> edges{{0, 1, 2}, {1, 2, 1}};
  return Multigraph::build(numbered(3), edges);
}

Multigraph dhar_choice_graph() {
  std::vector<Edge> edges{{0, 6, 1}, {0, 7, 1}, {1, 3, 1}, {1, 8, 1}, {2, 7, 1},
                          {4, 6, 1}, {4, 8, 1}, {5, 6, 1}, {5, 7, 1}, {5, 8, 1}};
  return Multigraph::build(numbered(9), edges);
}

std::vector<std::pair<std::string, int>> dhar_choice_chips() { return {{"3", 1}, {"5", 3}}; }

std::vector<std::pair<std::string, int>> sierpinski_chips() {
  return {{"4_0", 2}, {"0_4", 2}, {"2_1", 1}, {"1_2", 1}};
}

namespace {

struct Entry {
  std::string_view name;
  int arity;  // -1: variadic
};

constexpr Entry kEntries[] = {
    {"path", 1},        {"star", 1},          {"ccg", 1},
    {"caterpillar", 1}, {"cycle", 1},         {"complete", 1},
    {"complete_multigraph", 2}, {"multipartite", -1}, {"banana", 1},
    {"petersen", 0},    {"grid", 2},          {"prism", 2},
    {"torus", 2},       {"hypercube", 1},     {"rook", 2},
    {"doubled_path", 1}, {"doubled_path_subdivided", 1}, {"multipath", 1},
    {"sierpinski", 1},  {"quadratic_gap", 1}, {"banana_triangle", 0},
    {"triple", 2},      {"gap_bridge", 2},    {"disconnected_bag", 0},
    {"minor_pair_g", 0}, {"minor_pair_h", 0}, {"doubled_edge_path", 0},
    {"dhar_choice", 0}, {"bulb_triangle", 2},
};

}  // namespace

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (const auto& e : kEntries) out.push_back(e.name);
  return out;
}

Multigraph by_name(std::string_view name, std::span<const int> p) {
  auto it = std::find_if(std::begin(kEntries), std::end(kEntries), [&](const Entry& e) { return e.name == name; });
  if (it == std::end(kEntries)) throw Error(Errc::kBadParams, "unknown family '" + std::string(name) + "'");
  if (it->arity >= 0 && static_cast<int>(p.size()) != it->arity) {
    throw Error(Errc::kBadParams, "family '" + std::string(name) + "' takes " + std::to_string(it->arity) + " parameter(s)");
  }
  if (name == "path") return path(p[0]);
  if (name == "star") return star(p[0]);
  if (name == "ccg") return cubic_caterpillar(p[0]);
  if (name == "caterpillar") return caterpillar_with_leaves(p[0]);
  if (name == "cycle") return cycle(p[0]);
  if (name == "complete") return complete(p[0]);
  if (name == "complete_multigraph") return complete_multigraph(p[0], p[1]);
  if (name == "multipartite") return complete_multipartite(p);
  if (name == "banana") return banana(p[0]);
  if (name == "petersen") return petersen();
  if (name == "grid") return grid(p[0], p[1]);
  if (name == "prism") return stacked_prism(p[0], p[1]);
  if (name == "torus") return torus(p[0], p[1]);
  if (name == "hypercube") return hypercube(p[0]);
  if (name == "rook") return rook(p[0], p[1]);
  if (name == "doubled_path") return doubled_path(p[0]);
  if (name == "doubled_path_subdivided") return subdivided_doubled_path(p[0]);
  if (name == "multipath") return multipath(p[0]);
  if (name == "sierpinski") return sierpinski(p[0]);
  if (name == "quadratic_gap") return quadratic_gap(p[0]);
  if (name == "banana_triangle") return banana_triangle();
  if (name == "triple") return triple_construction(p[0], p[1]);
  if (name == "gap_bridge") return gap_bridge(p[0], p[1]);
  if (name == "minor_pair_g") return minor_pair(false);
  if (name == "minor_pair_h") return minor_pair(true);
  if (name == "doubled_edge_path") return doubled_edge_path();
  if (name == "dhar_choice") return dhar_choice_graph();
  if (name == "bulb_triangle") return bulb_triangle(p[0], p[1]);
  return disconnected_bag_graph();
}

}  // namespace scree::families
