#include "scree/tree_cut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "scree/connectivity.hpp"
#include "scree/error.hpp"
#include "scree/families.hpp"
#include "scree/graph_ops.hpp"

namespace scree {

int EdgeMultiset::size() const noexcept {
  int total = 0;
  for (const auto& e : edges) total += e.multiplicity;
  return total;
}

TreeCutDecomposition TreeCutDecomposition::validate(std::shared_ptr<const Multigraph> graph,
                                                    std::vector<std::string> node_names,
                                                    std::vector<std::pair<int, int>> links,
                                                    std::vector<VertexSet> bags) {
  const int n = static_cast<int>(node_names.size());
  if (n == 0) throw Error(Errc::kNotATree, "decomposition tree has no nodes");
  if (bags.size() != node_names.size()) {
    throw Error(Errc::kUnknownNode, "every node needs exactly one bag");
  }
  {
    std::set<std::string> seen(node_names.begin(), node_names.end());
    if (seen.size() != node_names.size()) throw Error(Errc::kNotATree, "duplicate node name");
  }
  if (static_cast<int>(links.size()) != n - 1) {
    throw Error(Errc::kNotATree, std::to_string(n) + " nodes need " + std::to_string(n - 1) + " links, got " +
                                     std::to_string(links.size()));
  }
  for (auto& [a, b] : links) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(Errc::kUnknownNode, "link endpoint out of range");
    if (a == b) throw Error(Errc::kNotATree, "link from a node to itself");
  }
  const std::size_t nv = graph->num_vertices();
  std::vector<int> node_of(nv, -1);
  for (int b = 0; b < n; ++b) {
    const VertexSet& bag = bags[static_cast<std::size_t>(b)];
    if (bag.universe() != nv) throw Error(Errc::kGraphMismatch, "bag universe differs from the graph");
    for (int v : bag.members()) {
      if (node_of[static_cast<std::size_t>(v)] >= 0) {
        throw Error(Errc::kBagsOverlap, "vertex '" + graph->name(v) + "' lies in bags '" +
                                            node_names[static_cast<std::size_t>(node_of[static_cast<std::size_t>(v)])] +
                                            "' and '" + node_names[static_cast<std::size_t>(b)] + "'");
      }
      node_of[static_cast<std::size_t>(v)] = b;
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (node_of[v] < 0) {
      throw Error(Errc::kBagsMissVertices, "vertex '" + graph->name(static_cast<int>(v)) + "' is in no bag");
    }
  }
  TreeCutDecomposition d;
  d.graph_ = std::move(graph);
  d.names_ = std::move(node_names);
  d.links_ = std::move(links);
  d.bags_ = std::move(bags);
  d.node_of_ = std::move(node_of);
  d.index_tree();
  return d;
}

void TreeCutDecomposition::index_tree() {
  const std::size_t n = names_.size();
  adj_.assign(n, {});
  for (const auto& [a, b] : links_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  parent_.assign(n, -2);
  depth_.assign(n, 0);
  std::vector<int> stack{0};
  parent_[0] = -1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[static_cast<std::size_t>(x)]) {
      if (parent_[static_cast<std::size_t>(y)] != -2) continue;
      parent_[static_cast<std::size_t>(y)] = x;
      depth_[static_cast<std::size_t>(y)] = depth_[static_cast<std::size_t>(x)] + 1;
      ++reached;
      stack.push_back(y);
    }
  }
  if (reached != n) throw Error(Errc::kNotATree, "decomposition tree is disconnected");
}

TreeCutDecomposition TreeCutDecomposition::validate(
    const Multigraph& graph, std::vector<std::string> node_names,
    const std::vector<std::pair<std::string, std::string>>& links,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& bags) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < node_names.size(); ++i) index.emplace(node_names[i], static_cast<int>(i));
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::kUnknownNode, "unknown node '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> idx_links;
  for (const auto& [a, b] : links) idx_links.emplace_back(lookup(a), lookup(b));
  std::vector<VertexSet> idx_bags(node_names.size(), graph.empty_set());
  std::vector<bool> given(node_names.size(), false);
  for (const auto& [node, members] : bags) {
    int b = lookup(node);
    if (given[static_cast<std::size_t>(b)]) throw Error(Errc::kUnknownNode, "node '" + node + "' has two bags");
    given[static_cast<std::size_t>(b)] = true;
    for (const auto& v : members) {
      int vi = graph.index_of(v);
      if (idx_bags[static_cast<std::size_t>(b)].contains(vi)) {
        throw Error(Errc::kBagsOverlap, "vertex '" + v + "' listed twice in bag '" + node + "'");
      }
      idx_bags[static_cast<std::size_t>(b)].insert(vi);
    }
  }
  return validate(std::make_shared<const Multigraph>(graph), std::move(node_names), std::move(idx_links),
                  std::move(idx_bags));
}

TreeCutDecomposition TreeCutDecomposition::trivial(const Multigraph& graph) {
  return validate(std::make_shared<const Multigraph>(graph), {"b0"}, {}, {graph.all_vertices()});
}

int TreeCutDecomposition::node_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(Errc::kUnknownNode, "unknown node '" + std::string(name) + "'");
  return static_cast<int>(it - names_.begin());
}

int TreeCutDecomposition::link_index(int a, int b) const {
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if ((links_[i].first == a && links_[i].second == b) || (links_[i].first == b && links_[i].second == a)) {
      return static_cast<int>(i);
    }
  }
  throw Error(Errc::kUnknownLink, "no link between the given nodes");
}

std::vector<int> TreeCutDecomposition::tree_path(int a, int b) const {
  std::vector<int> left;
  std::vector<int> right;
  while (a != b) {
    if (depth_[static_cast<std::size_t>(a)] >= depth_[static_cast<std::size_t>(b)]) {
      left.push_back(a);
      a = parent_[static_cast<std::size_t>(a)];
    } else {
      right.push_back(b);
      b = parent_[static_cast<std::size_t>(b)];
    }
  }
  left.push_back(a);
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

EdgeMultiset TreeCutDecomposition::link_adhesion(int link) const {
  if (link < 0 || link >= static_cast<int>(links_.size())) throw Error(Errc::kUnknownLink, "link index out of range");
  auto [a, b] = links_[static_cast<std::size_t>(link)];
  // side[x]: node x lies on a's side of T - l
  std::vector<bool> side(names_.size(), false);
  std::vector<int> stack{a};
  side[static_cast<std::size_t>(a)] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[static_cast<std::size_t>(x)]) {
      if (side[static_cast<std::size_t>(y)] || (x == a && y == b)) continue;
      side[static_cast<std::size_t>(y)] = true;
      stack.push_back(y);
    }
  }
  EdgeMultiset out;
  for (const auto& e : graph_->edges()) {
    if (side[static_cast<std::size_t>(node_of(e.u))] != side[static_cast<std::size_t>(node_of(e.v))]) {
      out.edges.push_back(e);
    }
  }
  return out;
}

EdgeMultiset TreeCutDecomposition::node_adhesion(int node) const {
  if (node < 0 || node >= num_nodes()) throw Error(Errc::kUnknownNode, "node index out of range");
  std::vector<int> label(names_.size(), -1);
  for (int start : adj_[static_cast<std::size_t>(node)]) {
    std::vector<int> stack{start};
    label[static_cast<std::size_t>(start)] = start;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (y == node || label[static_cast<std::size_t>(y)] >= 0) continue;
        label[static_cast<std::size_t>(y)] = start;
        stack.push_back(y);
      }
    }
  }
  EdgeMultiset out;
  for (const auto& e : graph_->edges()) {
    int lu = label[static_cast<std::size_t>(node_of(e.u))];
    int lv = label[static_cast<std::size_t>(node_of(e.v))];
    if (lu >= 0 && lv >= 0 && lu != lv) out.edges.push_back(e);
  }
  return out;
}

namespace {

// For every graph edge crossing bags, calls f(x, y, multiplicity, interior)
// on each consecutive node pair x, y of its tree path; interior is true when
// x is not the path's first node.
template <typename F>
void walk_edge_paths(const TreeCutDecomposition& d, F&& f) {
  for (const auto& e : d.graph().edges()) {
    int c = d.node_of(e.u);
    int t = d.node_of(e.v);
    if (c == t) continue;
    auto path = d.tree_path(c, t);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) f(path[i], path[i + 1], e.multiplicity, i > 0);
  }
}

}  // namespace

std::vector<int> TreeCutDecomposition::link_adhesion_sizes() const {
  std::map<std::pair<int, int>, int> link_id;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    auto [a, b] = links_[i];
    link_id[{std::min(a, b), std::max(a, b)}] = static_cast<int>(i);
  }
  std::vector<int> sizes(links_.size(), 0);
  walk_edge_paths(*this, [&](int x, int y, int m, bool) {
    sizes[static_cast<std::size_t>(link_id.at({std::min(x, y), std::max(x, y)}))] += m;
  });
  return sizes;
}

std::vector<int> TreeCutDecomposition::node_adhesion_sizes() const {
  std::vector<int> sizes(names_.size(), 0);
  walk_edge_paths(*this, [&](int x, int, int m, bool interior) {
    if (interior) sizes[static_cast<std::size_t>(x)] += m;
  });
  return sizes;
}

WidthReport TreeCutDecomposition::width() const {
  WidthReport r;
  auto ls = link_adhesion_sizes();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!r.witness_link || ls[i] > r.link_width) {
      r.link_width = ls[i];
      r.witness_link = static_cast<int>(i);
    }
  }
  auto ns = node_adhesion_sizes();
  for (std::size_t b = 0; b < ns.size(); ++b) {
    int w = static_cast<int>(bags_[b].size()) + ns[b];
    if (!r.witness_node || w > r.bag_width) {
      r.bag_width = w;
      r.witness_node = static_cast<int>(b);
    }
  }
  r.width = std::max(r.link_width, r.bag_width);
  return r;
}

namespace {

// Mutable tree used by the rewriting operations below.
struct Draft {
  std::vector<std::string> names;
  std::vector<VertexSet> bags;
  std::vector<std::set<int>> adj;
  std::vector<bool> alive;

  static Draft from(const TreeCutDecomposition& d) {
    Draft t;
    t.names = d.node_names();
    t.bags = d.bags();
    t.adj.resize(t.names.size());
    for (auto [a, b] : d.links()) {
      t.adj[static_cast<std::size_t>(a)].insert(b);
      t.adj[static_cast<std::size_t>(b)].insert(a);
    }
    t.alive.assign(t.names.size(), true);
    return t;
  }

  int live_count() const { return static_cast<int>(std::count(alive.begin(), alive.end(), true)); }

  void remove(int x) {
    for (int y : adj[static_cast<std::size_t>(x)]) adj[static_cast<std::size_t>(y)].erase(x);
    adj[static_cast<std::size_t>(x)].clear();
    alive[static_cast<std::size_t>(x)] = false;
  }

  void link(int a, int b) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }

  void unlink(int a, int b) {
    adj[static_cast<std::size_t>(a)].erase(b);
    adj[static_cast<std::size_t>(b)].erase(a);
  }

  std::string fresh_name(const std::string& base) const {
    std::string name = base + "'";
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    return name;
  }

  TreeCutDecomposition finish(std::shared_ptr<const Multigraph> g) const {
    std::vector<int> remap(names.size(), -1);
    std::vector<std::string> out_names;
    std::vector<VertexSet> out_bags;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!alive[i]) continue;
      remap[i] = static_cast<int>(out_names.size());
      out_names.push_back(names[i]);
      out_bags.push_back(bags[i]);
    }
    std::vector<std::pair<int, int>> links;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!alive[i]) continue;
      for (int j : adj[i]) {
        if (static_cast<int>(i) < j) links.emplace_back(remap[i], remap[static_cast<std::size_t>(j)]);
      }
    }
    return TreeCutDecomposition::validate(std::move(g), std::move(out_names), std::move(links), std::move(out_bags));
  }
};

}  // namespace

TreeCutDecomposition normalize_empty_bags(const TreeCutDecomposition& d) {
  Draft t = Draft::from(d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < t.names.size(); ++i) {
      const int x = static_cast<int>(i);
      if (!t.alive[i] || !t.bags[i].empty() || t.live_count() == 1) continue;
      const auto& nb = t.adj[i];
      if (nb.size() <= 1) {
        t.remove(x);
        changed = true;
      } else if (nb.size() == 2) {
        int a = *nb.begin();
        int b = *std::next(nb.begin());
        t.remove(x);
        t.link(a, b);
        changed = true;
      } else if (nb.size() >= 4) {
        int a = *nb.begin();
        int b = *std::next(nb.begin());
        t.names.push_back(t.fresh_name(t.names[i]));
        t.bags.push_back(d.graph().empty_set());
        t.adj.emplace_back();
        t.alive.push_back(true);
        const int y = static_cast<int>(t.names.size()) - 1;
        t.unlink(x, a);
        t.unlink(x, b);
        t.link(y, a);
        t.link(y, b);
        t.link(x, y);
        changed = true;
      }
    }
  }
  return t.finish(d.graph_ptr());
}

TreeCutDecomposition from_bipartition(const Multigraph& g, const VertexSet& a) {
  if (a.universe() != g.num_vertices() || a.empty() || a.size() == g.num_vertices()) {
    throw Error(Errc::kBadPartition, "bipartition side must be a nonempty proper subset");
  }
  return TreeCutDecomposition::validate(std::make_shared<const Multigraph>(g), {"A", "B"}, {{0, 1}},
                                        {a, a.complement()});
}

TreeCutDecomposition star_from_independent_set(const Multigraph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) throw Error(Errc::kGraphMismatch, "vertex set from another graph");
  if (!is_independent(g, s)) throw Error(Errc::kNotIndependent, "leaf vertices must be pairwise non-adjacent");
  std::vector<std::string> names{"center"};
  std::vector<VertexSet> bags{s.complement()};
  std::vector<std::pair<int, int>> links;
  for (int v : s.members()) {
    names.push_back("leaf:" + g.name(v));
    bags.push_back(VertexSet(g.num_vertices(), {v}));
    links.emplace_back(0, static_cast<int>(names.size()) - 1);
  }
  return TreeCutDecomposition::validate(std::make_shared<const Multigraph>(g), std::move(names), std::move(links),
                                        std::move(bags));
}

TreeCutDecomposition product_lift(const TreeCutDecomposition& d, const Multigraph& h) {
  auto gh = std::make_shared<const Multigraph>(cartesian_product(d.graph(), h));
  const int nh = static_cast<int>(h.num_vertices());
  std::vector<VertexSet> bags;
  for (const auto& bag : d.bags()) {
    VertexSet lifted(gh->num_vertices());
    for (int u : bag.members()) {
      for (int v = 0; v < nh; ++v) lifted.insert(u * nh + v);
    }
    bags.push_back(std::move(lifted));
  }
  return TreeCutDecomposition::validate(gh, d.node_names(), d.links(), std::move(bags));
}

TreeCutDecomposition bridge_join(const TreeCutDecomposition& d1, const TreeCutDecomposition& d2, std::string_view u,
                                 std::string_view v) {
  if (!d1.graph().has_vertex(u)) throw Error(Errc::kEndpointNotFound, "'" + std::string(u) + "' not in first graph");
  if (!d2.graph().has_vertex(v)) throw Error(Errc::kEndpointNotFound, "'" + std::string(v) + "' not in second graph");
  auto g = std::make_shared<const Multigraph>(join_by_bridge(d1.graph(), d2.graph(), u, v));
  const int n1 = static_cast<int>(d1.graph().num_vertices());
  const int k1 = d1.num_nodes();
  std::vector<std::string> names;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> links;
  for (int b = 0; b < k1; ++b) {
    names.push_back("a:" + d1.node_name(b));
    VertexSet bag(g->num_vertices());
    for (int x : d1.bag(b).members()) bag.insert(x);
    bags.push_back(std::move(bag));
  }
  for (int b = 0; b < d2.num_nodes(); ++b) {
    names.push_back("b:" + d2.node_name(b));
    VertexSet bag(g->num_vertices());
    for (int x : d2.bag(b).members()) bag.insert(n1 + x);
    bags.push_back(std::move(bag));
  }
  for (auto [a, b] : d1.links()) links.emplace_back(a, b);
  for (auto [a, b] : d2.links()) links.emplace_back(k1 + a, k1 + b);
  links.emplace_back(d1.node_of(d1.graph().index_of(u)), k1 + d2.node_of(d2.graph().index_of(v)));
  return TreeCutDecomposition::validate(g, std::move(names), std::move(links), std::move(bags));
}

TreeCutDecomposition caterpillar_decomposition(const Multigraph& g, int n) {
  if (n < 2 || !(g == families::quadratic_gap(n))) {
    throw Error(Errc::kShapeMismatch, "graph is not the quadratic-gap graph for n = " + std::to_string(n));
  }
  std::vector<std::string> names;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> links;
  for (int i = 0; i < n; ++i) {
    names.push_back("bulb" + std::to_string(i));
    VertexSet bag(g.num_vertices());
    bag.insert(g.index_of(std::to_string(i)));
    for (int j = 1; j < n; ++j) bag.insert(g.index_of(std::to_string(i) + ":" + std::to_string(j)));
    bags.push_back(std::move(bag));
  }
  if (n == 2) {
    links.emplace_back(0, 1);
  } else {
    // spine s1..s_{n-2}; s1 holds bulbs 0 and 1, s_k holds bulb k, the last
    // spine node also holds bulb n-1
    const int spine = n - 2;
    for (int k = 1; k <= spine; ++k) {
      names.push_back("spine" + std::to_string(k));
      bags.push_back(g.empty_set());
      const int s = n + k - 1;
      if (k > 1) links.emplace_back(s - 1, s);
      links.emplace_back(s, k);
    }
    links.emplace_back(n, 0);
    links.emplace_back(n + spine - 1, n - 1);
  }
  return TreeCutDecomposition::validate(std::make_shared<const Multigraph>(g), std::move(names), std::move(links),
                                        std::move(bags));
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const TreeCutDecomposition& d) {
  const Multigraph& g = d.graph();
  std::ostringstream out;
  out << "graph TCD {\n  compound=true;\n";
  for (int b = 0; b < d.num_nodes(); ++b) {
    out << "  subgraph " << quoted("cluster_" + d.node_name(b)) << " {\n    label=" << quoted(d.node_name(b))
        << ";\n    " << quoted("@" + d.node_name(b)) << " [shape=point, style=invis];\n";
    for (int v : d.bag(b).members()) out << "    " << quoted(g.name(v)) << ";\n";
    out << "  }\n";
  }
  for (auto [a, b] : d.links()) {
    out << "  " << quoted("@" + d.node_name(a)) << " -- " << quoted("@" + d.node_name(b))
        << " [style=\"bold,dashed\", ltail=" << quoted("cluster_" + d.node_name(a))
        << ", lhead=" << quoted("cluster_" + d.node_name(b)) << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v)) << " [label=" << e.multiplicity << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scree
