#include "scree/multigraph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "scree/error.hpp"

namespace scree {

namespace {

// Merges (u, v) entries, orienting u < v, and rejects loops and bad counts.
std::vector<Edge> canonical_edges(std::size_t n, std::span<const Edge> raw) {
  std::map<std::pair<int, int>, long long> merged;
  for (const auto& e : raw) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
      throw Error(Errc::kUnknownVertex, "edge endpoint index out of range");
    }
    if (e.u == e.v) throw Error(Errc::kSelfLoop, "loop at vertex index " + std::to_string(e.u));
    if (e.multiplicity < 1) throw Error(Errc::kBadParams, "edge multiplicity must be >= 1");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.multiplicity;
  }
  std::vector<Edge> out;
  out.reserve(merged.size());
  for (const auto& [key, m] : merged) out.push_back({key.first, key.second, static_cast<int>(m)});
  return out;
}

void check_names(const std::vector<std::string>& vertices) {
  std::unordered_map<std::string, int> seen;
  for (const auto& name : vertices) {
    if (!seen.emplace(name, 0).second) throw Error(Errc::kDuplicateVertex, "duplicate vertex id '" + name + "'");
  }
}

}  // namespace

Multigraph Multigraph::assemble(std::vector<std::string> vertices, std::vector<Edge> edges) {
  Multigraph g;
  const std::size_t n = vertices.size();
  g.names_ = std::move(vertices);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.names_[i], static_cast<int>(i));
  g.mult_.assign(n * n, 0);
  g.adj_.assign(n, {});
  g.valence_.assign(n, 0);
  for (const auto& e : edges) {
    g.mult_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = e.multiplicity;
    g.mult_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = e.multiplicity;
    g.adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.multiplicity);
    g.adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.multiplicity);
    g.valence_[static_cast<std::size_t>(e.u)] += e.multiplicity;
    g.valence_[static_cast<std::size_t>(e.v)] += e.multiplicity;
    g.total_edges_ += e.multiplicity;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  g.edges_ = std::move(edges);
  return g;
}

Multigraph Multigraph::build(std::vector<std::string> vertices, std::span<const Edge> edges) {
  if (vertices.empty()) throw Error(Errc::kBadParams, "graph needs at least one vertex");
  check_names(vertices);
  auto canon = canonical_edges(vertices.size(), edges);
  Multigraph g = assemble(std::move(vertices), std::move(canon));
  if (!g.induces_connected(g.all_vertices())) throw Error(Errc::kDisconnected, "graph is not connected");
  return g;
}

Multigraph Multigraph::build(std::vector<std::string> vertices, std::span<const EdgeSpec> edges) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));
  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (const auto& e : edges) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end()) throw Error(Errc::kUnknownVertex, "unknown vertex '" + e.u + "'");
    if (iv == index.end()) throw Error(Errc::kUnknownVertex, "unknown vertex '" + e.v + "'");
    raw.push_back({iu->second, iv->second, e.multiplicity});
  }
  return build(std::move(vertices), raw);
}

std::vector<Multigraph> Multigraph::components(std::vector<std::string> vertices, std::span<const Edge> edges) {
  check_names(vertices);
  auto canon = canonical_edges(vertices.size(), edges);
  Multigraph whole = assemble(vertices, canon);
  std::vector<Multigraph> out;
  for (const auto& comp : whole.components_of(whole.all_vertices())) {
    auto members = comp.members();
    std::vector<int> local(vertices.size(), -1);
    std::vector<std::string> names;
    for (int v : members) {
      local[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
      names.push_back(vertices[static_cast<std::size_t>(v)]);
    }
    std::vector<Edge> sub;
    for (const auto& e : canon) {
      if (comp.contains(e.u)) sub.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.multiplicity});
    }
    out.push_back(assemble(std::move(names), canonical_edges(members.size(), sub)));
  }
  return out;
}

int Multigraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw Error(Errc::kUnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return it->second;
}

bool Multigraph::has_vertex(std::string_view name) const { return index_.count(std::string(name)) > 0; }

bool Multigraph::is_simple() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.multiplicity == 1; });
}

bool Multigraph::is_tree() const noexcept {
  return is_simple() && edges_.size() + 1 == names_.size();
}

int Multigraph::edges_between(const VertexSet& a, const VertexSet& b) const {
  int total = 0;
  for (int u : a.members()) {
    if (b.contains(u)) continue;
    for (auto [w, m] : adj_[static_cast<std::size_t>(u)]) {
      if (b.contains(w) && !a.contains(w)) total += m;
    }
  }
  return total;
}

int Multigraph::cut(const VertexSet& a) const { return edges_between(a, a.complement()); }

std::vector<VertexSet> Multigraph::components_of(const VertexSet& s) const {
  std::vector<VertexSet> out;
  VertexSet seen(num_vertices());
  for (int start : s.members()) {
    if (seen.contains(start)) continue;
    VertexSet comp(num_vertices());
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (auto [y, m] : adj_[static_cast<std::size_t>(x)]) {
        if (s.contains(y) && !seen.contains(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool Multigraph::induces_connected(const VertexSet& s) const {
  return !s.empty() && components_of(s).size() == 1;
}

VertexSet Multigraph::set_of(std::span<const std::string> names) const {
  VertexSet s(num_vertices());
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::string Multigraph::hash() const {
  // FNV-1a, 64 bit, over a length-prefixed serialization.
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& name : names_) {
    mix(std::to_string(name.size()));
    mix(":");
    mix(name);
  }
  mix("|");
  for (const auto& e : edges_) {
    mix(std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.multiplicity) + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string to_dot(const Multigraph& g, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  for (const auto& name : g.names()) out << "  \"" << name << "\";\n";
  for (const auto& e : g.edges()) {
    out << "  \"" << g.name(e.u) << "\" -- \"" << g.name(e.v) << "\" [label=" << e.multiplicity << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scree
