#include "scree/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "scree/error.hpp"

namespace scree {

CutResult edge_connectivity(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n < 2) throw Error(Errc::kPreconditionFailed, "edge connectivity needs at least two vertices");
  std::vector<std::vector<long long>> w(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.multiplicity;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.multiplicity;
  }
  // groups[i]: original vertices merged into super-vertex i
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) groups[static_cast<std::size_t>(i)] = {i};
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

  long long best = std::numeric_limits<long long>::max();
  std::vector<int> best_group;
  while (active.size() > 1) {
    const std::size_t m = active.size();
    std::vector<long long> key(m, 0);
    std::vector<bool> added(m, false);
    int prev = -1;
    int last = -1;
    for (std::size_t step = 0; step < m; ++step) {
      int sel = -1;
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i] && (sel < 0 || key[i] > key[static_cast<std::size_t>(sel)])) sel = static_cast<int>(i);
      }
      added[static_cast<std::size_t>(sel)] = true;
      prev = last;
      last = sel;
      if (step + 1 == m) {
        if (key[static_cast<std::size_t>(sel)] < best) {
          best = key[static_cast<std::size_t>(sel)];
          best_group = groups[static_cast<std::size_t>(active[static_cast<std::size_t>(sel)])];
        }
        break;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i]) {
          key[i] += w[static_cast<std::size_t>(active[static_cast<std::size_t>(sel)])][static_cast<std::size_t>(active[i])];
        }
      }
    }
    const int s = active[static_cast<std::size_t>(prev)];
    const int t = active[static_cast<std::size_t>(last)];
    for (int i = 0; i < n; ++i) {
      w[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
    }
    auto& gs = groups[static_cast<std::size_t>(s)];
    const auto& gt = groups[static_cast<std::size_t>(t)];
    gs.insert(gs.end(), gt.begin(), gt.end());
    active.erase(active.begin() + last);
  }
  CutResult out;
  out.value = static_cast<int>(best);
  out.side = VertexSet(g.num_vertices(), best_group);
  if (!out.side.contains(0)) out.side = out.side.complement();
  return out;
}

namespace {

// Dinic on an undirected multigraph with contracted terminals.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(static_cast<std::size_t>(n), -1), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  void add_undirected(int a, int b, long long cap) {
    arcs_.push_back({b, head_[static_cast<std::size_t>(a)], cap});
    head_[static_cast<std::size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[static_cast<std::size_t>(b)], cap});
    head_[static_cast<std::size_t>(b)] = static_cast<int>(arcs_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

  // Vertices reachable from s in the residual network.
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(x)] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int x, int t, long long pushed) {
    if (x == t) return pushed;
    for (int& a = it_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
      auto& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(x)] + 1) {
        if (long long f = dfs(arc.to, t, std::min(pushed, arc.cap))) {
          arc.cap -= f;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

CutResult min_cut_between(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks) {
  if (sources.empty() || sinks.empty()) throw Error(Errc::kBadParams, "terminal sets must be nonempty");
  if (sources.intersects(sinks)) throw Error(Errc::kBadParams, "terminal sets intersect");
  const int n = static_cast<int>(g.num_vertices());
  // node ids: 0 = contracted source, 1 = contracted sink, others 2 + v
  auto node = [&](int v) {
    if (sources.contains(v)) return 0;
    if (sinks.contains(v)) return 1;
    return 2 + v;
  };
  FlowNetwork net(n + 2);
  for (const auto& e : g.edges()) {
    int a = node(e.u);
    int b = node(e.v);
    if (a != b) net.add_undirected(a, b, e.multiplicity);
  }
  CutResult out;
  out.value = static_cast<int>(net.max_flow(0, 1));
  auto seen = net.reachable(0);
  out.side = VertexSet(g.num_vertices());
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(node(v))]) out.side.insert(v);
  }
  return out;
}

bool is_independent(const Multigraph& g, const VertexSet& s) {
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) return false;
  }
  return true;
}

IndependentSetResult independence_number(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n > 64) throw Error(Errc::kBadParams, "independence_number supports at most 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  std::uint64_t best = 0;
  int best_size = 0;
  // Branch on the lowest candidate: either it is excluded, or included and
  // its neighbors removed. Bound: current + remaining candidates.
  auto rec = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen, int size) -> void {
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + std::popcount(cand) <= best_size) return;
    // Vertices with no candidate neighbors can always be taken.
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    self(self, cand & ~bit & ~adj[static_cast<std::size_t>(v)], chosen | bit, size + 1);
    if ((adj[static_cast<std::size_t>(v)] & cand) != 0) self(self, cand & ~bit, chosen, size);
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, all, 0, 0);
  IndependentSetResult out;
  out.value = best_size;
  out.witness = VertexSet::from_mask(g.num_vertices(), best);
  return out;
}

}  // namespace scree
