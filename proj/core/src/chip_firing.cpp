#include "scree/chip_firing.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "scree/error.hpp"

namespace scree {

Divisor Divisor::single(std::size_t n, int v, Chips count) {
  Divisor d(n);
  d[v] = count;
  return d;
}

Divisor Divisor::indicator(const VertexSet& s) {
  Divisor d(s.universe());
  for (int v : s.members()) d[v] = 1;
  return d;
}

Chips Divisor::degree() const noexcept {
  Chips total = 0;
  for (Chips c : chips_) total += c;
  return total;
}

bool Divisor::is_effective() const noexcept {
  return std::all_of(chips_.begin(), chips_.end(), [](Chips c) { return c >= 0; });
}

VertexSet Divisor::support() const {
  VertexSet s(chips_.size());
  for (std::size_t v = 0; v < chips_.size(); ++v) {
    if (chips_[v] != 0) s.insert(static_cast<int>(v));
  }
  return s;
}

Chips FiringScript::max() const noexcept {
  Chips m = 0;
  for (Chips t : times_fired) m = std::max(m, t);
  return m;
}

void FiringScript::normalize() {
  if (times_fired.empty()) return;
  Chips low = *std::min_element(times_fired.begin(), times_fired.end());
  for (Chips& t : times_fired) t -= low;
}

namespace {

void check_size(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.num_vertices()) throw Error(Errc::kGraphMismatch, "divisor size differs from the graph");
}

// Fires U `times` times in place.
void fire_in_place(const Multigraph& g, Divisor& d, const VertexSet& u, Chips times) {
  for (const auto& e : g.edges()) {
    const bool in_u = u.contains(e.u);
    if (in_u == u.contains(e.v)) continue;
    const Chips moved = times * e.multiplicity;
    const int src = in_u ? e.u : e.v;
    const int dst = in_u ? e.v : e.u;
    d[src] -= moved;
    d[dst] += moved;
  }
}

// Unburnt vertices after a fire that starts on `burnt` and spreads to any
// vertex with fewer chips than burning edges.
VertexSet unburnt_after(const Multigraph& g, const Divisor& d, VertexSet burnt) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<Chips> heat(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  for (int v : burnt.members()) q.push(v);
  for (int v = 0; v < n; ++v) {
    if (!burnt.contains(v) && d[v] < 0) {
      burnt.insert(v);
      q.push(v);
    }
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, m] : g.neighbors(x)) {
      if (burnt.contains(y)) continue;
      heat[static_cast<std::size_t>(y)] += m;
      if (heat[static_cast<std::size_t>(y)] > d[y]) {
        burnt.insert(y);
        q.push(y);
      }
    }
  }
  return burnt.complement();
}

}  // namespace

Divisor fire_set(const Multigraph& g, const Divisor& d, const VertexSet& u) {
  check_size(g, d);
  Divisor out = d;
  fire_in_place(g, out, u, 1);
  return out;
}

Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& f) {
  check_size(g, d);
  Divisor out = d;
  for (const auto& e : g.edges()) {
    const Chips delta = (f.times_fired[static_cast<std::size_t>(e.u)] - f.times_fired[static_cast<std::size_t>(e.v)]) *
                        e.multiplicity;
    out[e.u] -= delta;
    out[e.v] += delta;
  }
  return out;
}

VertexSet maximal_legal_firing(const Multigraph& g, const Divisor& d, const VertexSet& allowed) {
  check_size(g, d);
  return unburnt_after(g, d, allowed.complement());
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, int q) {
  check_size(g, d);
  for (int v = 0; v < static_cast<int>(d.size()); ++v) {
    if (v != q && d[v] < 0) return false;
  }
  return unburnt_after(g, d, VertexSet(g.num_vertices(), {q})).empty();
}

Reduction q_reduce(const Multigraph& g, const Divisor& d, int q) {
  check_size(g, d);
  const int n = static_cast<int>(g.num_vertices());
  Reduction r{d, FiringScript{std::vector<Chips>(static_cast<std::size_t>(n), 0)}};
  auto fire = [&](const VertexSet& s, Chips times) {
    fire_in_place(g, r.reduced, s, times);
    for (int v : s.members()) r.script.times_fired[static_cast<std::size_t>(v)] += times;
  };

  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> order{q};
  dist[static_cast<std::size_t>(q)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [y, m] : g.neighbors(order[i])) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(order[i])] + 1;
        order.push_back(y);
      }
    }
  }
  const int far = dist[static_cast<std::size_t>(order.back())];
  // Each firing of the ball of radius r hands at least one chip to every
  // vertex at distance r + 1.
  for (int radius = far - 1; radius >= 0; --radius) {
    Chips deficit = 0;
    VertexSet ball(g.num_vertices());
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] <= radius) ball.insert(v);
      if (dist[static_cast<std::size_t>(v)] == radius + 1) deficit = std::max(deficit, -r.reduced[v]);
    }
    if (deficit > 0) fire(ball, deficit);
  }

  const VertexSet source(g.num_vertices(), {q});
  while (true) {
    VertexSet s = unburnt_after(g, r.reduced, source);
    if (s.empty()) break;
    Chips times = std::numeric_limits<Chips>::max();
    for (int v : s.members()) {
      Chips out = 0;
      for (auto [y, m] : g.neighbors(v)) {
        if (!s.contains(y)) out += m;
      }
      if (out > 0) times = std::min(times, r.reduced[v] / out);
    }
    fire(s, times);
  }
  r.script.normalize();
  return r;
}

bool are_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  return q_reduce(g, a, 0).reduced == q_reduce(g, b, 0).reduced;
}

bool has_positive_rank(const Multigraph& g, const Divisor& d) {
  check_size(g, d);
  for (int q = 0; q < static_cast<int>(g.num_vertices()); ++q) {
    if (q_reduce(g, d, q).reduced[q] < 1) return false;
  }
  return true;
}

namespace {

bool positive_rank_from_zero_reduced(const Multigraph& g, const Divisor& d) {
  for (int q = 1; q < static_cast<int>(g.num_vertices()); ++q) {
    if (d[q] >= 1) continue;
    if (q_reduce(g, d, q).reduced[q] < 1) return false;
  }
  return true;
}

}  // namespace

std::optional<GonalityResult> gonality_up_to(const Multigraph& g, int max_degree, std::uint64_t budget) {
  const int n = static_cast<int>(g.num_vertices());
  GonalityResult result;
  if (n == 1) {
    result.value = 1;
    result.witness = Divisor::single(1, 0, 1);
    return result;
  }
  for (int deg = 1; deg <= max_degree; ++deg) {
    Divisor d(static_cast<std::size_t>(n));
    bool found = false;
    // Assign chips to vertices n-1 down to 1; vertex 0 takes the rest.
    auto rec = [&](auto&& self, int v, Chips left) -> void {
      if (found) return;
      if (v == 0) {
        d[0] = left;
        ++result.candidates;
        if (budget != 0 && result.candidates > budget) {
          throw Error(Errc::kBudgetExceeded, "gonality search examined more than " + std::to_string(budget) +
                                                 " candidate divisors");
        }
        if (positive_rank_from_zero_reduced(g, d)) {
          found = true;
          result.value = deg;
          result.witness = d;
        }
        d[0] = 0;
        return;
      }
      for (Chips c = 0; c < left && !found; ++c) {
        d[v] = c;
        if (c == 0 || is_q_reduced(g, d, 0)) self(self, v - 1, left - c);
      }
      d[v] = 0;
    };
    rec(rec, n - 1, deg);
    if (found) return result;
  }
  return std::nullopt;
}

GonalityResult gonality(const Multigraph& g, int max_degree, std::uint64_t budget) {
  auto r = gonality_up_to(g, max_degree, budget);
  if (!r) throw Error(Errc::kBudgetExceeded, "no positive-rank divisor of degree <= " + std::to_string(max_degree));
  return *r;
}

FiringScript firing_script_between(const Multigraph& g, const Divisor& from, const Divisor& to) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  check_size(g, from);
  check_size(g, to);
  const int n = static_cast<int>(g.num_vertices());
  if (from.degree() != to.degree()) throw Error(Errc::kNotEquivalent, "divisors have different degrees");
  FiringScript f{std::vector<Chips>(static_cast<std::size_t>(n), 0)};
  if (n == 1) return f;
  // L f = from - to, with f(0) = 0: unknowns f(1..n-1).
  const int m = n - 1;
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(m), std::vector<cpp_int>(static_cast<std::size_t>(m + 1), 0));
  auto at = [&](int i, int j) -> cpp_int& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int v = 1; v < n; ++v) {
    at(v - 1, v - 1) = g.valence(v);
    for (auto [y, mult] : g.neighbors(v)) {
      if (y != 0) at(v - 1, y - 1) = -mult;
    }
    at(v - 1, m) = from[v] - to[v];
  }
  cpp_int prev = 1;
  for (int k = 0; k < m; ++k) {
    int pivot = k;
    while (pivot < m && at(pivot, k) == 0) ++pivot;
    if (pivot == m) throw Error(Errc::kPreconditionFailed, "reduced Laplacian is singular");
    std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j <= m; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  std::vector<cpp_rational> x(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    cpp_rational acc = cpp_rational(at(i, m));
    for (int j = i + 1; j < m; ++j) acc -= cpp_rational(at(i, j)) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / cpp_rational(at(i, i));
  }
  for (int i = 0; i < m; ++i) {
    const cpp_rational& xi = x[static_cast<std::size_t>(i)];
    if (boost::multiprecision::denominator(xi) != 1) {
      throw Error(Errc::kNotEquivalent, "no integer firing script connects the divisors");
    }
    f.times_fired[static_cast<std::size_t>(i + 1)] = static_cast<Chips>(boost::multiprecision::numerator(xi));
  }
  f.normalize();
  if (apply_script(g, from, f) != to) throw Error(Errc::kNotEquivalent, "firing script check failed");
  return f;
}

FiringScript firing_script_by_reduction(const Multigraph& g, const Divisor& from, const Divisor& to) {
  Reduction a = q_reduce(g, from, 0);
  Reduction b = q_reduce(g, to, 0);
  if (a.reduced != b.reduced) throw Error(Errc::kNotEquivalent, "divisors have different reduced forms");
  // from - L fa = to - L fb, so to = from - L (fa - fb).
  FiringScript f{a.script.times_fired};
  for (std::size_t v = 0; v < f.times_fired.size(); ++v) f.times_fired[v] -= b.script.times_fired[v];
  f.normalize();
  return f;
}

LevelSetChain level_set_decomposition(const Multigraph& g, const Divisor& from, const Divisor& to) {
  LevelSetChain chain;
  chain.script = firing_script_between(g, from, to);
  chain.intermediates.push_back(from);
  const Chips top = chain.script.max();
  Divisor cur = from;
  for (Chips i = 1; i <= top; ++i) {
    VertexSet u(g.num_vertices());
    for (std::size_t v = 0; v < chain.script.times_fired.size(); ++v) {
      if (chain.script.times_fired[v] >= top - i + 1) u.insert(static_cast<int>(v));
    }
    fire_in_place(g, cur, u, 1);
    if (!cur.is_effective()) {
      throw Error(Errc::kNonEffectiveIntermediate, "level set " + std::to_string(i) + " leaves a vertex in debt");
    }
    chain.sets.push_back(std::move(u));
    chain.intermediates.push_back(cur);
  }
  return chain;
}

namespace {

// C(n + k - 1, k) effective divisors of degree k on n vertices, saturating.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) {
  long double c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n + i - 1) / static_cast<long double>(i);
    if (c > 1e18L) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c + 0.5L);
}

}  // namespace

std::vector<Divisor> effective_class(const Multigraph& g, const Divisor& d, std::uint64_t cap) {
  check_size(g, d);
  const int n = static_cast<int>(g.num_vertices());
  const Chips deg = d.degree();
  std::vector<Divisor> out;
  if (deg < 0) return out;
  const std::uint64_t total = multiset_count(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(deg));
  if (total > cap) {
    throw Error(Errc::kBudgetExceeded, "class enumeration would examine " + std::to_string(total) +
                                           " divisors, cap is " + std::to_string(cap));
  }
  const Divisor target = q_reduce(g, d, 0).reduced;
  Divisor e(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int v, Chips left) -> void {
    if (v == n - 1) {
      e[v] = left;
      if (q_reduce(g, e, 0).reduced == target) out.push_back(e);
      e[v] = 0;
      return;
    }
    for (Chips c = 0; c <= left; ++c) {
      e[v] = c;
      self(self, v + 1, left - c);
    }
    e[v] = 0;
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

PartitionReport partitions_vertices(const Multigraph& g, const Divisor& d, std::uint64_t cap) {
  PartitionReport r;
  r.members = effective_class(g, d, cap);
  VertexSet covered(g.num_vertices());
  bool disjoint = true;
  for (const auto& m : r.members) {
    VertexSet s = m.support();
    if (s.intersects(covered)) disjoint = false;
    covered = covered | s;
  }
  r.partitions = disjoint && covered.size() == g.num_vertices();
  return r;
}

std::optional<std::vector<Divisor>> partition_class_by_reduction(const Multigraph& g, const Divisor& d) {
  check_size(g, d);
  const int n = static_cast<int>(g.num_vertices());
  std::set<Divisor> members;
  for (int q = 0; q < n; ++q) {
    Divisor r = q_reduce(g, d, q).reduced;
    if (r[q] < 1) return std::nullopt;
    Divisor e = r;
    e[q] -= 1;
    for (int p = 0; p < n; ++p) {
      if (!is_q_reduced(g, e, p)) return std::nullopt;
    }
    members.insert(std::move(r));
  }
  return std::vector<Divisor>(members.begin(), members.end());
}

DecompositionFromDivisor decomposition_from_partitioning_divisor(const Multigraph& g, const Divisor& d) {
  auto members = partition_class_by_reduction(g, d);
  if (!members) throw Error(Errc::kNotPartitioning, "divisor does not partition the vertices");
  std::sort(members->begin(), members->end(),
            [](const Divisor& a, const Divisor& b) { return a.support().first() < b.support().first(); });
  const int k = static_cast<int>(members->size());
  std::vector<std::string> names;
  std::vector<VertexSet> bags;
  for (int i = 0; i < k; ++i) {
    names.push_back("D" + std::to_string(i));
    bags.push_back((*members)[static_cast<std::size_t>(i)].support());
  }
  std::vector<std::pair<int, int>> links;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto f = firing_script_by_reduction(g, (*members)[static_cast<std::size_t>(i)], (*members)[static_cast<std::size_t>(j)]);
      if (f.max() == 1) links.emplace_back(i, j);
    }
  }
  DecompositionFromDivisor out{
      TreeCutDecomposition::validate(std::make_shared<const Multigraph>(g), std::move(names), std::move(links),
                                     std::move(bags)),
      std::move(*members)};
  return out;
}

namespace {

struct GrowingTree {
  std::vector<std::string> names;
  std::vector<VertexSet> bags;
  std::vector<Divisor> divisors;
  std::vector<std::pair<int, int>> links;

  TreeCutDecomposition build(const std::shared_ptr<const Multigraph>& g) const {
    return TreeCutDecomposition::validate(g, names, links, bags);
  }
};

Divisor dhar_target(const Multigraph& g, const Divisor& start, int u) {
  Divisor cur = start;
  VertexSet avoid = g.all_vertices();
  avoid.erase(u);
  while (cur[u] < 1) {
    VertexSet s = maximal_legal_firing(g, cur, avoid);
    if (s.empty()) throw Error(Errc::kPreconditionFailed, "no legal firing moves a chip toward the target");
    fire_in_place(g, cur, s, 1);
  }
  return cur;
}

Divisor min_moves_target(const Multigraph& g, const Divisor& start, int u, std::uint64_t cap) {
  std::optional<Divisor> best;
  Chips best_moves = 0;
  for (const auto& e : effective_class(g, start, cap)) {
    if (e[u] < 1) continue;
    Chips moves = firing_script_by_reduction(g, start, e).max();
    if (!best || moves < best_moves) {
      best = e;
      best_moves = moves;
    }
  }
  if (!best) throw Error(Errc::kPreconditionFailed, "no equivalent effective divisor covers the target vertex");
  return *best;
}

}  // namespace

DharGuidedResult dhar_guided_decomposition(const Multigraph& g, const Divisor& d, DharStrategy strategy,
                                           std::uint64_t class_cap) {
  check_size(g, d);
  if (!d.is_effective() || !has_positive_rank(g, d)) {
    throw Error(Errc::kPreconditionFailed, "divisor must be effective with positive rank");
  }
  auto gp = std::make_shared<const Multigraph>(g);
  GrowingTree t{{"n0"}, {g.all_vertices()}, {d}, {}};
  int counter = 1;
  VertexSet covered = d.support();
  DharGuidedResult result{TreeCutDecomposition::trivial(g), {}, 0};

  while (covered.size() < g.num_vertices()) {
    const int u = covered.complement().first();
    int k = 0;
    while (!t.bags[static_cast<std::size_t>(k)].contains(u)) ++k;
    DharStep step;
    step.vertex = u;
    step.node = k;
    step.start = t.divisors[static_cast<std::size_t>(k)];
    step.target = strategy == DharStrategy::kDharMaximal ? dhar_target(g, step.start, u)
                                                         : min_moves_target(g, step.start, u, class_cap);
    LevelSetChain chain = level_set_decomposition(g, step.start, step.target);
    step.chain = chain.sets;
    for (const auto& inter : chain.intermediates) covered = covered | inter.support();

    // Path nodes: k itself becomes X ∩ B_0, new nodes follow.
    const VertexSet x = t.bags[static_cast<std::size_t>(k)];
    const int m = static_cast<int>(chain.sets.size());
    std::vector<int> path{k};
    VertexSet prev(g.num_vertices());
    for (int j = 0; j <= m; ++j) {
      VertexSet part = j < m ? (x & (chain.sets[static_cast<std::size_t>(j)] - prev)) : (x - prev);
      if (j < m) prev = chain.sets[static_cast<std::size_t>(j)];
      if (j == 0) {
        t.bags[static_cast<std::size_t>(k)] = part;
        continue;
      }
      t.names.push_back("n" + std::to_string(counter++));
      t.bags.push_back(part);
      t.divisors.push_back(chain.intermediates[static_cast<std::size_t>(j)]);
      const int id = static_cast<int>(t.names.size()) - 1;
      t.links.emplace_back(path.back(), id);
      path.push_back(id);
    }
    // Reattach former neighbors of k, each to its best path position.
    std::vector<std::size_t> old_links;
    for (std::size_t i = 0; i + static_cast<std::size_t>(m) < t.links.size(); ++i) {
      if (t.links[i].first == k || t.links[i].second == k) old_links.push_back(i);
    }
    for (std::size_t li : old_links) {
      int best_pos = 0;
      int best_width = std::numeric_limits<int>::max();
      const int other = t.links[li].first == k ? t.links[li].second : t.links[li].first;
      for (int pos = 0; pos <= m; ++pos) {
        t.links[li] = {other, path[static_cast<std::size_t>(pos)]};
        int w = t.build(gp).width().width;
        if (w < best_width) {
          best_width = w;
          best_pos = pos;
        }
      }
      t.links[li] = {other, path[static_cast<std::size_t>(best_pos)]};
    }
    step.width_after = t.build(gp).width().width;
    result.trace.push_back(std::move(step));
  }
  result.decomposition = normalize_empty_bags(t.build(gp));
  result.width = result.decomposition.width().width;
  return result;
}

}  // namespace scree
