#include "scree/exact_search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "scree/connectivity.hpp"
#include "scree/error.hpp"

namespace scree {

namespace {

using Mask = std::uint32_t;
constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr int kMaskLimit = 24;

void check_size(const Multigraph& g, int cap, const char* what) {
  const int n = static_cast<int>(g.num_vertices());
  if (n > cap || n > kMaskLimit) {
    throw Error(Errc::kBudgetExceeded, std::string(what) + " is capped at " + std::to_string(std::min(cap, kMaskLimit)) +
                                           " vertices, graph has " + std::to_string(n));
  }
}

std::vector<int> cut_table(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> cut(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int v = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    int inside = 0;
    for (auto [y, m] : g.neighbors(v)) {
      if ((rest >> y) & 1U) inside += m;
    }
    cut[s] = cut[rest] + g.valence(v) - 2 * inside;
  }
  return cut;
}

std::vector<bool> connected_table(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  std::vector<bool> conn(std::size_t{1} << n, false);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Mask seen = s & -s;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    conn[s] = seen == s;
  }
  return conn;
}

VertexSet to_set(std::size_t n, Mask m) { return VertexSet::from_mask(n, m); }

class ScwDp {
 public:
  ScwDp(const Multigraph& g, const ScwOptions& opt)
      : g_(g), opt_(opt), n_(static_cast<int>(g.num_vertices())), full_((Mask{1} << n_) - 1), cut_(cut_table(g)) {
    if (opt.require_connected_bags) conn_ = connected_table(g);
  }

  std::uint64_t work() const { return work_; }

  std::optional<TreeCutDecomposition> decide(int k) {
    const std::size_t size = std::size_t{1} << n_;
    g_best_.assign(size, kInf);
    g2_.assign(size, kInf);
    split_.assign(size, 0);
    feasible_.assign(size, false);
    single_.assign(size, false);
    bag_.assign(size, 0);
    empty_bag_.assign(size, false);
    g_best_[0] = 0;
    for (Mask s = 1; s <= full_; ++s) {
      const Mask low = s & -s;
      const Mask rest = s ^ low;
      // children partitions with at least two blocks, first block holds low
      int best2 = kInf;
      Mask best_p = 0;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask p = low | sub;
        if (p != s && feasible_[p]) {
          tick();
          const int val = cut_[p] + g_best_[s ^ p];
          if (val < best2) {
            best2 = val;
            best_p = p;
          }
        }
        if (sub == 0) break;
      }
      g2_[s] = best2;
      split_[s] = best_p;

      const int cs = s == full_ ? 0 : cut_[s];
      bool ok = false;
      if (cs <= k) {
        const int size_s = std::popcount(s);
        if (size_s <= k && bag_ok(s)) {
          ok = true;
          bag_[s] = s;
        }
        for (Mask x = (s - 1) & s; !ok && x; x = (x - 1) & s) {
          tick();
          const int sx = std::popcount(x);
          if (sx > k || g_best_[s ^ x] >= kInf || !bag_ok(x)) continue;
          const int twice = g_best_[s ^ x] + cs - cut_[x];
          if (sx + twice / 2 <= k) {
            ok = true;
            bag_[s] = x;
          }
        }
        if (!ok && opt_.allow_empty_bags && best2 < kInf && (best2 + cs) / 2 <= k) {
          ok = true;
          bag_[s] = 0;
          empty_bag_[s] = true;
        }
      }
      feasible_[s] = ok;
      if (ok && cut_[s] <= best2) {
        g_best_[s] = cut_[s];
        single_[s] = true;
      } else {
        g_best_[s] = best2;
      }
    }
    if (!feasible_[full_]) return std::nullopt;
    return reconstruct();
  }

 private:
  bool bag_ok(Mask x) const { return !opt_.require_connected_bags || conn_[x]; }

  void tick() {
    ++work_;
    if (opt_.budget != 0 && work_ > opt_.budget) {
      throw Error(Errc::kBudgetExceeded, "screewidth search exceeded " + std::to_string(opt_.budget) + " work units");
    }
  }

  TreeCutDecomposition reconstruct() {
    names_.clear();
    bags_.clear();
    links_.clear();
    build(full_, -1);
    return TreeCutDecomposition::validate(std::make_shared<const Multigraph>(g_), names_, links_, bags_);
  }

  void build(Mask s, int parent) {
    const int node = static_cast<int>(names_.size());
    names_.push_back("b" + std::to_string(node));
    bags_.push_back(to_set(static_cast<std::size_t>(n_), bag_[s]));
    if (parent >= 0) links_.emplace_back(parent, node);
    std::vector<Mask> blocks;
    Mask t = s ^ bag_[s];
    if (empty_bag_[s]) {
      blocks.push_back(split_[s]);
      t = s ^ split_[s];
    }
    while (t) {
      if (single_[t]) {
        blocks.push_back(t);
        break;
      }
      blocks.push_back(split_[t]);
      t ^= split_[t];
    }
    for (Mask b : blocks) build(b, node);
  }

  const Multigraph& g_;
  ScwOptions opt_;
  int n_;
  Mask full_;
  std::vector<int> cut_;
  std::vector<bool> conn_;
  std::vector<int> g_best_;
  std::vector<int> g2_;
  std::vector<Mask> split_;
  std::vector<bool> feasible_;
  std::vector<bool> single_;
  std::vector<Mask> bag_;
  std::vector<bool> empty_bag_;
  std::uint64_t work_ = 0;
  std::vector<std::string> names_;
  std::vector<VertexSet> bags_;
  std::vector<std::pair<int, int>> links_;
};

int connectivity_lower_bound(const Multigraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n < 2) return 1;
  return std::max(1, std::min(n, edge_connectivity(g).value));
}

}  // namespace

std::optional<TreeCutDecomposition> scw_decide(const Multigraph& g, int k, const ScwOptions& options) {
  check_size(g, options.max_vertices, "screewidth search");
  ScwDp dp(g, options);
  return dp.decide(k);
}

ScwResult scw_exact(const Multigraph& g, const ScwOptions& options) {
  check_size(g, options.max_vertices, "screewidth search");
  const int n = static_cast<int>(g.num_vertices());
  int lo = connectivity_lower_bound(g);
  int hi = n;
  std::optional<TreeCutDecomposition> best;
  if (!options.require_connected_bags) {
    best = TreeCutDecomposition::trivial(g);
    auto consider = [&](TreeCutDecomposition d) {
      int w = d.width().width;
      if (w < hi) {
        hi = w;
        best = std::move(d);
      }
    };
    if (g.is_simple()) consider(star_from_independent_set(g, independence_number(g).witness));
    if (n >= 2) consider(from_bipartition(g, edge_connectivity(g).side));
  }
  ScwDp dp(g, options);
  // smallest k in [lo, hi] that is feasible; hi is feasible via `best`
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (auto d = dp.decide(mid)) {
      hi = mid;
      best = std::move(d);
    } else {
      lo = mid + 1;
    }
  }
  if (!best || best->width().width != lo) {
    auto d = dp.decide(lo);
    if (!d) throw Error(Errc::kPreconditionFailed, "no decomposition of width " + std::to_string(lo));
    best = std::move(d);
  }
  return ScwResult{lo, std::move(*best), dp.work()};
}

Scramble singleton_scramble(const Multigraph& g) {
  std::vector<VertexSet> eggs;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) eggs.push_back(VertexSet(g.num_vertices(), {v}));
  return Scramble::validate(std::make_shared<const Multigraph>(g), std::move(eggs));
}

namespace {

class SnSearch {
 public:
  SnSearch(const Multigraph& g, const SnOptions& opt, std::uint64_t& work)
      : g_(g), opt_(opt), n_(static_cast<int>(g.num_vertices())), cut_(cut_table(g)), work_(work) {
    auto conn = connected_table(g);
    for (Mask s = 1; s < (Mask{1} << n_); ++s) {
      if (conn[s]) eggs_.push_back(s);
    }
    std::stable_sort(eggs_.begin(), eggs_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  }

  std::optional<std::vector<Mask>> find(int k) {
    k_ = k;
    hits_.clear();
    for (Mask h = 0; h < (Mask{1} << n_); ++h) {
      if (std::popcount(h) == k - 1) hits_.push_back(h);
    }
    compat_.clear();
    failed_.clear();
    const std::size_t m = eggs_.size();
    conflicts_.assign(m, 0);
    chosen_.clear();
    covered_.assign(hits_.size(), 0);
    if (dfs()) {
      std::vector<Mask> out;
      for (std::size_t i : chosen_) out.push_back(eggs_[i]);
      return out;
    }
    return std::nullopt;
  }

 private:
  // Disjoint eggs need k edge-disjoint paths between them.
  bool compatible(std::size_t i, std::size_t j) {
    const Mask a = eggs_[i];
    const Mask b = eggs_[j];
    if (a & b) return true;
    if (cut_[a] < k_ || cut_[b] < k_) return false;
    const auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = compat_.find(key);
    if (it != compat_.end()) return it->second;
    const Mask full = (Mask{1} << n_) - 1;
    const Mask free = full & ~(a | b);
    int best = kInf;
    for (Mask sub = free;; sub = (sub - 1) & free) {
      best = std::min(best, cut_[a | sub]);
      if (best < k_ || sub == 0) break;
    }
    const bool ok = best >= k_;
    compat_.emplace(key, ok);
    return ok;
  }

  void tick() {
    ++work_;
    if (opt_.budget != 0 && work_ > opt_.budget) {
      throw Error(Errc::kBudgetExceeded, "scramble search exceeded " + std::to_string(opt_.budget) + " nodes");
    }
  }

  bool dfs() {
    tick();
    std::vector<std::size_t> key(chosen_.begin(), chosen_.end());
    std::sort(key.begin(), key.end());
    if (failed_.count(key)) return false;
    // uncovered hitting candidate with the fewest viable eggs
    std::size_t best_h = hits_.size();
    std::vector<std::size_t> best_options;
    for (std::size_t h = 0; h < hits_.size(); ++h) {
      if (covered_[h]) continue;
      std::vector<std::size_t> options;
      for (std::size_t e = 0; e < eggs_.size(); ++e) {
        if ((eggs_[e] & hits_[h]) == 0 && conflicts_[e] == 0) options.push_back(e);
      }
      if (best_h == hits_.size() || options.size() < best_options.size()) {
        best_h = h;
        best_options = std::move(options);
        if (best_options.empty()) break;
      }
    }
    if (best_h == hits_.size()) return true;
    for (std::size_t e : best_options) {
      push(e);
      if (dfs()) return true;
      pop(e);
    }
    failed_.insert(std::move(key));
    return false;
  }

  void push(std::size_t e) {
    chosen_.push_back(e);
    for (std::size_t h = 0; h < hits_.size(); ++h) {
      if ((eggs_[e] & hits_[h]) == 0) ++covered_[h];
    }
    for (std::size_t f = 0; f < eggs_.size(); ++f) {
      if (!compatible(e, f)) ++conflicts_[f];
    }
  }

  void pop(std::size_t e) {
    chosen_.pop_back();
    for (std::size_t h = 0; h < hits_.size(); ++h) {
      if ((eggs_[e] & hits_[h]) == 0) --covered_[h];
    }
    for (std::size_t f = 0; f < eggs_.size(); ++f) {
      if (!compatible(e, f)) --conflicts_[f];
    }
  }

  const Multigraph& g_;
  SnOptions opt_;
  int n_;
  std::vector<int> cut_;
  std::uint64_t& work_;
  int k_ = 0;
  std::vector<Mask> eggs_;
  std::vector<Mask> hits_;
  std::map<std::pair<std::size_t, std::size_t>, bool> compat_;
  std::set<std::vector<std::size_t>> failed_;
  std::vector<int> conflicts_;
  std::vector<int> covered_;
  std::vector<std::size_t> chosen_;
};

Scramble scramble_from_masks(const Multigraph& g, const std::vector<Mask>& masks) {
  std::vector<VertexSet> eggs;
  for (Mask m : masks) eggs.push_back(to_set(g.num_vertices(), m));
  std::sort(eggs.begin(), eggs.end());
  return Scramble::validate(std::make_shared<const Multigraph>(g), std::move(eggs));
}

}  // namespace

std::optional<Scramble> sn_decide(const Multigraph& g, int k, const SnOptions& options) {
  check_size(g, options.max_vertices, "scramble search");
  const int n = static_cast<int>(g.num_vertices());
  if (k <= 1) return Scramble::validate(std::make_shared<const Multigraph>(g), {VertexSet(g.num_vertices(), {0})});
  if (k > n) return std::nullopt;
  std::uint64_t work = 0;
  SnSearch search(g, options, work);
  auto masks = search.find(k);
  if (!masks) return std::nullopt;
  Scramble s = scramble_from_masks(g, *masks);
  if (order(s).order < k) throw Error(Errc::kPreconditionFailed, "scramble search produced a low-order scramble");
  return s;
}

SnResult sn_exact(const Multigraph& g, const SnOptions& options) {
  check_size(g, options.max_vertices, "scramble search");
  const int n = static_cast<int>(g.num_vertices());
  SnResult result;
  if (n == 1) {
    result.value = 1;
    result.scramble = singleton_scramble(g);
    return result;
  }
  result.scramble = singleton_scramble(g);
  result.value = order(result.scramble).order;
  const int upper = options.upper_bound > 0 ? std::min(options.upper_bound, n) : n;
  SnSearch search(g, options, result.work);
  for (int k = result.value + 1; k <= upper; ++k) {
    auto masks = search.find(k);
    if (!masks) break;
    Scramble s = scramble_from_masks(g, *masks);
    if (order(s).order < k) throw Error(Errc::kPreconditionFailed, "scramble search produced a low-order scramble");
    result.value = k;
    result.scramble = std::move(s);
  }
  return result;
}

DeltaBoundReport delta_bound_check(const Multigraph& g, const ScwOptions& scw, const SnOptions& sn) {
  const int n = static_cast<int>(g.num_vertices());
  if (!g.is_simple()) throw Error(Errc::kPreconditionFailed, "graph must be simple");
  for (int v = 0; v < n; ++v) {
    if (g.valence(v) < n / 2 + 1) {
      throw Error(Errc::kPreconditionFailed, "vertex '" + g.name(v) + "' has valence " + std::to_string(g.valence(v)) +
                                                 " < " + std::to_string(n / 2 + 1));
    }
  }
  DeltaBoundReport r;
  r.value = n - independence_number(g).value;
  if (n <= scw.max_vertices) {
    r.scw = scw_exact(g, scw).value;
    r.agrees = r.agrees && *r.scw == r.value;
  }
  if (n <= sn.max_vertices) {
    r.sn = sn_exact(g, sn).value;
    r.agrees = r.agrees && *r.sn == r.value;
  }
  return r;
}

namespace {

std::vector<int> leaf_flags(const Multigraph& t) {
  std::vector<int> leaf(t.num_vertices(), 0);
  for (int v = 0; v < static_cast<int>(t.num_vertices()); ++v) leaf[static_cast<std::size_t>(v)] = t.valence(v) == 1;
  return leaf;
}

// Leaf counts of the components of T - node.
std::vector<long long> leaf_counts_around(const Multigraph& t, int node) {
  auto leaf = leaf_flags(t);
  std::vector<long long> counts;
  std::vector<bool> seen(t.num_vertices(), false);
  seen[static_cast<std::size_t>(node)] = true;
  for (auto [start, m] : t.neighbors(node)) {
    long long c = 0;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      c += leaf[static_cast<std::size_t>(x)];
      for (auto [y, mm] : t.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    counts.push_back(c);
  }
  return counts;
}

void require_tree(const Multigraph& t) {
  if (!t.is_tree()) throw Error(Errc::kNotATree, "input graph is not a tree");
}

}  // namespace

int leaf_centroid(const Multigraph& tree) {
  require_tree(tree);
  auto leaf = leaf_flags(tree);
  const long long total = std::count(leaf.begin(), leaf.end(), 1);
  for (int v = 0; v < static_cast<int>(tree.num_vertices()); ++v) {
    auto counts = leaf_counts_around(tree, v);
    if (std::all_of(counts.begin(), counts.end(), [&](long long c) { return c <= total / 2; })) return v;
  }
  throw Error(Errc::kPreconditionFailed, "no leaf-centroid found");
}

long long geodesics_through(const Multigraph& tree, int node) {
  require_tree(tree);
  if (node < 0 || node >= static_cast<int>(tree.num_vertices())) throw Error(Errc::kUnknownNode, "node out of range");
  auto counts = leaf_counts_around(tree, node);
  long long sum = 0;
  long long pairs = 0;
  for (long long c : counts) {
    pairs += sum * c;
    sum += c;
  }
  return pairs;
}

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Isomorphism-invariant code of an unrooted tree, rooted at its center(s).
std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(static_cast<int>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Multigraph tree_from_adj(const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    names.push_back(std::to_string(v));
    for (int w : adj[v]) {
      if (static_cast<int>(v) < w) edges.push_back({static_cast<int>(v), w, 1});
    }
  }
  return Multigraph::build(std::move(names), edges);
}

}  // namespace

std::vector<Multigraph> trivalent_trees(int leaves) {
  if (leaves < 2) throw Error(Errc::kBadParams, "need at least two leaves");
  if (leaves == 2) return {tree_from_adj({{1}, {0}})};
  std::map<std::string, std::vector<std::vector<int>>> level{{"", {{1, 2, 3}, {0}, {0}, {0}}}};
  level = {{tree_code(level.begin()->second), level.begin()->second}};
  for (int l = 3; l < leaves; ++l) {
    std::map<std::string, std::vector<std::vector<int>>> next;
    for (const auto& [code, adj] : level) {
      for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
        for (int b : adj[static_cast<std::size_t>(a)]) {
          if (a > b) continue;
          // subdivide a–b with a new vertex s and hang a new leaf on s
          auto grown = adj;
          const int s = static_cast<int>(grown.size());
          const int leaf = s + 1;
          std::replace(grown[static_cast<std::size_t>(a)].begin(), grown[static_cast<std::size_t>(a)].end(), b, s);
          std::replace(grown[static_cast<std::size_t>(b)].begin(), grown[static_cast<std::size_t>(b)].end(), a, s);
          grown.push_back({a, b, leaf});
          grown.push_back({s});
          next.emplace(tree_code(grown), std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Multigraph> out;
  for (const auto& [code, adj] : level) out.push_back(tree_from_adj(adj));
  return out;
}

bool BoundsLedger::proven_equal() const { return lower && upper && lower->value == upper->value; }

bool BoundsLedger::machine_proven() const {
  return proven_equal() && lower->source == BoundSource::kMachine && upper->source == BoundSource::kMachine;
}

namespace {

// Keeps the tighter bound; on ties a machine bound replaces a cited one.
void offer(std::optional<Bound>& slot, Bound b, bool is_lower) {
  if (!slot) {
    slot = std::move(b);
    return;
  }
  const bool tighter = is_lower ? b.value > slot->value : b.value < slot->value;
  const bool same_but_machine =
      b.value == slot->value && b.source == BoundSource::kMachine && slot->source == BoundSource::kCited;
  if (tighter || same_but_machine) slot = std::move(b);
}

}  // namespace

std::vector<BoundsLedger> sandwich(const Multigraph& g, const SandwichInput& in) {
  const int n = static_cast<int>(g.num_vertices());
  BoundsLedger sn{"sn", {}, {}};
  BoundsLedger scw{"scw", {}, {}};
  BoundsLedger gon{"gon", {}, {}};
  const auto machine = BoundSource::kMachine;

  offer(sn.lower, {order(singleton_scramble(g)).order, machine, "singleton scramble"}, true);
  offer(scw.upper, {n, machine, "trivial decomposition"}, false);
  if (g.is_simple()) {
    auto alpha = independence_number(g);
    offer(scw.upper, {n - alpha.value, machine, "star decomposition on a maximum independent set"}, false);
  }
  offer(gon.upper, {n, machine, "one chip on every vertex"}, false);

  if (in.decomposition) {
    if (in.decomposition->graph().hash() != g.hash()) {
      throw Error(Errc::kGraphMismatch, "decomposition certificate is for another graph");
    }
    offer(scw.upper, {in.decomposition->width().width, machine, "decomposition certificate"}, false);
  }
  if (in.scramble) {
    if (in.scramble->graph().hash() != g.hash()) throw Error(Errc::kGraphMismatch, "scramble is for another graph");
    offer(sn.lower, {order(*in.scramble).order, machine, "scramble certificate"}, true);
  }
  if (in.divisor) {
    if (!in.divisor->is_effective() || !has_positive_rank(g, *in.divisor)) {
      throw Error(Errc::kClaimFailed, "divisor certificate is not effective with positive rank");
    }
    offer(gon.upper, {static_cast<int>(in.divisor->degree()), machine, "positive-rank divisor certificate"}, false);
  }
  if (in.run_exact && n <= in.scw.max_vertices && n <= kMaskLimit) {
    auto r = scw_exact(g, in.scw);
    offer(scw.lower, {r.value, machine, "exact search"}, true);
    offer(scw.upper, {r.value, machine, "exact search"}, false);
  }
  if (in.run_exact && n <= in.sn.max_vertices && n <= kMaskLimit) {
    SnOptions opt = in.sn;
    if (scw.upper && (opt.upper_bound == 0 || scw.upper->value < opt.upper_bound)) opt.upper_bound = scw.upper->value;
    auto r = sn_exact(g, opt);
    offer(sn.lower, {r.value, machine, "exact search"}, true);
    offer(sn.upper, {r.value, machine, "exact search"}, false);
  }
  if (in.gonality_max_degree > 0) {
    auto r = gonality_up_to(g, in.gonality_max_degree, in.gonality_budget);
    if (r) {
      offer(gon.lower, {r->value, machine, "exhaustive divisor search"}, true);
      offer(gon.upper, {r->value, machine, "exhaustive divisor search"}, false);
    } else {
      offer(gon.lower, {in.gonality_max_degree + 1, machine,
                        "no positive-rank divisor of degree <= " + std::to_string(in.gonality_max_degree)},
            true);
    }
  }
  for (const auto& c : in.cited) {
    BoundsLedger* target = c.invariant == "sn" ? &sn : c.invariant == "scw" ? &scw : c.invariant == "gon" ? &gon : nullptr;
    if (!target) throw Error(Errc::kBadParams, "unknown invariant '" + c.invariant + "'");
    offer(c.is_lower ? target->lower : target->upper, {c.value, BoundSource::kCited, c.citation}, c.is_lower);
  }

  // sn <= scw and sn <= gon
  auto derived = [](const Bound& b, const std::string& why) { return Bound{b.value, b.source, why + " (" + b.reason + ")"}; };
  if (scw.upper) offer(sn.upper, derived(*scw.upper, "sn <= scw"), false);
  if (gon.upper) offer(sn.upper, derived(*gon.upper, "sn <= gon"), false);
  if (sn.lower) {
    offer(scw.lower, derived(*sn.lower, "sn <= scw"), true);
    offer(gon.lower, derived(*sn.lower, "sn <= gon"), true);
  }
  std::vector<BoundsLedger> out{sn, scw, gon};
  for (const auto& l : out) {
    if (l.lower && l.upper && l.lower->value > l.upper->value) {
      throw Error(Errc::kInconsistentCertificates,
                  l.invariant + " has lower bound " + std::to_string(l.lower->value) + " (" + l.lower->reason +
                      ") above upper bound " + std::to_string(l.upper->value) + " (" + l.upper->reason + ")");
    }
  }
  return out;
}

}  // namespace scree
