#include "scree/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "scree/chip_firing.hpp"
#include "scree/connectivity.hpp"
#include "scree/error.hpp"
#include "scree/exact_search.hpp"
#include "scree/families.hpp"
#include "scree/graph_ops.hpp"
#include "scree/scramble.hpp"
#include "scree/tree_cut.hpp"

namespace scree::corpus {

using io::Json;

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::kExact: return "exact";
    case Mode::kCertificateOnly: return "certificate-only";
    case Mode::kFormulaFamily: return "formula-family";
    case Mode::kOpen: return "open";
  }
  return "?";
}

Mode mode_from_string(std::string_view s) {
  if (s == "exact") return Mode::kExact;
  if (s == "certificate-only") return Mode::kCertificateOnly;
  if (s == "formula-family") return Mode::kFormulaFamily;
  if (s == "open") return Mode::kOpen;
  throw Error(Errc::kParseError, "unknown check mode '" + std::string(s) + "'");
}

ClaimRecord record_from_json(const Json& j, const std::string& file) {
  ClaimRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.statement = j.at("statement").get<std::string>();
    r.ref = j.at("ref").get<std::string>();
    r.mode = mode_from_string(j.at("mode").get<std::string>());
  } catch (const Json::exception& e) {
    throw Error(Errc::kParseError, file + ": record: " + e.what());
  }
  if (r.id.empty() || r.statement.empty() || r.ref.empty()) {
    throw Error(Errc::kParseError, file + ": record '" + r.id + "' needs a nonempty id, statement and ref");
  }
  if (r.mode != Mode::kOpen && !j.contains("checks") && !j.contains("instances")) {
    throw Error(Errc::kParseError, file + ": record '" + r.id + "' has nothing to check");
  }
  r.body = j;
  r.file = file;
  return r;
}

std::vector<ClaimRecord> load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(Errc::kParseError, "corpus directory '" + dir.string() + "' not found");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ClaimRecord> out;
  std::set<std::string> ids;
  for (const auto& path : files) {
    Json doc = io::read_json(path.string());
    const std::string name = path.filename().string();
    if (!doc.contains("schema") || doc.at("schema") != io::kCorpusSchema) {
      throw Error(Errc::kParseError, name + ": expected schema " + std::string(io::kCorpusSchema));
    }
    if (!doc.contains("records") || !doc.at("records").is_array()) {
      throw Error(Errc::kParseError, name + ": missing records array");
    }
    for (const auto& rec : doc.at("records")) {
      ClaimRecord r = record_from_json(rec, name);
      if (!ids.insert(r.id).second) throw Error(Errc::kParseError, name + ": duplicate record id '" + r.id + "'");
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

std::pair<std::string, std::string> pair_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::kParseError, "expected a pair of vertex ids");
  return {j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

}  // namespace

Multigraph graph_from_spec(const Json& spec) {
  try {
    if (spec.contains("family")) {
      auto params = spec.value("params", std::vector<int>{});
      return families::by_name(spec.at("family").get<std::string>(), params);
    }
    if (spec.contains("product")) {
      return cartesian_product(graph_from_spec(spec.at("product").at(0)), graph_from_spec(spec.at("product").at(1)));
    }
    if (spec.contains("rooted_product")) {
      const auto& p = spec.at("rooted_product");
      return rooted_product(graph_from_spec(p.at(0)), graph_from_spec(p.at(1)), spec.at("root").get<std::string>());
    }
    if (spec.contains("bridge")) {
      const auto& p = spec.at("bridge");
      auto [pa, pb] = pair_of(spec.at("prefixes"));
      auto [u, v] = pair_of(spec.at("ends"));
      return join_by_bridge(relabel(graph_from_spec(p.at(0)), pa), relabel(graph_from_spec(p.at(1)), pb), pa + u,
                            pb + v);
    }
    if (spec.contains("hat")) return families::hat_gadget(graph_from_spec(spec.at("hat")));
    if (spec.contains("subdivide")) {
      auto [u, v] = pair_of(spec.at("edge"));
      return subdivide(graph_from_spec(spec.at("subdivide")), u, v);
    }
    if (spec.contains("contract")) {
      auto [u, v] = pair_of(spec.at("edge"));
      return contract(graph_from_spec(spec.at("contract")), u, v);
    }
    if (spec.contains("explicit")) return io::graph_from_json(spec.at("explicit"));
  } catch (const Json::exception& e) {
    throw Error(Errc::kParseError, std::string("graph spec: ") + e.what());
  }
  throw Error(Errc::kParseError, "graph spec: unrecognized form " + spec.dump());
}

namespace {

// A nonnegative count, infinity, or a truth value (stored as 0/1).
ExtCount claimed_value(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtCount::infinity();
  if (j.is_boolean()) return ExtCount::of(j.get<bool>() ? 1 : 0);
  return ExtCount::of(j.get<int>());
}

bool compare(const ExtCount& observed, const std::string& rel, const ExtCount& claimed) {
  if (rel == "eq") return observed == claimed;
  if (rel == "le") return observed <= claimed;
  if (rel == "ge") return observed >= claimed;
  if (rel == "lt") return observed < claimed;
  if (rel == "gt") return observed > claimed;
  throw Error(Errc::kParseError, "unknown relation '" + rel + "'");
}

std::string bound_text(const std::optional<Bound>& b) {
  if (!b) return "none";
  return std::to_string(b->value) + (b->source == BoundSource::kCited ? " cited" : " machine") + " (" + b->reason + ")";
}

// Component leaf counts of T - node.
std::vector<int> leaf_split(const Multigraph& t, int node) {
  std::vector<int> out;
  std::vector<bool> seen(t.num_vertices(), false);
  seen[static_cast<std::size_t>(node)] = true;
  for (auto [start, m] : t.neighbors(node)) {
    (void)m;
    int leaves = 0;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (t.valence(x) == 1) ++leaves;
      for (auto [y, k] : t.neighbors(x)) {
        (void)k;
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    out.push_back(leaves);
  }
  return out;
}

long long max_geodesics(const Multigraph& t) {
  long long best = 0;
  for (int v = 0; v < static_cast<int>(t.num_vertices()); ++v) best = std::max(best, geodesics_through(t, v));
  return best;
}

// Edges whose bags sit at distinct nodes but are missing from the adhesion
// of some interior node or link of the tree path between them.
int path_lemma_violations(const TreeCutDecomposition& d) {
  const Multigraph& g = d.graph();
  std::vector<std::vector<std::pair<int, int>>> node_adh(static_cast<std::size_t>(d.num_nodes()));
  std::vector<std::vector<std::pair<int, int>>> link_adh(d.links().size());
  for (int b = 0; b < d.num_nodes(); ++b) {
    for (const auto& e : d.node_adhesion(b).edges) node_adh[static_cast<std::size_t>(b)].emplace_back(e.u, e.v);
  }
  for (std::size_t l = 0; l < d.links().size(); ++l) {
    for (const auto& e : d.link_adhesion(static_cast<int>(l)).edges) link_adh[l].emplace_back(e.u, e.v);
  }
  auto has = [](const std::vector<std::pair<int, int>>& v, std::pair<int, int> e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  int bad = 0;
  for (const auto& e : g.edges()) {
    const auto path = d.tree_path(d.node_of(e.u), d.node_of(e.v));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!has(link_adh[static_cast<std::size_t>(d.link_index(path[i], path[i + 1]))], {e.u, e.v})) ++bad;
      if (i > 0 && !has(node_adh[static_cast<std::size_t>(path[i])], {e.u, e.v})) ++bad;
    }
  }
  return bad;
}

// Width does not grow, the result is a fixpoint, nonempty bags survive as
// sets, and every empty node is trivalent.
bool normalization_ok(const TreeCutDecomposition& d) {
  auto n1 = normalize_empty_bags(d);
  auto n2 = normalize_empty_bags(n1);
  if (n1.width().width > d.width().width || n2.bags() != n1.bags() || n2.links() != n1.links()) return false;
  std::vector<VertexSet> before;
  std::vector<VertexSet> after;
  for (const auto& b : d.bags()) {
    if (!b.empty()) before.push_back(b);
  }
  for (int b = 0; b < n1.num_nodes(); ++b) {
    if (!n1.bag(b).empty()) {
      after.push_back(n1.bag(b));
    } else if (n1.tree_neighbors(b).size() != 3) {
      return false;
    }
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  return before == after;
}

class InstanceRun {
 public:
  InstanceRun(std::string label, const Json& body, Mode mode, const RunOptions& options)
      : label_(std::move(label)), body_(body), mode_(mode), options_(options) {
    if (body.contains("graph")) graph_ = std::make_shared<const Multigraph>(graph_from_spec(body.at("graph")));
    if (body.contains("certificates")) certs_ = body.at("certificates");
    run_exact_ = body.value("exact", true);
    machine_ = mode != Mode::kCertificateOnly;
  }

  CheckOutcome evaluate(const Json& check) {
    CheckOutcome out;
    out.instance = label_;
    out.quantity = check.at("quantity").get<std::string>();
    out.relation = check.value("relation", std::string("eq"));
    const ExtCount claimed = claimed_value(check.at("claimed"));
    out.claimed = claimed.to_string();
    const std::string& q = out.quantity;
    if (q == "sn" || q == "scw" || q == "gon") return evaluate_invariant(check, claimed, std::move(out));
    ExtCount observed = measure(q, check, out.basis);
    out.observed = observed.to_string();
    out.pass = compare(observed, out.relation, claimed);
    return out;
  }

 private:
  const Multigraph& graph() const {
    if (!graph_) throw Error(Errc::kParseError, "instance '" + label_ + "' has no graph");
    return *graph_;
  }

  const Json& cert(const std::string& name, std::string_view kind) const {
    if (!certs_.contains(name)) throw Error(Errc::kParseError, "unknown certificate '" + name + "'");
    const Json& c = certs_.at(name);
    if (c.value("kind", std::string()) != kind) {
      throw Error(Errc::kParseError, "certificate '" + name + "' is not a " + std::string(kind));
    }
    return c;
  }

  std::string cert_name(const Json& check, const char* key = "certificate") const {
    return check.at(key).get<std::string>();
  }

  TreeCutDecomposition decomposition(const std::string& name) {
    if (certs_.contains(name) && certs_.at(name).value("kind", std::string()) == "construction") {
      return construct(certs_.at(name));
    }
    return io::decomposition_from_json(cert(name, "decomposition"), graph());
  }
  Scramble scramble(const std::string& name) { return io::scramble_from_json(cert(name, "scramble"), graph()); }
  Divisor divisor(const std::string& name) { return io::divisor_from_json(cert(name, "divisor"), graph()); }

  ScwOptions scw_options() const {
    ScwOptions o;
    o.max_vertices = body_.value("scw_max_vertices", o.max_vertices);
    o.budget = options_.budget;
    return o;
  }

  SnOptions sn_options() const {
    SnOptions o;
    o.max_vertices = body_.value("sn_max_vertices", o.max_vertices);
    o.budget = options_.budget;
    return o;
  }

  // Decompositions built at run time from a recipe.
  TreeCutDecomposition construct(const Json& c) {
    const std::string how = c.at("construction").get<std::string>();
    if (how == "trivial") return TreeCutDecomposition::trivial(graph());
    if (how == "exact") return scw_exact(graph(), scw_options()).decomposition;
    if (how == "identity") return identity_decomposition();
    if (how == "caterpillar") return caterpillar_decomposition(graph(), c.at("n").get<int>());
    if (how == "from_divisor") {
      return decomposition_from_partitioning_divisor(graph(), divisor(c.at("divisor").get<std::string>())).decomposition;
    }
    if (how == "star") return star_from_independent_set(graph(), independence_number(graph()).witness);
    if (how == "product_lift") {
      Multigraph left = graph_from_spec(c.at("left"));
      Multigraph right = graph_from_spec(c.at("right"));
      auto d = product_lift(scw_exact(left, scw_options()).decomposition, right);
      if (!(d.graph() == graph())) throw Error(Errc::kGraphMismatch, "lifted decomposition is for another graph");
      // Lifting the right factor instead: vertex (b, a) of H x G is (a, b) here.
      auto e = product_lift(scw_exact(right, scw_options()).decomposition, left);
      if (e.width().width < d.width().width) {
        const int nl = static_cast<int>(left.num_vertices());
        const int nr = static_cast<int>(right.num_vertices());
        std::vector<VertexSet> bags;
        for (const auto& bag : e.bags()) {
          VertexSet moved(graph().num_vertices());
          for (int x : bag.members()) moved.insert((x % nl) * nr + x / nl);
          bags.push_back(std::move(moved));
        }
        return TreeCutDecomposition::validate(graph_, e.node_names(), e.links(), std::move(bags));
      }
      return TreeCutDecomposition::validate(graph_, d.node_names(), d.links(), d.bags());
    }
    if (how == "dhar") {
      auto strategy = c.value("strategy", std::string("dhar-maximal")) == "min-moves" ? DharStrategy::kMinMoves
                                                                                      : DharStrategy::kDharMaximal;
      return dhar_guided_decomposition(graph(), divisor(c.at("divisor").get<std::string>()), strategy).decomposition;
    }
    throw Error(Errc::kParseError, "unknown construction '" + how + "'");
  }

  // T = G with singleton bags; G must be a tree.
  TreeCutDecomposition identity_decomposition() {
    const Multigraph& g = graph();
    if (!g.is_tree()) throw Error(Errc::kNotATree, "identity decomposition needs a tree");
    std::vector<std::pair<int, int>> links;
    std::vector<VertexSet> bags;
    for (const auto& e : g.edges()) links.emplace_back(e.u, e.v);
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) bags.push_back(VertexSet(g.num_vertices(), {v}));
    return TreeCutDecomposition::validate(graph_, g.names(), links, bags);
  }

  const std::vector<BoundsLedger>& ledger() {
    if (ledger_) return *ledger_;
    SandwichInput in;
    in.run_exact = run_exact_;
    in.scw = scw_options();
    in.sn = sn_options();
    in.gonality_max_degree = body_.value("gon_search_degree", 0);
    in.gonality_budget = options_.budget;
    for (const auto& [name, c] : certs_.items()) {
      const std::string kind = c.value("kind", std::string());
      if (kind == "decomposition" || kind == "construction") {
        auto d = decomposition(name);
        if (!in.decomposition || d.width().width < in.decomposition->width().width) in.decomposition = std::move(d);
      } else if (kind == "scramble") {
        auto s = scramble(name);
        if (!in.scramble || order(s).order > order(*in.scramble).order) in.scramble = std::move(s);
      } else if (kind == "divisor") {
        auto d = divisor(name);
        if (!c.value("gonality", true) || !d.is_effective() || !has_positive_rank(graph(), d)) continue;
        if (!in.divisor || d.degree() < in.divisor->degree()) in.divisor = std::move(d);
      }
    }
    if (body_.contains("cited")) {
      for (const auto& c : body_.at("cited")) {
        const std::string rel = c.at("relation").get<std::string>();
        if (rel != "ge" && rel != "le") throw Error(Errc::kParseError, "cited bounds use relation ge or le");
        in.cited.push_back({c.at("invariant").get<std::string>(), rel == "ge", c.at("value").get<int>(),
                            c.at("citation").get<std::string>()});
      }
    }
    ledger_ = sandwich(graph(), in);
    return *ledger_;
  }

  CheckOutcome evaluate_invariant(const Json& check, const ExtCount& claimed, CheckOutcome out) {
    const auto& all = ledger();
    const auto& l = *std::find_if(all.begin(), all.end(), [&](const BoundsLedger& b) { return b.invariant == out.quantity; });
    const int c = claimed.value();
    out.observed = "[" + (l.lower ? std::to_string(l.lower->value) : "?") + ", " +
                   (l.upper ? std::to_string(l.upper->value) : "?") + "]";
    out.basis = "lower " + bound_text(l.lower) + "; upper " + bound_text(l.upper);
    const bool need_machine = check.value("machine", machine_);
    auto usable = [&](const std::optional<Bound>& b) {
      return b && (!need_machine || b->source == BoundSource::kMachine);
    };
    const std::string& rel = out.relation;
    if (rel == "eq") {
      const bool interval = usable(l.lower) && usable(l.upper) && l.lower->value == c && l.upper->value == c;
      const bool some_machine = (l.lower && l.lower->source == BoundSource::kMachine) ||
                                (l.upper && l.upper->source == BoundSource::kMachine);
      out.pass = interval && some_machine;
    } else if (rel == "le" || rel == "lt") {
      out.pass = usable(l.upper) && compare(ExtCount::of(l.upper->value), rel, claimed);
    } else {
      out.pass = usable(l.lower) && compare(ExtCount::of(l.lower->value), rel, claimed);
    }
    return out;
  }

  ExtCount measure(const std::string& q, const Json& check, std::string& basis) {
    auto count = [](long long v) { return ExtCount::of(static_cast<int>(v)); };
    basis = "computed";
    if (q == "vertices") return count(static_cast<long long>(graph().num_vertices()));
    if (q == "edges") return count(graph().num_edges());
    if (q == "edge_connectivity") return count(edge_connectivity(graph()).value);
    if (q == "independence_number") return count(independence_number(graph()).value);
    if (q == "is_simple") return count(graph().is_simple() ? 1 : 0);
    if (q == "width" || q == "link_width" || q == "bag_width") {
      auto r = decomposition(cert_name(check)).width();
      basis = "width of certificate '" + cert_name(check) + "'";
      return count(q == "width" ? r.width : q == "link_width" ? r.link_width : r.bag_width);
    }
    if (q == "link_adhesion") {
      auto d = decomposition(cert_name(check));
      auto [a, b] = pair_of(check.at("link"));
      return count(d.link_adhesion(d.link_index(d.node_index(a), d.node_index(b))).size());
    }
    if (q == "node_adhesion") {
      auto d = decomposition(cert_name(check));
      return count(d.node_adhesion(d.node_index(check.at("node").get<std::string>())).size());
    }
    if (q == "bag_size") {
      auto d = decomposition(cert_name(check));
      return count(static_cast<long long>(d.bag(d.node_index(check.at("node").get<std::string>())).size()));
    }
    if (q == "empty_bags") {
      auto d = decomposition(cert_name(check));
      return count(std::count_if(d.bags().begin(), d.bags().end(), [](const VertexSet& s) { return s.empty(); }));
    }
    if (q == "path_lemma_violations") return count(path_lemma_violations(decomposition(cert_name(check))));
    if (q == "normalization_ok") return count(normalization_ok(decomposition(cert_name(check))) ? 1 : 0);
    if (q == "normalized_empty_bags") {
      auto d = normalize_empty_bags(decomposition(cert_name(check)));
      return count(std::count_if(d.bags().begin(), d.bags().end(), [](const VertexSet& s) { return s.empty(); }));
    }
    if (q == "normalized_leaf_bound_ok") {
      // nonempty leaves only, and at most (#leaves - 2) empty nodes
      auto d = normalize_empty_bags(decomposition(cert_name(check)));
      int leaves = 0;
      int empty = 0;
      bool ok = true;
      for (int b = 0; b < d.num_nodes(); ++b) {
        if (d.bag(b).empty()) ++empty;
        if (d.tree_neighbors(b).size() == 1) {
          ++leaves;
          ok = ok && !d.bag(b).empty();
        }
      }
      return count(ok && (d.num_nodes() == 1 || empty <= leaves - 2) ? 1 : 0);
    }
    if (q == "normalized_width") return count(normalize_empty_bags(decomposition(cert_name(check))).width().width);
    if (q == "hitting_number") return count(hitting_number(scramble(cert_name(check))).value);
    if (q == "egg_cut_number") return egg_cut_number(scramble(cert_name(check))).value;
    if (q == "order") return count(order(scramble(cert_name(check))).order);
    if (q == "degree") return count(divisor(cert_name(check)).degree());
    if (q == "positive_rank") {
      auto d = divisor(cert_name(check));
      return count(d.is_effective() && has_positive_rank(graph(), d) ? 1 : 0);
    }
    if (q == "partitions") {
      auto d = divisor(cert_name(check));
      const bool reduced = partition_class_by_reduction(graph(), d).has_value();
      bool enumerated = reduced;
      try {
        enumerated = partitions_vertices(graph(), d).partitions;
        basis = "class enumeration and reduction test agree";
      } catch (const Error& e) {
        if (e.code() != Errc::kBudgetExceeded) throw;
        basis = "reduction test; class too large to enumerate";
      }
      if (enumerated != reduced) throw Error(Errc::kClaimFailed, "partition tests disagree");
      return count(reduced ? 1 : 0);
    }
    if (q == "class_size") return count(static_cast<long long>(effective_class(graph(), divisor(cert_name(check))).size()));
    if (q == "from_divisor_width" || q == "from_divisor_max_link_adhesion" || q == "from_divisor_min_link_adhesion" ||
        q == "from_divisor_max_node_adhesion") {
      auto r = decomposition_from_partitioning_divisor(graph(), divisor(cert_name(check)));
      const auto& d = r.decomposition;
      if (q == "from_divisor_width") return count(d.width().width);
      auto links = d.link_adhesion_sizes();
      auto nodes = d.node_adhesion_sizes();
      if (q == "from_divisor_max_node_adhesion") return count(nodes.empty() ? 0 : *std::max_element(nodes.begin(), nodes.end()));
      if (links.empty()) return count(0);
      return count(q == "from_divisor_max_link_adhesion" ? *std::max_element(links.begin(), links.end())
                                                         : *std::min_element(links.begin(), links.end()));
    }
    if (q == "dhar_width" || q == "dhar_link_width" || q == "dhar_steps") {
      auto strategy = check.value("strategy", std::string("dhar-maximal")) == "min-moves" ? DharStrategy::kMinMoves
                                                                                          : DharStrategy::kDharMaximal;
      auto r = dhar_guided_decomposition(graph(), divisor(cert_name(check)), strategy);
      basis = std::string(strategy == DharStrategy::kMinMoves ? "fewest-move" : "Dhar-maximal") + " targets";
      if (q == "dhar_width") return count(r.width);
      if (q == "dhar_link_width") return count(r.decomposition.width().link_width);
      return count(static_cast<long long>(r.trace.size()));
    }
    if (q == "level_set_length") {
      auto chain = level_set_decomposition(graph(), divisor(cert_name(check, "from")), divisor(cert_name(check, "to")));
      return count(static_cast<long long>(chain.sets.size()));
    }
    if (q == "scw_exact" || q == "scw_connected_bags" || q == "scw_without_empty_bags") {
      ScwOptions o = scw_options();
      o.require_connected_bags = q == "scw_connected_bags";
      o.allow_empty_bags = q != "scw_without_empty_bags";
      basis = "exact search";
      return count(scw_exact(graph(), o).value);
    }
    if (q == "sn_exact") {
      basis = "exact search";
      return count(sn_exact(graph(), sn_options()).value);
    }
    if (q == "gon_exact") {
      basis = "exhaustive divisor search";
      return count(gonality(graph(), check.at("max_degree").get<int>(), options_.budget).value);
    }
    if (q == "scw_after_subdivision") {
      auto [u, v] = pair_of(check.at("edge"));
      return count(scw_exact(subdivide(graph(), u, v), scw_options()).value);
    }
    if (q == "scw_after_edge_deletion") {
      auto [u, v] = pair_of(check.at("edge"));
      const Multigraph& g = graph();
      return count(scw_exact(remove_edges(g, g.index_of(u), g.index_of(v), check.value("count", 1)), scw_options()).value);
    }
    if (q == "scw_after_smoothing") {
      return count(scw_exact(smooth(graph(), check.at("vertex").get<std::string>()), scw_options()).value);
    }
    if (q == "scw_bridge_max") {
      auto [u, v] = pair_of(check.at("edge"));
      auto [a, b] = delete_bridge_split(graph(), u, v);
      const int wa = a.num_vertices() < 2 ? 1 : scw_exact(a, scw_options()).value;
      const int wb = b.num_vertices() < 2 ? 1 : scw_exact(b, scw_options()).value;
      basis = "max of exact screewidth of the two sides";
      return count(std::max(wa, wb));
    }
    if (q == "delta_bound") {
      auto r = delta_bound_check(graph(), scw_options(), sn_options());
      if (!r.agrees) throw Error(Errc::kClaimFailed, "exact solvers disagree with n - alpha");
      basis = "n - alpha, matched by exact scw and sn";
      return count(r.value);
    }
    if (q == "min_max_geodesics" || q == "caterpillar_max_geodesics" || q == "leaf_centroid_ok") {
      const int leaves = check.at("leaves").get<int>();
      if (q == "caterpillar_max_geodesics") return count(max_geodesics(families::caterpillar_with_leaves(leaves)));
      auto trees = trivalent_trees(leaves);
      basis = std::to_string(trees.size()) + " trees";
      if (q == "min_max_geodesics") {
        long long best = -1;
        for (const auto& t : trees) {
          const long long m = max_geodesics(t);
          if (best < 0 || m < best) best = m;
        }
        return count(best);
      }
      for (const auto& t : trees) {
        auto split = leaf_split(t, leaf_centroid(t));
        if (std::any_of(split.begin(), split.end(), [&](int x) { return x > leaves / 2; })) return count(0);
      }
      return count(1);
    }
    throw Error(Errc::kParseError, "unknown quantity '" + q + "'");
  }

  std::string label_;
  const Json& body_;
  Mode mode_;
  RunOptions options_;
  std::shared_ptr<const Multigraph> graph_;
  Json certs_ = Json::object();
  bool run_exact_ = true;
  bool machine_ = true;
  std::optional<std::vector<BoundsLedger>> ledger_;
};

void run_instance(RecordResult& result, const std::string& label, const Json& body, Mode mode, const RunOptions& options) {
  InstanceRun run(label, body, mode, options);
  for (const auto& check : body.at("checks")) {
    try {
      result.checks.push_back(run.evaluate(check));
    } catch (const Error& e) {
      CheckOutcome failed;
      failed.instance = label;
      failed.quantity = check.value("quantity", std::string("?"));
      failed.relation = check.value("relation", std::string("eq"));
      failed.claimed = check.contains("claimed") ? check.at("claimed").dump() : "?";
      failed.observed = "error";
      failed.basis = e.what();
      result.checks.push_back(std::move(failed));
    }
  }
}

}  // namespace

RecordResult run_record(const ClaimRecord& record, const RunOptions& options) {
  RecordResult result;
  result.id = record.id;
  result.mode = record.mode;
  if (record.mode == Mode::kOpen) {
    result.status = Status::kOpen;
    return result;
  }
  try {
    const Json& body = record.body;
    if (body.contains("instances")) {
      for (const auto& inst : body.at("instances")) {
        Json merged = inst;
        if (!merged.contains("graph") && body.contains("family")) {
          merged["graph"] = Json{{"family", body.at("family")}, {"params", inst.value("params", Json::array())}};
        }
        Mode mode = record.mode;
        if (inst.contains("mode")) mode = mode_from_string(inst.at("mode").get<std::string>());
        std::string label = inst.contains("label") ? inst.at("label").get<std::string>() : inst.value("params", Json::array()).dump();
        run_instance(result, label, merged, mode, options);
      }
    } else {
      run_instance(result, "", body, record.mode, options);
    }
  } catch (const Error& e) {
    result.status = Status::kError;
    result.error = e.what();
    return result;
  }
  const bool ok = std::all_of(result.checks.begin(), result.checks.end(), [](const CheckOutcome& c) { return c.pass; });
  result.status = ok && !result.checks.empty() ? Status::kPass : Status::kFail;
  return result;
}

CorpusReport run_corpus(const std::vector<ClaimRecord>& records, const RunOptions& options) {
  std::vector<const ClaimRecord*> selected;
  for (const auto& r : records) {
    if (options.filter.empty() || r.id.find(options.filter) != std::string::npos) selected.push_back(&r);
  }
  CorpusReport report;
  report.records.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) report.records[i] = run_record(*selected[i], options);
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(selected.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : report.records) {
    if (r.status == Status::kPass) ++report.passed;
    else if (r.status == Status::kOpen) ++report.open;
    else ++report.failed;
  }
  return report;
}

namespace {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kOpen: return "open";
    case Status::kError: return "error";
  }
  return "?";
}

}  // namespace

Json report_to_json(const CorpusReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json j{{"quantity", c.quantity}, {"relation", c.relation}, {"claimed", c.claimed},
             {"observed", c.observed}, {"pass", c.pass},         {"basis", c.basis}};
      if (!c.instance.empty()) j["instance"] = c.instance;
      checks.push_back(std::move(j));
    }
    Json rec{{"id", r.id}, {"mode", to_string(r.mode)}, {"status", status_name(r.status)}, {"checks", checks}};
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(std::move(rec));
  }
  return Json{{"schema", io::kCorpusSchema},
              {"passed", report.passed},
              {"failed", report.failed},
              {"open", report.open},
              {"records", records}};
}

std::string report_to_table(const CorpusReport& report) {
  std::ostringstream out;
  std::size_t width = 2;
  for (const auto& r : report.records) width = std::max(width, r.id.size());
  for (const auto& r : report.records) {
    out << r.id << std::string(width - r.id.size() + 2, ' ') << status_name(r.status) << "  " << to_string(r.mode) << "\n";
    if (!r.error.empty()) out << "    " << r.error << "\n";
    for (const auto& c : r.checks) {
      if (c.pass) continue;
      out << "    " << (c.instance.empty() ? "" : c.instance + " ") << c.quantity << " " << c.relation << " " << c.claimed
          << ": observed " << c.observed << " [" << c.basis << "]\n";
    }
  }
  out << report.passed << " passed, " << report.failed << " failed, " << report.open << " open\n";
  return out.str();
}

void require_pass(const CorpusReport& report) {
  if (report.ok()) return;
  std::string ids;
  for (const auto& r : report.records) {
    if (r.status == Status::kFail || r.status == Status::kError) ids += (ids.empty() ? "" : ", ") + r.id;
  }
  throw Error(Errc::kClaimFailed, "records failed: " + ids);
}

}  // namespace scree::corpus
