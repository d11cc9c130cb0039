#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scree/chip_firing.hpp"
#include "scree/corpus.hpp"
#include "scree/error.hpp"
#include "scree/exact_search.hpp"
#include "scree/families.hpp"
#include "scree/io.hpp"
#include "scree/scramble.hpp"
#include "scree/tree_cut.hpp"

#ifndef SCREE_CORPUS_DIR
#define SCREE_CORPUS_DIR "corpus"
#endif

namespace {

using scree::io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Global {
  std::string format = "json";
  std::uint64_t budget = 0;
  int threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_path(const std::string& p) {
  if (p != "-" && !std::filesystem::is_regular_file(p)) throw UsageError("no such file: " + p);
}

scree::Multigraph load_graph(const std::string& p) { return scree::io::graph_from_json(scree::io::read_json(p)); }

std::string join_set(const scree::Multigraph& g, const scree::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    out += (first ? "" : ", ") + g.name(v);
    first = false;
  }
  return out + "}";
}

std::string divisor_text(const scree::Multigraph& g, const scree::Divisor& d) {
  std::string out;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
    if (d[v] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (d[v] == 1 ? "" : std::to_string(d[v]) + "*") + g.name(v);
  }
  return out.empty() ? "0" : out;
}

std::string decomposition_table(const scree::TreeCutDecomposition& d) {
  std::ostringstream os;
  const auto& g = d.graph();
  const auto link = d.link_adhesion_sizes();
  const auto node = d.node_adhesion_sizes();
  for (int b = 0; b < d.num_nodes(); ++b) {
    os << d.node_name(b) << "\t" << join_set(g, d.bag(b)) << "\tadh=" << node[static_cast<std::size_t>(b)] << "\n";
  }
  for (std::size_t l = 0; l < d.links().size(); ++l) {
    os << d.node_name(d.links()[l].first) << " - " << d.node_name(d.links()[l].second) << "\tadh=" << link[l] << "\n";
  }
  const auto w = d.width();
  os << "width " << w.width << " (links " << w.link_width << ", bags " << w.bag_width << ")\n";
  return os.str();
}

class App {
 public:
  App() : app_("Screewidth, scramble number and gonality toolkit", "scree") {
    app_.set_version_flag("--version", version_text());
    app_.require_subcommand(1, 1);
    app_.add_option("--format", g_.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "table"}))
        ->capture_default_str();
    app_.add_option("--budget", g_.budget, "Search budget; 0 = unlimited")->capture_default_str();
    app_.add_option("--threads", g_.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    add_gen();
    add_width();
    add_verify_tcd();
    add_scramble_order();
    add_scw_exact();
    add_sn_exact();
    add_gonality();
    add_reduce();
    add_rank();
    add_levelset();
    add_from_divisor();
    add_dhar();
    add_sandwich();
    add_corpus();
    add_dot();
  }

  int run(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app_.exit(e) == 0 ? kOk : kUsage;
    }
    try {
      return action_();
    } catch (const UsageError& e) {
      std::cerr << "scree: " << e.what() << "\n";
      return kUsage;
    } catch (const scree::Error& e) {
      std::cerr << "scree: " << e.what() << "\n";
      switch (e.code()) {
        case scree::Errc::kBudgetExceeded:
          return kBudget;
        case scree::Errc::kParseError:
        case scree::Errc::kBadParams:
          return kUsage;
        default:
          return kVerifyFailed;
      }
    }
  }

 private:
  static std::string version_text() {
    std::ostringstream os;
    os << "scree " << SCREE_VERSION;
    for (auto s : {scree::io::kGraphSchema, scree::io::kDecompositionSchema, scree::io::kScrambleSchema,
                   scree::io::kDivisorSchema, scree::io::kLedgerSchema, scree::io::kCorpusSchema}) {
      os << "\n" << s;
    }
    return os.str();
  }

  void emit(const Json& j, const std::string& table, const std::string& dot = {}) const {
    if (g_.format == "table") {
      std::cout << table;
    } else if (g_.format == "dot" && !dot.empty()) {
      std::cout << dot;
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }

  CLI::App* sub(const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* s = app_.add_subcommand(name, help);
    s->callback([this, fn = std::move(fn)] { action_ = fn; });
    return s;
  }

  void add_gen() {
    auto* s = sub("gen", "Generate a named graph family", [this] {
      auto g = scree::families::by_name(family_, params_);
      emit(scree::io::graph_to_json(g), scree::to_dot(g, family_), scree::to_dot(g, family_));
      return kOk;
    });
    s->add_option("family", family_, "Family name")->required();
    s->add_option("params", params_, "Integer parameters");
    s->footer([] {
      std::string names = "Families:";
      for (auto n : scree::families::names()) names += " " + std::string(n);
      return names;
    }());
  }

  void add_width() {
    auto* s = sub("width", "Width of a tree-cut decomposition", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto d = scree::io::decomposition_from_json(scree::io::read_json(cert_), g);
      emit(scree::io::width_report_to_json(d, d.width()), decomposition_table(d), scree::to_dot(d));
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("tcd", cert_)->required();
  }

  void add_verify_tcd() {
    auto* s = sub("verify-tcd", "Validate a decomposition and its claimed width", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto j = scree::io::read_json(cert_);
      auto d = scree::io::decomposition_from_json(j, g);
      const int w = d.width().width;
      const auto claimed = scree::io::claimed_width(j);
      const bool ok = !claimed || *claimed == w;
      Json out{{"valid", true}, {"width", w}, {"claimed_width", claimed ? Json(*claimed) : Json(nullptr)}, {"ok", ok}};
      emit(out, std::string(ok ? "ok" : "MISMATCH") + " width " + std::to_string(w) + "\n");
      if (!ok) std::cerr << "scree: claimed width " << *claimed << " but certificate has width " << w << "\n";
      return ok ? kOk : kVerifyFailed;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("tcd", cert_)->required();
  }

  void add_scramble_order() {
    auto* s = sub("scramble-order", "Hitting number, egg-cut number and order of a scramble", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto j = scree::io::read_json(cert_);
      auto sc = scree::io::scramble_from_json(j, g);
      auto r = scree::order(sc);
      const auto claimed = scree::io::claimed_order(j);
      const bool ok = !claimed || *claimed == r.order;
      std::ostringstream t;
      t << "hitting " << r.hitting.value << "\negg-cut " << r.egg_cut.value.to_string() << "\norder " << r.order << "\n";
      emit(scree::io::order_report_to_json(sc, r), t.str());
      if (!ok) std::cerr << "scree: claimed order " << *claimed << " but scramble has order " << r.order << "\n";
      return ok ? kOk : kVerifyFailed;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("scramble", cert_)->required();
  }

  void add_scw_exact() {
    auto* s = sub("scw-exact", "Exact screewidth with an optimal decomposition", [this] {
      check_path(graph_);
      auto g = load_graph(graph_);
      scree::ScwOptions o;
      o.max_vertices = max_vertices_;
      o.budget = g_.budget;
      o.require_connected_bags = connected_;
      o.allow_empty_bags = !no_empty_;
      auto r = scree::scw_exact(g, o);
      Json out{{"scw", r.value}, {"decomposition", scree::io::decomposition_to_json(r.decomposition, r.value)}};
      emit(out, "scw " + std::to_string(r.value) + "\n" + decomposition_table(r.decomposition),
           scree::to_dot(r.decomposition));
      return kOk;
    });
    s->add_option("graph", graph_, "Graph JSON, - for stdin")->capture_default_str();
    s->add_option("--max-vertices", max_vertices_, "Vertex cap")->capture_default_str();
    s->add_flag("--connected-bags", connected_, "Only decompositions whose nonempty bags induce connected subgraphs");
    s->add_flag("--no-empty-bags", no_empty_, "Forbid empty bags");
  }

  void add_sn_exact() {
    auto* s = sub("sn-exact", "Exact scramble number with an optimal scramble", [this] {
      check_path(graph_);
      auto g = load_graph(graph_);
      scree::SnOptions o;
      o.max_vertices = sn_max_vertices_;
      o.budget = g_.budget;
      auto r = scree::sn_exact(g, o);
      std::string t = "sn " + std::to_string(r.value) + "\n";
      for (const auto& e : r.scramble.eggs()) t += join_set(g, e) + "\n";
      emit(Json{{"sn", r.value}, {"scramble", scree::io::scramble_to_json(r.scramble, r.value)}}, t);
      return kOk;
    });
    s->add_option("graph", graph_, "Graph JSON, - for stdin")->capture_default_str();
    s->add_option("--max-vertices", sn_max_vertices_, "Vertex cap")->capture_default_str();
  }

  void add_gonality() {
    auto* s = sub("gonality", "Divisorial gonality by exhaustive search up to a degree", [this] {
      check_path(graph_);
      auto g = load_graph(graph_);
      auto r = scree::gonality_up_to(g, max_degree_, g_.budget);
      if (!r) {
        emit(Json{{"gonality", nullptr}, {"lower_bound", max_degree_ + 1}},
             "gon > " + std::to_string(max_degree_) + "\n");
        return kOk;
      }
      emit(Json{{"gonality", r->value}, {"witness", scree::io::divisor_to_json(g, r->witness)}, {"candidates", r->candidates}},
           "gon " + std::to_string(r->value) + "\nwitness " + divisor_text(g, r->witness) + "\n");
      return kOk;
    });
    s->add_option("graph", graph_, "Graph JSON, - for stdin")->capture_default_str();
    s->add_option("--max-degree", max_degree_, "Largest degree searched")->required();
  }

  void add_reduce() {
    auto* s = sub("reduce", "q-reduced divisor and firing script", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto d = scree::io::divisor_from_json(scree::io::read_json(cert_), g);
      auto r = scree::q_reduce(g, d, g.index_of(q_));
      Json script = Json::object();
      for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        if (r.script.times_fired[static_cast<std::size_t>(v)] != 0) {
          script[g.name(v)] = r.script.times_fired[static_cast<std::size_t>(v)];
        }
      }
      emit(Json{{"q", q_}, {"reduced", scree::io::divisor_to_json(g, r.reduced)}, {"script", script}},
           "reduced " + divisor_text(g, r.reduced) + "\n");
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("divisor", cert_)->required();
    s->add_option("--q", q_, "Base vertex")->required();
  }

  void add_rank() {
    auto* s = sub("rank", "Whether a divisor has positive rank", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto d = scree::io::divisor_from_json(scree::io::read_json(cert_), g);
      const bool pos = scree::has_positive_rank(g, d);
      emit(Json{{"degree", d.degree()}, {"positive_rank", pos}},
           "degree " + std::to_string(d.degree()) + "\npositive rank " + (pos ? "yes" : "no") + "\n");
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("divisor", cert_)->required();
  }

  void add_levelset() {
    auto* s = sub("levelset", "Level-set chain of the firing script between equivalent divisors", [this] {
      check_path(graph_);
      check_path(cert_);
      check_path(cert2_);
      auto g = load_graph(graph_);
      auto from = scree::io::divisor_from_json(scree::io::read_json(cert_), g);
      auto to = scree::io::divisor_from_json(scree::io::read_json(cert2_), g);
      auto c = scree::level_set_decomposition(g, from, to);
      Json sets = Json::array();
      std::string t;
      for (std::size_t i = 0; i < c.sets.size(); ++i) {
        sets.push_back(scree::io::vertex_set_to_json(g, c.sets[i]));
        t += "U" + std::to_string(i + 1) + " " + join_set(g, c.sets[i]) + " -> " + divisor_text(g, c.intermediates[i + 1]) + "\n";
      }
      emit(Json{{"length", c.sets.size()}, {"sets", sets}}, t);
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("from", cert_)->required();
    s->add_option("to", cert2_)->required();
  }

  void add_from_divisor() {
    auto* s = sub("from-divisor", "Decomposition from a divisor that partitions the vertices", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto d = scree::io::divisor_from_json(scree::io::read_json(cert_), g);
      auto r = scree::decomposition_from_partitioning_divisor(g, d);
      emit(scree::io::decomposition_to_json(r.decomposition, r.decomposition.width().width),
           decomposition_table(r.decomposition), scree::to_dot(r.decomposition));
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("divisor", cert_)->required();
  }

  void add_dhar() {
    auto* s = sub("dhar-decomp", "Divisor-guided decomposition", [this] {
      check_path(graph_);
      check_path(cert_);
      auto g = load_graph(graph_);
      auto d = scree::io::divisor_from_json(scree::io::read_json(cert_), g);
      const auto strategy = strategy_ == "dhar-maximal" ? scree::DharStrategy::kDharMaximal : scree::DharStrategy::kMinMoves;
      auto r = scree::dhar_guided_decomposition(g, d, strategy, g_.budget == 0 ? 1'000'000 : g_.budget);
      Json trace = Json::array();
      std::string t;
      for (const auto& step : r.trace) {
        Json chain = Json::array();
        for (const auto& u : step.chain) chain.push_back(scree::io::vertex_set_to_json(g, u));
        trace.push_back(Json{{"vertex", g.name(step.vertex)},
                             {"start", scree::io::divisor_to_json(g, step.start)},
                             {"target", scree::io::divisor_to_json(g, step.target)},
                             {"chain", chain},
                             {"width_after", step.width_after}});
        t += "u=" + g.name(step.vertex) + " target " + divisor_text(g, step.target) + " chain " +
             std::to_string(step.chain.size()) + " width " + std::to_string(step.width_after) + "\n";
      }
      emit(Json{{"width", r.width}, {"trace", trace}, {"decomposition", scree::io::decomposition_to_json(r.decomposition, r.width)}},
           t + decomposition_table(r.decomposition), scree::to_dot(r.decomposition));
      return kOk;
    });
    s->add_option("graph", graph_)->required();
    s->add_option("divisor", cert_)->required();
    s->add_option("--strategy", strategy_, "Target rule")
        ->check(CLI::IsMember({"min-moves", "dhar-maximal"}))
        ->capture_default_str();
  }

  void add_sandwich() {
    auto* s = sub("sandwich", "Combine certificates and exact solves into bounds on sn, scw and gon", [this] {
      check_path(graph_);
      for (const auto* p : {&tcd_opt_, &scramble_opt_, &divisor_opt_}) {
        if (!p->empty()) check_path(*p);
      }
      auto g = load_graph(graph_);
      scree::SandwichInput in;
      if (!tcd_opt_.empty()) in.decomposition = scree::io::decomposition_from_json(scree::io::read_json(tcd_opt_), g);
      if (!scramble_opt_.empty()) in.scramble = scree::io::scramble_from_json(scree::io::read_json(scramble_opt_), g);
      if (!divisor_opt_.empty()) in.divisor = scree::io::divisor_from_json(scree::io::read_json(divisor_opt_), g);
      in.run_exact = !no_exact_;
      in.scw.max_vertices = max_vertices_;
      in.scw.budget = g_.budget;
      in.sn.max_vertices = sn_max_vertices_;
      in.sn.budget = g_.budget;
      in.gonality_max_degree = max_degree_;
      in.gonality_budget = g_.budget;
      auto ledger = scree::sandwich(g, in);
      std::string t;
      for (const auto& b : ledger) {
        t += b.invariant + "\t" + (b.lower ? std::to_string(b.lower->value) : "?") + " .. " +
             (b.upper ? std::to_string(b.upper->value) : "?") + (b.proven_equal() ? "\tproven" : "") + "\n";
      }
      emit(scree::io::ledger_to_json(ledger), t);
      return kOk;
    });
    s->add_option("graph", graph_, "Graph JSON, - for stdin")->capture_default_str();
    s->add_option("--tcd", tcd_opt_, "Decomposition certificate");
    s->add_option("--scramble", scramble_opt_, "Scramble certificate");
    s->add_option("--divisor", divisor_opt_, "Positive-rank divisor");
    s->add_flag("--no-exact", no_exact_, "Skip the exact solvers");
    s->add_option("--max-vertices", max_vertices_, "Vertex cap for exact screewidth")->capture_default_str();
    s->add_option("--sn-max-vertices", sn_max_vertices_, "Vertex cap for exact scramble number")->capture_default_str();
    s->add_option("--max-degree", max_degree_, "Gonality search degree; 0 skips the search")->capture_default_str();
  }

  void add_corpus() {
    auto* s = sub("corpus", "Check the claim corpus", [this] {
      if (!std::filesystem::is_directory(corpus_dir_)) throw UsageError("no such directory: " + corpus_dir_);
      auto records = scree::corpus::load_corpus(corpus_dir_);
      scree::corpus::RunOptions o;
      o.filter = filter_;
      o.threads = g_.threads;
      o.budget = g_.budget;
      auto report = scree::corpus::run_corpus(records, o);
      emit(scree::corpus::report_to_json(report), scree::corpus::report_to_table(report));
      if (!report.ok()) {
        for (const auto& r : report.records) {
          if (r.status == scree::corpus::Status::kFail || r.status == scree::corpus::Status::kError) {
            std::cerr << "scree: failed " << r.id << (r.error.empty() ? "" : ": " + r.error) << "\n";
          }
        }
        return kVerifyFailed;
      }
      return kOk;
    });
    s->add_option("dir", corpus_dir_, "Corpus directory")->capture_default_str();
    s->add_option("--filter", filter_, "Substring of record ids to run");
  }

  void add_dot() {
    auto* s = sub("dot", "Graphviz rendering of a graph or decomposition", [this] {
      check_path(graph_);
      if (!cert_.empty()) check_path(cert_);
      auto g = load_graph(graph_);
      if (cert_.empty()) {
        std::cout << scree::to_dot(g);
      } else {
        std::cout << scree::to_dot(scree::io::decomposition_from_json(scree::io::read_json(cert_), g));
      }
      return kOk;
    });
    s->add_option("graph", graph_, "Graph JSON, - for stdin")->capture_default_str();
    s->add_option("tcd", cert_, "Optional decomposition");
  }

  CLI::App app_;
  Global g_;
  std::function<int()> action_;

  std::string family_;
  std::vector<int> params_;
  std::string graph_ = "-";
  std::string cert_;
  std::string cert2_;
  std::string q_;
  std::string strategy_ = "min-moves";
  std::string tcd_opt_;
  std::string scramble_opt_;
  std::string divisor_opt_;
  bool connected_ = false;
  bool no_empty_ = false;
  bool no_exact_ = false;
  int max_vertices_ = 12;
  int sn_max_vertices_ = 8;
  int max_degree_ = 0;
  std::string corpus_dir_ = SCREE_CORPUS_DIR;
  std::string filter_;
};

}  // namespace

int main(int argc, char** argv) {
  App app;
  return app.run(argc, argv);
}
