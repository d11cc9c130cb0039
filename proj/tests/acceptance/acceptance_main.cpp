// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scree/chip_firing.hpp"
#include "scree/connectivity.hpp"
#include "scree/corpus.hpp"
#include "scree/error.hpp"
#include "scree/exact_search.hpp"
#include "scree/families.hpp"
#include "scree/graph_ops.hpp"
#include "scree/io.hpp"

namespace {

using namespace scree;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::optional<int> proven(const std::vector<BoundsLedger>& l, const std::string& inv) {
  for (const auto& b : l) {
    if (b.invariant == inv && b.proven_equal()) return b.lower->value;
  }
  return std::nullopt;
}

Divisor named(const Multigraph& g, const std::vector<std::pair<std::string, int>>& chips) {
  Divisor d(g.num_vertices());
  for (const auto& [v, c] : chips) d[g.index_of(v)] = c;
  return d;
}

// The frozen certificate stored with a corpus record.
io::Json corpus_certificate(const std::string& id, const std::string& name) {
  for (const auto& r : corpus::load_corpus(SCREE_CORPUS_DIR)) {
    if (r.id == id) return r.body.at("certificates").at(name);
  }
  throw Error(Errc::kParseError, "corpus record " + id + " not found");
}

void petersen(Outcome& o) {
  auto g = families::petersen();
  auto wide = TreeCutDecomposition::validate(
      g, {"b1", "b2", "b3", "b4", "b5"}, {{"b1", "b3"}, {"b2", "b3"}, {"b3", "b4"}, {"b4", "b5"}},
      {{"b1", {"o0", "o1", "o2"}}, {"b2", {"o3", "o4"}}, {"b3", {"i0"}}, {"b4", {"i2", "i3"}}, {"b5", {"i1", "i4"}}});
  o.expect(wide.width().width == 7, "path decomposition width " + std::to_string(wide.width().width));
  auto optimal = io::decomposition_from_json(corpus_certificate("petersen-sandwich", "optimal"), g);
  o.expect(optimal.width().width == 4, "frozen optimal width " + std::to_string(optimal.width().width));
  auto spokes = Scramble::validate(g, {{"o0", "i0"}, {"o1", "i1"}, {"o2", "i2"}, {"o3", "i3"}, {"o4", "i4"}});
  auto r = order(spokes);
  o.expect(r.hitting.value == 5, "h " + std::to_string(r.hitting.value));
  o.expect(!r.egg_cut.value.is_infinite() && r.egg_cut.value.value() == 4, "e " + r.egg_cut.value.to_string());
  o.expect(r.order == 4, "order " + std::to_string(r.order));
  SandwichInput in;
  in.run_exact = false;
  in.decomposition = optimal;
  in.scramble = spokes;
  auto l = sandwich(g, in);
  o.expect(proven(l, "sn") == 4 && proven(l, "scw") == 4, "sandwich does not close at 4");
}

void trees_and_complete(Outcome& o) {
  oracle::Rng rng(2024);
  for (int i = 0; i < 20; ++i) {
    auto t = oracle::random_tree(rng, oracle::uniform(rng, 2, 9));
    const int w = scw_exact(t).value;
    o.expect(w == 1, "tree on " + std::to_string(t.num_vertices()) + " vertices gave " + std::to_string(w));
  }
  for (int n = 1; n <= 6; ++n) {
    const int w = scw_exact(families::complete(n)).value;
    o.expect(w == (n == 1 ? 1 : n - 1), "K_" + std::to_string(n) + " gave " + std::to_string(w));
  }
}

void banana_triangle(Outcome& o) {
  auto g = families::banana_triangle();
  const int sn = sn_exact(g).value;
  const int scw = scw_exact(g).value;
  auto gon = gonality_up_to(g, 3);
  o.expect(sn == 2, "sn " + std::to_string(sn));
  o.expect(scw == 3, "scw " + std::to_string(scw));
  o.expect(gon && gon->value == 3, "gonality");
}

void disconnected_bag(Outcome& o) {
  auto g = families::disconnected_bag_graph();
  auto r = scw_exact(g);
  o.expect(r.value == 2, "scw " + std::to_string(r.value));
  bool found = false;
  for (const auto& bag : r.decomposition.bags()) found = found || (!bag.empty() && !g.induces_connected(bag));
  o.expect(found, "returned optimum has no disconnected bag");
  ScwOptions connected;
  connected.require_connected_bags = true;
  int best_connected = 0;
  try {
    best_connected = scw_exact(g, connected).value;
  } catch (const Error& e) {
    best_connected = 1 << 20;
  }
  o.expect(best_connected > 2, "a width-2 decomposition with connected bags exists");
}

void minor_pair(Outcome& o) {
  auto g = families::minor_pair(false);
  auto h = families::minor_pair(true);
  o.expect(contract(g, "4", "5") == h, "H is not the contraction");
  o.expect(scw_exact(g).value == 3, "scw(G)");
  o.expect(scw_exact(h).value == 4, "scw(H)");
  o.expect(sn_exact(g).value == 3, "sn(G)");
  o.expect(sn_exact(h).value == 4, "sn(H)");
}

void quadratic_gap(Outcome& o) {
  for (int n : {4, 5}) {
    auto g = families::quadratic_gap(n);
    const int w = caterpillar_decomposition(g, n).width().width;
    const int expected = n == 4 ? 5 : 8;
    o.expect(w == expected && w == families::quadratic_gap_width(n), "caterpillar width " + std::to_string(w));
    std::vector<std::vector<std::string>> eggs;
    for (int i = 0; i < n; ++i) eggs.push_back({i == 0 ? "0" : "0:" + std::to_string(i)});
    o.expect(order(Scramble::validate(g, eggs)).order == n, "bulb scramble order");
    Divisor d(g.num_vertices());
    for (int v = 1; v < static_cast<int>(g.num_vertices()); ++v) d[v] = 1;
    o.expect(d.degree() == n * n - 1 && has_positive_rank(g, d), "gonality witness");
  }
}

void family_formulas(Outcome& o) {
  auto exact = [&](const std::string& label, const Multigraph& g, int value) {
    const int s = sn_exact(g).value;
    const int w = scw_exact(g).value;
    o.expect(s == value && w == value, label + " sn " + std::to_string(s) + " scw " + std::to_string(w));
  };
  for (int n = 3; n <= 7; ++n) exact("C_" + std::to_string(n), families::cycle(n), 2);
  std::vector<int> k23{2, 3};
  exact("K_{2,3}", families::complete_multipartite(k23), 2);
  exact("G_{2,3}", families::grid(2, 3), 2);
  exact("Q_3", families::hypercube(3), 4);

  // Certificate sandwiches: a column divisor gives the decomposition, a
  // searched scramble the lower bound.
  auto certified = [&](const std::string& label, const Multigraph& g, const Divisor& column, int value) {
    SnOptions so;
    so.max_vertices = static_cast<int>(g.num_vertices());
    auto scramble = sn_decide(g, value, so);
    if (!scramble) {
      o.expect(false, label + " no scramble certificate");
      return;
    }
    SandwichInput in;
    in.run_exact = false;
    in.scramble = *scramble;
    in.decomposition = decomposition_from_partitioning_divisor(g, column).decomposition;
    auto l = sandwich(g, in);
    o.expect(proven(l, "sn") == value && proven(l, "scw") == value, label + " sandwich");
  };
  auto column = [](const Multigraph& g, int cols, int chosen) {
    Divisor d(g.num_vertices());
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
      if (v % cols == chosen) d[v] = 1;
    }
    return d;
  };
  auto g33 = families::grid(3, 3);
  certified("G_{3,3}", g33, column(g33, 3, 0), 3);
  auto g34 = families::grid(3, 4);
  certified("G_{3,4}", g34, column(g34, 4, 0), 3);
  // Y_{4,2} = C_4 x P_2: one chip on each vertex of one C_4 layer.
  auto y42 = families::stacked_prism(4, 2);
  certified("Y_{4,2}", y42, column(y42, 2, 0), 4);
}

void partitioning_divisors(Outcome& o) {
  oracle::Rng rng(808);
  int tested = 0;
  int attempts = 0;
  while (tested < 30 && attempts < 5000) {
    ++attempts;
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 7), 3, 0.3);
    const int n = static_cast<int>(g.num_vertices());
    // Candidate: a random effective divisor of small degree.
    Divisor d(g.num_vertices());
    const int deg = oracle::uniform(rng, 1, 4);
    for (int i = 0; i < deg; ++i) d[oracle::uniform(rng, 0, n - 1)] += 1;
    if (!partition_class_by_reduction(g, d)) continue;
    ++tested;
    auto r = decomposition_from_partitioning_divisor(g, d);
    const auto& dec = r.decomposition;
    auto revalidated = TreeCutDecomposition::validate(dec.graph_ptr(), dec.node_names(), dec.links(), dec.bags());
    o.expect(revalidated.width().width == oracle::width_of(dec).width, "width disagrees with definition");
    o.expect(dec.width().width <= d.degree(), "width above degree");
    for (int a : dec.link_adhesion_sizes()) o.expect(a == d.degree(), "link adhesion " + std::to_string(a));
    for (int a : dec.node_adhesion_sizes()) o.expect(a == 0, "nonempty node adhesion");
  }
  o.expect(tested == 30, "only " + std::to_string(tested) + " partitioning instances");
  o.detail << " (" << tested << " graphs, " << attempts << " draws)";
}

void invariant_sweep(Outcome& o) {
  oracle::Rng rng(909);
  int gon_done = 0;
  int simple = 0;
  int bridged = 0;
  int smoothed = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 7), 3, 0.3);
    const int n = static_cast<int>(g.num_vertices());
    const int sn = sn_exact(g).value;
    const int scw = scw_exact(g).value;
    std::string tag = "#" + std::to_string(i);
    o.expect(sn <= scw, tag + " sn > scw");
    try {
      auto gon = gonality_up_to(g, 8);
      if (gon) {
        ++gon_done;
        o.expect(scw <= gon->value, tag + " scw > gon");
      }
    } catch (const Error&) {
    }
    if (g.is_simple()) {
      ++simple;
      o.expect(scw <= n - independence_number(g).value, tag + " scw > n - alpha");
    }
    const auto& e = g.edges()[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<int>(g.edges().size()) - 1))];
    auto sub = subdivide(g, g.name(e.u), g.name(e.v), "mid");
    o.expect(scw_exact(sub).value == scw, tag + " subdivision changed scw");
    std::vector<int> two_valent;
    for (int v = 0; v < n; ++v) {
      if (g.valence(v) == 2 && g.neighbors(v).size() == 2) two_valent.push_back(v);
    }
    if (!two_valent.empty()) {
      ++smoothed;
      const int v = two_valent[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<int>(two_valent.size()) - 1))];
      o.expect(scw_exact(smooth(g, g.name(v))).value == scw, tag + " smoothing changed scw");
    }
    auto br = bridges(g);
    if (!br.empty()) {
      ++bridged;
      auto [a, b] = delete_bridge_split(g, g.name(br.front().first), g.name(br.front().second));
      o.expect(scw == std::max(scw_exact(a).value, scw_exact(b).value), tag + " bridge formula");
    }
  }
  o.detail << " (gonality completed " << gon_done << ", simple " << simple << ", smoothed " << smoothed << ", bridged "
           << bridged << ")";
}

void sierpinski(Outcome& o) {
  auto s = families::sierpinski(2);
  auto d = named(s, families::sierpinski_chips());
  auto a = dhar_guided_decomposition(s, d, DharStrategy::kMinMoves);
  o.expect(has_positive_rank(s, d) && d.degree() == 6, "divisor");
  o.expect(a.width == 6 && a.width == d.degree(), "Sierpinski width " + std::to_string(a.width));
  auto g = families::dhar_choice_graph();
  auto c = named(g, families::dhar_choice_chips());
  o.expect(c.degree() == 4 && has_positive_rank(g, c), "choice divisor");
  auto naive = dhar_guided_decomposition(g, c, DharStrategy::kMinMoves);
  o.expect(naive.width == 6, "fewest-moves width " + std::to_string(naive.width));
  auto dhar = dhar_guided_decomposition(g, c, DharStrategy::kDharMaximal);
  o.expect(dhar.width == 4, "Dhar-maximal width " + std::to_string(dhar.width));
}

void leaf_centroid_suite(Outcome& o) {
  for (int leaves = 4; leaves <= 7; ++leaves) {
    const long long bound = families::quadratic_gap_width(leaves);
    long long worst = -1;
    for (const auto& t : trivalent_trees(leaves)) {
      long long best = 0;
      for (int v = 0; v < static_cast<int>(t.num_vertices()); ++v) {
        const long long through = geodesics_through(t, v);
        o.expect(through == oracle::geodesics_through(t, v), "geodesic count disagrees with brute force");
        best = std::max(best, through);
      }
      o.expect(best >= bound, std::to_string(leaves) + " leaves: " + std::to_string(best));
      worst = worst < 0 ? best : std::min(worst, best);
    }
    auto cat = families::caterpillar_with_leaves(leaves);
    long long cat_best = 0;
    for (int v = 0; v < static_cast<int>(cat.num_vertices()); ++v) cat_best = std::max(cat_best, geodesics_through(cat, v));
    o.expect(cat_best == bound && worst == bound, "caterpillar " + std::to_string(cat_best));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Petersen widths, spoke scramble and sandwich sn = scw = 4", 1, petersen},
      {2, "scw_exact is 1 on 20 random trees and n-1 on K_n", 30, trees_and_complete},
      {3, "K3 o B_{2,3}: sn 2, scw 3, gonality 3", 60, banana_triangle},
      {4, "disconnected-bag graph: scw 2, every optimum has a disconnected bag", 60, disconnected_bag},
      {5, "minor pair: scw and sn 3 and 4", 120, minor_pair},
      {6, "quadratic gap n = 4, 5: widths 5, 8; scramble order n; degree n^2-1 witness", 120, quadratic_gap},
      {7, "family formulas at small parameters", 300, family_formulas},
      {8, "decompositions from 30 partitioning divisors", 120, partitioning_divisors},
      {9, "randomized invariant sweep over 200 multigraphs", 1800, invariant_sweep},
      {10, "divisor-guided decompositions: widths 6, 6 and 4", 60, sierpinski},
      {11, "leaf-centroid geodesic bound over trivalent trees", 60, leaf_centroid_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.expect(false, "runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    if (!o.pass) ++failed;
    std::printf("%s %2d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
