#include "scree/scramble.hpp"

#include <algorithm>
#include <set>

#include "scree/connectivity.hpp"
#include "scree/error.hpp"

namespace scree {

std::string ExtCount::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

Scramble Scramble::validate(std::shared_ptr<const Multigraph> graph, std::vector<VertexSet> eggs) {
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < eggs.size(); ++i) {
    const VertexSet& egg = eggs[i];
    if (egg.universe() != graph->num_vertices()) throw Error(Errc::kGraphMismatch, "egg from another graph");
    if (egg.empty()) throw Error(Errc::kEmptyEgg, "egg " + std::to_string(i) + " is empty");
    if (!graph->induces_connected(egg)) {
      throw Error(Errc::kDisconnectedEgg, "egg " + std::to_string(i) + " induces a disconnected subgraph");
    }
    if (!seen.insert(egg.members()).second) {
      throw Error(Errc::kDuplicateEgg, "egg " + std::to_string(i) + " repeats an earlier egg");
    }
  }
  Scramble s;
  s.graph_ = std::move(graph);
  s.eggs_ = std::move(eggs);
  return s;
}

Scramble Scramble::validate(const Multigraph& graph, const std::vector<std::vector<std::string>>& eggs) {
  std::vector<VertexSet> sets;
  for (const auto& egg : eggs) {
    VertexSet set = graph.empty_set();
    for (const auto& v : egg) set.insert(graph.index_of(v));
    sets.push_back(std::move(set));
  }
  return validate(std::make_shared<const Multigraph>(graph), std::move(sets));
}

namespace {

class HittingSearch {
 public:
  explicit HittingSearch(const std::vector<VertexSet>& eggs, std::size_t universe)
      : eggs_(eggs), best_(VertexSet::full(universe)), best_size_(static_cast<int>(universe) + 1) {}

  void run(VertexSet chosen, int size) {
    // unhit eggs, smallest first
    std::vector<const VertexSet*> unhit;
    for (const auto& egg : eggs_) {
      if (!egg.intersects(chosen)) unhit.push_back(&egg);
    }
    if (unhit.empty()) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    std::stable_sort(unhit.begin(), unhit.end(), [](const VertexSet* a, const VertexSet* b) {
      return a->size() < b->size();
    });
    // greedy packing of pairwise disjoint unhit eggs bounds the remaining cost
    int packing = 0;
    VertexSet used(chosen.universe());
    for (const VertexSet* egg : unhit) {
      if (!egg->intersects(used)) {
        used = used | *egg;
        ++packing;
      }
    }
    if (size + packing >= best_size_) return;
    for (int v : unhit.front()->members()) {
      VertexSet next = chosen;
      next.insert(v);
      run(next, size + 1);
    }
  }

  HittingResult result() const { return {best_size_, best_}; }

 private:
  const std::vector<VertexSet>& eggs_;
  VertexSet best_;
  int best_size_;
};

}  // namespace

HittingResult hitting_number(const Scramble& s) {
  if (s.eggs().empty()) return {0, s.graph().empty_set()};
  HittingSearch search(s.eggs(), s.graph().num_vertices());
  search.run(s.graph().empty_set(), 0);
  return search.result();
}

EggCutResult egg_cut_number(const Scramble& s) {
  EggCutResult out;
  const auto& eggs = s.eggs();
  for (std::size_t i = 0; i < eggs.size(); ++i) {
    for (std::size_t j = i + 1; j < eggs.size(); ++j) {
      if (eggs[i].intersects(eggs[j])) continue;
      CutResult cut = min_cut_between(s.graph(), eggs[i], eggs[j]);
      if (out.value.is_infinite() || cut.value < out.value.value()) {
        out.value = ExtCount::of(cut.value);
        out.eggs = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        out.side = cut.side;
      }
    }
  }
  if (out.eggs) {
    for (const auto& e : s.graph().edges()) {
      if (out.side.contains(e.u) != out.side.contains(e.v)) out.cut.edges.push_back(e);
    }
  }
  return out;
}

OrderReport order(const Scramble& s) {
  OrderReport r;
  r.hitting = hitting_number(s);
  r.egg_cut = egg_cut_number(s);
  r.order = r.egg_cut.value.is_infinite() ? r.hitting.value : std::min(r.hitting.value, r.egg_cut.value.value());
  return r;
}

}  // namespace scree
