#include "scree/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "scree/error.hpp"

namespace scree::io {

namespace {

void check_hash(const Json& j, const Multigraph& g, std::string_view what) {
  if (j.contains("graph_hash") && j.at("graph_hash").get<std::string>() != g.hash()) {
    throw Error(Errc::kGraphMismatch, std::string(what) + " was issued for graph " + j.at("graph_hash").get<std::string>() +
                                          ", not " + g.hash());
  }
}

template <typename F>
auto parse_guard(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::kParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json vertex_set_to_json(const Multigraph& g, const VertexSet& s) {
  Json out = Json::array();
  for (int v : s.members()) out.push_back(g.name(v));
  return out;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({g.name(e.u), g.name(e.v), e.multiplicity}));
  return Json{{"vertices", g.names()}, {"edges", edges}};
}

Multigraph graph_from_json(const Json& j) {
  return parse_guard("graph", [&] {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw Error(Errc::kParseError, "graph: an edge must be [u, v] or [u, v, multiplicity]");
      }
      edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.size() == 3 ? e.at(2).get<int>() : 1});
    }
    return Multigraph::build(std::move(vertices), edges);
  });
}

Json decomposition_to_json(const TreeCutDecomposition& d, std::optional<int> claimed) {
  const Multigraph& g = d.graph();
  Json links = Json::array();
  for (auto [a, b] : d.links()) links.push_back(Json::array({d.node_name(a), d.node_name(b)}));
  Json bags = Json::object();
  for (int b = 0; b < d.num_nodes(); ++b) bags[d.node_name(b)] = vertex_set_to_json(g, d.bag(b));
  Json out{{"graph_hash", g.hash()}, {"tree", {{"nodes", d.node_names()}, {"links", links}}}, {"bags", bags}};
  if (claimed) out["claimed_width"] = *claimed;
  return out;
}

TreeCutDecomposition decomposition_from_json(const Json& j, const Multigraph& g) {
  check_hash(j, g, "decomposition");
  return parse_guard("decomposition", [&] {
    auto nodes = j.at("tree").at("nodes").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& l : j.at("tree").at("links")) {
      if (!l.is_array() || l.size() != 2) throw Error(Errc::kParseError, "decomposition: a link must be [n1, n2]");
      links.emplace_back(l.at(0).get<std::string>(), l.at(1).get<std::string>());
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> bags;
    for (const auto& [node, members] : j.at("bags").items()) {
      bags.emplace_back(node, members.get<std::vector<std::string>>());
    }
    return TreeCutDecomposition::validate(g, std::move(nodes), links, bags);
  });
}

std::optional<int> claimed_width(const Json& j) {
  if (!j.contains("claimed_width")) return std::nullopt;
  return j.at("claimed_width").get<int>();
}

Json scramble_to_json(const Scramble& s, std::optional<int> claimed) {
  Json eggs = Json::array();
  for (const auto& egg : s.eggs()) eggs.push_back(vertex_set_to_json(s.graph(), egg));
  Json out{{"graph_hash", s.graph().hash()}, {"eggs", eggs}};
  if (claimed) out["claimed_order"] = *claimed;
  return out;
}

Scramble scramble_from_json(const Json& j, const Multigraph& g) {
  check_hash(j, g, "scramble");
  return parse_guard("scramble", [&] {
    return Scramble::validate(g, j.at("eggs").get<std::vector<std::vector<std::string>>>());
  });
}

std::optional<int> claimed_order(const Json& j) {
  if (!j.contains("claimed_order")) return std::nullopt;
  return j.at("claimed_order").get<int>();
}

Json divisor_to_json(const Multigraph& g, const Divisor& d) {
  Json chips = Json::object();
  for (int v = 0; v < static_cast<int>(d.size()); ++v) {
    if (d[v] != 0) chips[g.name(v)] = d[v];
  }
  return Json{{"graph_hash", g.hash()}, {"chips", chips}};
}

Divisor divisor_from_json(const Json& j, const Multigraph& g) {
  check_hash(j, g, "divisor");
  return parse_guard("divisor", [&] {
    Divisor d(g.num_vertices());
    for (const auto& [name, count] : j.at("chips").items()) d[g.index_of(name)] = count.get<Chips>();
    return d;
  });
}

Json width_report_to_json(const TreeCutDecomposition& d, const WidthReport& r) {
  Json out{{"width", r.width}, {"link_width", r.link_width}, {"bag_width", r.bag_width}};
  if (r.witness_link) {
    auto [a, b] = d.links()[static_cast<std::size_t>(*r.witness_link)];
    out["witness_link"] = Json::array({d.node_name(a), d.node_name(b)});
  }
  if (r.witness_node) out["witness_node"] = d.node_name(*r.witness_node);
  return out;
}

Json order_report_to_json(const Scramble& s, const OrderReport& r) {
  const Multigraph& g = s.graph();
  Json egg_cut{{"value", r.egg_cut.value.is_infinite() ? Json("inf") : Json(r.egg_cut.value.value())}};
  if (r.egg_cut.eggs) {
    egg_cut["eggs"] = Json::array({r.egg_cut.eggs->first, r.egg_cut.eggs->second});
    egg_cut["side"] = vertex_set_to_json(g, r.egg_cut.side);
    Json cut = Json::array();
    for (const auto& e : r.egg_cut.cut.edges) cut.push_back(Json::array({g.name(e.u), g.name(e.v), e.multiplicity}));
    egg_cut["cut_edges"] = cut;
  }
  return Json{{"order", r.order},
              {"hitting_number", {{"value", r.hitting.value}, {"witness", vertex_set_to_json(g, r.hitting.witness)}}},
              {"egg_cut_number", egg_cut}};
}

Json ledger_to_json(const std::vector<BoundsLedger>& ledger) {
  auto bound = [](const std::optional<Bound>& b) -> Json {
    if (!b) return nullptr;
    return Json{{"value", b->value},
                {"source", b->source == BoundSource::kMachine ? "machine" : "cited"},
                {"reason", b->reason}};
  };
  Json out = Json::array();
  for (const auto& l : ledger) {
    out.push_back(Json{{"invariant", l.invariant},
                       {"lower", bound(l.lower)},
                       {"upper", bound(l.upper)},
                       {"proven_equal", l.proven_equal()},
                       {"machine_proven", l.machine_proven()}});
  }
  return out;
}

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::kParseError, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::kParseError, (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

}  // namespace scree::io
