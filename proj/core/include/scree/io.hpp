#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scree/chip_firing.hpp"
#include "scree/exact_search.hpp"
#include "scree/multigraph.hpp"
#include "scree/scramble.hpp"
#include "scree/tree_cut.hpp"

namespace scree::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGraphSchema = "scree.graph/1";
inline constexpr std::string_view kDecompositionSchema = "scree.tcd/1";
inline constexpr std::string_view kScrambleSchema = "scree.scramble/1";
inline constexpr std::string_view kDivisorSchema = "scree.divisor/1";
inline constexpr std::string_view kLedgerSchema = "scree.ledger/1";
inline constexpr std::string_view kCorpusSchema = "scree.corpus/1";

// {"vertices": [...], "edges": [["a", "b", m], ...]}; m defaults to 1.
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

// {"graph_hash", "tree": {"nodes", "links"}, "bags", "claimed_width"}.
Json decomposition_to_json(const TreeCutDecomposition& d, std::optional<int> claimed_width = std::nullopt);
// Throws GraphMismatch when a stored graph_hash differs from g's.
TreeCutDecomposition decomposition_from_json(const Json& j, const Multigraph& g);
std::optional<int> claimed_width(const Json& j);

// {"graph_hash", "eggs": [[...], ...], "claimed_order"}.
Json scramble_to_json(const Scramble& s, std::optional<int> claimed_order = std::nullopt);
Scramble scramble_from_json(const Json& j, const Multigraph& g);
std::optional<int> claimed_order(const Json& j);

// {"graph_hash", "chips": {"v": 3, ...}}; zero entries omitted.
Json divisor_to_json(const Multigraph& g, const Divisor& d);
Divisor divisor_from_json(const Json& j, const Multigraph& g);

Json width_report_to_json(const TreeCutDecomposition& d, const WidthReport& r);
Json order_report_to_json(const Scramble& s, const OrderReport& r);
Json ledger_to_json(const std::vector<BoundsLedger>& ledger);
Json vertex_set_to_json(const Multigraph& g, const VertexSet& s);

// Parses a JSON document from a file, or from standard input when path is "-".
// Throws ParseError.
Json read_json(const std::string& path);

}  // namespace scree::io
