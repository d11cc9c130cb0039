#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scree/io.hpp"
#include "scree/multigraph.hpp"

namespace scree::corpus {

enum class Mode { kExact, kCertificateOnly, kFormulaFamily, kOpen };

std::string_view to_string(Mode m) noexcept;
// Throws ParseError.
Mode mode_from_string(std::string_view s);

// One catalogued statement. `instances` holds the graph-level payloads:
// a single entry for ordinary records, one per parameter choice for
// formula-family records, none for open records.
struct ClaimRecord {
  std::string id;
  std::string statement;
  std::string ref;
  Mode mode = Mode::kExact;
  io::Json body;  // the record as stored
  std::string file;
};

// Reads every *.json file of `dir` in name order. Each file is
// {"schema": "scree.corpus/1", "records": [...]}. Throws ParseError on
// malformed files or duplicate ids.
std::vector<ClaimRecord> load_corpus(const std::filesystem::path& dir);
ClaimRecord record_from_json(const io::Json& j, const std::string& file = {});

// Graph descriptions used by records:
//   {"family": name, "params": [...]}
//   {"product": [spec, spec]}
//   {"rooted_product": [spec, spec], "root": v}
//   {"bridge": [spec, spec], "prefixes": [p, q], "ends": [u, v]}
//   {"hat": spec}
//   {"subdivide": spec, "edge": [u, v]}
//   {"contract": spec, "edge": [u, v]}
//   {"explicit": graph json}
Multigraph graph_from_spec(const io::Json& spec);

struct CheckOutcome {
  std::string instance;
  std::string quantity;
  std::string relation;  // eq, le, ge, lt, gt
  std::string claimed;
  std::string observed;
  std::string basis;     // how the observed value was obtained
  bool pass = false;
};

enum class Status { kPass, kFail, kOpen, kError };

struct RecordResult {
  std::string id;
  Mode mode = Mode::kExact;
  Status status = Status::kPass;
  std::vector<CheckOutcome> checks;
  std::string error;
};

struct RunOptions {
  // Substring matched against record ids; empty selects everything.
  std::string filter;
  int threads = 1;
  // Passed to the exact solvers and the gonality search; 0 = unlimited.
  std::uint64_t budget = 0;
};

struct CorpusReport {
  std::vector<RecordResult> records;  // in corpus order
  int passed = 0;
  int failed = 0;
  int open = 0;
  bool ok() const noexcept { return failed == 0; }
};

RecordResult run_record(const ClaimRecord& record, const RunOptions& options = {});
CorpusReport run_corpus(const std::vector<ClaimRecord>& records, const RunOptions& options = {});

io::Json report_to_json(const CorpusReport& report);
std::string report_to_table(const CorpusReport& report);

// Throws ClaimFailed naming every failed record.
void require_pass(const CorpusReport& report);

}  // namespace scree::corpus
