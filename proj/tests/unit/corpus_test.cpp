#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "scree/corpus.hpp"
#include "scree/error.hpp"
#include "scree/families.hpp"
#include "scree/graph_ops.hpp"

namespace {

using namespace scree;
using corpus::Mode;
using corpus::Status;

io::Json record(const std::string& id, const std::string& mode, io::Json rest) {
  io::Json r{{"id", id}, {"statement", "s"}, {"ref", "r"}, {"mode", mode}};
  for (auto& [k, v] : rest.items()) r[k] = v;
  return r;
}

corpus::RecordResult run(const io::Json& j) { return corpus::run_record(corpus::record_from_json(j)); }

TEST(Corpus, GraphSpecs) {
  EXPECT_EQ(corpus::graph_from_spec({{"family", "cycle"}, {"params", {5}}}), families::cycle(5));
  EXPECT_EQ(corpus::graph_from_spec({{"product", {{{"family", "path"}, {"params", {2}}}, {{"family", "cycle"}, {"params", {3}}}}}}),
            cartesian_product(families::path(2), families::cycle(3)));
  EXPECT_EQ(corpus::graph_from_spec({{"hat", {{"family", "path"}, {"params", {3}}}}}), families::hat_gadget(families::path(3)));
  EXPECT_EQ(corpus::graph_from_spec({{"contract", {{"family", "minor_pair_g"}}}, {"edge", {"4", "5"}}}), families::minor_pair(true));
  EXPECT_EQ(corpus::graph_from_spec({{"explicit", io::graph_to_json(families::petersen())}}), families::petersen());
  EXPECT_THROW(corpus::graph_from_spec({{"nonsense", 1}}), Error);
}

TEST(Corpus, ExactRecordPassesAndFails) {
  auto ok = run(record("k4", "exact", {{"graph", {{"family", "complete"}, {"params", {4}}}},
                                       {"checks", {{{"quantity", "scw"}, {"claimed", 3}}, {{"quantity", "sn"}, {"claimed", 3}}}}}));
  EXPECT_EQ(ok.status, Status::kPass);
  ASSERT_EQ(ok.checks.size(), 2U);
  EXPECT_TRUE(ok.checks[0].pass);

  auto bad = run(record("k4", "exact", {{"graph", {{"family", "complete"}, {"params", {4}}}},
                                        {"checks", {{{"quantity", "scw"}, {"claimed", 2}}}}}));
  EXPECT_EQ(bad.status, Status::kFail);
  EXPECT_EQ(bad.checks[0].observed, "[3, 3]");
}

TEST(Corpus, CertificateOnlyNeedsBothSides) {
  // Only a trivial upper bound: the equality claim cannot pass.
  auto j = record("petersen", "certificate-only",
                  {{"graph", {{"family", "petersen"}}},
                   {"exact", false},
                   {"certificates", {{"t", {{"kind", "construction"}, {"construction", "trivial"}}}}},
                   {"checks", {{{"quantity", "scw"}, {"claimed", 4}}}}});
  EXPECT_EQ(run(j).status, Status::kFail);
  j["certificates"]["spokes"] = {{"kind", "scramble"},
                                 {"eggs", io::Json::array()}};
  for (int i = 0; i < 5; ++i) {
    j["certificates"]["spokes"]["eggs"].push_back(io::Json::array({"o" + std::to_string(i), "i" + std::to_string(i)}));
  }
  j["cited"] = {{{"invariant", "scw"}, {"relation", "le"}, {"value", 4}, {"citation", "c"}}};
  EXPECT_EQ(run(j).status, Status::kPass);
  // An exact record may not rest on cited bounds alone.
  j["mode"] = "exact";
  j["cited"].push_back({{"invariant", "scw"}, {"relation", "ge"}, {"value", 4}, {"citation", "c"}});
  j.erase("certificates");
  EXPECT_EQ(run(j).status, Status::kFail);
}

TEST(Corpus, InconsistentCitationIsReported) {
  auto j = record("c5", "certificate-only",
                  {{"graph", {{"family", "cycle"}, {"params", {5}}}},
                   {"cited", {{{"invariant", "sn"}, {"relation", "ge"}, {"value", 4}, {"citation", "c"}}}},
                   {"checks", {{{"quantity", "scw"}, {"claimed", 2}}}}});
  auto r = run(j);
  EXPECT_NE(r.status, Status::kPass);
}

TEST(Corpus, FormulaFamilyInstances) {
  auto j = record("cycles", "formula-family",
                  {{"family", "cycle"},
                   {"instances", {{{"params", {3}}, {"checks", {{{"quantity", "scw"}, {"claimed", 2}}}}},
                                  {{"params", {6}}, {"checks", {{{"quantity", "scw"}, {"claimed", 2}}}}}}}});
  auto r = run(j);
  EXPECT_EQ(r.status, Status::kPass);
  EXPECT_EQ(r.checks.size(), 2U);
}

TEST(Corpus, OpenRecordsAreNotChecked) {
  auto r = run(record("q6", "open", {}));
  EXPECT_EQ(r.status, Status::kOpen);
  EXPECT_TRUE(r.checks.empty());
}

TEST(Corpus, RejectsDuplicateIdsAndBadModes) {
  auto dir = std::filesystem::temp_directory_path() / "scree_corpus_test";
  std::filesystem::create_directories(dir);
  io::Json doc{{"schema", io::kCorpusSchema}, {"records", {record("a", "open", {}), record("a", "open", {})}}};
  std::ofstream(dir / "x.json") << doc.dump();
  EXPECT_THROW(corpus::load_corpus(dir), Error);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(corpus::mode_from_string("maybe"), Error);
  EXPECT_EQ(corpus::mode_from_string("formula-family"), Mode::kFormulaFamily);
  EXPECT_THROW(corpus::record_from_json({{"id", "x"}}), Error);
}

TEST(Corpus, ShippedCorpusIsWellFormed) {
  auto records = corpus::load_corpus(SCREE_CORPUS_DIR);
  ASSERT_GT(records.size(), 40U);
  std::set<std::string> ids;
  std::set<std::string> refs;
  bool q6_open = false;
  for (const auto& r : records) {
    EXPECT_TRUE(ids.insert(r.id).second);
    EXPECT_FALSE(r.statement.empty());
    EXPECT_FALSE(r.ref.empty());
    refs.insert(r.ref);
    if (r.id == "hypercube-q6") q6_open = r.mode == Mode::kOpen;
  }
  EXPECT_TRUE(q6_open);
  EXPECT_GT(refs.size(), 40U);
}

TEST(Corpus, ReportIsDeterministicAcrossThreadCounts) {
  auto records = corpus::load_corpus(SCREE_CORPUS_DIR);
  corpus::RunOptions one;
  one.filter = "petersen";
  corpus::RunOptions many = one;
  many.threads = 4;
  auto a = corpus::run_corpus(records, one);
  auto b = corpus::run_corpus(records, many);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.records.size(), 3U);
  EXPECT_EQ(corpus::report_to_json(a).dump(), corpus::report_to_json(b).dump());
  EXPECT_NE(corpus::report_to_table(a).find("petersen-sandwich"), std::string::npos);
  EXPECT_NO_THROW(corpus::require_pass(a));
}

TEST(Corpus, RequirePassNamesFailures) {
  corpus::CorpusReport report;
  corpus::RecordResult r;
  r.id = "broken-record";
  r.status = Status::kFail;
  report.records.push_back(r);
  report.failed = 1;
  try {
    corpus::require_pass(report);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kClaimFailed);
    EXPECT_NE(std::string(e.what()).find("broken-record"), std::string::npos);
  }
}

}  // namespace
