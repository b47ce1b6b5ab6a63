// Verification harness, solve reports and the bench driver.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "treedom/bench.hpp"
#include "treedom/solve.hpp"
#include "treedom/verify.hpp"

namespace treedom {
namespace {

namespace fs = std::filesystem;

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name)
      : path_(fs::temp_directory_path() /
              (name + "-" + std::to_string(std::random_device{}()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(AuditTree, FlagsTheDoubleSpider) {
  const InstanceAudit audit = audit_tree(named_fixture("theorem1-audit-8"), OracleChoice::kAuto);
  EXPECT_TRUE(audit.valid());
  EXPECT_TRUE(audit.forest_optimal());
  EXPECT_TRUE(audit.discrepancy());
  EXPECT_FALSE(audit.formula_below_oracle());
  EXPECT_EQ(audit.solution.size, 5u);
  EXPECT_EQ(audit.oracle.size, 4u);
  EXPECT_FALSE(audit.oracle_pruned);
}

TEST(AuditTree, AgreesOnPaths) {
  const InstanceAudit audit = audit_tree(ParentArray{0, 1, 2, 3, 4}, OracleChoice::kPruned);
  EXPECT_TRUE(audit.valid());
  EXPECT_FALSE(audit.discrepancy());
  EXPECT_TRUE(audit.oracle_pruned);
}

TEST(Certificates, WrittenCertificateRevalidates) {
  ScratchDir dir("treedom-cert");
  const ParentArray spider = named_fixture("theorem1-audit-8");
  const DiscrepancyCertificate cert = make_certificate(spider, audit_tree(spider, OracleChoice::kAuto));
  EXPECT_TRUE(cert.witness_is_steiner);
  EXPECT_TRUE(cert.witness_is_dominating);
  const fs::path sidecar = write_certificate(cert, dir.path(), "spider");
  EXPECT_TRUE(fs::exists(dir.path() / "spider.par"));
  EXPECT_EQ(slurp(dir.path() / "spider.par"), "8\n0 1 1 1 3 4 5 6\n");
  const CertificateCheck check = revalidate_certificate(sidecar);
  EXPECT_TRUE(check.ok) << check.reason;

  const auto j = nlohmann::json::parse(slurp(sidecar));
  EXPECT_EQ(j["algorithm_size"], 5);
  EXPECT_EQ(j["oracle_witness"], nlohmann::json({1, 2, 7, 8}));
}

TEST(Certificates, TamperedSidecarIsRejected) {
  ScratchDir dir("treedom-tamper");
  const ParentArray spider = named_fixture("theorem1-audit-8");
  const fs::path sidecar = write_certificate(
      make_certificate(spider, audit_tree(spider, OracleChoice::kAuto)), dir.path(), "c");
  auto j = nlohmann::json::parse(slurp(sidecar));
  j["oracle_witness"] = {1, 2, 7};
  std::ofstream(sidecar) << j.dump(2);
  EXPECT_FALSE(revalidate_certificate(sidecar).ok);
}

TEST(Certificates, RefusesAgreeingInstances) {
  const ParentArray p5{0, 1, 2, 3, 4};
  EXPECT_ANY_THROW(make_certificate(p5, audit_tree(p5, OracleChoice::kAuto)));
}

TEST(RunVerify, ExhaustiveUpToSevenIsClean) {
  ScratchDir dir("treedom-verify");
  VerifyOptions options;
  options.max_n = 7;
  options.report_path = dir.path() / "report.json";
  options.certificate_dir = dir.path() / "certs";
  const VerifySummary s = run_verify(options);
  EXPECT_FALSE(s.failed());
  EXPECT_EQ(s.instances, 1u + 1 + 2 + 6 + 24 + 120 + 720);
  EXPECT_EQ(s.discrepancies, 0u);
  ASSERT_EQ(s.fixtures.size(), 1u);
  EXPECT_TRUE(s.fixtures[0].certificate);
  EXPECT_EQ(s.exit_code(), 2);
  ASSERT_EQ(s.certificates.size(), 1u);
  EXPECT_TRUE(revalidate_certificate(options.certificate_dir / s.certificates[0]).ok);
  EXPECT_EQ(slurp(options.report_path), verify_report_json(options, s));
}

TEST(RunVerify, ExhaustiveAtEightFindsGapOneDiscrepancies) {
  VerifyOptions options;
  options.min_n = 8;
  options.max_n = 8;
  options.include_fixtures = false;
  const VerifySummary s = run_verify(options);
  EXPECT_FALSE(s.failed());
  EXPECT_EQ(s.instances, 5040u);
  EXPECT_EQ(s.discrepancies, 196u);
  EXPECT_EQ(s.max_gap, 1u);
}

TEST(RunVerify, RandomReportIsReproducible) {
  ScratchDir dir("treedom-random");
  auto run = [&](const std::string& name) {
    VerifyOptions options;
    options.mode = VerifyMode::kRandom;
    options.max_n = 14;
    options.count = 200;
    options.seed = 5;
    options.report_path = dir.path() / (name + ".json");
    options.certificate_dir = dir.path() / (name + "-certs");
    const VerifySummary s = run_verify(options);
    EXPECT_FALSE(s.failed());
    EXPECT_EQ(s.instances, 200u);
    return slurp(options.report_path);
  };
  const std::string a = run("a");
  const std::string b = run("b");
  EXPECT_EQ(a, b);
}

TEST(RunVerify, RejectsOversizedRequests) {
  VerifyOptions options;
  options.max_n = 11;
  EXPECT_ANY_THROW(run_verify(options));
  options.mode = VerifyMode::kRandom;
  options.max_n = 30;
  options.oracle = OracleChoice::kUnpruned;
  EXPECT_ANY_THROW(run_verify(options));
}

TEST(Solve, ParentAndEdgeInputsAgree) {
  ScratchDir dir("treedom-solve");
  std::ofstream(dir.path() / "p.par") << "5\n0 1 2 3 4\n";
  std::ofstream(dir.path() / "p.edg") << "5\n1 2\n2 3\n3 4\n4 5\n";
  const LoadedTree par = load_tree(dir.path() / "p.par", InputFormat::kAuto);
  const LoadedTree edg = load_tree(dir.path() / "p.edg", InputFormat::kAuto);
  const SteinerDominationResult a = steiner_domination(par.parents);
  const SteinerDominationResult b = steiner_domination(edg.parents);
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.formula_value, b.formula_value);
  EXPECT_EQ(solve_report_json(par, a),
            R"({"n":5,"leaves":[1,5],"h_vertices":[3],"gamma_h":1,"steiner_dominating_set":[1,3,5],"size":3,"formula_value":3})");
  EXPECT_EQ(edg.to_input_labels(b.sd), (VertexSet{1, 3, 5}));
  EXPECT_THROW(parse_input_format("xml"), InvalidArgumentError);
}

TEST(Bench, ProducesOneRowPerSizeAndAlgorithm) {
  BenchOptions options;
  options.sizes = {1000, 2000, 4000};
  options.repetitions = 3;
  const std::vector<BenchRecord> records = run_bench(options);
  ASSERT_EQ(records.size(), 6u);
  for (const BenchRecord& r : records) {
    EXPECT_EQ(r.peak_bytes, -1);
    EXPECT_GT(r.checksum, 0u);
  }
  const std::string csv = format_bench_csv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,algorithm,ns_total_median,ns_per_vertex,repetitions,peak_bytes,checksum");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(Bench, RejectsBadOptions) {
  BenchOptions options;
  options.sizes = {1000};
  options.repetitions = 1;
  EXPECT_ANY_THROW(run_bench(options));
  options.repetitions = 3;
  options.sizes = {2000, 1000};
  EXPECT_ANY_THROW(run_bench(options));
}

}  // namespace
}  // namespace treedom
