// End-to-end checks of the activity_vec binary: each case shells out to the
// built tool and inspects stdout, stderr, and the exit code.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path unique_temp(const std::string& stem, const std::string& ext = "") {
  static int counter = 0;
  return fs::temp_directory_path() /
         (stem + "." + std::to_string(::getpid()) + "." +
          std::to_string(counter++) + ext);
}

RunResult run_cli(const std::string& args) {
  const fs::path err_path = unique_temp("cli_stderr");
  const std::string cmd =
      std::string(ACTIVITY_VEC_BIN) + " " + args + " 2>" + err_path.string();

  RunResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    ADD_FAILURE() << "popen failed for: " << cmd;
    return result;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    result.out.append(buf, n);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(err_path);
  fs::remove(err_path);
  return result;
}

std::string fixture(const char* name) {
  return (fs::path(ACTIVITYVEC_TEST_DATA_DIR) / name).string();
}

const std::string kPaperMatrix =
    "object,UID1,UID2,UID3,UID4,UID5,UID6\n"
    "d1,1.584,0.584,0.584,0,0,0\n"
    "d2,0,0.584,0.584,0.584,0,0\n"
    "d3,0,0,0,0.584,1.584,1.584\n";

TEST(CliVectorize, PaperDisplayMatchesTheWorkedMatrix) {
  auto result = run_cli("vectorize -i " + fixture("fixture.jsonl") +
                        " --display paper");
  EXPECT_EQ(result.exit_code, 0) << result.err;
  EXPECT_EQ(result.out, kPaperMatrix);
}

TEST(CliVectorize, CsvInputGivesTheSameMatrix) {
  auto jsonl = run_cli("vectorize -i " + fixture("fixture.jsonl") +
                       " --display paper");
  auto csv = run_cli("vectorize -i " + fixture("fixture.csv") +
                     " --display paper");
  EXPECT_EQ(csv.exit_code, 0) << csv.err;
  EXPECT_EQ(csv.out, jsonl.out);
}

TEST(CliVectorize, RawCountModeEqualsBinaryOnAllOnesInput) {
  // Every fixture count is 1, so the two tf modes must agree byte for byte.
  auto binary = run_cli("vectorize -i " + fixture("fixture.jsonl"));
  auto raw = run_cli("vectorize -i " + fixture("fixture.jsonl") +
                     " --tf-mode raw_count");
  EXPECT_EQ(raw.exit_code, 0);
  EXPECT_EQ(raw.out, binary.out);
}

TEST(CliVectorize, ShowIdfWritesToStderr) {
  auto result = run_cli("vectorize -i " + fixture("fixture.jsonl") +
                        " --display paper --show-idf");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out, kPaperMatrix);  // stdout stays clean
  EXPECT_NE(result.err.find("UID1\t1.584"), std::string::npos);
  EXPECT_NE(result.err.find("UID2\t0.584"), std::string::npos);
}

TEST(CliVectorize, OutputFileOption) {
  const fs::path out_path = unique_temp("matrix", ".csv");
  auto result = run_cli("vectorize -i " + fixture("fixture.jsonl") +
                        " --display paper -o " + out_path.string());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out, "");
  EXPECT_EQ(slurp(out_path), kPaperMatrix);
  fs::remove(out_path);
}

TEST(CliVectorize, MissingFileExitsWithUsageError) {
  auto result = run_cli("vectorize -i /nonexistent/input.jsonl");
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("error"), std::string::npos);
}

TEST(CliVectorize, UnknownExtensionNeedsExplicitFormat) {
  const fs::path odd = unique_temp("records", ".dat");
  std::ofstream(odd) << "{\"object\":\"d1\",\"actor\":\"UID1\"}\n"
                     << "{\"object\":\"d2\",\"actor\":\"UID1\"}\n";
  auto bare = run_cli("vectorize -i " + odd.string());
  EXPECT_EQ(bare.exit_code, 2);
  auto forced = run_cli("vectorize -i " + odd.string() + " --format jsonl");
  EXPECT_EQ(forced.exit_code, 0) << forced.err;
  EXPECT_NE(forced.out.find("object,UID1"), std::string::npos);
  fs::remove(odd);
}

TEST(CliVectorize, MalformedInputReportsTheLine) {
  const fs::path bad = unique_temp("bad", ".jsonl");
  std::ofstream(bad) << "{\"object\":\"d1\",\"actor\":\"UID1\"}\n"
                     << "{oops\n";
  auto result = run_cli("vectorize -i " + bad.string());
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("line 2"), std::string::npos);
  fs::remove(bad);
}

TEST(CliStats, FixturePanelIsExact) {
  auto result = run_cli("stats -i " + fixture("fixture.jsonl"));
  EXPECT_EQ(result.exit_code, 0) << result.err;
  EXPECT_EQ(result.out,
            "Diameter: 6\n"
            "Radius: 3\n"
            "Average Path length: 2.7222\n"
            "Number of shortest paths: 72\n"
            "Average Weighted Degree: 1.8366\n"
            "Graph Density: 0.250\n"
            "Components: 1\n");
}

TEST(CliStats, PorcelainKeys) {
  auto result = run_cli("stats -i " + fixture("fixture.csv") + " --porcelain");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("nodes=9\n"), std::string::npos);
  EXPECT_NE(result.out.find("edges=9\n"), std::string::npos);
  EXPECT_NE(result.out.find("diameter=6\n"), std::string::npos);
  EXPECT_NE(result.out.find("radius=3\n"), std::string::npos);
  EXPECT_NE(result.out.find("shortest_paths=72\n"), std::string::npos);
  EXPECT_NE(result.out.find("density=0.25\n"), std::string::npos);
  EXPECT_NE(result.out.find("components=1\n"), std::string::npos);
  EXPECT_NE(result.out.find("average_path_length="), std::string::npos);
  EXPECT_NE(result.out.find("average_weighted_degree="), std::string::npos);
}

TEST(CliStats, ThresholdSplitsComponents) {
  auto result = run_cli("stats -i " + fixture("fixture.jsonl") +
                        " --threshold 1.0");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("Components: 2\n"), std::string::npos);
  EXPECT_NE(result.out.find("Diameter: 2\n"), std::string::npos);
}

TEST(CliStats, SingleRecordInputIsDegenerate) {
  const fs::path tiny = unique_temp("tiny", ".jsonl");
  std::ofstream(tiny) << "{\"object\":\"d1\",\"actor\":\"UID1\"}\n";
  auto result = run_cli("stats -i " + tiny.string());
  EXPECT_EQ(result.exit_code, 3);
  EXPECT_NE(result.err.find("error"), std::string::npos);
  fs::remove(tiny);
}

TEST(CliStats, EmptyInputIsDegenerate) {
  const fs::path empty = unique_temp("empty", ".jsonl");
  std::ofstream(empty).flush();
  auto result = run_cli("stats -i " + empty.string());
  EXPECT_EQ(result.exit_code, 3);
  fs::remove(empty);
}

TEST(CliExport, GexfIsTheDefaultAndCountsGoToStderr) {
  auto result = run_cli("export -i " + fixture("fixture.jsonl"));
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("<?xml version=\"1.0\""), std::string::npos);
  EXPECT_NE(result.out.find("http://www.gexf.net/1.2draft"), std::string::npos);
  EXPECT_EQ(result.err, "9 nodes, 9 edges\n");
}

TEST(CliExport, ThresholdPrunesTheGraph) {
  auto result = run_cli("export -i " + fixture("fixture.jsonl") +
                        " --threshold 1.0");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.err, "5 nodes, 3 edges\n");
}

TEST(CliExport, DotOutput) {
  auto result = run_cli("export -i " + fixture("fixture.csv") + " --format dot");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("graph G {"), std::string::npos);
  EXPECT_NE(result.out.find("\"d1\" -- \"UID1\""), std::string::npos);
}

TEST(CliExport, EdgeCsvOutput) {
  auto result = run_cli("export -i " + fixture("fixture.jsonl") +
                        " --format edge-csv");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out.substr(0, 21), "source,target,weight\n");
  EXPECT_NE(result.out.find("d1,UID1,1.58496250072115"), std::string::npos);
}

TEST(CliExport, MatrixCsvReportsMatrixShape) {
  auto result = run_cli("export -i " + fixture("fixture.jsonl") +
                        " --format matrix-csv --display paper");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out, kPaperMatrix);
  EXPECT_EQ(result.err, "3 documents, 6 actors\n");
}

TEST(CliExport, RunsAreByteIdentical) {
  const std::string args = "export -i " + fixture("fixture.jsonl");
  auto first = run_cli(args);
  auto second = run_cli(args);
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.err, second.err);
}

TEST(CliUsage, BadArgumentsExitWithTwo) {
  EXPECT_EQ(run_cli("stats").exit_code, 2);             // missing --input
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);        // unknown subcommand
  EXPECT_EQ(run_cli("vectorize -i x --format xml").exit_code, 2);
  EXPECT_EQ(run_cli("export -i " + fixture("fixture.jsonl") +
                    " --format png")
                .exit_code,
            2);
}

TEST(CliUsage, HelpSucceeds) {
  auto result = run_cli("--help");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("vectorize"), std::string::npos);
  EXPECT_NE(result.out.find("stats"), std::string::npos);
  EXPECT_NE(result.out.find("export"), std::string::npos);
}

}  // namespace
