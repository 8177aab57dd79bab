#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "qusp/cli.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qusp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.status = qusp::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Runs the installed binary; stdout only.
Result spawn(const std::string& args) {
  Result r;
  FILE* pipe = popen((std::string(QUSP_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(__FILE__).parent_path() / "golden" / name;
}

TEST(Cli, GoldenOutputs) {
  EXPECT_EQ(invoke({"recurrence", "--N", "7", "--beta", "0.3", "--format", "csv"}).out,
            slurp(golden("recurrence_N7_beta0.3.csv")));
  EXPECT_EQ(invoke({"verify-identities", "--N", "8"}).out, slurp(golden("verify_identities_N8.json")));
  EXPECT_EQ(invoke({"classify", "--N", "6", "--j", "3"}).out, slurp(golden("classify_N6_j3.json")));
  EXPECT_EQ(invoke({"represent", "--N", "5", "--beta", "1.25", "--format", "table"}).out,
            slurp(golden("represent_N5_beta1.25.txt")));
}

TEST(Cli, IdentitiesPass) {
  const auto r = invoke({"verify-identities", "--N", "16"});
  EXPECT_EQ(r.status, qusp::cli::kExitPass);
  EXPECT_EQ(qusp::ordered_json::parse(r.out)["status"], "pass");
}

TEST(Cli, ExcludedBetaIsRejected) {
  const auto r = invoke({"classify", "--N", "6", "--beta", "0"});
  EXPECT_EQ(r.status, qusp::cli::kExitRejected);
  const auto report = qusp::ordered_json::parse(r.out);
  EXPECT_EQ(report["error"]["kind"], "RejectedParameter");
  EXPECT_EQ(report["status"], "fail");
}

TEST(Cli, ChebyshevNormsCsv) {
  const auto r = invoke({"norms", "--N", "8", "--j", "2", "--format", "csv"});
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,h_n,h_n_numeric");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string n, h;
    std::getline(cells, n, ',');
    std::getline(cells, h, ',');
    EXPECT_EQ(h, "4.0");
    ++rows;
  }
  EXPECT_EQ(rows, 7);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"frobnicate"}).status, qusp::cli::kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--N", "5"}).status, qusp::cli::kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--N", "5", "--beta", "0.3", "--j", "1"}).status, qusp::cli::kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--N", "5", "--format", "xml", "--j", "1"}).status, qusp::cli::kExitUsage);
  EXPECT_EQ(invoke({"darboux-chain", "--N", "8", "--beta", "0.5"}).status, qusp::cli::kExitUsage);
}

TEST(Cli, HelpDocumentsCsvColumns) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  for (const char* column : {"u_n", "lambda_n", "a_n", "mu_s", "d_s", "b_s", "x_s", "w_s", "h_n", "A_n"}) {
    EXPECT_NE(r.out.find(column), std::string::npos) << column;
  }
}

TEST(Cli, WarnsOnNonPrimitiveExponent) {
  const auto r = invoke({"recurrence", "--N", "7", "--j", "1", "--p", "2"});
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(qusp::ordered_json::parse(r.out)["warnings"].size(), 1u);
}

TEST(Cli, UnreachableToleranceFails) {
  EXPECT_NE(invoke({"sweep", "--sweep-max-N", "3", "--tol", "1e-30"}).status, 0);
  EXPECT_EQ(invoke({"verify-algebra", "--N", "30", "--beta", "0.7", "--tol", "3e-16"}).status,
            qusp::cli::kExitFail);
}

TEST(Cli, QuadPrecisionPasses) {
  const auto r = invoke({"verify-orthogonality", "--N", "12", "--j", "5", "--precision-bits", "113", "--tol", "1e-28"});
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST(Cli, SweepBoundaryChecksOnlyJOne) {
  const auto r = invoke({"sweep", "--N", "2", "--sweep-max-N", "2", "--samples", "1"});
  ASSERT_EQ(r.status, 0);
  const auto report = qusp::ordered_json::parse(r.out);
  // j = 1 plus one complementary sample per interval.
  EXPECT_EQ(report["payload"]["tables"]["sweep"]["cases"][0], 4.0);
}

TEST(Cli, EverySeriesCommandPasses) {
  for (const char* command : {"classify", "recurrence", "spectrum", "represent", "dual", "measure", "norms",
                              "verify-orthogonality", "verify-algebra"}) {
    for (const std::vector<std::string>& series :
         {std::vector<std::string>{"--j", "1"}, {"--j", "2"}, {"--j", "5"}, {"--beta", "-0.3"},
          {"--beta", "1.4"}, {"--complementary"}}) {
      std::vector<std::string> args{command, "--N", "11"};
      args.insert(args.end(), series.begin(), series.end());
      const auto r = invoke(args);
      EXPECT_EQ(r.status, 0) << command << " " << series.back() << "\n" << r.out;
    }
  }
  EXPECT_EQ(invoke({"darboux-chain", "--N", "12", "--j", "2"}).status, 0);
}

TEST(Cli, JsonRoundTrips) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"dual", "--N", "9", "--beta", "0.8"},
        {"darboux-chain", "--N", "10", "--j", "1"},
        {"sweep", "--sweep-max-N", "5"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(qusp::ordered_json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, BinaryIsDeterministicAndWritesFiles) {
  const auto a = spawn("sweep --N 2 --sweep-max-N 9");
  const auto b = spawn("sweep --N 2 --sweep-max-N 9");
  EXPECT_EQ(a.status, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);

  const auto path = std::filesystem::temp_directory_path() / "qusp_cli_test_out.csv";
  const auto c = spawn("dual --N 6 --beta 0.75 --format csv --out " + path.string());
  EXPECT_EQ(c.status, 0);
  EXPECT_TRUE(c.out.empty());
  EXPECT_EQ(slurp(path), spawn("dual --N 6 --beta 0.75 --format csv").out);
  std::filesystem::remove(path);
}

}  // namespace
