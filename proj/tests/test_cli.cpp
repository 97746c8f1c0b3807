#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fdrqq/report.hpp"
#include "helpers.hpp"

#ifndef FDRQQ_CLI_PATH
#error "FDRQQ_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("fdrqq_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run_cli(const std::string& args, const fs::path& dir) {
  const std::string cmd = "cd " + dir.string() + " && " + FDRQQ_CLI_PATH + " " + args +
                          " > stdout.txt 2> stderr.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

}  // namespace

TEST_CASE("analyze writes reports and a summary line", "[cli]") {
  TempDir dir;
  write(dir.path / "p.csv", fdrqq::write_pvalues_csv(testutil::four_point_set()));
  const int code =
      run_cli("analyze --input p.csv --q 0.05 --out report.json --table table.csv", dir.path);
  CHECK(code == 0);
  const std::string summary = slurp(dir.path / "stdout.txt");
  CHECK(summary.find("k*=4 of m=4 significant at FDR q=0.05 (alpha=0.04)") != std::string::npos);
  CHECK(slurp(dir.path / "report.json").find("\"k_star\":4") != std::string::npos);
  CHECK(slurp(dir.path / "table.csv").find("test_2,0.005,1,0.02,true") != std::string::npos);
}

TEST_CASE("analyze rejects a level outside (0,1]", "[cli]") {
  TempDir dir;
  write(dir.path / "p.csv", fdrqq::write_pvalues_csv(testutil::four_point_set()));
  const int code = run_cli("analyze --input p.csv --q 1.5", dir.path);
  CHECK(code == 2);
  CHECK(slurp(dir.path / "stderr.txt").find("q must be in (0,1]") != std::string::npos);
}

TEST_CASE("analyze on a missing input exits 1", "[cli]") {
  TempDir dir;
  CHECK(run_cli("analyze --input missing.csv", dir.path) == 1);
}

TEST_CASE("analyze reports parse errors with row numbers", "[cli]") {
  TempDir dir;
  write(dir.path / "bad.txt", "0.5\n1.7\n");
  CHECK(run_cli("analyze --input bad.txt", dir.path) == 2);
  CHECK(slurp(dir.path / "stderr.txt").find("row 2") != std::string::npos);
}

TEST_CASE("plot annotates alpha for the read-off dataset", "[cli]") {
  TempDir dir;
  write(dir.path / "p.csv", fdrqq::write_pvalues_csv(testutil::readoff_set()));
  CHECK(run_cli("plot --input p.csv --q 0.3 --out qq.svg", dir.path) == 0);
  CHECK(slurp(dir.path / "qq.svg").find("0.199") != std::string::npos);
}

TEST_CASE("plot on a single p of 1 exits 2 with a degenerate-extent message", "[cli]") {
  TempDir dir;
  write(dir.path / "one.txt", "1\n");
  CHECK(run_cli("plot --input one.txt --out qq.svg", dir.path) == 2);
  CHECK(slurp(dir.path / "stderr.txt").find("degenerate") != std::string::npos);
}

TEST_CASE("plot output is byte-identical across invocations", "[cli]") {
  TempDir dir;
  write(dir.path / "p.csv", fdrqq::write_pvalues_csv(testutil::four_point_set()));
  CHECK(run_cli("plot --input p.csv --q 0.05 --q-lines 0.1,0.3 --out a.svg", dir.path) == 0);
  CHECK(run_cli("plot --input p.csv --q 0.05 --q-lines 0.1,0.3 --out b.svg", dir.path) == 0);
  const std::string a = slurp(dir.path / "a.svg");
  CHECK(!a.empty());
  CHECK(a == slurp(dir.path / "b.svg"));
}

TEST_CASE("simulate writes the requested number of rows deterministically", "[cli]") {
  TempDir dir;
  const std::string args =
      "simulate --m 200 --pattern independent --pi1 0.05 --effect 3.5 --seed 42 --out ";
  CHECK(run_cli(args + "a.csv", dir.path) == 0);
  CHECK(run_cli(args + "b.csv", dir.path) == 0);
  const std::string a = slurp(dir.path / "a.csv");
  CHECK(a == slurp(dir.path / "b.csv"));

  std::size_t lines = 0;
  for (char c : a) lines += c == '\n';
  CHECK(lines == 201);  // header + 200 rows
  CHECK(a.rfind("id,p\n", 0) == 0);
}

TEST_CASE("simulate rejects rho under the independent pattern", "[cli]") {
  TempDir dir;
  CHECK(run_cli("simulate --m 10 --pattern independent --rho 0.5 --out x.csv", dir.path) == 2);
}

TEST_CASE("unknown flags are validation errors", "[cli]") {
  TempDir dir;
  CHECK(run_cli("analyze --no-such-flag", dir.path) == 2);
}

TEST_CASE("help exits 0", "[cli]") {
  TempDir dir;
  CHECK(run_cli("--help", dir.path) == 0);
}

TEST_CASE("analyze picks up the id column automatically", "[cli]") {
  TempDir dir;
  write(dir.path / "named.csv", "id,p\nalpha,0.01\nbeta,0.5\n");
  CHECK(run_cli("analyze --input named.csv --q 0.1", dir.path) == 0);
  CHECK(slurp(dir.path / "table.csv").find("alpha,0.01,1,") != std::string::npos);
}

TEST_CASE("tsv input works through --format", "[cli]") {
  TempDir dir;
  write(dir.path / "data.txt", "id\tp\nx\t0.2\ny\t0.4\n");
  CHECK(run_cli("analyze --input data.txt --format tsv --q 0.5", dir.path) == 0);
  CHECK(slurp(dir.path / "stdout.txt").find("m=2") != std::string::npos);
}
