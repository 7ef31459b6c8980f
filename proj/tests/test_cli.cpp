#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QBOUNDS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "qbounds_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

constexpr const char* kTableHeader =
    "q,n,k,d,singleton_max_k,hamming_bound,singleton_ok,hamming_ok,mds,"
    "perfect,hamming_applicability";

}  // namespace

TEST_CASE("bound: satisfied, violated, usage error") {
  const RunResult ok = run_cli("bound --n 5 --k 1 --d 3 --q 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("mds: true") != std::string::npos);
  CHECK(ok.output.find("perfect: true") != std::string::npos);

  const RunResult bad = run_cli("bound --n 5 --k 2 --d 3 --q 2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("false") != std::string::npos);

  const RunResult usage = run_cli("bound --n 5 --k 1 --d 9 --q 2");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("bound json row mirrors the table columns") {
  const RunResult r = run_cli("bound --n 5 --k 1 --d 3 --q 2 --format json");
  CHECK(r.exit_code == 0);
  const auto arr = nlohmann::json::parse(r.output);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  const auto& row = arr[0];
  CHECK(row["q"] == 2);
  CHECK(row["n"] == 5);
  CHECK(row["k"] == 1);
  CHECK(row["d"] == 3);
  CHECK(row["singleton_max_k"] == "2");
  CHECK(row["hamming_bound"] == "2");
  CHECK(row["singleton_ok"] == true);
  CHECK(row["hamming_ok"] == true);
  CHECK(row["mds"] == true);
  CHECK(row["perfect"] == true);
  CHECK(row["hamming_applicability"] == "degenerate-validated");
}

TEST_CASE("bound with k = 0 renders na / null statuses") {
  const RunResult csv = run_cli("bound --n 8 --k 0 --d 3 --q 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find(",na,na,") != std::string::npos);
  const RunResult js = run_cli("bound --n 8 --k 0 --d 3 --q 2 --format json");
  const auto arr = nlohmann::json::parse(js.output);
  CHECK(arr[0]["singleton_ok"].is_null());
  CHECK(arr[0]["hamming_ok"].is_null());
}

TEST_CASE("cert: bound value, dump, usage error") {
  const RunResult r = run_cli("cert --n 10 --q 2 --e 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("256/109") != std::string::npos);
  CHECK(r.output.find("argmax x=0") != std::string::npos);

  const RunResult dump = run_cli("cert --n 5 --q 2 --e 2 --dump-coeffs");
  CHECK(dump.exit_code == 0);
  for (const char* coeff : {"11236", "2916", "324"}) {
    CHECK(dump.output.find(coeff) != std::string::npos);
  }

  const RunResult usage = run_cli("cert --n 4 --q 2 --e 2");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("cert csv rows") {
  const RunResult r = run_cli("cert --n 10 --q 2 --e 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("n,q,e,kind,index,value\n", 0) == 0);
  CHECK(r.output.find("10,2,2,feasible,na,true") != std::string::npos);
  CHECK(r.output.find("10,2,2,bound,0,256/109") != std::string::npos);
  CHECK(r.output.find("10,2,2,ratio,4,") != std::string::npos);
}

TEST_CASE("threshold reports the exact stable threshold") {
  const RunResult r = run_cli("threshold --q 2 --e 2 --n-max 200");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("stable threshold n*: 9") != std::string::npos);
  CHECK(r.output.find("non-dominant n: 5 6 7 8") != std::string::npos);

  const RunResult js =
      run_cli("threshold --q 2 --e 2 --n-max 200 --workers 4 --format json");
  const auto arr = nlohmann::json::parse(js.output);
  REQUIRE(arr.size() == 5);
  const int expected_first_stable[5] = {5, 7, 9, 9, 9};
  for (int x = 0; x <= 4; ++x) {
    CHECK(arr[x]["x"] == x);
    CHECK(arr[x]["first_stable_n"] == expected_first_stable[x]);
    CHECK(arr[x]["stable_threshold"] == 9);
  }

  const RunResult usage = run_cli("threshold --q 2 --e 2 --n-max 3");
  CHECK(usage.exit_code == 2);

  const RunResult e1 = run_cli("threshold --q 3 --e 1 --n-max 200");
  CHECK(e1.exit_code == 0);
  CHECK(e1.output.find("stable threshold n*: 4") != std::string::npos);

  const RunResult e3 = run_cli("threshold --q 2 --e 3 --n-max 200 --format json");
  CHECK(e3.exit_code == 0);
  CHECK(nlohmann::json::parse(e3.output).size() == 7);  // S = {0..6}
}

TEST_CASE("mds reports formula and scan sides") {
  const RunResult r22 = run_cli("mds --q 2 --e 2");
  CHECK(r22.exit_code == 0);
  CHECK(r22.output.find("formula bound: 7") != std::string::npos);
  CHECK(r22.output.find("scan bound:    7") != std::string::npos);

  const RunResult r32 = run_cli("mds --q 3 --e 2 --format json");
  const auto arr = nlohmann::json::parse(r32.output);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["formula_bound"] == 14);
  CHECK(arr[0]["scan_bound"] == 14);
  CHECK(arr[0]["agree"] == true);

  const RunResult r23 = run_cli("mds --q 2 --e 3 --format json");
  const auto arr3 = nlohmann::json::parse(r23.output);
  CHECK(arr3[0]["formula_bound"].is_null());
  CHECK(arr3[0]["scan_bound"] == 10);
}

TEST_CASE("table: header, perfect row, row count") {
  const RunResult r = run_cli("table --q 2 --n 4:8 --d 3 --format csv");
  CHECK(r.exit_code == 0);
  REQUIRE(r.output.rfind(std::string(kTableHeader) + "\n", 0) == 0);
  CHECK(r.output.find("2,5,1,3,2,2,true,true,true,true,degenerate-validated\n") !=
        std::string::npos);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 1 + 5 + 6 + 7 + 8 + 9);  // header + all k rows for n=4..8
}

TEST_CASE("table determinism across runs and worker counts") {
  const auto dir = temp_dir();
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  const auto c = dir / "c.csv";
  CHECK(run_cli("table --q 2 --n 4:12 --d 3,5 --format csv --workers 1 --out " +
                a.string())
            .exit_code == 0);
  CHECK(run_cli("table --q 2 --n 4:12 --d 3,5 --format csv --workers 1 --out " +
                b.string())
            .exit_code == 0);
  CHECK(run_cli("table --q 2 --n 4:12 --d 3,5 --format csv --workers 4 --out " +
                c.string())
            .exit_code == 0);
  const std::string bytes = slurp(a);
  CHECK(bytes == slurp(b));
  CHECK(bytes == slurp(c));
  CHECK(bytes.rfind(std::string(kTableHeader) + "\n", 0) == 0);
}

TEST_CASE("table with an empty intersection emits only the header") {
  const RunResult r = run_cli("table --q 2 --n 4:5 --d 9 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == std::string(kTableHeader) + "\n");
}

TEST_CASE("table json field names match the csv columns") {
  const RunResult r = run_cli("table --q 2 --n 5:5 --d 3 --k 1 --format json");
  CHECK(r.exit_code == 0);
  const auto arr = nlohmann::json::parse(r.output);
  REQUIRE(arr.size() == 1);
  std::string header(kTableHeader);
  size_t pos = 0;
  while (pos != std::string::npos) {
    const size_t next = header.find(',', pos);
    const std::string col = header.substr(
        pos, next == std::string::npos ? next : next - pos);
    CHECK(arr[0].contains(col));
    pos = next == std::string::npos ? next : next + 1;
  }
}

TEST_CASE("table accepts an e range in place of d") {
  const RunResult r = run_cli("table --q 2 --n 5:7 --e 1 --k 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find(",3,") != std::string::npos);  // d = 2e+1 = 3
  const RunResult both = run_cli("table --q 2 --n 5:7 --d 3 --e 1");
  CHECK(both.exit_code == 2);
}

TEST_CASE("unwritable output path") {
  const RunResult r = run_cli(
      "table --q 2 --n 4:5 --d 3 --format csv --out /nonexistent_dir/x.csv");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify-paper exits 0 and reports the known discrepancies") {
  const RunResult r = run_cli("verify-paper --workers 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("check_id,provenance,expected,actual,verdict\n", 0) == 0);
  CHECK(r.output.find("orthogonality-constant") != std::string::npos);
  CHECK(r.output.find("paper-discrepancy") != std::string::npos);
  CHECK(r.output.find("implementation-bug-candidate") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("bound --n 5").exit_code == 2);
  CHECK(run_cli("bound --n 5 --k 1 --d 3 --q 2 --format yaml").exit_code == 2);
  CHECK(run_cli("table --q 2 --n 5:4 --d 3").exit_code == 2);
  CHECK(run_cli("table --q 2 --n 4:5x --d 3").exit_code == 2);
  CHECK(run_cli("table --q 2 --n 4:5").exit_code == 2);  // no --d or --e
  CHECK(run_cli("--help").exit_code == 0);
}
