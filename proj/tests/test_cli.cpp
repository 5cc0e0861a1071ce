#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("upd_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = env + " " + std::string(UPD_CLI_PATH) + " " + args +
                          " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_family(const std::string& name, const std::string& body) {
  const fs::path path = scratch_dir() / name;
  std::ofstream(path) << body;
  return path;
}

const std::string kConstant = R"({"mode":"graded","vars":["x","y"],
"params":["n"],"generators":[{"x":2},{"x":1,"y":1}]})";

const std::string kAffine = R"({"mode":"affine","vars":["x","y"],"params":["n"],
"generators":[{"x":{"const":1,"coeff":{"n":1}}},{"x":1,"y":1}]})";

const std::string kVanishing = R"({"mode":"graded","vars":["x","y"],
"params":["n"],"generators":[{"x":1,"n":0},{"n":2}]})";

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("decompose golden output and exit codes") {
  auto ok = run_cli(R"(decompose --ideal '[{"x":2},{"x":1,"y":1}]')");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out ==
        "{\"ideal\":[\"x^2\",\"x*y\"],\"components\":[{\"prime\":[\"x\"],"
        "\"component\":[\"x\"]},{\"prime\":[\"x\",\"y\"],\"component\":[\"y\","
        "\"x^2\"]}],\"irredundant\":true,\"minimal\":true}\n");

  auto single = run_cli(R"(decompose --ideal '[{"x":1}]')");
  CHECK(single.exit_code == 0);
  CHECK(lines(single.out).size() == 1);

  auto unit =
      run_cli(R"(decompose --ideal '{"vars":["x"],"generators":[{}]}')");
  CHECK(unit.exit_code == 3);
  CHECK(unit.err.find("\"kind\":\"unit_ideal\"") != std::string::npos);

  auto bad = run_cli(R"(decompose --ideal '[{"x":}]')");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("\"kind\":\"parse\"") != std::string::npos);
  CHECK(bad.err.find("\"line\":1") != std::string::npos);
  CHECK(bad.err.find("\"col\":7") != std::string::npos);
}

TEST_CASE("scan output, aggregate, and determinism") {
  const auto family = write_family("constant.json", kConstant);
  const std::string args = "scan --family " + family.string() + " --box 0..30";

  auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto rows = lines(first.out);
  REQUIRE(rows.size() == 32);
  CHECK(rows[0] ==
        "{\"n\":[0],\"ideal\":[\"x^2\",\"x*y\"],\"primes\":[{\"prime\":[\"x\"],"
        "\"k_min\":2,\"l\":2},{\"prime\":[\"x\",\"y\"],\"k_min\":2,\"l\":1}],"
        "\"k_min\":2}");
  CHECK(rows[31] ==
        "{\"aggregate\":{\"uniform_k\":2,\"stabilized\":true,\"guarantee\":"
        "\"theorem-applies\",\"window\":7,\"rows\":31,\"skipped\":0}}");

  // Byte-identical across repeat runs, thread counts, and the env default.
  auto second = run_cli(args);
  auto jobs3 = run_cli(args + " --jobs 3");
  auto env_jobs = run_cli(args, "UPD_JOBS=4");
  CHECK(first.out == second.out);
  CHECK(first.out == jobs3.out);
  CHECK(first.out == env_jobs.out);

  auto point = run_cli("scan --family " + family.string() + " --box 5..5");
  CHECK(point.exit_code == 0);
  CHECK(lines(point.out).size() == 2);

  auto arity =
      run_cli("scan --family " + family.string() + " --box 0..3,0..3");
  CHECK(arity.exit_code == 2);
}

TEST_CASE("scan cap exhaustion exits 4 with the offending point") {
  const auto family = write_family("affine.json", kAffine);
  auto r =
      run_cli("scan --family " + family.string() + " --box 0..12 --cap 5");
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("\"kind\":\"cap_exceeded\"") != std::string::npos);
  CHECK(r.err.find("\"n\":[5]") != std::string::npos);
  CHECK(r.err.find("\"prime\":\"x\"") != std::string::npos);
}

TEST_CASE("affine scan reports no guarantee and no stabilization") {
  const auto family = write_family("affine.json", kAffine);
  auto r = run_cli("scan --family " + family.string() + " --box 0..12");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.back() ==
        "{\"aggregate\":{\"uniform_k\":13,\"stabilized\":false,\"guarantee\":"
        "\"no-guarantee\",\"window\":5,\"rows\":13,\"skipped\":0}}");
}

TEST_CASE("certify passes at k = 2 and names the first failure at k = 1") {
  const auto family = write_family("constant.json", kConstant);
  auto ok =
      run_cli("certify --family " + family.string() + " --box 0..30 --k 2");
  REQUIRE(ok.exit_code == 0);
  const auto rows = lines(ok.out);
  REQUIRE(rows.size() == 32);
  CHECK(rows[0] ==
        "{\"n\":[0],\"ideal\":[\"x^2\",\"x*y\"],\"k\":2,\"components\":[{"
        "\"prime\":[\"x\"],\"component\":[\"x\"]},{\"prime\":[\"x\",\"y\"],"
        "\"component\":[\"x^2\",\"x*y\",\"y^2\"]}],\"checks\":{"
        "\"intersection_ok\":true,\"power_containment_ok\":true,"
        "\"irredundant_ok\":true,\"minimal_ok\":true}}");
  CHECK(rows[31].find("\"all_ok\":true") != std::string::npos);

  auto fail =
      run_cli("certify --family " + family.string() + " --box 0..30 --k 1");
  CHECK(fail.exit_code == 5);
  CHECK(fail.err.find("\"kind\":\"k_too_small\"") != std::string::npos);
  CHECK(fail.err.find("\"n\":[0]") != std::string::npos);
}

TEST_CASE("certify skips vanished components") {
  const auto family = write_family("vanishing.json", kVanishing);
  auto r =
      run_cli("certify --family " + family.string() + " --box 0..5 --k 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines(r.out);
  CHECK(rows[2] == "{\"n\":[2],\"zero_module\":true}");
  CHECK(rows.back().find("\"skipped\":4") != std::string::npos);
}

TEST_CASE("h0 rows and battery") {
  const auto family = write_family("constant.json", kConstant);
  auto xy = run_cli("h0 --family " + family.string() +
                    R"( --box 0..30 --ideal '[{"x":1},{"y":1}]')");
  REQUIRE(xy.exit_code == 0);
  const auto rows = lines(xy.out);
  REQUIRE(rows.size() == 32);
  CHECK(rows[0] ==
        "{\"n\":[0],\"J\":[\"x\",\"y\"],\"l\":1,\"sat\":[\"x\"],"
        "\"cross_check\":\"ok\",\"defining_eq\":\"ok\",\"torsion_free\":"
        "\"fail\"}");
  CHECK(rows[31].find("\"l_uniform\":1") != std::string::npos);

  auto one = run_cli("h0 --family " + family.string() +
                     R"( --box 0..2 --ideal '[{}]')");
  REQUIRE(one.exit_code == 0);
  CHECK(lines(one.out)[0].find("\"l\":0") != std::string::npos);

  auto battery =
      run_cli("h0 --family " + family.string() + " --box 0..30 --battery");
  REQUIRE(battery.exit_code == 0);
  const auto blines = lines(battery.out);
  CHECK(blines.size() == 31 * 28 + 1);
  CHECK(blines.back() ==
        "{\"aggregate\":{\"l_uniform\":2,\"rows\":868,\"cross_check_ok\":true,"
        "\"defining_eq_ok\":true,\"torsion_free_ok\":true}}");

  auto both = run_cli("h0 --family " + family.string() + " --box 0..2");
  CHECK(both.exit_code == 2);
}

TEST_CASE("oracle-check determinism and usage checks") {
  auto a = run_cli("oracle-check --seed 42 --cases 12");
  auto b = run_cli("oracle-check --seed 42 --cases 12");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"failures\":0") != std::string::npos);
  CHECK(lines(a.out).back().find("\"seed\":42") != std::string::npos);

  auto zero = run_cli("oracle-check --cases 0");
  CHECK(zero.exit_code == 2);
  CHECK(zero.err.find("\"kind\":\"usage\"") != std::string::npos);
}

TEST_CASE("missing family file exits 2") {
  auto r = run_cli("scan --family /nonexistent.json --box 0..1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("\"kind\":\"usage\"") != std::string::npos);
}

TEST_CASE("shipped sample specs drive the documented workflows") {
  const std::string data = UPD_DATA_DIR;
  auto scan =
      run_cli("scan --family " + data + "/threshold_quotient.json --box 0..30");
  REQUIRE(scan.exit_code == 0);
  CHECK(lines(scan.out).back().find("\"uniform_k\":2") != std::string::npos);

  auto certify = run_cli("certify --family " + data +
                         "/growing_affine.json --box 0..4 --k 5");
  CHECK(certify.exit_code == 0);
  auto too_small = run_cli("certify --family " + data +
                           "/growing_affine.json --box 0..4 --k 4");
  CHECK(too_small.exit_code == 5);
  CHECK(too_small.err.find("\"n\":[4]") != std::string::npos);
}
