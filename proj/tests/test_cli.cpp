#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hdet/gammafactor.hpp"

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string so = "cli_stdout_" + std::to_string(counter) + ".txt";
  const std::string se = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  const std::string cmd =
      std::string(HDET_CLI_PATH) + " " + args + " >" + so + " 2>" + se;
  int rc = std::system(cmd.c_str());
  CmdResult r;
  if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  r.out = slurp(so);
  r.err = slurp(se);
  std::remove(so.c_str());
  std::remove(se.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<double> csv_fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
  return out;
}

const char* kHeader = "re_s,im_s,re_val,im_val,err_bound";

}  // namespace

TEST_CASE("cli eval: header, 17-digit round trip, and the library value") {
  CmdResult r = run_cli("eval log_phi r=1 form=barnes s=0.7");
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kHeader);
  auto f = csv_fields(lines[1]);
  REQUIRE(f.size() == 5);
  CHECK(f[0] == 0.7);  // %.17g round-trips doubles exactly
  CHECK(f[1] == 0.0);
  hdet::CValue expect =
      hdet::log_phi(1, hdet::CValue(0.7, 0.0), hdet::PhiForm::BarnesForm)
          .value;
  CHECK(f[2] == expect.real());
  CHECK(std::abs(f[3] - expect.imag()) < 1e-16);
}

TEST_CASE("cli eval: repeated invocation is byte-identical") {
  const std::string cmd =
      "eval hurwitz_zeta z=0.5 s=-1.3+0.4i s=2.5 --format json";
  CmdResult a = run_cli(cmd);
  CmdResult b = run_cli(cmd);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"re_val\":") != std::string::npos);
  CHECK(a.out.substr(0, 1) == "[");
}

TEST_CASE("cli eval: multiple points preserve order") {
  CmdResult r = run_cli("eval digamma s=1 s=2 s=3");
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(csv_fields(lines[1])[0] == 1.0);
  CHECK(csv_fields(lines[2])[0] == 2.0);
  CHECK(csv_fields(lines[3])[0] == 3.0);
  // psi(2) = psi(1) + 1
  CHECK(std::abs(csv_fields(lines[2])[2] - csv_fields(lines[1])[2] - 1.0) <
        1e-12);
}

TEST_CASE("cli eval: domain-error points become flagged rows, exit 2") {
  CmdResult r = run_cli("eval hurwitz_zeta z=-1 s=2");
  CHECK(r.code == 2);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(std::isnan(csv_fields(lines[1])[2]));
  CHECK(r.err.find("error row") != std::string::npos);
}

TEST_CASE("cli eval: unknown function exits 2 with a message") {
  CmdResult r = run_cli("eval no_such_function s=1");
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown function") != std::string::npos);
}

TEST_CASE("cli eval: selberg tail bound lands in err_bound") {
  CmdResult r = run_cli("eval log_poly_selberg m=2 s=2.0 --spectrum " +
                        std::string(HDET_DATA_DIR) + "/synthetic.json");
  REQUIRE(r.code == 0);
  auto f = csv_fields(lines_of(r.out)[1]);
  CHECK(f[2] < 0.0);  // the order-2 log zeta is negative on the real axis
  CHECK(f[4] >= 0.0);
  CHECK(f[4] < 1e-10);
}

TEST_CASE("cli table: row-major grid, monotone values, eval consistency") {
  CmdResult r = run_cli("table log_milnor_selberg r=1 re=2:3:11");
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == kHeader);
  double prev = 0.0;
  for (int i = 1; i <= 11; ++i) {
    auto f = csv_fields(lines[i]);
    CHECK(f[0] == doctest::Approx(2.0 + 0.1 * (i - 1)).epsilon(1e-12));
    double mag = std::abs(f[2]);
    if (i > 1) CHECK(mag < prev);
    prev = mag;
  }
  // a single-cell grid agrees with eval at the same point
  CmdResult one = run_cli("table log_milnor_selberg r=1 re=2.5:2.5:1");
  CmdResult ev = run_cli("eval log_milnor_selberg r=1 s=2.5");
  REQUIRE(one.code == 0);
  REQUIRE(ev.code == 0);
  CHECK(csv_fields(lines_of(one.out)[1])[2] ==
        csv_fields(lines_of(ev.out)[1])[2]);
}

TEST_CASE("cli table: unwritable output path exits 4") {
  CmdResult r = run_cli(
      "table digamma re=1:2:3 --out /nonexistent_dir_hdet/x.csv");
  CHECK(r.code == 4);
}

TEST_CASE("cli table: imaginary sweep stays rectangular") {
  CmdResult r = run_cli("table digamma re=1:2:2 im=-1:1:3");
  REQUIRE(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 2 * 3);
  // row-major: the re coordinate is the outer loop
  CHECK(csv_fields(lines[1])[0] == 1.0);
  CHECK(csv_fields(lines[1])[1] == -1.0);
  CHECK(csv_fields(lines[2])[1] == 0.0);
  CHECK(csv_fields(lines[4])[0] == 2.0);
}

TEST_CASE("cli verify: clean suite exits 0 and emits a JSON report") {
  CmdResult r = run_cli("verify combinatorics");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_passed\":true") != std::string::npos);
  CHECK(r.out.find("\"suite\":\"combinatorics\"") != std::string::npos);
  CHECK(r.err.find("[PASS]") != std::string::npos);
}

TEST_CASE("cli verify: unknown suite name fails cleanly") {
  CmdResult r = run_cli("verify bogus_suite");
  CHECK(r.code == 3);
}

TEST_CASE("cli spectrum-info: reports the bundled spectrum's shape") {
  CmdResult r = run_cli("spectrum-info " + std::string(HDET_DATA_DIR) +
                        "/synthetic.json");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("label: synthetic\n") != std::string::npos);
  CHECK(r.out.find("genus: 2\n") != std::string::npos);
  CHECK(r.out.find("primitives: 5\n") != std::string::npos);
  CHECK(r.out.find("norm_min: 7.25\n") != std::string::npos);
}

TEST_CASE("cli spectrum-info: malformed files exit 5 with a position") {
  const std::string bad = "bad_spectrum_test.json";
  {
    std::ofstream f(bad);
    f << "{\"genus\": 2, \"label\": \"x\", \"primitives\": [{\"norm\": 0.5, "
         "\"multiplicity\": 1}]}";
  }
  CmdResult r = run_cli("spectrum-info " + bad);
  CHECK(r.code == 5);
  CHECK(r.err.find("line") != std::string::npos);
  std::remove(bad.c_str());

  CmdResult missing = run_cli("spectrum-info no_such_file.json");
  CHECK(missing.code == 5);
}

TEST_CASE("cli eval: bad spectrum file exits 5 before any evaluation") {
  const std::string bad = "bad_spectrum_eval.json";
  {
    std::ofstream f(bad);
    f << "{]";
  }
  CmdResult r = run_cli("eval log_poly_selberg m=1 s=2.5 --spectrum " + bad);
  CHECK(r.code == 5);
  std::remove(bad.c_str());
}
