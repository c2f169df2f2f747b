#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the gmdiv binary (path from GMDIV_BIN) with the given argument
// string, capturing stdout and stderr separately.
RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("GMDIV_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "GMDIV_BIN must point at the gmdiv binary");
  static int counter = 0;
  std::string base = "/tmp/gmdiv_cli_" + std::to_string(getpid()) + "_" +
                     std::to_string(counter++);
  std::string out_path = base + ".out";
  std::string err_path = base + ".err";
  std::string cmd = std::string("\"") + bin + "\" " + args + " >" + out_path +
                    " 2>" + err_path;
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string normalize_timing(std::string text) {
  static const std::regex micros("(elapsed_micros[\":=]+)[0-9]+");
  return std::regex_replace(text, micros, "$1X");
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("check verdicts and certificates") {
  RunResult r1 = run_cli("check 2 4 2 3 --with-certificate");
  CHECK(r1.status == 0);
  CHECK(r1.out == "divides: true, Q=13\n");

  RunResult r2 = run_cli("check 2 6 2 3 --with-certificate");
  CHECK(r2.status == 0);
  CHECK(r2.out == "divides: false, residue-witness l=3 r=3 mod 21\n");

  RunResult r3 = run_cli("check 2 2 2 3");
  CHECK(r3.status == 0);
  CHECK(r3.out == "divides: true\n");

  RunResult r4 = run_cli("check 2 5 2 3 --with-certificate");
  CHECK(r4.status == 0);
  CHECK(r4.out == "divides: false, raw-remainder r=7 mod 21\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").status == 1);
  CHECK(run_cli("check 2 4 2").status == 1);
  CHECK(run_cli("check 1 1 1 2").status == 1);
  CHECK(run_cli("nonsense 1 2 3").status == 1);
  CHECK(run_cli("sweep --format yaml").status == 1);
  CHECK(run_cli("sweep --a 2-4").status == 1);
  CHECK(run_cli("valuation 2 2 2").status == 1);
  CHECK(run_cli("valuation --imbalance --cofactor 2 2 2").status == 1);
  CHECK(run_cli("valuation --imbalance 2 2 3").status == 1);
  CHECK(run_cli("factor notanumber").status == 1);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("check --help").status == 0);
}

TEST_CASE("guard exceeded exits 4") {
  RunResult r = run_cli("check 2 600 1 600 --max-bits 1000");
  CHECK(r.status == 4);
  CHECK(contains(r.err, "guard"));
}

TEST_CASE("quotient command") {
  RunResult r1 = run_cli("quotient 2 8 2 3");
  CHECK(r1.status == 0);
  CHECK(r1.out == "Q=3133\n");

  RunResult r2 = run_cli("quotient 2 6 2 3");
  CHECK(r2.status == 0);
  CHECK(r2.out == "not divisible\n");
}

TEST_CASE("witness command") {
  RunResult r1 = run_cli("witness 2 4");
  CHECK(r1.status == 0);
  CHECK(r1.out == "p=5 ord=4\n");

  RunResult r2 = run_cli("witness 2 6");
  CHECK(r2.status == 0);
  CHECK(r2.out == "exceptional: base-2 n=6\n");

  RunResult r3 = run_cli("witness 3 2");
  CHECK(r3.status == 0);
  CHECK(r3.out == "exceptional: a+1 power of two\n");
}

TEST_CASE("valuation command") {
  RunResult r1 = run_cli("valuation --imbalance 2 3 3");
  CHECK(r1.status == 0);
  CHECK(r1.out == "q=3 p=7 num=1 den=2\n");

  RunResult r2 = run_cli("valuation --cofactor 2 2 2");
  CHECK(r2.status == 0);
  CHECK(r2.out == "M=3 r1=2 r2=2\n");

  RunResult r3 = run_cli("valuation --cofactor 5 1 7");
  CHECK(r3.status == 0);
  CHECK(r3.out == "M=1 r1=0 r2=0\n");
}

TEST_CASE("order command") {
  RunResult r1 = run_cli("order 2 2 3");
  CHECK(r1.status == 0);
  CHECK(r1.out == "ord=6 expected=6 OK\n");

  RunResult r2 = run_cli("order 2 3 2");
  CHECK(r2.status == 0);
  CHECK(r2.out == "ord=6 expected=6 OK\n");

  RunResult r3 = run_cli("order 3 1 2");
  CHECK(r3.status == 0);
  CHECK(r3.out == "ord=2 expected=2 OK\n");
}

TEST_CASE("poly command") {
  RunResult r1 = run_cli("poly 2 1 3");
  CHECK(r1.status == 0);
  CHECK(contains(r1.out, "divides; quotient = 1 - x + x^2"));

  RunResult r2 = run_cli("poly 2 1 2");
  CHECK(r2.status == 0);
  CHECK(contains(r2.out, "does not divide"));

  RunResult r3 = run_cli("poly 3 3 5");
  CHECK(r3.status == 0);
  CHECK(contains(r3.out, "divides; quotient = 1"));

  CHECK(run_cli("poly 30000 1 2").status == 4);
}

TEST_CASE("factor command") {
  CHECK(run_cli("factor 63").out == "63 = 3^2 * 7\n");
  CHECK(run_cli("factor 1").out == "1 = 1\n");
  CHECK(run_cli("factor 97").out == "97 = 97\n");
  CHECK(run_cli("factor 1000036000099").out ==
        "1000036000099 = 1000003 * 1000033\n");
}

TEST_CASE("sweep runs clean on a small grid") {
  RunResult r = run_cli("sweep --a 2:3 --m 1:8 --k 1:3 --d 2:4 --format csv");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "a,m,k,d,criterion,oracle,poly,elapsed_micros"));
  CHECK(count_lines(r.out) == 1 + 2 * 8 * 3 * 3);
  CHECK(contains(r.err, "mismatches=0"));
  CHECK(contains(r.err, "total=144"));
}

TEST_CASE("sweep with polynomial cross-check") {
  RunResult r =
      run_cli("sweep --a 2:2 --m 1:6 --k 1:6 --d 2:5 --include-poly "
              "--format json");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"poly\":true"));
  CHECK(!contains(r.out, "\"poly\":null"));
  CHECK(count_lines(r.out) == 6 * 6 * 4);
}

TEST_CASE("sweep output is deterministic across job counts") {
  std::string args = "sweep --a 2:5 --m 1:12 --k 1:4 --d 2:6 --format json";
  RunResult serial = run_cli(args + " --jobs 1");
  RunResult parallel = run_cli(args + " --jobs 4");
  CHECK(serial.status == 0);
  CHECK(parallel.status == 0);
  CHECK(normalize_timing(serial.out) == normalize_timing(parallel.out));
  CHECK(normalize_timing(serial.err) == normalize_timing(parallel.err));
}

TEST_CASE("sweep empty range") {
  RunResult r = run_cli("sweep --a 5:2 --format json");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "total=0"));
}

TEST_CASE("sweep counts guard-skipped instances and exits 4") {
  RunResult r = run_cli("sweep --a 2:2 --m 1:24 --k 1:4 --d 2:6 "
                        "--max-bits 100 --format json");
  CHECK(r.status == 4);
  CHECK(contains(r.err, "guard-skipped"));
}

TEST_CASE("sweep table format aligns a header") {
  RunResult r = run_cli("sweep --a 2:2 --m 1:2 --k 1:1 --d 2:2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "criterion"));
  CHECK(contains(r.out, "oracle"));
  CHECK(count_lines(r.out) == 1 + 2);
}
