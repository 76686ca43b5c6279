#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + BERNMAT_CLI_PATH " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("bernoulli: all four methods print the same exact value") {
  for (const char* method : {"recurrence", "akiyama", "matrix", "qpoly"}) {
    const RunResult r = run(std::string("bernoulli --n 10 --method ") + method);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-174611/330") != std::string::npos);
  }
  const RunResult r = run("bernoulli --n 7 --method recurrence");
  CHECK(r.output.find("7/6") != std::string::npos);
  const RunResult q = run("bernoulli --n 1 --method qpoly");
  CHECK(q.output.find("1/6") != std::string::npos);
}

TEST_CASE("bernoulli json document") {
  const RunResult r = run("bernoulli --n 6 --method matrix --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["value"] == "-691/2730");
  CHECK(doc["index"] == 12);
  CHECK(doc["method"] == "matrix");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bernoulli --n 10 --method sorcery").exit_code == 2);
  CHECK(run("verify nonsense").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("bernoulli").exit_code == 2);             // missing --n
  CHECK(run("export m --n 2 --format yaml").exit_code == 2);
}

TEST_CASE("decompose prints terms and subtotals") {
  const RunResult r = run("decompose --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1/30") != std::string::npos);

  const RunResult r6 = run("decompose --n 6 --format json");
  CHECK(r6.exit_code == 0);
  const auto doc = nlohmann::json::parse(r6.output);
  CHECK(doc["terms"][0] == "1/6");
  CHECK(doc["terms"][1] == "1/14");
  CHECK(doc["terms"].size() == 5);
  CHECK(doc["dominance_holds"] == true);
  CHECK(doc["ratio_3_7_holds"] == true);
}

TEST_CASE("verify exits 0 on success and reports per-n outcomes in json") {
  const RunResult r = run("verify rid2 --max-n 20 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["passed"] == true);
  CHECK(doc["suites"][0]["checks"].size() == 20);
}

TEST_CASE("export json round-trips through a file") {
  const std::string path = "/tmp/bernmat_test_terms.json";
  const RunResult r = run("export terms --n 2 --format json --out " + path);
  CHECK(r.exit_code == 0);
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> buf;
  const std::size_t n = fread(buf.data(), 1, buf.size(), f);
  fclose(f);
  std::remove(path.c_str());
  CHECK(std::string(buf.data(), n) == "[[\"1/6\"],[\"1/30\"]]\n");
}

TEST_CASE("export to an unwritable path exits 3") {
  const RunResult r = run("export m --n 2 --out /nonexistent-dir/x.json");
  CHECK(r.exit_code == 3);
}

TEST_CASE("BERNMAT_MAX_BITS trips as an I/O-class failure") {
  const RunResult r = run("bernoulli --n 60 --method matrix", "BERNMAT_MAX_BITS=512");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("BERNMAT_MAX_BITS") != std::string::npos);

  CHECK(run("bernoulli --n 4 --method matrix", "BERNMAT_MAX_BITS=junk").exit_code == 2);
}

TEST_CASE("numeric suites render convergence reports") {
  const RunResult csv = run("verify rid1 --terms 1000 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("identity,parameter,L,value,abs_error") == 0);
  CHECK(csv.output.find("rid1,0.5,1000,") != std::string::npos);

  const RunResult js = run("verify hohum --max-n 2 --terms 10000 --format json");
  CHECK(js.exit_code == 0);
  const auto doc = nlohmann::json::parse(js.output);
  const auto& reports = doc["suites"][0]["reports"];
  REQUIRE(reports.size() == 2);
  CHECK(reports[0]["identity"] == "hohum");
  CHECK(reports[0]["points"][0]["L"] == 10000);
  CHECK(reports[0]["points"][0].contains("abs_error"));
}

TEST_CASE("bench verifies methods agree before timing") {
  const RunResult r = run("bench --max-n 8 --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["equal"] == true);
  CHECK(doc["timings"].size() == 4);

  const RunResult sub = run("bench --max-n 5 --method matrix --method qpoly --format csv");
  CHECK(sub.exit_code == 0);
  CHECK(sub.output.find("method,max_n,seconds,equal") != std::string::npos);
}
