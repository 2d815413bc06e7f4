#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "nilorbit/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nilorbit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

bool single_diagnostic(const std::string& err) {
  return err.rfind("nilorbit: error[", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_CASE("classify x+1 at 1") {
  const json doc = run_json({"classify", "--poly", "1,1", "--r", "1"});
  CHECK(doc["schema"] == "nilorbit/1");
  CHECK(doc["kind"] == "classification");
  CHECK(doc["verdict"] == "InSr");
  CHECK(doc["provenance"] == "Thm4.1(4)");
  CHECK(doc["certainty"] == "Proved");
}

TEST_CASE("mp and scan") {
  const json mp = run_json({"mp", "--poly", "-2,4", "--r", "0", "--p", "3"});
  CHECK(mp["m_p"] == 3);
  const json mp5 = run_json({"mp", "--poly", "1,1", "--r", "1", "--p", "5"});
  CHECK(mp5["m_p"] == 4);
  const json none = run_json({"mp", "--poly", "-2,4", "--r", "1", "--p", "5"});
  CHECK(none["m_p"].is_null());
  CHECK(none["period"] == 2);

  const json scan = run_json({"scan", "--poly", "-2,4", "--r", "1", "--primes-up-to", "100"});
  CHECK(scan["outcome"]["kind"] == "WitnessFound");
  CHECK(scan["outcome"]["witness"] == 5);
  const json all = run_json({"scan", "--poly", "1,1", "--r", "1", "--primes-up-to", "100"});
  CHECK(all["outcome"]["kind"] == "AllFoundUpToBound");
  CHECK(all["results"].size() == 25);
}

TEST_CASE("orbit subcommand") {
  const json doc = run_json({"orbit", "--poly", "25,-25,9,-1", "--r", "2"});
  CHECK(doc["outcome"]["kind"] == "HitsZero");
  CHECK(doc["outcome"]["index"] == 4);
  CHECK(doc["trajectory"] == json::array({3, 4, 5, 0}));
  const json mod = run_json({"orbit", "--poly", "-2,4", "--r", "1", "--mod", "5", "--max-steps", "4"});
  CHECK(mod["trajectory"] == json::array({2, 1, 2, 1}));
}

TEST_CASE("negative leading values and flags after the subcommand") {
  const json doc = run_json({"classify", "--poly", "-2,4", "--r", "0", "--format", "json"});
  CHECK(doc["verdict"] == "InSr");
  CHECK(doc["provenance"] == "Thm4.4(2)");
}

TEST_CASE("csv and text formats") {
  const Run csv = run({"--format", "csv", "scan", "--poly", "1,1", "--r", "1", "--primes-up-to", "10"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "p,m_p,preperiod,period\n2,1,0,2\n3,2,0,3\n5,4,0,5\n7,6,0,7\n");
  const Run text = run({"--format", "text", "classify", "--poly", "1,1", "--r", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("InSr") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> args = {"classify", "--poly", "3,-5,1", "--r", "2", "--primes-up-to", "2000"};
  const Run a = run(args);
  const Run b = run(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "4"});
  const Run c = run(threaded);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const Run e1 = run({"explore", "--poly", "-1,1", "--range", "5", "--primes-up-to", "100"});
  const Run e2 = run({"--threads", "3", "explore", "--poly", "-1,1", "--range", "5", "--primes-up-to", "100"});
  CHECK(e1.out == e2.out);
}

TEST_CASE("usage errors exit 2 with one diagnostic line") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"classify", "--poly", "1,x", "--r", "1"},
           {"classify", "--poly", "1,1"},
           {"classify", "--poly", "1,1", "--r", "1", "--exclude", "4"},
           {"scan", "--poly", "1,1", "--r", "1", "--primes-up-to", "1"},
           {"verify", "--suite", "thm9.9"},
           {"--format", "xml", "classify", "--poly", "1,1", "--r", "1"},
           {"frobnicate"}}) {
    const Run r = run(args);
    INFO(r.err);
    CHECK(r.code == nilorbit::cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK(single_diagnostic(r.err));
  }
}

TEST_CASE("domain errors exit 3 with one diagnostic line") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"mp", "--poly", "1,1", "--r", "1", "--p", "6"},
           {"classify", "--poly", "5", "--r", "1"},
           {"explore", "--poly", "1,1", "--range", "0"}}) {
    const Run r = run(args);
    INFO(r.err);
    CHECK(r.code == nilorbit::cli::kExitDomain);
    CHECK(single_diagnostic(r.err));
  }
}

TEST_CASE("verify exits 0 on a passing suite") {
  const Run r = run({"verify", "--suite", "thm4.1"});
  CHECK(r.code == nilorbit::cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["passed"] == true);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("prime bound from the environment") {
  setenv(nilorbit::cli::kPrimeBoundVariable, "20", 1);
  const json doc = run_json({"scan", "--poly", "1,1", "--r", "1"});
  CHECK(doc["results"].size() == 8);
  setenv(nilorbit::cli::kPrimeBoundVariable, "abc", 1);
  CHECK(run({"scan", "--poly", "1,1", "--r", "1"}).code == nilorbit::cli::kExitUsage);
  unsetenv(nilorbit::cli::kPrimeBoundVariable);
}
