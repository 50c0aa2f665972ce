#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = qalink::cmd_dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

}  // namespace

TEST_CASE("det subcommand") {
  CliResult r = run_cli({"det", kTrefoil});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  CHECK(run_cli({"det", "O O"}).out == "0\n");
  CHECK(run_cli({"det", "O O"}).code == 0);

  CliResult piped = run_cli({"det", "-"}, std::string(kTrefoil) + "\n");
  CHECK(piped.code == 0);
  CHECK(piped.out == "3\n");

  std::string path = "cli_test_diagram.txt";
  std::ofstream(path) << kTrefoil << "\n";
  CliResult from_file = run_cli({"det", path});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == "3\n");
  std::remove(path.c_str());
}

TEST_CASE("certify subcommand") {
  CliResult ok = run_cli({"certify", kTrefoil});
  CHECK(ok.code == 0);
  nlohmann::json j = nlohmann::json::parse(ok.out);
  CHECK(j.at("det").get<long long>() == 3);
  CHECK(j.contains("base"));

  CliResult split = run_cli({"certify", "O O"});
  CHECK(split.code == 1);
  CHECK(split.out == "inconclusive\n");

  CHECK(run_cli({"certify", "--budget", "0", kTrefoil}).code == 2);
}

TEST_CASE("closure feeds det through stdin") {
  CliResult cl = run_cli({"closure", "--tangle", "seifert:1/2,-1/5", "--slope", "7/3"});
  CHECK(cl.code == 0);
  CHECK(cl.out.substr(0, 2) == "X(");

  CliResult det = run_cli({"det", "-"}, cl.out);
  CHECK(det.code == 0);
  CHECK(det.out == "51\n");

  CliResult pret = run_cli({"closure", "--tangle", "pretzel:3", "--slope", "1/0"});
  CHECK(run_cli({"det", "-"}, pret.out).out == "4\n");
}

TEST_CASE("family subcommand") {
  CliResult r = run_cli({"family", "--name", "pretzel:3", "--max-p", "2", "--max-q", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all rows pass") != std::string::npos);
  CHECK(r.out.find("det=4") != std::string::npos);

  CliResult js = run_cli({"family", "--name", "seifert", "--max-p", "2", "--max-q", "1", "--json"});
  CHECK(js.code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("all_pass").get<bool>());

  // bare names default sensibly
  CHECK(run_cli({"family", "--name", "pretzel", "--max-p", "1", "--max-q", "0"}).code == 0);
}

TEST_CASE("paper-check subcommand") {
  CliResult r = run_cli({"paper-check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks pass") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"det"}).code == 2);                          // missing operand
  CHECK(run_cli({"det", "X(1,2)"}).code == 2);                // malformed quad
  CHECK(run_cli({"det", "X(1,1,1,1)"}).code == 2);            // impossible edge ids
  CHECK(run_cli({"closure", "--tangle", "pretzel:3", "--slope", "x"}).code == 2);
  CHECK(run_cli({"closure", "--tangle", "pretzel:x", "--slope", "1/0"}).code == 2);
  CHECK(run_cli({"closure", "--tangle", "pretzel:2", "--slope", "1/0"}).code == 2);
  CHECK(run_cli({"closure", "--tangle", "nonsense", "--slope", "1/0"}).code == 2);
  CHECK(run_cli({"family", "--name", "unknown", "--max-p", "1", "--max-q", "0"}).code == 2);
  CHECK(run_cli({"family", "--name", "pretzel", "--max-p", "0", "--max-q", "0"}).code == 2);
}

TEST_CASE("help exits 0") {
  CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("det") != std::string::npos);
  CHECK(run_cli({"certify", "--help"}).code == 0);
}
