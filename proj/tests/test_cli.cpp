// End-to-end tests of the c0lab binary: exit codes, report envelopes, error
// JSON on stderr, output redirection, and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  ++counter;
  std::string out_path = "/tmp/c0_cli_out_" + std::to_string(counter);
  std::string err_path = "/tmp/c0_cli_err_" + std::to_string(counter);
  std::string cmd = std::string(TEST_C0LAB_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

// Writes an instance file and returns its path.
std::string instance_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/c0_cli_" + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kA =
    instance_file("a", R"({"theta": [2, 1], "generators": [{"h0": ["0", "1"], "h1": ["1"]}]})");
const std::string kB =
    instance_file("b", R"({"theta": [2, 1], "generators": [{"h0": [], "h1": ["1"]}]})");
const std::string kC =
    instance_file("c", R"({"theta": [2, 1], "generators": [{"h0": ["0", "1"], "h1": []}]})");
const std::string kD =
    instance_file("d", R"({"theta": [3, 1], "generators": [{"h0": [], "h1": ["1"]}]})");

}  // namespace

TEST_CASE("model: invariant data of an instance") {
  RunResult r = run_cli("model " + kA);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["artifact"]["name"] == "c0lab");
  CHECK(j["config"]["command"] == "model");
  CHECK(j["config"]["theta"] == json::array({2, 1}));
  CHECK(j["report"]["alpha"] == json::array({1, 0}));
  CHECK(j["report"]["beta"] == json::array({2, 0}));
  CHECK(j["report"]["dim"] == 1);
  CHECK(j["report"]["projections"] == json::array({1, 0}));
  CHECK(j["report"]["dimension_identity"] == true);
  CHECK(j["report"]["hyper_normal"] == true);
}

TEST_CASE("model: non-invariant generators are refused") {
  std::string path = instance_file("noninv", R"({"theta": [2, 1], "generators": [{"h0": ["1"], "h1": []}]})");
  RunResult r = run_cli("model " + path);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  json err = json::parse(r.err);
  CHECK(err["error"]["kind"] == "NotInvariant");
}

TEST_CASE("model: malformed instance file") {
  std::string path = instance_file("broken", "{ nope");
  RunResult r = run_cli("model " + path);
  CHECK(r.code == 2);
  json err = json::parse(r.err);
  CHECK(err["error"]["kind"] == "ParseError");
}

TEST_CASE("classify: equivalent instances exit 0 with a witness") {
  RunResult r = run_cli("classify --instance-a " + kA + " --instance-b " + kB + " --seed 5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["report"]["kind"] == "equivalent");
  CHECK(j["report"]["certificate"] == "exact");
  CHECK_FALSE(j["report"]["witness"].is_null());
  CHECK(j["report"]["data_a"] == j["report"]["data_b"]);

  // Same seed, byte-identical report.
  RunResult again = run_cli("classify --instance-a " + kA + " --instance-b " + kB + " --seed 5");
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
}

TEST_CASE("classify: different invariant data exits 3") {
  RunResult r = run_cli("classify --instance-a " + kA + " --instance-b " + kC);
  CHECK(r.code == 3);
  json j = json::parse(r.out);
  CHECK(j["report"]["kind"] == "inequivalent");
  CHECK(j["report"]["reason"] == "beta: (2,0) vs (1,1)");
  CHECK(j["report"]["certificate"] == "exact");
  CHECK(j["report"]["witness"].is_null());
}

TEST_CASE("classify: mismatched pairs exit 2 with error JSON on stderr") {
  RunResult r = run_cli("classify --instance-a " + kA + " --instance-b " + kD);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  json err = json::parse(r.err);
  CHECK(err["error"]["kind"] == "ThetaMismatch");
}

TEST_CASE("canonical: frozen subspace for an admissible triple") {
  RunResult r = run_cli("canonical --theta 3,2 --alpha 2,1 --beta 1,1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["report"]["admissible"] == true);
  CHECK(j["report"]["triple"]["alpha"] == json::array({2, 1}));
  CHECK(j["report"]["subspace"]["generators"].size() == 3);
  CHECK(j["report"]["verification"]["projections"] == j["report"]["verification"]["expected_projections"]);
  CHECK(j["report"]["verification"]["data"]["alpha"] == json::array({2, 1}));
  CHECK(j["report"]["verification"]["data"]["beta"] == json::array({1, 1}));
  CHECK(j["report"]["verification"]["dimension_identity"] == true);
}

TEST_CASE("canonical: inadmissible triple names the failed condition") {
  RunResult r = run_cli("canonical --theta 3,1 --alpha 1,1 --beta 1,1");
  CHECK(r.code == 2);
  json err = json::parse(r.err);
  CHECK(err["error"]["kind"] == "NotAdmissible");
  std::string message = err["error"]["message"];
  CHECK(message.find("b1 <= min(n0 - a0, n1 - a1)") != std::string::npos);
}

TEST_CASE("verify: suites pass") {
  RunResult lr = run_cli("verify --suite lr");
  CHECK(lr.code == 0);
  json j = json::parse(lr.out);
  CHECK(j["report"]["suite"] == "lr");
  CHECK(j["report"]["pass"] == true);
  CHECK(j["report"]["violations"] == 0);

  RunResult weyl = run_cli("verify --suite weyl --theta 2,1 --budget 40");
  CHECK(weyl.code == 0);
  json w = json::parse(weyl.out);
  CHECK(w["report"]["pass"] == true);
  CHECK(w["config"]["theta"] == json::array({2, 1}));
}

TEST_CASE("verify: unknown suite is a usage error") {
  RunResult r = run_cli("verify --suite bogus");
  CHECK(r.code != 0);
  CHECK(r.out.empty());
}

TEST_CASE("lr: single coefficient and missing-arguments error") {
  RunResult r = run_cli("lr --lambda 3,2,1 --mu 2,1 --nu 2,1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["report"]["coefficient"] == 2);

  RunResult none = run_cli("lr");
  CHECK(none.code == 2);
  json err = json::parse(none.err);
  CHECK(err["error"]["kind"] == "ParseError");
}

TEST_CASE("lr: scan lists multiplicity witnesses") {
  RunResult r = run_cli("lr --scan-bound 6 --scan-rows 3");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["report"]["scan"]["bound"] == 6);
  bool found = false;
  for (const auto& t : j["report"]["scan"]["multiplicity_two"]) {
    if (t == json::array({json::array({3, 2, 1}), json::array({2, 1}), json::array({2, 1})})) found = true;
  }
  CHECK(found);
}

TEST_CASE("enumerate: structured families of a pair") {
  RunResult r = run_cli("enumerate --theta 2,1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["report"]["admissible_triples"].size() == 6);
  CHECK(j["report"]["hyperinvariant"].size() == 4);
  for (const auto& t : j["report"]["admissible_triples"]) {
    CHECK(t.contains("dim"));
    CHECK(t.contains("generators"));
  }
}

TEST_CASE("--output writes the same bytes the stdout path would") {
  std::string out_file = "/tmp/c0_cli_report.json";
  RunResult direct = run_cli("model " + kA + " --seed 3");
  RunResult redirected = run_cli("model " + kA + " --seed 3 --output " + out_file);
  CHECK(redirected.code == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(out_file) == direct.out);
  std::remove(out_file.c_str());
}

TEST_CASE("--format text is pretty but lossless") {
  RunResult compact = run_cli("model " + kA);
  RunResult pretty = run_cli("model " + kA + " --format text");
  REQUIRE(compact.code == 0);
  REQUIRE(pretty.code == 0);
  CHECK(pretty.out.find('\n') < pretty.out.size() - 1);  // multi-line
  json jc = json::parse(compact.out);
  json jp = json::parse(pretty.out);
  CHECK(jp["report"] == jc["report"]);
  CHECK(jp["config"]["format"] == "text");
  CHECK(jc["config"]["format"] == "json");
}

TEST_CASE("global flags may follow the subcommand") {
  RunResult r = run_cli("model " + kA + " --seed 9");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["config"]["seed"] == 9);
}

TEST_CASE("missing subcommand is a usage error") {
  RunResult r = run_cli("");
  CHECK(r.code != 0);
}
