#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("octjordan_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("OCTJORDAN_BIN");
  REQUIRE(bin);
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = env + " '" + bin + "' " + args + " > '" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out)};
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

const char* kIdentity = R"({"level": 3, "lambda": [1, 1, 1], "a": [0,0,0,0,0,0,0,0], "b": [0,0,0,0,0,0,0,0], "c": [0,0,0,0,0,0,0,0]})";

}  // namespace

TEST_CASE("eval at the identity") {
  const auto id = write_file("identity.json", kIdentity);
  Run r = run("eval --invariant det_cartan --input '" + id.string() + "'");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("value") == json::array({1.0, 0.0}));
  r = run("eval --invariant det_cartan --prime 313 --input '" + id.string() + "'");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("value") == "1");
  // a "prime" key selects exact arithmetic
  const auto wrapped = write_file("wrapped.json", std::string(R"({"prime": 7, "point": )") + kIdentity + "}");
  r = run("eval --invariant s_odm --input '" + wrapped.string() + "'");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("value") == "1");
}

TEST_CASE("usage and input errors exit 2") {
  const auto id = write_file("identity.json", kIdentity);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --prime 15 --trials 1").code == 2);
  CHECK(run("verify --prime 2147483647 --trials 1 --checks C99").code == 2);
  CHECK(run("eval --invariant det_cartan --input /no/such/file.json").code == 2);
  CHECK(run("eval --invariant nope --input '" + id.string() + "'").code == 2);
  const auto bad = write_file("bad.json", "{\"lambda\": [1, 2");
  CHECK(run("eval --invariant det_cartan --input '" + bad.string() + "'").code == 2);
  const auto short_lambda = write_file("short.json", R"({"lambda": [1, 1], "a": [0], "b": [0], "c": [0]})");
  CHECK(run("eval --invariant det_cartan --input '" + short_lambda.string() + "'").code == 2);
  CHECK(run("verify --trials 1 --checks C1 --out /no/such/dir/report.json").code == 2);
  CHECK(run("strata --surface quartic --matrix M --samples 1").code == 2);
  CHECK(run("verify --trials 1 --checks C1", "OCTJORDAN_SEED=abc").code == 2);
}

TEST_CASE("verify is byte-for-byte deterministic") {
  const Run a = run("verify --trials 4 --seed 9 --checks C1,C4,C6");
  const Run b = run("verify --trials 4 --seed 9 --checks C1,C4,C6 --jobs 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // the environment seed is only a fallback
  const Run c = run("verify --trials 4 --checks C1,C4,C6", "OCTJORDAN_SEED=9");
  CHECK(c.out == a.out);
  const Run d = run("verify --trials 4 --seed 9 --checks C1,C4,C6", "OCTJORDAN_SEED=1");
  CHECK(d.out == a.out);
  const json j = json::parse(a.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("checks").size() == 3);
  // sorted keys
  CHECK(j.dump(2) + "\n" == a.out);
  const fs::path file = scratch() / "verify.json";
  CHECK(run("verify --trials 4 --seed 9 --checks C1,C4,C6 --out '" + file.string() + "'").code == 0);
  CHECK(slurp(file) == a.out);
}

TEST_CASE("verify reports a failing check with exit 1") {
  const Run r = run("verify --trials 2 --seed 0 --checks C9");
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("passed") == false);
  bool found = false;
  for (const auto& s : j.at("checks")[0].at("subchecks"))
    if (!s.at("passed").get<bool>()) found = s.contains("failure");
  CHECK(found);
}

TEST_CASE("autdim at 313") {
  const Run r = run("autdim --prime 313 --seed 1 --retries 3");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("rank") == 133);
  CHECK(j.at("bound") == 29);
  CHECK(j.at("sodm_terms").get<int>() > 0);
}

TEST_CASE("strata census schema") {
  const Run r = run("strata --surface sextic --matrix N --samples 10 --seed 3");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("tol") == 1e-8);
  CHECK(j.at("backend") == "jacobi_svd");
  CHECK(j.at("mode") == 2);
  CHECK(j.at("witness_rank") == 22);
  const Run csv = run("strata --surface sextic --matrix N --samples 10 --seed 3 --format csv");
  CHECK(csv.out.rfind("surface,matrix,samples,tol,seed,backend,corank,count\n", 0) == 0);
  CHECK(csv.out.find("sextic,N,10,") != std::string::npos);
}

TEST_CASE("reduce writes a replayable transcript") {
  std::ostringstream t;
  t << R"({"lambda": [[0.3, -1.1], [1.7, 0.2], [-0.4, 0.9]],)";
  const char* names[3] = {"a", "b", "c"};
  double x = 0.37;
  for (const char* n : names) {
    t << '"' << n << "\": [";
    for (int i = 0; i < 8; ++i) {
      x = std::fmod(x * 7.31 + 0.113, 2.0) - 1.0;
      t << (i ? ", " : "") << '[' << x << ", " << -0.5 * x + 0.21 << ']';
    }
    t << "]" << (n[0] == 'c' ? "}" : ", ");
  }
  const auto in = write_file("triple.json", t.str());
  const fs::path tr = scratch() / "transcript.json";
  const Run r = run("reduce --input '" + in.string() + "' --transcript '" + tr.string() + "'");
  const json s = json::parse(r.out);
  REQUIRE_FALSE(s.contains("non_generic"));
  CHECK(r.code == 0);
  CHECK(s.at("replay_residual").get<double>() <= 1e-6);
  const json w = json::parse(slurp(tr));
  CHECK(w.at("moves").size() == s.at("moves").get<std::size_t>());
  CHECK(w.at("states").size() == 11);
  CHECK(w.at("states")[6].at("label") == "A7");
}

TEST_CASE("non-generic reduce input exits 1") {
  const auto in = write_file("degenerate.json",
                             R"({"lambda": [2, 3, 5], "a": [0,0,0,0,0,0,0,0], "b": [1,2,0,0,1,0,0,3], "c": [1,0,2,1,0,0,1,1]})");
  const Run r = run("reduce --input '" + in.string() + "'");
  CHECK(r.code == 1);
  const json s = json::parse(r.out);
  CHECK(s.at("passed") == false);
  CHECK(s.at("non_generic").at("step").get<int>() >= 1);
}
