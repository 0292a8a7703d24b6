#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jc/cli.hpp"
#include "jc/report_json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using jc::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = jc::io::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  CHECK_MESSAGE(r.code == expected_code, r.err);
  return Json::parse(r.out);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("jcmaps-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

const TempDir& tmp() {
  static const TempDir dir;
  return dir;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) {
      ::setenv("JC_SEED", value, 1);
    } else {
      ::unsetenv("JC_SEED");
    }
  }
  ~EnvGuard() { ::unsetenv("JC_SEED"); }
};

}  // namespace

TEST_CASE("check-dmap on the Jordan block") {
  const std::string file = tmp().write("jordan.txt", "0,1\n0,0\n");
  const Json j = run_json({"check-dmap", file}, 0);
  CHECK(j["command"] == "check-dmap");
  CHECK(j["is_dmap"] == true);
  CHECK(j["nilpotency_index"] == 2);
  CHECK(j["unit_det"] == true);
  CHECK(run({"check-dmap", tmp().write("id.txt", "1,0\n0,1")}).code == 1);
}

TEST_CASE("invert reports a witness for the fold") {
  const std::string file = tmp().write("fold.map", "n=2; P1 = x1^2; P2 = x2");
  const Json j = run_json({"invert", "--method=groebner", file}, 1);
  CHECK(j["status"] == "not-invertible-groebner");
  CHECK(j["witness"] == "x1^2 - y1");
  const Result text = run({"invert", "--method", "groebner", file});
  CHECK(text.code == 1);
  CHECK(text.out.find("witness: x1^2 - y1") != std::string::npos);
  CHECK(run_json({"invert", file}, 1)["status"] == "singular-linear-part");
}

TEST_CASE("invert finds inverses and honours --max-degree") {
  const std::string file = tmp().write("cubic.map", "n=2; P1 = x1 + x2^3; P2 = x2");
  Json j = run_json({"invert", file}, 0);
  CHECK(j["inverse"] == Json::array({"-x2^3 + x1", "x2"}));
  CHECK(j["verified"] == true);
  CHECK(j["degree_bound_used"] == 3);
  j = run_json({"invert", "--max-degree", "2", file}, 1);
  CHECK(j["status"] == "not-polynomial-within-bound");
  CHECK(run({"invert", "--max-degree", "0", file}).code == 2);
  CHECK(run({"invert", "--method", "newton", file}).code == 2);
}

TEST_CASE("catalog run gaussian-d2") {
  const Json j = run_json({"catalog", "run", "gaussian-d2"}, 0);
  CHECK(j["passed"] == true);
  bool saw_det = false;
  for (const auto& c : j["checks"]) saw_det = saw_det || c["name"] == "realify-det-identity";
  CHECK(saw_det);
  CHECK(run({"catalog", "run", "pinchuk"}).code == 2);
  CHECK(run({"catalog", "run", "no-such-entry"}).code == 2);
  CHECK(run_json({"catalog", "list"}, 0)["entries"].size() >= 13);
  CHECK(run_json({"catalog", "show", "pinchuk"}, 0)["kind"] == "reference");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
  const Result missing = run({"check", "/nonexistent/map.txt"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  const std::string bad = tmp().write("bad.map", "n=2; P1 = x1 + ; P2 = x2");
  const Result parse = run({"check", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find(bad + ":1:16:") != std::string::npos);
  const std::string cubic = tmp().write("wang-cubic.map", "n=1; P1 = x1^3");
  CHECK(run({"wang-check", cubic}).code == 2);
  const std::string jordan = tmp().write("jordan2.txt", "0,1\n0,0");
  CHECK(run({"probe", "--radii", "10:1:3", jordan}).code == 2);
  CHECK(run({"probe", "--radii", "ten", jordan}).code == 2);
  CHECK(run({"probe", tmp().write("complex.txt", "0,i\n0,0")}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("catalog") != std::string::npos);
}

TEST_CASE("--json may follow the subcommand") {
  const std::string file = tmp().write("id.map", "n=2; P1 = x1; P2 = x2");
  const Result r = run({"check", file, "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["command"] == "check");
}

TEST_CASE("check, wang-check and realify") {
  Json j = run_json({"check", tmp().write("tri.map", "n=2; P1 = x1 + (x1 + x2)^3; P2 = x2 - (x1 + x2)^3")}, 0);
  CHECK(j["is_dmap"] == true);
  CHECK(j["nilpotency_index"] == 2);
  j = run_json({"check", tmp().write("sq.map", "n=2; P1 = x1^2; P2 = x2")}, 1);
  CHECK(j["keller_det"] == "2*x1");
  CHECK(j["is_dmap"].is_null());
  j = run_json({"wang-check", tmp().write("quad.map", "n=2; P1 = x1 + x2^2; P2 = x2")}, 0);
  CHECK(j["identity_holds"] == true);
  CHECK(j["residual"] == Json::array({"0", "0"}));
  j = run_json({"realify", tmp().write("g.map", "n=2; P1 = x1 - i*x2^3; P2 = x2")}, 0);
  CHECK(j["real_map"][0] == "3*y2^2*z2 - z2^3 + y1");
  CHECK(j["is_yagzhev"] == true);
  CHECK(j["det_check"]["samples"].size() == 20);
}

TEST_CASE("JC_SEED overrides the default seed") {
  const std::string file = tmp().write("g2.map", "n=1; P1 = i*x1");
  {
    EnvGuard env("7");
    CHECK(run_json({"realify", file}, 0)["det_check"]["seed"] == 7);
    CHECK(run_json({"realify", "--seed", "9", file}, 0)["det_check"]["seed"] == 9);
  }
  {
    EnvGuard env("seven");
    CHECK(run({"realify", file}).code == 2);
  }
  EnvGuard env(nullptr);
  CHECK(run_json({"realify", file}, 0)["det_check"]["seed"] == jc::io::default_seed);
}

TEST_CASE("witness subcommand") {
  const std::string jordan = tmp().write("jordan3.txt", "0,1\n0,0");
  Json j = run_json({"witness", "--vector", "0,1", jordan}, 0);
  CHECK(j["check"]["passed"] == true);
  CHECK(j["interpretation"] == jc::io::witness_interpretation);
  j = run_json({"witness", "--vector", "1,0", jordan}, 1);
  CHECK(j["check"]["passed"] == false);
  CHECK(j["interpretation"].is_null());
  CHECK(run({"witness", "--vector", "1,0,0", jordan}).code == 2);
  j = run_json({"witness", tmp().write("i2.txt", "1,0\n0,1")}, 1);
  CHECK(j["mode"] == "search");
  CHECK(j["witness"].is_null());
  CHECK(j["best_residual"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
  j = run_json({"witness", tmp().write("zero.txt", "0,0\n0,0")}, 1);
  CHECK(j["best"].is_null());
}

TEST_CASE("probe output is independent of the thread count") {
  const std::string file = tmp().write("rank1.txt", "1,1\n-1,-1");
  const Result a = run({"--json", "probe", "--restarts", "6", "--threads", "1", file});
  const Result b = run({"--json", "probe", "--restarts", "6", "--threads", "4", file});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["verdict"] == "image-grows");
  CHECK_FALSE(j["config"].contains("threads"));
  CHECK(j["trajectory"].size() == 6);
}

TEST_CASE("golden catalog runs") {
  for (const std::string name : {"dmap-nilpotent-upper", "gaussian-d2", "square-fold"}) {
    CAPTURE(name);
    EnvGuard env(nullptr);
    const Result r = run({"--json", "catalog", "run", name});
    CHECK(r.code == 0);
    const fs::path golden = fs::path(JC_GOLDEN_DIR) / ("catalog-run-" + name + ".json");
    if (std::getenv("JC_UPDATE_GOLDEN") != nullptr) std::ofstream(golden, std::ios::binary) << r.out;
    std::ifstream in(golden, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream expected;
    expected << in.rdbuf();
    CHECK(r.out == expected.str());
  }
}
