#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "hopf/fileio.hpp"
#include "hopf/suites.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();

fs::path scratch_dir() {
  fs::path p = fs::temp_directory_path() / ("hopf_forge_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, const fs::path& out) {
  std::string cmd = std::string(HOPF_FORGE_BIN) + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("builtin names resolve") {
  for (const auto& name : builtin_names()) CHECK(builtin(name).dim() > 0);
  CHECK(builtin("kC2").dim() == 2);
  CHECK(builtin("kS3").dim() == 6);
  CHECK(builtin("taft:3:7:2").dim() == 9);
  CHECK(builtin("taft:3:7:2").field() == Field::prime(7));
  CHECK(builtin("D(kC2)").dim() == 4);
  CHECK(builtin("Dtilde(sweedler_h4)").dim() == 16);
  CHECK(builtin("L(kC3)").dim() == 9);
  CHECK(builtin("group_algebra:C4").dim() == 4);
  CHECK(builtin("kC3", Field::prime(7919)).field() == Field::prime(7919));
}

TEST_CASE("builtin errors") {
  CHECK_THROWS(builtin("taft:4:7:2"));                    // 4 does not divide 6
  CHECK_THROWS(builtin("taft:3:7:3"));                    // 3 has order 6 mod 7
  CHECK_THROWS(builtin("sweedler_h4", Field::prime(2)));  // characteristic 2
  CHECK_THROWS(builtin("taft:3:7:2", Q));
  CHECK_THROWS(builtin("kC5"));
  CHECK_THROWS(builtin("nonsense"));
}

TEST_CASE("algebra files round-trip byte-identically") {
  fs::path dir = scratch_dir();
  std::vector<std::string> names = builtin_names();
  names.push_back("D(kC2)");
  names.push_back("L(sweedler_h4)");
  for (const auto& name : names) {
    INFO(name);
    HopfData h = builtin(name);
    std::string text = to_json(h);
    HopfData back = from_json(text);
    CHECK(same_structure(back, h));
    CHECK(back.labels() == h.labels());
    CHECK(back.name() == h.name());
    CHECK(to_json(back) == text);
    fs::path p = dir / "a.json";
    save_algebra(h, p);
    CHECK(slurp(p) == text);
    save_algebra(load_algebra(p), p);
    CHECK(slurp(p) == text);
  }
  fs::remove_all(dir);
}

TEST_CASE("scalars are stored as strings") {
  auto j = nlohmann::json::parse(to_json(builtin("taft:3:7:2")));
  CHECK(j["field"] == "Fp:7");
  CHECK(j["dim"] == 9);
  bool all_strings = true;
  for (const auto& t : j["mult"]) all_strings &= t.back().is_string();
  CHECK(all_strings);
}

TEST_CASE("corrupted files are rejected on verified load") {
  auto j = nlohmann::json::parse(to_json(builtin("kC2")));
  j["mult"][0].back() = "3";
  const std::string bad = j.dump();
  CHECK_THROWS_AS(from_json(bad), FileError);
  try {
    from_json(bad);
  } catch (const FileError& e) {
    CHECK(std::string(e.what()).find("] = ") != std::string::npos);
  }
  HopfData unchecked = from_json(bad, false);
  CHECK_FALSE(verify_hopf(unchecked).ok());
  CHECK_THROWS_AS(from_json("{not json"), FileError);
  CHECK_THROWS_AS(from_json(R"({"name": "x"})"), FileError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), FileError);
}

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 17);
  CHECK(names.front() == "hopf-axioms");
  CHECK(names.back() == "all");
  CHECK_THROWS_AS(run_suite("no-such-suite", builtin("kC2")), std::invalid_argument);
}

TEST_CASE("reports are deterministic under a fixed seed") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.samples = 20;
  HopfData h = sweedler_h4();
  for (const char* suite : {"window-oracle", "difficult"}) {
    SuiteReport a = run_suite(suite, h, cfg), b = run_suite(suite, h, cfg);
    CHECK(a.ok());
    CHECK(a.json(false) == b.json(false));
    CHECK(a.text(false) == b.text(false));
  }
  SuiteReport r = run_suite("difficult", h, cfg);
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["config"]["samples"] == 20);
  CHECK(j["ok"] == true);
  CHECK(j.contains("seconds"));
  CHECK_FALSE(nlohmann::json::parse(r.json(false)).contains("seconds"));
}

TEST_CASE("suites agree across fields") {
  SuiteConfig cfg;
  cfg.samples = 10;
  for (const char* alg : {"kC2", "kS3"}) {
    for (const char* suite : {"hopf-axioms", "integrals", "heisenberg", "doubles", "hop", "iota", "theta"}) {
      SuiteReport q = run_suite(suite, builtin(alg), cfg);
      for (std::uint64_t p : {101u, 7919u}) {
        SuiteConfig cp = cfg;
        cp.field = Field::prime(p);
        SuiteReport r = run_suite(suite, builtin(alg, cp.field), cp);
        INFO(alg << " " << suite << " Fp:" << p);
        CHECK(q.ok() == r.ok());
        CHECK(q.checks.size() == r.checks.size());
      }
      CHECK(q.ok());
    }
  }
}

TEST_CASE("resolve_algebra reads files without verification") {
  fs::path dir = scratch_dir();
  auto j = nlohmann::json::parse(to_json(builtin("kC2")));
  j["antipode"][0].back() = "2";
  std::ofstream(dir / "bad.json") << j.dump();
  HopfData h = resolve_algebra((dir / "bad.json").string());
  CHECK_FALSE(verify_hopf(h).ok());
  SuiteReport r = run_suite("hopf-axioms", h);
  CHECK_FALSE(r.ok());
  CHECK(r.text(false).find("FAIL hopf-axioms") != std::string::npos);
  CHECK(resolve_algebra("kC3", Field::prime(101)).field() == Field::prime(101));
  fs::remove_all(dir);
}

TEST_CASE("command line interface") {
  fs::path dir = scratch_dir();
  fs::path out = dir / "out.txt", file = dir / "h4.json";
  CHECK(run("emit --builtin sweedler_h4 -o " + file.string(), out) == 0);
  CHECK(slurp(file) == to_json(sweedler_h4()));
  CHECK(run("check " + file.string(), out) == 0);
  CHECK(slurp(out).find("PASS") != std::string::npos);

  CHECK(run("dual " + file.string() + " -o " + (dir / "d.json").string(), out) == 0);
  CHECK(same_structure(load_algebra(dir / "d.json"), dual(sweedler_h4())));
  CHECK(run("double kC3 --variant l -o " + (dir / "l.json").string(), out) == 0);
  CHECK(load_algebra(dir / "l.json").dim() == 9);
  CHECK(run("integrals kC2", out) == 0);

  CHECK(run("verify --suite integrals --algebra kS3 --report json", out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["ok"] == true);
  CHECK(j["config"]["algebra"] == "kS3");

  CHECK(run("verify --suite gamma --algebra kC2 --window -2:3 --seed 3", out) == 0);
  CHECK(slurp(out).find("window [-2,3]") != std::string::npos);

  CHECK(run("verify --suite bogus --algebra kC2", out) == 2);
  CHECK(run("verify --suite hop --algebra not-an-algebra", out) == 2);
  CHECK(run("verify --suite hop --algebra kC2 --field R", out) == 2);
  fs::remove_all(dir);
}
