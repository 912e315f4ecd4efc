#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "bethe/errors.hpp"
#include "bethe/harness.hpp"
#include "bethe/model.hpp"

using namespace bethe;
using nlohmann::json;

namespace {
// rejects u - v in {0, 1, 1/nu} for N = 5
bool admissible(const std::vector<Rat>& t) {
  Rat d = t[0] - t[1];
  return d != Rat(0) && d != Rat(1) && d != ModelParams::make(5).inv_nu;
}

json tuples_json(const std::vector<std::vector<Rat>>& ts) {
  json j = json::array();
  for (const auto& t : ts) {
    json row = json::array();
    for (const Rat& x : t) row.push_back(x.str());
    j.push_back(row);
  }
  return j;
}

SuiteConfig config(std::string suite, int N, int n, int m, uint64_t seed, int samples) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.N = N;
  c.n = n;
  c.m = m;
  c.seed = seed;
  c.samples = samples;
  return c;
}

json strip_timing(json report) {
  for (auto& c : report["checks"]) c.erase("elapsed_ms");
  return report;
}
}  // namespace

TEST_CASE("seed derivation") {
  uint64_t s = 0;
  // reference value of the splitmix64 generator from state 0
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
  CHECK(point_seed(1, 0) != point_seed(1, 1));
  CHECK(point_seed(1, 0) != point_seed(2, 0));
  Sampler a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    Rat x = a.rat(9);
    CHECK(x == b.rat(9));
    CHECK_FALSE(x.is_zero());
  }
  Sampler c(11);
  std::set<int> seen;
  for (int i = 0; i < 500; ++i) {
    int k = c.between(-3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
    seen.insert(k);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("sample_rationals is deterministic and honours the predicate") {
  auto a = sample_rationals(123, 50, 2, 9, admissible);
  auto b = sample_rationals(123, 50, 2, 9, admissible);
  CHECK(a == b);
  CHECK(a.size() == 50);
  for (const auto& t : a) {
    CHECK(admissible(t));
    for (const Rat& x : t) {
      CHECK(x.abs() <= Rat(9));
      CHECK(x.abs() >= Rat(1, 9));
    }
  }
  CHECK(sample_rationals(124, 50, 2, 9, admissible) != a);
  CHECK_THROWS_AS(sample_rationals(1, 1, 2, 9, [](const std::vector<Rat>&) { return false; }), SamplingExhausted);
  CHECK_THROWS_AS(sample_rationals(1, 1, 2, 1, admissible), DomainError);
}

TEST_CASE("golden samples for seed 42") {
  json got = tuples_json(sample_rationals(42, 3, 2, 9, admissible));
  std::filesystem::path path = std::filesystem::path(GOLDEN_DIR) / "sample_rationals_seed42.json";
  if (!std::filesystem::exists(path)) {
    std::ofstream(path) << got.dump(2) << "\n";
    MESSAGE("golden file written: " << path.string());
  }
  std::ifstream f(path);
  json want = json::parse(f);
  CHECK(got == want);
  CHECK(want.size() == 3);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(config("rmatrix", 3, 2, 1, 1, 5).validate());
  CHECK_THROWS_AS(config("pi", 4, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("bethe", 4, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("all", 4, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("o3", 5, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("o4", 5, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("nope", 5, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("rmatrix", 2, 2, 1, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("rmatrix", 5, 2, 3, 1, 5).validate(), ConfigError);
  CHECK_THROWS_AS(config("rmatrix", 5, 2, 1, 1, 0).validate(), ConfigError);
  SuiteConfig lowp = config("rmatrix", 5, 2, 1, 1, 1);
  lowp.precision = 20;
  CHECK_THROWS_AS(lowp.validate(), ConfigError);
  CHECK_THROWS_AS(run_suite(config("pi", 4, 2, 1, 1, 1)), ConfigError);
}

TEST_CASE("config from json") {
  SuiteConfig c = SuiteConfig::from_json(json::parse(R"({"suite":"pi","N":6,"m":2,"seed":99,"samples":3})"));
  CHECK(c.suite == "pi");
  CHECK(c.N == 6);
  CHECK(c.m == 2);
  CHECK(c.seed == 99);
  CHECK(c.n == SuiteConfig{}.n);
  CHECK_THROWS_AS(SuiteConfig::from_json(json::parse(R"({"bogus":1})")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(json::parse(R"({"N":"five"})")), ConfigError);
  CHECK(SuiteConfig::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("manifest") {
  CHECK_NOTHROW(verify_manifest());
  std::set<std::string> names;
  for (const auto& c : registry()) names.insert(c.name);
  CHECK(names.size() == registry().size());
  CHECK(names.size() == manifest().size());
  for (const auto& c : registry()) {
    CHECK_FALSE(c.ref.empty());
    CHECK(c.name.rfind(c.suite + ".", 0) == 0);
  }
}

TEST_CASE("rmatrix suite at N = 3 passes") {
  auto reports = run_suite(config("rmatrix", 3, 2, 1, 1, 5));
  CHECK_FALSE(reports.empty());
  for (const auto& r : reports) {
    CHECK(r.attempted == 5);
    CHECK(r.passed == 5);
    CHECK(r.max_residual == "0");
  }
  CHECK(exit_code(reports) == 0);
}

TEST_CASE("suite all lists every registered check") {
  auto reports = run_suite(config("all", 5, 2, 1, 3, 1));
  std::set<std::string> got;
  for (const auto& r : reports) got.insert(r.name);
  std::set<std::string> want(manifest().begin(), manifest().end());
  CHECK(got == want);
  CHECK(exit_code(reports) == 0);
}

TEST_CASE("reports are deterministic apart from timing") {
  SuiteConfig c = config("monodromy", 5, 2, 1, 17, 2);
  json a = strip_timing(report_json(c, run_suite(c)));
  json b = strip_timing(report_json(c, run_suite(c)));
  CHECK(a.dump() == b.dump());
  CHECK(a["version"] == 1);
  CHECK(a["config"]["seed"] == 17);
  auto path = std::filesystem::temp_directory_path() / "bethe_report_test.json";
  write_report(a, path.string());
  std::ifstream f(path);
  CHECK(json::parse(f) == a);
  std::filesystem::remove(path);
}

TEST_CASE("exit code reflects failures") {
  CheckReport ok{"x", "r", 3, 3, "0", 0};
  CheckReport bad{"y", "r", 3, 2, "1/2", 0};
  CHECK(exit_code({ok}) == 0);
  CHECK(exit_code({ok, bad}) == 1);
  CHECK(ok.to_json()["max_residual"] == "0");
}
