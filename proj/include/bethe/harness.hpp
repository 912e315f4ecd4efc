#pragma once
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bethe/rat.hpp"
#include "bethe/residual.hpp"

namespace bethe {

struct SuiteConfig {
  std::string suite = "all";  // rmatrix, monodromy, pi, bethe, weights, o3, o4, all
  int N = 5;
  int n = 2;
  int m = 1;
  uint64_t seed = 1;
  int samples = 5;
  int precision = 60;
  std::string out;  // empty: no file

  // ConfigError on any violation.
  void validate() const;
  nlohmann::json to_json() const;  // without `out`
  static SuiteConfig from_json(const nlohmann::json& j);
};

// splitmix64 step; used to derive stream seeds.
uint64_t splitmix64(uint64_t& state);
// Seed of the substream for one sample point.
uint64_t point_seed(uint64_t seed, uint64_t index);

// mt19937_64 with portable bounded draws (no std distributions, whose output
// differs between standard libraries).
class Sampler {
 public:
  explicit Sampler(uint64_t seed);
  uint64_t below(uint64_t n);  // uniform in [0, n)
  int between(int lo, int hi);  // uniform in [lo, hi]
  // p/q with p, q uniform in [-bound, bound] \ {0}
  Rat rat(int bound);
  std::vector<Rat> rats(int count, int bound);

 private:
  std::mt19937_64 engine_;
};

constexpr int kHeightBound = 9;
constexpr int kRetryBudget = 1000;

// count tuples of `arity` rationals with height <= bound that satisfy pred;
// SamplingExhausted after kRetryBudget rejections in a row.
std::vector<std::vector<Rat>> sample_rationals(uint64_t seed, int count, int arity, int bound,
                                               const std::function<bool(const std::vector<Rat>&)>& pred);

struct CheckReport {
  std::string name;
  std::string ref;
  int attempted = 0;
  int passed = 0;
  std::string max_residual = "0";
  double elapsed_ms = 0;
  nlohmann::json to_json() const;
};

// A registered check. `run` draws its parameters from the sampler; a
// PoleError or DomainError thrown while drawing or evaluating rejects the
// draw and the harness retries with the same (advancing) stream.
struct CheckSpec {
  std::string name;
  std::string ref;
  std::string suite;
  std::function<bool(const SuiteConfig&)> applicable;
  std::function<Residual(const SuiteConfig&, Sampler&)> run;
};

const std::vector<CheckSpec>& registry();
// Names every suite must provide; verify_manifest() checks that each is
// registered exactly once and nothing else is registered.
const std::vector<std::string>& manifest();
void verify_manifest();  // throws std::logic_error

std::vector<CheckReport> run_suite(const SuiteConfig& cfg);
nlohmann::json report_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
void write_report(const nlohmann::json& report, const std::string& path);
// 0 when every check passed at every point, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace bethe
