#include "bethe/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "bethe/bethe.hpp"
#include "bethe/errors.hpp"
#include "bethe/model.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/o4.hpp"
#include "bethe/pi.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/weights.hpp"

namespace bethe {

using nlohmann::json;

namespace {
const std::set<std::string> kSuites{"rmatrix", "monodromy", "pi", "bethe", "weights", "o3", "o4", "all"};
}

void SuiteConfig::validate() const {
  if (!kSuites.count(suite)) throw ConfigError("unknown suite '" + suite + "'");
  if (N < 3 || N > 15) throw ConfigError("N must lie in [3, 15]");
  if (n < 1 || n > 4) throw ConfigError("n must lie in [1, 4]");
  if (m < 0 || m > n || m > 3) throw ConfigError("m must satisfy 0 <= m <= min(n, 3)");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (precision < 30) throw ConfigError("precision must be >= 30 digits");
  if (N == 4 && (suite == "pi" || suite == "bethe" || suite == "all"))
    throw ConfigError("suite '" + suite + "' needs the reduced level, unsupported for N = 4");
  if (suite == "o3" && N != 3) throw ConfigError("suite o3 requires N = 3");
  if (suite == "o4" && N != 4) throw ConfigError("suite o4 requires N = 4");
}

json SuiteConfig::to_json() const {
  return {{"suite", suite}, {"N", N}, {"n", n}, {"m", m}, {"seed", seed}, {"samples", samples}, {"precision", precision}};
}

SuiteConfig SuiteConfig::from_json(const json& j) {
  SuiteConfig c;
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [k, v] : j.items()) {
      if (k == "suite") c.suite = v.get<std::string>();
      else if (k == "N") c.N = v.get<int>();
      else if (k == "n") c.n = v.get<int>();
      else if (k == "m") c.m = v.get<int>();
      else if (k == "seed") c.seed = v.get<uint64_t>();
      else if (k == "samples") c.samples = v.get<int>();
      else if (k == "precision") c.precision = v.get<int>();
      else if (k == "out") c.out = v.get<std::string>();
      else throw ConfigError("unknown config key '" + k + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return c;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t point_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed;
  uint64_t h = splitmix64(s);
  s = h ^ (index * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

Sampler::Sampler(uint64_t seed) {
  uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

uint64_t Sampler::below(uint64_t n) {
  if (n == 0) throw DomainError("empty range");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

int Sampler::between(int lo, int hi) { return lo + int(below(uint64_t(hi - lo + 1))); }

Rat Sampler::rat(int bound) {
  if (bound < 1) throw DomainError("height bound must be positive");
  auto nz = [&] {
    int x = int(below(uint64_t(2 * bound))) - bound;  // [-bound, bound - 1]
    return x >= 0 ? x + 1 : x;
  };
  int p = nz(), q = nz();
  return Rat(p, q);
}

std::vector<Rat> Sampler::rats(int count, int bound) {
  std::vector<Rat> r;
  for (int i = 0; i < count; ++i) r.push_back(rat(bound));
  return r;
}

std::vector<std::vector<Rat>> sample_rationals(uint64_t seed, int count, int arity, int bound,
                                               const std::function<bool(const std::vector<Rat>&)>& pred) {
  if (bound < 2) throw DomainError("height bound must be >= 2");
  std::vector<std::vector<Rat>> out;
  for (int i = 0; i < count; ++i) {
    Sampler s(point_seed(seed, uint64_t(i)));
    int tries = 0;
    for (;;) {
      if (++tries > kRetryBudget) throw SamplingExhausted("no admissible tuple after retry budget");
      std::vector<Rat> t = s.rats(arity, bound);
      bool okay = false;
      try {
        okay = pred(t);
      } catch (const PoleError&) {
      } catch (const DomainError&) {
      }
      if (okay) {
        out.push_back(std::move(t));
        break;
      }
    }
  }
  return out;
}

json CheckReport::to_json() const {
  return {{"name", name},
          {"ref", ref},
          {"attempted", attempted},
          {"passed", passed},
          {"max_residual", max_residual},
          {"elapsed_ms", elapsed_ms}};
}

// ---------------------------------------------------------------- checks

namespace {

constexpr int B = kHeightBound;

Residual of_count(size_t bad) { return Residual::of(Rat(static_cast<long long>(bad))); }
Residual of_bool(bool good) { return Residual::of(Rat(good ? 0 : 1)); }

const LevelFunction& level_for(int N, int m) {
  static std::map<std::pair<int, int>, LevelFunction> cache;
  auto it = cache.find({N, m});
  if (it == cache.end()) it = cache.emplace(std::make_pair(N, m), trivial_L(ModelParams::make(N), m)).first;
  return it->second;
}

BetheState draw_state(const SuiteConfig& c, Sampler& s) {
  ModelParams p = ModelParams::make(c.N);
  return BetheState::make(p, s.rats(c.n, B), s.rats(c.m, B), level_for(c.N, c.m));
}

MonodromyContext draw_ctx(const SuiteConfig& c, Sampler& s) {
  return MonodromyContext::make(ModelParams::make(c.N), s.rats(c.n, B));
}

auto always = [](const SuiteConfig&) { return true; };
auto not_n4 = [](const SuiteConfig& c) { return c.N != 4; };

using RunFn = std::function<Residual(const SuiteConfig&, Sampler&)>;
// Runs with m raised to at least k (and n to at least m) so that every check
// appears in every report.
RunFn at_least(int k_m, int k_n, RunFn run) {
  return [k_m, k_n, run](const SuiteConfig& c, Sampler& s) {
    SuiteConfig e = c;
    e.m = std::max(e.m, k_m);
    e.n = std::max({e.n, e.m, k_n});
    return run(e, s);
  };
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  auto add = [&](std::string suite, std::string name, std::string ref, std::function<bool(const SuiteConfig&)> app,
                 std::function<Residual(const SuiteConfig&, Sampler&)> run) {
    r.push_back({suite + "." + name, std::move(ref), suite, std::move(app), std::move(run)});
  };

  // rmatrix
  add("rmatrix", "ybe", "Yang-Baxter equation, O(N) R", always, [](const SuiteConfig& c, Sampler& s) {
    auto u = s.rats(3, B);
    return check_ybe(u[0], u[1], u[2], RKind::on(ModelParams::make(c.N)));
  });
  add("rmatrix", "ybe_reduced", "Yang-Baxter equation, reduced R", always, [](const SuiteConfig& c, Sampler& s) {
    auto u = s.rats(3, B);
    return check_ybe(u[0], u[1], u[2], RKind::reduced(ModelParams::make(c.N)));
  });
  add("rmatrix", "ybe_su2", "Yang-Baxter equation, SU(2) R", always, [](const SuiteConfig&, Sampler& s) {
    auto u = s.rats(3, B);
    return check_ybe(u[0], u[1], u[2], RKind::su2());
  });
  add("rmatrix", "unitarity", "unitarity R~21(-u) R~12(u) = 1", always, [](const SuiteConfig& c, Sampler& s) {
    Residual x = check_unitarity(s.rat(B), RKind::on(ModelParams::make(c.N)));
    return x;
  });
  add("rmatrix", "unitarity_su2", "unitarity of the SU(2) R", always,
      [](const SuiteConfig&, Sampler& s) { return check_unitarity(s.rat(B), RKind::su2()); });
  add("rmatrix", "crossing", "crossing relation through charge conjugation", always,
      [](const SuiteConfig& c, Sampler& s) { return check_crossing(s.rat(B), ModelParams::make(c.N)); });
  add("rmatrix", "crossing_involution", "crossing applied twice", always,
      [](const SuiteConfig& c, Sampler& s) { return check_crossing_involution(s.rat(B), ModelParams::make(c.N)); });
  add("rmatrix", "eigen_decomposition", "R eigenvalues on symmetric, antisymmetric, trace parts", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto e = check_eigen_decomp(s.rat(B), ModelParams::make(c.N));
        Residual x = e[0];
        x.merge(e[1]);
        x.merge(e[2]);
        return x;
      });
  add("rmatrix", "reduced_lower_rank", "reduced R equals the O(N-2) R", [](const SuiteConfig& c) { return c.N >= 5; },
      [](const SuiteConfig& c, Sampler& s) { return check_reduced_is_lower_rank(s.rat(B), ModelParams::make(c.N)); });
  add("rmatrix", "amplitude_a", "a(u) = 1 + c(u)", always, [](const SuiteConfig& c, Sampler& s) {
    ModelParams p = ModelParams::make(c.N);
    Rat u = s.rat(B);
    return residual(p.a(u), Rat(1) + p.c(u));
  });

  // monodromy
  add("monodromy", "tts", "RTT relation T_a T_b R_ab = R_ab T_b T_a", always, [](const SuiteConfig& c, Sampler& s) {
    auto ctx = draw_ctx(c, s);
    auto v = s.rats(2, B);
    return check_tts(ctx, v[0], v[1]);
  });
  add("monodromy", "expansion_t", "P/K expansion of the monodromy", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        return check_expansions(ctx, s.rat(B)).first;
      });
  add("monodromy", "expansion_crossed", "P/K expansion of the crossed monodromy", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        return check_expansions(ctx, s.rat(B)).second;
      });
  add("monodromy", "crossed", "crossed monodromy through charge conjugation", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        return check_crossed(ctx, s.rat(B));
      });
  add("monodromy", "triangularity", "reference-state triangularity of T and T_Q", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        return check_triangularity(ctx, s.rat(B)).merged();
      });
  add("monodromy", "q_prefactor", "normalized versus plain Q", always, [](const SuiteConfig& c, Sampler& s) {
    auto ctx = draw_ctx(c, s);
    Residual x;
    for (int i = 0; i < ctx.n(); ++i) x.merge(check_q_prefactor(ctx, i));
    return x;
  });
  add("monodromy", "zapletal", "exchange of T_Q with shifted monodromy", always, [](const SuiteConfig& c, Sampler& s) {
    auto ctx = draw_ctx(c, s);
    Rat v = s.rat(B);
    Residual x;
    for (int i = 0; i < ctx.n(); ++i) x.merge(check_zapletal(ctx, i, v));
    return x;
  });
  add("monodromy", "q_commutation", "Q(u;i) Q(u^(i);j) = Q(u;j) Q(u^(j);i), n >= 2", always,
      at_least(0, 2, [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        Residual x;
        for (int i = 0; i < ctx.n(); ++i)
          for (int j = i + 1; j < ctx.n(); ++j) x.merge(check_q_commutation(ctx, i, j));
        return x;
      }));

  // pi
  add("pi", "alt_recursion", "Pi built from the last slot equals Pi built from the first", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_pi_alt(ModelParams::make(c.N), s.rats(c.m, B)); }));
  add("pi", "closed_form_m2", "two-site Pi closed form", not_n4, [](const SuiteConfig& c, Sampler& s) {
    auto v = s.rats(2, B);
    return check_pi2_closed_form(ModelParams::make(c.N), v[0], v[1]);
  });
  add("pi", "fundamental", "reduced R Pi = Pi R", not_n4,
      at_least(2, 0, [](const SuiteConfig& c, Sampler& s) {
    ModelParams p = ModelParams::make(c.N);
    auto v = s.rats(c.m, B);
    Residual x;
    for (int i = 0; i + 1 < c.m; ++i) x.merge(check_fundamental(p, v, i));
    return x;
  }));
  add("pi", "absorption", "Pi absorbs the (1bar,1bar) entry of T", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        auto v = s.rats(c.m, B);
        return check_absorption(ModelParams::make(c.N), v, s.rat(B));
      }));
  add("pi", "special_components", "vanishing and delta component families", not_n4,
      at_least(2, 0, [](const SuiteConfig& c, Sampler& s) {
        auto e = check_special_components(ModelParams::make(c.N), s.rats(c.m, B));
        Residual x;
        for (const auto& y : e) x.merge(y);
        return x;
      }));
  add("pi", "expand_first_row", "f-expansion of the rows with first slot 1bar", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        return check_expand_row(ModelParams::make(c.N), s.rats(c.m, B), PiRow::FirstSlot1bar);
      }));
  add("pi", "expand_last_row", "f-expansion of the rows with last slot 1", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        return check_expand_row(ModelParams::make(c.N), s.rats(c.m, B), PiRow::LastSlot1);
      }));
  add("pi", "insertion_step", "single insertion step behind the row expansion", not_n4,
      [](const SuiteConfig& c, Sampler& s) { return check_insertion_step(ModelParams::make(c.N), s.rat(B)); });
  add("pi", "weight_conservation", "Pi preserves weights", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
    return of_count(pi_weight_violations(build_pi(ModelParams::make(c.N), s.rats(c.m, B))));
  }));
  add("pi", "amplitude_identities", "two-site amplitude identities dr = d + f(-u) d etc.", always,
      [](const SuiteConfig& c, Sampler& s) { return check_amplitude_relations(ModelParams::make(c.N), s.rat(B)); });

  // bethe
  add("bethe", "level_conditions", "level function exchange and shift properties", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        ModelParams p = ModelParams::make(c.N);
        const LevelFunction& l = level_for(c.N, c.m);
        auto v = s.rats(c.m, B);
        Residual x = level_symmetry_residual(p, l, v);
        x.merge(level_shift_residual(p, l, v));
        return x;
      }));
  add("bethe", "psi_symmetry", "Psi symmetric under u and v exchange", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_psi_symmetry(draw_state(c, s)).merged(); }));
  add("bethe", "wanted_term", "wanted term of the transfer matrix action", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_wanted(draw_state(c, s)); }));
  add("bethe", "master_decomposition", "wanted plus unwanted decomposition of Psi Q", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_master(draw_state(c, s)); }));
  add("bethe", "shift_relations", "unwanted terms as lattice differences", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_shift_relations(draw_state(c, s)).merged(); }));
  add("bethe", "g_shift", "chi_i g(v) = g(v^(i))", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
    BetheState st = draw_state(c, s);
    Residual x;
    for (int i = 0; i < st.m(); ++i) x.merge(check_g_shift(st, i, c.precision));
    return x;
  }));
  add("bethe", "g_u_shift", "g(u,v) prod a(u_1 - v_k) = g(u',v)", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_g_u_shift(draw_state(c, s), c.precision); }));
  add("bethe", "functional_equations", "psi and tau functional equations", not_n4,
      [](const SuiteConfig& c, Sampler& s) {
        auto u = s.rats(2, B);
        auto e = check_functional_eqs(ModelParams::make(c.N), u[0], u[1], c.precision);
        Residual x = e.first;
        x.merge(e.second);
        return x;
      });
  add("bethe", "chi_onshell", "chi against its rational form", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
    BetheState st = draw_state(c, s);
    Residual x;
    for (int i = 0; i < st.m(); ++i) x.merge(check_chi_onshell(st, i));
    return x;
  }));
  add("bethe", "f_antisymmetry", "f(v) Rr0(v) = -a(-v) f(-v)", always,
      [](const SuiteConfig& c, Sampler& s) { return check_f_antisymmetry(ModelParams::make(c.N), s.rat(B)); });

  // weights
  add("weights", "lie_structure", "O(N) commutation relations of the generators", always,
      [](const SuiteConfig& c, Sampler& s) {
        std::vector<GenIndex> t;
        for (int k = 0; k < 16; ++k)
          t.push_back({s.between(0, c.N - 1), s.between(0, c.N - 1), s.between(0, c.N - 1), s.between(0, c.N - 1)});
        return check_lie_structure(ModelParams::make(c.N), c.n, t);
      });
  add("weights", "covariance", "[M_a + M_ab, T_b(v)] = 0", always, [](const SuiteConfig& c, Sampler& s) {
    auto ctx = draw_ctx(c, s);
    return check_covariance(ctx, s.rat(B));
  });
  add("weights", "transfer_invariance", "generators commute with the transfer matrix", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto ctx = draw_ctx(c, s);
        return check_transfer_invariance(ctx, s.rat(B));
      });
  add("weights", "t_asymptotics", "1/v coefficient of T(v) is the generator", always,
      [](const SuiteConfig& c, Sampler& s) { return check_t_asymptotics(draw_ctx(c, s), Rat(1, 1000000)); });
  add("weights", "phi_weight_eigen", "Phi components are weight vectors with the expected weight", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        WeightEigenReport w = check_phi_weight_eigen(draw_state(c, s));
        Residual x = w.eigen;
        x.merge(of_count(w.formula_mismatches));
        return x;
      }));
  add("weights", "psi_weight", "Psi weight (n-m, m, 0, ..)", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
    BetheState st = draw_state(c, s);
    std::vector<int> w = weight_vector(st);
    Covector psi = psi_state(st);
    if (psi.is_zero()) throw DomainError("Psi vanishes at this point");
    Residual x = check_weight_eigen(psi, c.N, w);
    x.merge(of_bool(covector_weight(psi, c.N) == w));
    return x;
  }));
  // Per-point states with 2m > n carry non-dominant weights; only the summed
  // solution is highest weight, and it vanishes there. m is lowered to n/2.
  add("weights", "ordering", "weights of highest weight states are dominant, 1 <= m <= n/2", not_n4,
      [](const SuiteConfig& c, Sampler& s) {
        SuiteConfig e = c;
        e.n = std::max(e.n, 2);
        e.m = std::clamp(e.m, 1, e.n / 2);
        return of_bool(check_weight_ordering(weight_vector(draw_state(e, s)), e.N));
      });
  add("weights", "highest_weight", "raising generators on Psi through X and chi", not_n4,
      at_least(1, 0, [](const SuiteConfig& c, Sampler& s) { return check_highest_weight(draw_state(c, s)).merged(); }));

  // o3
  add("o3", "reduced_scalar", "O(3) reduced R as a scalar", always,
      [](const SuiteConfig&, Sampler& s) { return check_o3_reduced_scalar(s.rat(B)); });
  add("o3", "level_relations", "two-particle O(3) level function relations", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto e = check_o3_L_relations(s.rat(B), c.precision);
        Residual x = e.first;
        x.merge(e.second);
        return x;
      });
  add("o3", "psi_weight", "O(3) Psi weight n - m", always, at_least(1, 0, [](const SuiteConfig& c, Sampler& s) {
        SuiteConfig c3 = c;
        c3.N = 3;
        BetheState st = draw_state(c3, s);
        Covector psi = psi_state(st);
        if (psi.is_zero()) throw DomainError("Psi vanishes at this point");
        std::vector<int> w{c.n - c.m};
        Residual x = check_weight_eigen(psi, 3, w);
        x.merge(of_bool(covector_weight(psi, 3) == w));
        return x;
      }));

  // o4
  add("o4", "gamma_table", "Gamma intertwiner weights", always,
      [](const SuiteConfig&, Sampler&) { return of_count(size_t(gamma_weight_mismatches())); });
  add("o4", "completeness", "Gamma completeness relations", always, [](const SuiteConfig&, Sampler&) {
    auto e = check_oc();
    Residual x = e[0];
    x.merge(e[1]);
    return x;
  });
  add("o4", "r_decomposition", "O(4) R~ as SU(2) x SU(2)", always,
      [](const SuiteConfig&, Sampler& s) { return check_o4_r_decomposition(s.rat(B)); });
  add("o4", "transfer_split", "O(4) transfer matrix as SU(2) x SU(2)", always,
      [](const SuiteConfig& c, Sampler& s) {
        auto u = s.rats(c.n, B);
        return check_o4_transfer_split(u, s.rat(B));
      });
  add("o4", "weights", "O(4) weights (n - n+ - n-, n- - n+)", always, [](const SuiteConfig& c, Sampler& s) {
    int np = s.between(0, c.n), nm = s.between(0, c.n);
    auto u = s.rats(c.n, B);
    auto vp = s.rats(np, B), vm = s.rats(nm, B);
    Covector k = o4_assemble_K(su2_bethe_state(u, vp), su2_bethe_state(u, vm));
    if (k.is_zero()) throw DomainError("K vanishes at this point");
    std::vector<int> w{c.n - np - nm, nm - np};
    Residual x = check_weight_eigen(k, 4, w);
    x.merge(of_bool(covector_weight(k, 4) == w));
    if (2 * std::max(np, nm) <= c.n) x.merge(of_bool(check_weight_ordering(w, 4)));
    return x;
  });
  return r;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = build_registry();
  return r;
}

const std::vector<std::string>& manifest() {
  static const std::vector<std::string> names{
      "rmatrix.ybe", "rmatrix.ybe_reduced", "rmatrix.ybe_su2", "rmatrix.unitarity", "rmatrix.unitarity_su2",
      "rmatrix.crossing", "rmatrix.crossing_involution", "rmatrix.eigen_decomposition", "rmatrix.reduced_lower_rank",
      "rmatrix.amplitude_a",
      "monodromy.tts", "monodromy.expansion_t", "monodromy.expansion_crossed", "monodromy.crossed",
      "monodromy.triangularity", "monodromy.q_prefactor", "monodromy.zapletal", "monodromy.q_commutation",
      "pi.alt_recursion", "pi.closed_form_m2", "pi.fundamental", "pi.absorption", "pi.special_components",
      "pi.expand_first_row", "pi.expand_last_row", "pi.insertion_step", "pi.weight_conservation",
      "pi.amplitude_identities",
      "bethe.level_conditions", "bethe.psi_symmetry", "bethe.wanted_term", "bethe.master_decomposition",
      "bethe.shift_relations", "bethe.g_shift", "bethe.g_u_shift", "bethe.functional_equations", "bethe.chi_onshell",
      "bethe.f_antisymmetry",
      "weights.lie_structure", "weights.covariance", "weights.transfer_invariance", "weights.t_asymptotics",
      "weights.phi_weight_eigen", "weights.psi_weight", "weights.ordering", "weights.highest_weight",
      "o3.reduced_scalar", "o3.level_relations", "o3.psi_weight",
      "o4.gamma_table", "o4.completeness", "o4.r_decomposition", "o4.transfer_split", "o4.weights"};
  return names;
}

void verify_manifest() {
  std::map<std::string, int> seen;
  for (const auto& c : registry()) ++seen[c.name];
  for (const auto& [name, count] : seen)
    if (count != 1) throw std::logic_error("check '" + name + "' registered " + std::to_string(count) + " times");
  for (const auto& name : manifest())
    if (!seen.count(name)) throw std::logic_error("manifest check '" + name + "' is not registered");
  if (seen.size() != manifest().size()) throw std::logic_error("registry holds checks missing from the manifest");
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

bool in_suite(const CheckSpec& c, const SuiteConfig& cfg) {
  if (cfg.suite != "all") return c.suite == cfg.suite;
  return true;
}

// o3 / o4 checks run at their own N inside suite=all.
SuiteConfig effective(const CheckSpec& c, const SuiteConfig& cfg) {
  SuiteConfig e = cfg;
  if (c.suite == "o3") e.N = 3;
  if (c.suite == "o4") e.N = 4;
  return e;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  verify_manifest();
  std::vector<CheckReport> out;
  for (const CheckSpec& spec : registry()) {
    if (!in_suite(spec, cfg)) continue;
    SuiteConfig e = effective(spec, cfg);
    if (!spec.applicable(e)) continue;
    CheckReport rep{spec.name, spec.ref, 0, 0, "0", 0};
    auto t0 = std::chrono::steady_clock::now();
    Residual worst;
    std::string failure;
    for (int i = 0; i < cfg.samples; ++i) {
      Sampler s(point_seed(cfg.seed ^ fnv1a(spec.name), uint64_t(i)));
      ++rep.attempted;
      int tries = 0;
      for (;;) {
        if (++tries > kRetryBudget)
          throw SamplingExhausted(spec.name + ": no admissible point after " + std::to_string(kRetryBudget) + " draws");
        try {
          Residual r = spec.run(e, s);
          if (r.ok()) ++rep.passed;
          worst.merge(r);
        } catch (const PoleError&) {
          continue;
        } catch (const DomainError&) {
          continue;
        } catch (const ConditionUnmet& ex) {
          failure = std::string("condition unmet: ") + ex.what();
        }
        break;
      }
    }
    rep.max_residual = failure.empty() ? worst.str() : failure;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(rep));
  }
  return out;
}

json report_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(r.to_json());
  return {{"version", 1}, {"config", cfg.to_json()}, {"checks", checks}};
}

void write_report(const json& report, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open report file " + path);
  f << report.dump(2) << "\n";
  if (!f) throw std::runtime_error("cannot write report file " + path);
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.passed != r.attempted) return 1;
  return 0;
}

}  // namespace bethe
