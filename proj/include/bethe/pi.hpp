#pragma once
#include <array>
#include <vector>

#include "bethe/model.hpp"
#include "bethe/residual.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// The map Pi(v): covectors on reduced sites V^{1..m} -> covectors on full
// sites, acting from the right (L -> L.Pi). Rows of `map` are reduced
// multi-indices, images are full covectors.
struct PiMap {
  ModelParams p;
  std::vector<Rat> v;
  LinOp map;

  int m() const { return int(v.size()); }
  Covector apply(const Covector& l) const { return map.apply(l); }
};

// Applies Pi(v) to slots first..first+m-1 of x (reduced sites); all other
// slots are spectators. Recursion peels the first slot: embed it, apply
// Pi(v_2..v_m) to the rest, then the (1bar, 1bar) entry of T(v, v_1 - 1).
// m = 0 is the identity.
Covector pi_apply(const ModelParams& p, const Covector& x, int first, const std::vector<Rat>& v);
// Recursion peeling the last slot: embed it, Pi(v_1..v_{m-1}) on the rest,
// then the (1bar, 1bar) entry of T(v, v_m - 1/nu + 1).
Covector pi_alt_apply(const ModelParams& p, const Covector& x, int first, const std::vector<Rat>& v);

PiMap build_pi(const ModelParams& p, const std::vector<Rat>& v);      // UnsupportedN for N = 4
PiMap build_pi_alt(const ModelParams& p, const std::vector<Rat>& v);  // UnsupportedN for N = 4

Residual check_pi_alt(const ModelParams& p, const std::vector<Rat>& v);
// m = 2: Pi = pi (x) pi + f(v_12) C^{12} <1bar, 1|
Residual check_pi2_closed_form(const ModelParams& p, const Rat& v1, const Rat& v2);
// Rr_{i,i+1}(v_{i,i+1}) Pi(v) = Pi(v with i, i+1 exchanged) R_{i,i+1}(v_{i,i+1})
Residual check_fundamental(const ModelParams& p, const std::vector<Rat>& v, int i);
// Pi(v) followed by the (1bar, 1bar) entry of T(v, u0) equals Pi(v).
Residual check_absorption(const ModelParams& p, const std::vector<Rat>& v, const Rat& u0);

// Component families of Pi, m >= 2:
//   [0] first slot 1 rows vanish
//   [1] first slot reduced: delta times Pi of the remaining slots
//   [2] last slot 1bar rows vanish
//   [3] last slot reduced: delta times Pi of the remaining slots
std::array<Residual, 4> check_special_components(const ModelParams& p, const std::vector<Rat>& v);

// Expansion of Pi in f-terms with reduced R chains and C insertions:
// FirstSlot1bar expands in f(v_1 - v_j), LastSlot1 in f(v_j - v_m).
enum class PiRow { FirstSlot1bar, LastSlot1 };
// Full expansion of L.Pi, reproducing pi_apply exactly.
Covector pi_expand(const ModelParams& p, const Covector& l, const std::vector<Rat>& v, PiRow which);
// Only the f-terms, i.e. the rows with first slot 1bar (resp. last slot 1).
Covector expand_row(const ModelParams& p, const Covector& l, const std::vector<Rat>& v, PiRow which);
// Compares expand_row with the matching rows of build_pi, and pi_expand with
// the full map, over all reduced basis covectors.
Residual check_expand_row(const ModelParams& p, const std::vector<Rat>& v, PiRow which);

// With site 1 restricted to reduced labels:
//   e_b R_1b(x) e_a R_1a(1) = e_b e_a R_1a(1),   e = insertion of 1bar.
Residual check_insertion_step(const ModelParams& p, const Rat& x);

// Every nonzero entry of Pi maps a reduced multi-index to a full multi-index
// of the same weight. Returns the number of weight-violating entries.
size_t pi_weight_violations(const PiMap& pi);

}  // namespace bethe
