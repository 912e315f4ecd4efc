#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bethe/model.hpp"
#include "bethe/residual.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// Covector-valued function of m ordered arguments with values on the reduced
// sites V^{1..m}. Flags are set only after the matching self-test passed.
struct LevelFunction {
  std::string name;
  int m = 0;
  std::function<Covector(const std::vector<Rat>&)> eval;
  bool satisfies_symmetry = false;
  bool satisfies_shift = false;
  bool is_highest_weight = false;

  Covector operator()(const std::vector<Rat>& v) const;
};

// Exchange property: L(.., v_i, v_{i+1}, ..) equals L(.., v_{i+1}, v_i, ..)
// with slots i, i+1 exchanged and the normalized reduced R(v_i - v_{i+1})
// applied. Checked for every adjacent pair at v.
Residual level_symmetry_residual(const ModelParams& p, const LevelFunction& l, const std::vector<Rat>& v);
// Shift property: L(v with v_i + kappa) = L(v) Qr(v; i), Qr the normalized
// reduced Q. Checked for every i at v.
Residual level_shift_residual(const ModelParams& p, const LevelFunction& l, const std::vector<Rat>& v);
// Runs both self-tests at a few fixed points and sets the flags that pass.
void certify(const ModelParams& p, LevelFunction& l);

// The level function used by all condition-requiring checks.
//   N >= 5 : the constant <2,...,2| (highest weight of the reduced chain)
//   N  = 3 : the scalar prod_{i<j} l(v_i - v_j) with the O(3) lattice level
//            factor l (the constant 1 violates the exchange property)
// UnsupportedN for N = 4.
LevelFunction trivial_L(const ModelParams& p, int m);

// n quantum sites with parameters u, m creation parameters v and a level
// function L with L.m == m.
struct BetheState {
  ModelParams p;
  std::vector<Rat> u, v;
  LevelFunction L;

  // Validates n >= m >= 0, L.m == m and pole-freeness of the amplitudes.
  static BetheState make(const ModelParams& p, std::vector<Rat> u, std::vector<Rat> v, LevelFunction L);
  int n() const { return int(u.size()); }
  int m() const { return int(v.size()); }
  // copies with replaced / shifted arguments (no validation)
  BetheState with_u(std::vector<Rat> nu) const;
  BetheState with_v(std::vector<Rat> nv) const;
  BetheState shift_v(std::initializer_list<int> idx) const;
  BetheState shift_u(int i) const;
};

Covector omega_state(const ModelParams& p, int n);

// lpi: covector on full sites V^{1..m} (the beta labels). Returns
//   lpi_beta  start T_1^{beta_m}(u, v_m) ... T_1^{beta_1}(u, v_1)
// with the rightmost factor applied last. start is a covector on V^{1..n}.
Covector apply_creation(const ModelParams& p, const std::vector<Rat>& u, const std::vector<Rat>& v,
                        const Covector& lpi, const Covector& start);
// The same with start = reference state and lpi = l.Pi(v) for a reduced l.
Covector psi_from_level(const ModelParams& p, const std::vector<Rat>& u, const std::vector<Rat>& v,
                        const Covector& l);

// Phi^{beta} for every reduced multi-index beta (zero ones included).
std::map<key::Key, Covector> phi_state(const BetheState& s);
Covector psi_state(const BetheState& s);

struct PsiSymmetryReport {
  std::vector<Residual> u_exchange;  // per adjacent i
  std::vector<Residual> v_exchange;  // per adjacent i
  Residual merged() const;
};
// ConditionUnmet unless L.satisfies_symmetry.
PsiSymmetryReport check_psi_symmetry(const BetheState& s);

Rat a1_fn(const ModelParams& p, const std::vector<Rat>& u, const Rat& v);  // prod_k a(u_k - v)
// chi_i = 1/a1(u, v_i') prod_{k != i} a(v_k - v_i) / a(v_i' - v_k)
Rat chi_factor(const BetheState& s, int i);

// X^(i)_gamma for every reduced gamma (index = reduced code).
std::vector<Covector> x_single(const BetheState& s, int i);
Covector x_pair(const BetheState& s, int i, int j);

// prod_{k>=2} a(u_k1) prod_k a(u_1 - v_k) L(v) Phi(u', v)
Covector wanted_term(const BetheState& s);
// Psi A_Q with A_Q moved to the reference state and u -> u' in all creation
// operators, times prod_k a(u_1 - v_k), equals wanted_term.
Residual check_wanted(const BetheState& s);

struct Unwanted {
  // [i][gamma]
  std::vector<std::vector<Covector>> c_a, c_d, c3_d, c3_a3;
  // [i][j], empty for i == j
  std::vector<std::vector<Covector>> c2_a, c2_d, c2_a3;
};
Unwanted unwanted_decomposition(const BetheState& s);
// Psi (sum_b T_Q(u;1)_b^b) = wanted + unwanted contributions through the
// C_Q, C_{2,Q} and C_{3,Q} blocks.
Residual check_master(const BetheState& s);

struct ShiftReport {
  Residual c1, c2, c3;
  Residual merged() const;
};
ShiftReport check_shift_relations(const BetheState& s);

// g = prod_{i,j} psi(u_i - v_j) prod_{i<j} tau(v_i - v_j)
Scalar g_function(const BetheState& s, int digits);
// chi_i g(v) = g(v^(i)); exact for N = 3.
Residual check_g_shift(const BetheState& s, int i, int digits);
// g(u, v) prod_k a(u_1 - v_k) = g(u', v)
Residual check_g_u_shift(const BetheState& s, int digits);

struct LatticePoint {
  std::vector<long> offsets;
  std::vector<Rat> base;
  std::vector<Rat> v(const ModelParams& p) const;  // v_i = base_i - offset_i kappa
};
// All offsets in [-window, window]^m around base.
std::vector<LatticePoint> lattice_points(const std::vector<Rat>& base, int window);

// chi at the unshifted point, 1/a1(u, v_i) prod_{k != i} a(v_ki)/a(v_ik),
// against its rational form
//   prod_k (v_i - u_k)/(v_i - u_k + 1) prod_{k != i} (v_ik + 1)/(v_ik - 1).
Residual check_chi_onshell(const BetheState& s, int i);

}  // namespace bethe
