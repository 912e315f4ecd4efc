#pragma once
#include <utility>
#include <vector>

#include "bethe/model.hpp"
#include "bethe/residual.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// One factor of an auxiliary-space chain: an R-type operator on
// (slot, aux) with spectral argument arg.
struct ChainFactor {
  int slot;
  FactorKind kind;
  Rat arg;
};

// Appends an auxiliary site carrying `upper`, applies the factors in order
// (each acting on its slot and the auxiliary site), then keeps the component
// with auxiliary label `lower` and drops the auxiliary site. This is the
// (lower, upper) auxiliary matrix element of the factor product, acting from
// the right on x.
Covector aux_chain(const Covector& x, const RKind& k, int upper, const std::vector<ChainFactor>& factors, int lower);

// Quantum sites 0..n-1 with spectral parameters u. `kind` selects the
// R-matrix family (ONReduced gives the higher-level monodromy on reduced
// sites). The shift u -> u + kappa always comes from p.
struct MonodromyContext {
  ModelParams p;
  std::vector<Rat> u;
  RKind kind;

  static MonodromyContext make(const ModelParams& p, std::vector<Rat> u);
  static MonodromyContext make_reduced(const ModelParams& p, std::vector<Rat> u);
  int n() const { return int(u.size()); }
  Site site() const { return kind.site(); }
  Signature quantum_sig() const { return Signature(u.size(), site()); }
  // The same context with u_i -> u_i + kappa.
  MonodromyContext shifted(int i) const;
};

// Blocks of T in the 3x3 layout: rows are the upper (outgoing) auxiliary
// label 1 | reduced | 1bar, columns the lower label.
//   A1 = T_1^1      B1_r = T_r^1      B2 = T_1bar^1
//   C1^r = T_1^r    D_r^s = T_r^s     B3^r = T_1bar^r
//   C2 = T_1^1bar   C3_r = T_r^1bar   A3 = T_1bar^1bar
enum class TBlock { A1, B1, B2, C1, D, B3, C2, C3, A3 };
struct AuxLabels {
  int lower, upper;
};
// r, s are reduced codes (used only by blocks that carry them).
AuxLabels block_labels(TBlock b, int N, int r = 0, int s = 0);

// Right action of T_{1..n,aux}(u, v) = R_{1,aux}(u_1 - v) ... R_{n,aux}(u_n - v)
// on x, whose slots 0..n-1 are the quantum sites and `aux` an extra site.
Covector t_act(const MonodromyContext& ctx, const Covector& x, const Rat& v, int aux);
// Auxiliary matrix element (lower, upper) of T(u, v) acting on x on V^{1..n}.
Covector t_entry_apply(const MonodromyContext& ctx, const Covector& x, const Rat& v, int lower, int upper);
LinOp t_entry(const MonodromyContext& ctx, const Rat& v, int lower, int upper);

// Crossed monodromy T_{aux,1..n}(v, u) = R_{aux,n}(v - u_n) ... R_{aux,1}(v - u_1).
Covector crossed_act(const MonodromyContext& ctx, const Covector& x, const Rat& v, int aux);
Covector crossed_entry_apply(const MonodromyContext& ctx, const Covector& x, const Rat& v, int lower, int upper);
LinOp crossed_t_entry(const MonodromyContext& ctx, const Rat& v, int lower, int upper);

// Crossed entry (lower y, upper x) at v equals the T entry
// (lower xbar, upper ybar) at v - 1/nu, for all labels.
Residual check_crossed(const MonodromyContext& ctx, const Rat& v);

// T_a(u_a) T_b(u_b) R_ab(u_a - u_b) = R_ab(u_a - u_b) T_b(u_b) T_a(u_a)
// on V^{1..n} (x) V_a (x) V_b.
Residual check_tts(const MonodromyContext& ctx, const Rat& ua, const Rat& ub);

// Expansion of T (first) and of the crossed T (second) into P and K terms
// with shifted arguments, compared entry by entry.
std::pair<Residual, Residual> check_expansions(const MonodromyContext& ctx, const Rat& v);

// Modified monodromy T_Q(u; i): factors R(u_k - u_i') for k < i, P at i,
// R(u_k - u_i) for k > i. normalized divides each R by a(arg).
std::vector<ChainFactor> tq_factors(const MonodromyContext& ctx, int i, bool normalized);
Covector tq_act(const MonodromyContext& ctx, const Covector& x, int i, int aux, bool normalized);
Covector tq_entry_apply(const MonodromyContext& ctx, const Covector& x, int i, int lower, int upper, bool normalized);
LinOp tq_entry(const MonodromyContext& ctx, int i, int lower, int upper, bool normalized);
// Q(u; i) = tr_aux T_Q(u; i)
Covector q_apply(const MonodromyContext& ctx, const Covector& x, int i, bool normalized);
LinOp q_matrix(const MonodromyContext& ctx, int i, bool normalized);
// Scalar relating the normalized and unnormalized Q:
//   prod_{k<i} 1/a(u_k - u_i') * prod_{k>i} 1/a(u_k - u_i)
Rat q_prefactor(const MonodromyContext& ctx, int i);
// q_matrix(normalized) = q_prefactor * q_matrix(unnormalized)
Residual check_q_prefactor(const MonodromyContext& ctx, int i);

// T~_Q(u; i)_a T(u', v)_b R_ab(u_i - v) = R_ab(u_i' - v) T(u, v)_b T~_Q(u; i)_a
// with u' = u shifted at i.
Residual check_zapletal(const MonodromyContext& ctx, int i, const Rat& v);
// Q(u; i) Q(u^(i); j) = Q(u; j) Q(u^(j); i), normalized.
Residual check_q_commutation(const MonodromyContext& ctx, int i, int j);

// Action of T and T_Q(u; 0) on the reference state <1,...,1|.
struct TriangularityReport {
  Residual zero_pattern;  // entries that must vanish
  Residual a1, a2, a3;    // diagonal eigenvalues prod a, 1, prod (1 + d)
  Residual tq_pattern;    // only lower = 1 survives for T_Q, A_Q eigenvalue
  Residual merged() const;
};
TriangularityReport check_triangularity(const MonodromyContext& ctx, const Rat& v);

Covector reference_state(const Signature& sig);  // <1,...,1| = all codes 0

}  // namespace bethe
