#pragma once
#include <array>
#include <tuple>
#include <vector>

#include "bethe/bethe.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/residual.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// Right action of the generator M_lo^up on x (all slots full O(N) sites):
//   <.. a_i ..| M_lo^up = sum_i ( [a_i = lo] <.. up ..| - [a_i = conj up] <.. conj lo ..| )
// i.e. the (lo, up) auxiliary entry of sum_i (P_ia - K_ia).
Covector generator_apply(const Covector& x, int lo, int up);
LinOp generator_action(const ModelParams& p, int n, int lo, int up);

// [M_a^a', M_b^b'] = -[a = b'] M_b^a' + [a' = conj b'] M_b^{conj a}
//                    + [b = a'] M_a^b' - [a = conj b] M_{conj a'}^b'
// where [X, Y] acts as x -> x X Y - x Y X. Checked on every basis covector
// of V^{1..n} for each index tuple (a, a', b, b').
using GenIndex = std::array<int, 4>;
Residual check_lie_structure(const ModelParams& p, int n, const std::vector<GenIndex>& tuples);
std::vector<GenIndex> all_generator_tuples(int N);

// [M_a + M_ab, T_b(v)] = 0 on V^{1..n} (x) V_a (x) V_b with
// M_a = sum_i (P_ia - K_ia), M_ab = P_ab - K_ab.
Residual check_covariance(const MonodromyContext& ctx, const Rat& v);
// Every generator commutes with the transfer matrix tr T(v).
Residual check_transfer_invariance(const MonodromyContext& ctx, const Rat& v);

// The 1/v coefficient of T(v)_lo^up is M_lo^up: Richardson extrapolation of
// v (T(v) - 1) from v = 10^6 and 2 10^6, compared with the generator.
// Returns the largest deviation (exact rational) and compares it with tol.
Residual check_t_asymptotics(const MonodromyContext& ctx, const Rat& tol);

// Weight of a covector that is a weight vector: the common weight of all its
// entries. DomainError for the zero covector or mixed weights.
std::vector<int> covector_weight(const Covector& x, int N);
// Expected weight of Phi^beta: (n - m, 0, ..) plus the weight of beta.
std::vector<int> expected_phi_weight(const BetheState& s, key::Key beta);
// Weight of Psi for the trivial level function: (n - m, m, 0, ...) for N >= 5,
// (n - m) for N = 3.
std::vector<int> weight_vector(const BetheState& s);

struct WeightEigenReport {
  Residual eigen;           // Phi W_k - w_k Phi for all k, beta
  size_t formula_mismatches = 0;  // beta whose Phi weight differs from the formula
};
WeightEigenReport check_phi_weight_eigen(const BetheState& s);
// Eigen property for an arbitrary covector with a claimed weight.
Residual check_weight_eigen(const Covector& x, int N, const std::vector<int>& w);

// w_1 >= ... >= w_[N/2] >= 0 (N odd) or w_1 >= ... >= |w_[N/2]| (N even).
bool check_weight_ordering(const std::vector<int>& w, int N);

struct HighestWeightReport {
  Residual lower_first;   // Psi M_{g}^{1}
  Residual upper_last;    // Psi M_{1bar}^{g}
  Residual corner;        // Psi M_{1bar}^{1}
  Residual reduced;       // Psi M_g^{g'} = 0 for g' < g reduced
  Residual merged() const;
};
// Per-point identities expressing Psi M_lo^up through X^(i), X^(ij), chi.
HighestWeightReport check_highest_weight(const BetheState& s);

}  // namespace bethe
