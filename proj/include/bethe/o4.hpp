#pragma once
#include <array>
#include <vector>

#include "bethe/residual.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// Intertwiner between SU(2)+ (x) SU(2)- spinor pairs (A, B) and the O(4)
// vector index. It is diagonal: each pair maps to one O(4) code with a sign.
//   (up, up) -> 1 with -1, (up, down) -> 2, (down, up) -> 2bar, (down, down) -> 1bar
struct GammaEntry {
  int code;
  int sign;
};
GammaEntry gamma_entry(int a, int b);  // a, b in {0 = up, 1 = down}

// Gamma as a map SU2 (x) SU2 -> V(4) and its dual V(4) -> SU2 (x) SU2.
struct GammaPair {
  LinOp up;    // Gamma_{AB}^alpha
  LinOp down;  // Gamma_alpha^{AB}
};
GammaPair gamma_intertwiner();
// Both completeness relations: up then down and down then up are identities.
std::array<Residual, 2> check_oc();
// weight(alpha) = (s+ + s-, s+ - s-) with s = +1/2 for up, -1/2 for down,
// for all four pairs. Returns the number of mismatches.
int gamma_weight_mismatches();

// K(+) (x) K(-) on n SU(2) sites each -> O(4) covector on n sites: site by
// site the pair (A_k, B_k) goes to Gamma.
Covector o4_assemble_K(const Covector& kplus, const Covector& kminus);

// R~(u) of O(4) on V(4) (x) V(4) equals, after assembly, R~+(u) (x) R~-(u).
Residual check_o4_r_decomposition(const Rat& u);

// SU(2) Bethe state <up...up| C(u, v_m) ... C(u, v_1), C = T_up^down.
Covector su2_bethe_state(const std::vector<Rat>& u, const std::vector<Rat>& v);

// Assembly intertwines the normalized transfer matrices:
//   assemble(K+, K-) tr T~O(4)(u, v) = assemble(K+ tr T~+(u, v), K- tr T~-(u, v))
// for every pair of basis covectors on SU(2)^n.
Residual check_o4_transfer_split(const std::vector<Rat>& u, const Rat& v);

}  // namespace bethe
