#pragma once
#include <array>

#include "bethe/model.hpp"
#include "bethe/residual.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// ON        : R = 1 + c P + d K on V(N)
// ONReduced : the same with N -> N-2 on the reduced sites (d -> d_ring)
// SU2       : R = 1 + c P on C^2
enum class RFamily { ON, ONReduced, SU2 };

struct RKind {
  RFamily fam = RFamily::ON;
  ModelParams p;

  static RKind on(const ModelParams& p) { return {RFamily::ON, p}; }
  static RKind reduced(const ModelParams& p) { return {RFamily::ONReduced, p}; }
  static RKind su2() { return {RFamily::SU2, ModelParams::make(4)}; }

  Site site() const;
  Rat c(const Rat& u) const { return p.c(u); }
  Rat d(const Rat& u) const;
  Rat a(const Rat& u) const { return p.a(u); }
  std::string str() const;
};

// How a factor of a product of R-matrices acts on its two slots.
//   R     : the full R(u)
//   RNorm : R(u)/a(u)
//   P, K  : only the permutation / annihilation-creation part, unit weight
enum class FactorKind { R, RNorm, P, K };

// R(u) acting on slots i, j of x (the operator is symmetric in i, j).
Covector apply_r(const Covector& x, int i, int j, const Rat& u, const RKind& k, bool normalized = false);
Covector apply_factor(const Covector& x, int i, int j, FactorKind fk, const Rat& u, const RKind& k);

// Two-site operator with components R_{ab}^{dc}(u): input labels (c, d),
// output labels (a, b).
LinOp build_r(const Rat& u, const RKind& k, bool normalized);
Rat r_component(const Rat& u, const RKind& k, int a, int b, int c, int d);

// R12(u12) R13(u13) R23(u23) = R23(u23) R13(u13) R12(u12) on V(x)V(x)V.
Residual check_ybe(const Rat& u1, const Rat& u2, const Rat& u3, const RKind& k);
// R~21(-u) R~12(u) = 1
Residual check_unitarity(const Rat& u, const RKind& k);
// R_{ab}^{dc}(u) = sum_{p,q} C^{dp} R_{pa}^{cq}(1/nu - u) C_{qb}
Residual check_crossing(const Rat& u, const ModelParams& p);
// Applying the crossing map twice returns R(u).
Residual check_crossing_involution(const Rat& u, const ModelParams& p);
// Eigenvectors e1(x)e2 + e2(x)e1, e1(x)e2 - e2(x)e1 and sum_g e_g(x)e_gbar.
std::array<Residual, 3> check_eigen_decomp(const Rat& u, const ModelParams& p);
// Reduced R on V(N) equals the O(N-2) R after relabelling (N >= 5).
Residual check_reduced_is_lower_rank(const Rat& u, const ModelParams& p);
// N = 3: the reduced R is the scalar 1 - 1/u + 1/(u+1/2); normalized it is
// (u+1)(u-1/2)/((u-1)(u+1/2)).
Residual check_o3_reduced_scalar(const Rat& u);

}  // namespace bethe
