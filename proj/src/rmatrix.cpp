#include "bethe/rmatrix.hpp"

#include "bethe/errors.hpp"

namespace bethe {

Site RKind::site() const {
  switch (fam) {
    case RFamily::ON: return full_site(p.N);
    case RFamily::ONReduced: return reduced_site(p.N);
    case RFamily::SU2: return su2_site();
  }
  return full_site(p.N);
}

Rat RKind::d(const Rat& u) const {
  switch (fam) {
    case RFamily::ON: return p.d(u);
    case RFamily::ONReduced: return p.d_ring(u);
    case RFamily::SU2: return Rat(0);
  }
  return Rat(0);
}

std::string RKind::str() const {
  switch (fam) {
    case RFamily::ON: return "O(" + std::to_string(p.N) + ")";
    case RFamily::ONReduced: return "O(" + std::to_string(p.N - 2) + ") reduced";
    case RFamily::SU2: return "SU(2)";
  }
  return "?";
}

Covector apply_r(const Covector& x, int i, int j, const Rat& u, const RKind& k, bool normalized) {
  Rat id = 1, c = k.c(u), d = k.d(u);
  if (normalized) {
    Rat a = k.a(u);
    if (a.is_zero()) throw PoleError("normalized R has a pole at u = " + u.str() + " (a(u) = 0)");
    Rat ia = a.inv();
    id = ia, c *= ia, d *= ia;
  }
  return apply_pk(x, i, j, id, c, d);
}

Covector apply_factor(const Covector& x, int i, int j, FactorKind fk, const Rat& u, const RKind& k) {
  switch (fk) {
    case FactorKind::R: return apply_r(x, i, j, u, k, false);
    case FactorKind::RNorm: return apply_r(x, i, j, u, k, true);
    case FactorKind::P: return apply_pk(x, i, j, 0, 1, 0);
    case FactorKind::K: return apply_pk(x, i, j, 0, 0, 1);
  }
  return x;
}

LinOp build_r(const Rat& u, const RKind& k, bool normalized) {
  Signature sig{k.site(), k.site()};
  // evaluate amplitudes once so poles surface even for an empty basis
  Rat c = k.c(u);
  (void)c;
  if (normalized && k.a(u).is_zero()) throw PoleError("normalized R has a pole at u = " + u.str());
  return LinOp::from_function(sig, sig, [&](const Covector& b) { return apply_r(b, 0, 1, u, k, normalized); });
}

Rat r_component(const Rat& u, const RKind& k, int a, int b, int c, int d) {
  int dim = k.site().dim();
  for (int l : {a, b, c, d})
    if (l < 0 || l >= dim) throw InvalidLabel("label code out of range");
  Rat r = 0;
  if (a == c && b == d) r += 1;
  if (a == d && b == c) r += k.c(u);
  if (c == dim - 1 - d && a == dim - 1 - b) r += k.d(u);
  return r;
}

Residual check_ybe(const Rat& u1, const Rat& u2, const Rat& u3, const RKind& k) {
  Rat u12 = u1 - u2, u13 = u1 - u3, u23 = u2 - u3;
  Signature sig(3, k.site());
  return op_residual(
      sig,
      [&](const Covector& x) { return apply_r(apply_r(apply_r(x, 0, 1, u12, k), 0, 2, u13, k), 1, 2, u23, k); },
      [&](const Covector& x) { return apply_r(apply_r(apply_r(x, 1, 2, u23, k), 0, 2, u13, k), 0, 1, u12, k); });
}

Residual check_unitarity(const Rat& u, const RKind& k) {
  Signature sig(2, k.site());
  return op_residual(
      sig, [&](const Covector& x) { return apply_r(apply_r(x, 1, 0, -u, k, true), 0, 1, u, k, true); },
      [](const Covector& x) { return x; });
}

namespace {
// C^{ab} and C_{ab} in the complex basis are both delta_{a, bbar}.
int cmat(int a, int b, int dim) { return a == dim - 1 - b ? 1 : 0; }

// Crossing image of a component function: (X R)(u)_{ab}^{dc} =
// sum_{p,q} C^{dp} R_{pa}^{cq}(uhat) C_{qb}.
template <class F>
Rat crossed_component(const F& comp, int dim, int a, int b, int c, int d) {
  Rat s = 0;
  for (int p = 0; p < dim; ++p) {
    if (!cmat(d, p, dim)) continue;
    for (int q = 0; q < dim; ++q) {
      if (!cmat(q, b, dim)) continue;
      s += comp(p, a, q, c);
    }
  }
  return s;
}
}  // namespace

Residual check_crossing(const Rat& u, const ModelParams& p) {
  RKind k = RKind::on(p);
  Rat uhat = p.inv_nu - u;
  int dim = p.N;
  Residual r;
  auto at_hat = [&](int a, int b, int c, int d) { return r_component(uhat, k, a, b, c, d); };
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d)
          r.merge(residual(r_component(u, k, a, b, c, d), crossed_component(at_hat, dim, a, b, c, d)));
  return r;
}

Residual check_crossing_involution(const Rat& u, const ModelParams& p) {
  RKind k = RKind::on(p);
  int dim = p.N;
  // once: evaluated at uhat; twice: at uhat-hat = u
  auto once = [&](int a, int b, int c, int d) {
    auto at_u = [&](int a2, int b2, int c2, int d2) { return r_component(u, k, a2, b2, c2, d2); };
    return crossed_component(at_u, dim, a, b, c, d);
  };
  Residual r;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d)
          r.merge(residual(r_component(u, k, a, b, c, d), crossed_component(once, dim, a, b, c, d)));
  return r;
}

std::array<Residual, 3> check_eigen_decomp(const Rat& u, const ModelParams& p) {
  RKind k = RKind::on(p);
  REigenvalues ev = r_eigenvalues(u, p);
  Site s = full_site(p.N);
  Signature sig{s, s};
  Covector e12 = Covector::from_labels(sig, {0, 1}), e21 = Covector::from_labels(sig, {1, 0});
  Covector sym = e12 + e21, anti = e12 - e21;
  Covector tr = insert_c_upper(Covector::scalar(1), 0, s);
  return {residual(apply_r(sym, 0, 1, u, k), ev.plus * sym), residual(apply_r(anti, 0, 1, u, k), ev.minus * anti),
          residual(apply_r(tr, 0, 1, u, k), ev.zero * tr)};
}

Residual check_reduced_is_lower_rank(const Rat& u, const ModelParams& p) {
  if (p.N < 5) throw UnsupportedN("the reduced R is an O(N-2) R-matrix only for N >= 5");
  LinOp red = build_r(u, RKind::reduced(p), false);
  LinOp low = build_r(u, RKind::on(ModelParams::make(p.N - 2)), false);
  // reduced codes and O(N-2) codes coincide, so only the signatures differ
  LinOp relabeled(red.in(), red.out());
  for (const auto& [kk, row] : low.rows()) relabeled.set_row(kk, Covector(red.out(), row));
  return residual(red, relabeled);
}

Residual check_o3_reduced_scalar(const Rat& u) {
  ModelParams p = ModelParams::make(3);
  RKind k = RKind::reduced(p);
  Signature sig{k.site(), k.site()};
  Covector one = Covector::from_labels(sig, {0, 0});
  Residual r = residual(apply_r(one, 0, 1, u, k).coeff({0, 0}), 1 - u.inv() + (u + Rat(1, 2)).inv());
  r.merge(residual(apply_r(one, 0, 1, u, k, true).coeff({0, 0}), o3_reduced_r_tilde(u)));
  return r;
}

}  // namespace bethe
