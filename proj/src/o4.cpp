#include "bethe/o4.hpp"

#include "bethe/errors.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/rmatrix.hpp"

namespace bethe {

GammaEntry gamma_entry(int a, int b) {
  if (a < 0 || a > 1 || b < 0 || b > 1) throw InvalidLabel("spinor labels are 0 (up) and 1 (down)");
  static const GammaEntry table[2][2] = {{{0, -1}, {1, 1}}, {{2, 1}, {3, 1}}};
  return table[a][b];
}

GammaPair gamma_intertwiner() {
  Site su = su2_site(), v4 = full_site(4);
  Signature pair{su, su}, vec{v4};
  GammaPair g{LinOp(pair, vec), LinOp(vec, pair)};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      GammaEntry e = gamma_entry(a, b);
      g.up.set_row(key::pack({a, b}), Covector::from_labels(vec, {e.code}, Rat(e.sign)));
      g.down.set_row(key::pack({e.code}), Covector::from_labels(pair, {a, b}, Rat(e.sign)));
    }
  return g;
}

std::array<Residual, 2> check_oc() {
  GammaPair g = gamma_intertwiner();
  return {residual(g.up.then(g.down), LinOp::identity(g.up.in())),
          residual(g.down.then(g.up), LinOp::identity(g.down.in()))};
}

int gamma_weight_mismatches() {
  int bad = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      // doubled spins avoid halves: 2s = +1 for up, -1 for down
      int sp = a == 0 ? 1 : -1, sm = b == 0 ? 1 : -1;
      std::vector<int> expect{(sp + sm) / 2, (sp - sm) / 2};
      Signature v4{full_site(4)};
      if (weight_of(v4, key::pack({gamma_entry(a, b).code}), 4) != expect) ++bad;
    }
  return bad;
}

Covector o4_assemble_K(const Covector& kplus, const Covector& kminus) {
  int n = kplus.rank();
  if (kminus.rank() != n) throw DimensionMismatch("K+ and K- need the same number of sites");
  for (const Site& s : kplus.sig())
    if (s.kind != SiteKind::SU2) throw DimensionMismatch("K+ must live on SU(2) sites");
  for (const Site& s : kminus.sig())
    if (s.kind != SiteKind::SU2) throw DimensionMismatch("K- must live on SU(2) sites");
  Signature sig(n, full_site(4));
  std::vector<Covector::Entry> out;
  for (const auto& [kp, vp] : kplus.entries())
    for (const auto& [km, vm] : kminus.entries()) {
      key::Key k = 0;
      int sign = 1;
      for (int s = 0; s < n; ++s) {
        GammaEntry e = gamma_entry(key::get(kp, n, s), key::get(km, n, s));
        k = key::set(k, n, s, e.code);
        sign *= e.sign;
      }
      out.push_back({k, Rat(sign) * vp * vm});
    }
  return Covector(std::move(sig), std::move(out));
}

Residual check_o4_r_decomposition(const Rat& u) {
  ModelParams p4 = ModelParams::make(4);
  RKind o4 = RKind::on(p4), su = RKind::su2();
  Signature s2(2, su2_site());
  Residual r;
  for_each_basis_key(s2, [&](key::Key kp) {
    for_each_basis_key(s2, [&](key::Key km) {
      Covector a = Covector::from_key(s2, kp), b = Covector::from_key(s2, km);
      Covector lhs = apply_r(o4_assemble_K(a, b), 0, 1, u, o4, true);
      Covector rhs = o4_assemble_K(apply_r(a, 0, 1, u, su, true), apply_r(b, 0, 1, u, su, true));
      r.merge(residual(lhs, rhs));
    });
  });
  return r;
}

Covector su2_bethe_state(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  MonodromyContext ctx{ModelParams::make(4), u, RKind::su2()};
  if (u.empty()) throw DomainError("need n >= 1");
  Covector x = reference_state(ctx.quantum_sig());
  for (int k = int(v.size()) - 1; k >= 0; --k) x = t_entry_apply(ctx, x, v[k], 0, 1);
  return x;
}

namespace {
Covector normalized_transfer(const RKind& k, const std::vector<Rat>& u, const Rat& v, const Covector& x) {
  std::vector<ChainFactor> f;
  for (size_t i = 0; i < u.size(); ++i) f.push_back({int(i), FactorKind::RNorm, u[i] - v});
  Covector out(x.sig());
  for (int b = 0; b < k.site().dim(); ++b) out += aux_chain(x, k, b, f, b);
  return out;
}
}  // namespace

Residual check_o4_transfer_split(const std::vector<Rat>& u, const Rat& v) {
  RKind o4 = RKind::on(ModelParams::make(4)), su = RKind::su2();
  Signature sn(u.size(), su2_site());
  Residual r;
  for_each_basis_key(sn, [&](key::Key kp) {
    for_each_basis_key(sn, [&](key::Key km) {
      Covector a = Covector::from_key(sn, kp), b = Covector::from_key(sn, km);
      Covector lhs = normalized_transfer(o4, u, v, o4_assemble_K(a, b));
      Covector rhs = o4_assemble_K(normalized_transfer(su, u, v, a), normalized_transfer(su, u, v, b));
      r.merge(residual(lhs, rhs));
    });
  });
  return r;
}

}  // namespace bethe
