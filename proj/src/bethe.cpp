#include "bethe/bethe.hpp"

#include "bethe/errors.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/pi.hpp"
#include "bethe/rmatrix.hpp"

namespace bethe {

Covector LevelFunction::operator()(const std::vector<Rat>& v) const {
  if (int(v.size()) != m) throw DimensionMismatch("level function expects " + std::to_string(m) + " arguments");
  return eval(v);
}

Residual level_symmetry_residual(const ModelParams& p, const LevelFunction& l, const std::vector<Rat>& v) {
  Residual r;
  RKind red = RKind::reduced(p);
  for (int i = 0; i + 1 < l.m; ++i) {
    std::vector<Rat> vs = v;
    std::swap(vs[i], vs[i + 1]);
    Covector rhs = apply_r(swap_slots(l(vs), i, i + 1), i, i + 1, v[i] - v[i + 1], red, true);
    r.merge(residual(l(v), rhs));
  }
  return r;
}

Residual level_shift_residual(const ModelParams& p, const LevelFunction& l, const std::vector<Rat>& v) {
  Residual r;
  if (l.m == 0) return r;
  MonodromyContext ctx = MonodromyContext::make_reduced(p, v);
  Covector lv = l(v);
  for (int i = 0; i < l.m; ++i) {
    std::vector<Rat> vs = v;
    vs[i] = p.shift(vs[i]);
    r.merge(residual(l(vs), q_apply(ctx, lv, i, true)));
  }
  return r;
}

void certify(const ModelParams& p, LevelFunction& l) {
  static const std::vector<std::vector<Rat>> points = {
      {Rat(1, 3), Rat(-2, 7), Rat(5, 11), Rat(7, 13), Rat(-3, 17)},
      {Rat(-4, 9), Rat(3, 19), Rat(8, 5), Rat(-7, 23), Rat(2, 29)},
  };
  if (l.m > int(points[0].size())) throw DomainError("certification points cover m <= 5");
  bool sym = true, shift = true;
  for (const auto& pt : points) {
    std::vector<Rat> v(pt.begin(), pt.begin() + l.m);
    sym = sym && level_symmetry_residual(p, l, v).ok();
    shift = shift && level_shift_residual(p, l, v).ok();
  }
  l.satisfies_symmetry = sym;
  l.satisfies_shift = shift;
}

LevelFunction trivial_L(const ModelParams& p, int m) {
  if (p.N == 4) throw UnsupportedN("no reduced level for N = 4");
  if (m < 0) throw DomainError("m must be non-negative");
  LevelFunction l;
  l.m = m;
  Signature sig(m, reduced_site(p.N));
  if (p.N == 3) {
    l.name = "o3_lattice";
    l.eval = [sig, m](const std::vector<Rat>& v) {
      Rat val = 1;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) val *= o3_level_factor(v[i] - v[j]);
      return Covector::from_key(sig, 0, val);
    };
  } else {
    l.name = "constant";
    l.eval = [sig](const std::vector<Rat>&) { return Covector::from_key(sig, 0); };
  }
  // the reduced chain starts in its own reference state, which is highest weight
  l.is_highest_weight = true;
  certify(p, l);
  return l;
}

BetheState BetheState::make(const ModelParams& p, std::vector<Rat> u, std::vector<Rat> v, LevelFunction L) {
  if (u.empty()) throw DomainError("need n >= 1");
  if (v.size() > u.size()) throw DomainError("need n >= m");
  if (L.m != int(v.size())) throw DimensionMismatch("level function arity differs from m");
  if (u.size() + v.size() + 2 > size_t(key::kMaxRank)) throw DomainError("n + m too large");
  for (const Rat& uk : u)
    for (const Rat& vj : v) (void)p.c(uk - vj), (void)p.d(uk - vj);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) (void)p.c(v[i] - v[j]);
  return {p, std::move(u), std::move(v), std::move(L)};
}

BetheState BetheState::with_u(std::vector<Rat> nu) const {
  BetheState s = *this;
  s.u = std::move(nu);
  return s;
}

BetheState BetheState::with_v(std::vector<Rat> nv) const {
  BetheState s = *this;
  s.v = std::move(nv);
  return s;
}

BetheState BetheState::shift_v(std::initializer_list<int> idx) const {
  BetheState s = *this;
  for (int i : idx) s.v.at(i) = p.shift(s.v[i]);
  return s;
}

BetheState BetheState::shift_u(int i) const {
  BetheState s = *this;
  s.u.at(i) = p.shift(s.u[i]);
  return s;
}

Covector omega_state(const ModelParams& p, int n) {
  if (n < 1) throw DomainError("need n >= 1");
  return reference_state(Signature(n, full_site(p.N)));
}

namespace {
Covector tensor(const Covector& a, const Covector& b) {
  Signature sig = a.sig();
  sig.insert(sig.end(), b.sig().begin(), b.sig().end());
  int shift = 4 * b.rank();
  std::vector<Covector::Entry> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) out.push_back({(ka << shift) | kb, va * vb});
  return Covector(std::move(sig), std::move(out));
}

std::vector<Rat> without(const std::vector<Rat>& v, int i, int j = -1) {
  std::vector<Rat> r;
  for (int k = 0; k < int(v.size()); ++k)
    if (k != i && k != j) r.push_back(v[k]);
  return r;
}
}  // namespace

Covector apply_creation(const ModelParams& p, const std::vector<Rat>& u, const std::vector<Rat>& v,
                        const Covector& lpi, const Covector& start) {
  int m = int(v.size()), n = int(u.size());
  if (lpi.rank() != m) throw DimensionMismatch("creation labels must have one slot per v");
  RKind on = RKind::on(p);
  Covector w = tensor(lpi, start);
  for (int k = m - 1; k >= 0; --k) {
    // slot k holds the upper auxiliary label, quantum sites sit at k+1..k+n
    for (int j = 0; j < n && !w.is_zero(); ++j) w = apply_r(w, k + 1 + j, k, u[j] - v[k], on);
    w = select_slot(w, k, 0);
  }
  return w;
}

Covector psi_from_level(const ModelParams& p, const std::vector<Rat>& u, const std::vector<Rat>& v,
                        const Covector& l) {
  Covector lpi = pi_apply(p, l, 0, v);
  return apply_creation(p, u, v, lpi, omega_state(p, int(u.size())));
}

std::map<key::Key, Covector> phi_state(const BetheState& s) {
  std::map<key::Key, Covector> out;
  Signature rs(s.m(), reduced_site(s.p.N));
  for_each_basis_key(rs, [&](key::Key k) { out[k] = psi_from_level(s.p, s.u, s.v, Covector::from_key(rs, k)); });
  return out;
}

Covector psi_state(const BetheState& s) { return psi_from_level(s.p, s.u, s.v, s.L(s.v)); }

Residual PsiSymmetryReport::merged() const {
  Residual r;
  for (const auto& x : u_exchange) r.merge(x);
  for (const auto& x : v_exchange) r.merge(x);
  return r;
}

PsiSymmetryReport check_psi_symmetry(const BetheState& s) {
  if (!s.L.satisfies_symmetry) throw ConditionUnmet("level function " + s.L.name + " lacks the exchange property");
  PsiSymmetryReport rep;
  Covector psi = psi_state(s);
  RKind on = RKind::on(s.p);
  for (int i = 0; i + 1 < s.n(); ++i) {
    std::vector<Rat> us = s.u;
    std::swap(us[i], us[i + 1]);
    Covector rhs = apply_r(swap_slots(psi_state(s.with_u(us)), i, i + 1), i, i + 1, s.u[i] - s.u[i + 1], on, true);
    rep.u_exchange.push_back(residual(psi, rhs));
  }
  for (int i = 0; i + 1 < s.m(); ++i) {
    std::vector<Rat> vs = s.v;
    std::swap(vs[i], vs[i + 1]);
    rep.v_exchange.push_back(residual(psi, psi_state(s.with_v(vs))));
  }
  return rep;
}

Rat a1_fn(const ModelParams& p, const std::vector<Rat>& u, const Rat& v) {
  Rat r = 1;
  for (const Rat& uk : u) r *= p.a(uk - v);
  return r;
}

namespace {
Rat safe_inv(const Rat& x, const char* what) {
  if (x.is_zero()) throw PoleError(std::string(what) + " vanishes");
  return x.inv();
}
}  // namespace

Rat chi_factor(const BetheState& s, int i) {
  const ModelParams& p = s.p;
  if (i < 0 || i >= s.m()) throw InvalidSlot("chi index out of range");
  Rat vip = p.shift(s.v[i]);
  Rat r = safe_inv(a1_fn(p, s.u, vip), "a1(u, v_i')");
  for (int k = 0; k < s.m(); ++k)
    if (k != i) r *= p.a(s.v[k] - s.v[i]) * safe_inv(p.a(vip - s.v[k]), "a(v_i' - v_k)");
  return r;
}

std::vector<Covector> x_single(const BetheState& s, int i) {
  const ModelParams& p = s.p;
  if (i < 0 || i >= s.m()) throw InvalidSlot("X index out of range");
  std::vector<Rat> order{s.v[i]}, rest = without(s.v, i);
  order.insert(order.end(), rest.begin(), rest.end());
  Rat pref = a1_fn(p, s.u, s.v[i]);
  for (int k = 0; k < s.m(); ++k)
    if (k != i) pref *= p.a(s.v[i] - s.v[k]);
  Covector lv = s.L(order);
  std::vector<Covector> out;
  for (int g = 0; g < p.N - 2; ++g) out.push_back(pref * psi_from_level(p, s.u, rest, select_slot(lv, 0, g)));
  return out;
}

Covector x_pair(const BetheState& s, int i, int j) {
  const ModelParams& p = s.p;
  if (i < 0 || j < 0 || i >= s.m() || j >= s.m() || i == j) throw InvalidSlot("X pair indices invalid");
  std::vector<Rat> order{s.v[i], s.v[j]}, rest = without(s.v, i, j);
  order.insert(order.end(), rest.begin(), rest.end());
  Rat vij = s.v[i] - s.v[j];
  Rat pref = p.f(vij) * p.a(vij) * a1_fn(p, s.u, s.v[i]) * a1_fn(p, s.u, s.v[j]);
  for (int k = 0; k < s.m(); ++k)
    if (k != i && k != j) pref *= p.a(s.v[i] - s.v[k]) * p.a(s.v[j] - s.v[k]);
  Covector lc = contract_c(s.L(order), 0, 1);
  return pref * psi_from_level(p, s.u, rest, lc);
}

Covector wanted_term(const BetheState& s) {
  const ModelParams& p = s.p;
  Rat pref = 1;
  for (int k = 1; k < s.n(); ++k) pref *= p.a(s.u[k] - s.u[0]);
  for (const Rat& vk : s.v) pref *= p.a(s.u[0] - vk);
  return pref * psi_state(s.shift_u(0));
}

Residual check_wanted(const BetheState& s) {
  const ModelParams& p = s.p;
  MonodromyContext ctx = MonodromyContext::make(p, s.u);
  Covector om_aq = tq_entry_apply(ctx, omega_state(p, s.n()), 0, 0, 0, false);
  Rat pref = 1;
  for (const Rat& vk : s.v) pref *= p.a(s.u[0] - vk);
  Covector lpi = pi_apply(p, s.L(s.v), 0, s.v);
  Covector lhs = pref * apply_creation(p, s.shift_u(0).u, s.v, lpi, om_aq);
  return residual(lhs, wanted_term(s));
}

namespace {
std::vector<Covector> scaled(const Rat& c, const std::vector<Covector>& xs) {
  std::vector<Covector> r;
  for (const auto& x : xs) r.push_back(c * x);
  return r;
}

// Pieces of the unwanted terms, each as a function of the state's v.
std::vector<Covector> uw_c_a(const BetheState& s, int i) {
  return scaled(-s.p.c(s.p.shift(s.u[0]) - s.v[i]), x_single(s, i));
}
std::vector<Covector> uw_c_d(const BetheState& s, int i) {
  return scaled(s.p.c(s.u[0] - s.v[i]) * chi_factor(s, i), x_single(s.shift_v({i}), i));
}
std::vector<Covector> uw_c3_d(const BetheState& s, int i) {
  return scaled(-s.p.f(s.p.shift(s.u[0]) - s.v[i]), x_single(s, i));
}
std::vector<Covector> uw_c3_a3(const BetheState& s, int i) {
  return scaled(s.p.f(s.u[0] - s.v[i]) * chi_factor(s, i), x_single(s.shift_v({i}), i));
}
Covector uw_c2_a(const BetheState& s, int i, int j) { return -s.p.c(s.p.shift(s.u[0]) - s.v[i]) * x_pair(s, i, j); }
Covector uw_c2_d(const BetheState& s, int i, int j) {
  Rat c = (s.p.c(s.u[0] - s.v[i]) + s.p.f(s.p.shift(s.u[0]) - s.v[j])) * chi_factor(s, i);
  return c * x_pair(s.shift_v({i}), i, j);
}
Covector uw_c2_a3(const BetheState& s, int i, int j) {
  Rat c = -s.p.f(s.u[0] - s.v[j]) * chi_factor(s.shift_v({j}), i) * chi_factor(s, j);
  return c * x_pair(s.shift_v({i, j}), i, j);
}
}  // namespace

Unwanted unwanted_decomposition(const BetheState& s) {
  int m = s.m();
  Unwanted w;
  w.c2_a.assign(m, std::vector<Covector>(m));
  w.c2_d = w.c2_a3 = w.c2_a;
  for (int i = 0; i < m; ++i) {
    w.c_a.push_back(uw_c_a(s, i));
    w.c_d.push_back(uw_c_d(s, i));
    w.c3_d.push_back(uw_c3_d(s, i));
    w.c3_a3.push_back(uw_c3_a3(s, i));
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      w.c2_a[i][j] = uw_c2_a(s, i, j);
      w.c2_d[i][j] = uw_c2_d(s, i, j);
      w.c2_a3[i][j] = uw_c2_a3(s, i, j);
    }
  }
  return w;
}

Residual check_master(const BetheState& s) {
  if (!s.L.satisfies_symmetry || !s.L.satisfies_shift)
    throw ConditionUnmet("level function " + s.L.name + " is not certified for both level conditions");
  const ModelParams& p = s.p;
  int N = p.N, dr = N - 2, top = N - 1;
  MonodromyContext ctx = MonodromyContext::make(p, s.u);
  Covector psi = psi_state(s);
  Covector lhs(psi.sig());
  for (int b = 0; b < N; ++b) lhs += tq_entry_apply(ctx, psi, 0, b, b, false);

  Covector rhs = wanted_term(s);
  Unwanted w = unwanted_decomposition(s);
  for (int i = 0; i < s.m(); ++i)
    for (int g = 0; g < dr; ++g) {
      rhs += tq_entry_apply(ctx, w.c_a[i][g] + w.c_d[i][g], 0, 0, embed_code(g), false);
      int gc = dr - 1 - g;  // reduced C pairs component gbar with C3_g
      rhs += tq_entry_apply(ctx, w.c3_d[i][gc] + w.c3_a3[i][gc], 0, embed_code(g), top, false);
    }
  for (int i = 0; i < s.m(); ++i)
    for (int j = 0; j < s.m(); ++j)
      if (i != j) rhs += tq_entry_apply(ctx, w.c2_a[i][j] + w.c2_d[i][j] + w.c2_a3[i][j], 0, 0, top, false);
  return residual(lhs, rhs);
}

Residual ShiftReport::merged() const {
  Residual r = c1;
  r.merge(c2);
  r.merge(c3);
  return r;
}

ShiftReport check_shift_relations(const BetheState& s) {
  ShiftReport rep;
  int m = s.m();
  for (int i = 0; i < m; ++i) {
    BetheState si = s.shift_v({i});
    Rat chi = chi_factor(s, i);
    auto d = uw_c_d(s, i), a = uw_c_a(si, i);
    auto a3 = uw_c3_a3(s, i), d3 = uw_c3_d(si, i);
    for (size_t g = 0; g < d.size(); ++g) {
      rep.c1.merge(residual(d[g], -chi * a[g]));
      rep.c2.merge(residual(a3[g], -chi * d3[g]));
    }
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      BetheState sj = s.shift_v({j}), sij = s.shift_v({i, j});
      Rat chij = chi_factor(s, j), chii_j = chi_factor(sj, i);
      Covector lhs = chij * uw_c2_d(sj, i, j);
      Covector rhs = -(chii_j * chij) * uw_c2_a(sij, i, j) - uw_c2_a3(s, i, j);
      rep.c3.merge(residual(lhs, rhs));
    }
  }
  return rep;
}

Scalar g_function(const BetheState& s, int digits) {
  Scalar g(Rat(1));
  for (const Rat& ui : s.u)
    for (const Rat& vj : s.v) g = g * psi_fn(ui - vj, s.p, digits);
  for (int i = 0; i < s.m(); ++i)
    for (int j = i + 1; j < s.m(); ++j) g = g * tau_fn(s.v[i] - s.v[j], s.p, digits);
  return g;
}

Residual check_g_shift(const BetheState& s, int i, int digits) {
  Scalar lhs = Scalar(chi_factor(s, i)) * g_function(s, digits);
  return scalar_residual(lhs, g_function(s.shift_v({i}), digits), digits);
}

Residual check_g_u_shift(const BetheState& s, int digits) {
  Rat pref = 1;
  for (const Rat& vk : s.v) pref *= s.p.a(s.u[0] - vk);
  return scalar_residual(Scalar(pref) * g_function(s, digits), g_function(s.shift_u(0), digits), digits);
}

std::vector<Rat> LatticePoint::v(const ModelParams& p) const {
  std::vector<Rat> r;
  for (size_t i = 0; i < base.size(); ++i) r.push_back(base[i] - Rat(offsets[i]) * p.kappa);
  return r;
}

std::vector<LatticePoint> lattice_points(const std::vector<Rat>& base, int window) {
  if (window < 0) throw DomainError("window must be non-negative");
  std::vector<LatticePoint> out;
  std::vector<long> off(base.size(), -window);
  if (base.empty()) return {LatticePoint{{}, {}}};
  while (true) {
    out.push_back({off, base});
    size_t k = 0;
    while (k < off.size() && off[k] == window) off[k++] = -window;
    if (k == off.size()) break;
    ++off[k];
  }
  return out;
}

Residual check_chi_onshell(const BetheState& s, int i) {
  const ModelParams& p = s.p;
  Rat vi = s.v.at(i);
  Rat chi = safe_inv(a1_fn(p, s.u, vi), "a1(u, v_i)");
  Rat form = 1;
  for (const Rat& uk : s.u) form *= (vi - uk) / (vi - uk + 1);
  for (int k = 0; k < s.m(); ++k) {
    if (k == i) continue;
    Rat vik = vi - s.v[k];
    chi *= p.a(-vik) * safe_inv(p.a(vik), "a(v_ik)");
    form *= (vik + 1) / (vik - 1);
  }
  return residual(chi, form);
}

}  // namespace bethe
