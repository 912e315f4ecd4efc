#include "bethe/weights.hpp"

#include "bethe/errors.hpp"
#include "bethe/pi.hpp"

namespace bethe {

Covector generator_apply(const Covector& x, int lo, int up) {
  int r = x.rank();
  std::vector<Covector::Entry> out;
  for (int i = 0; i < r; ++i) {
    const Site& s = x.sig()[i];
    if (s.kind != SiteKind::Full) throw DimensionMismatch("generators act on full O(N) sites");
    int d = s.dim();
    if (lo < 0 || lo >= d || up < 0 || up >= d) throw InvalidLabel("generator index out of range");
    int cup = d - 1 - up, clo = d - 1 - lo;
    for (const auto& [k, v] : x.entries()) {
      int a = key::get(k, r, i);
      if (a == lo) out.push_back({key::set(k, r, i, up), v});
      if (a == cup) out.push_back({key::set(k, r, i, clo), -v});
    }
  }
  return Covector(x.sig(), std::move(out));
}

LinOp generator_action(const ModelParams& p, int n, int lo, int up) {
  Signature s(n, full_site(p.N));
  return LinOp::from_function(s, s, [&](const Covector& b) { return generator_apply(b, lo, up); });
}

std::vector<GenIndex> all_generator_tuples(int N) {
  std::vector<GenIndex> t;
  for (int a = 0; a < N; ++a)
    for (int ap = 0; ap < N; ++ap)
      for (int b = 0; b < N; ++b)
        for (int bp = 0; bp < N; ++bp) t.push_back({a, ap, b, bp});
  return t;
}

Residual check_lie_structure(const ModelParams& p, int n, const std::vector<GenIndex>& tuples) {
  int N = p.N;
  auto cj = [N](int x) { return N - 1 - x; };
  Signature s(n, full_site(N));
  Residual r;
  for_each_basis_key(s, [&](key::Key k) {
    Covector x = Covector::from_key(s, k);
    for (const auto& [a, ap, b, bp] : tuples) {
      Covector com = generator_apply(generator_apply(x, a, ap), b, bp) - generator_apply(generator_apply(x, b, bp), a, ap);
      Covector rhs(s);
      if (a == bp) rhs -= generator_apply(x, b, ap);
      if (ap == cj(bp)) rhs += generator_apply(x, b, cj(a));
      if (b == ap) rhs += generator_apply(x, a, bp);
      if (a == cj(b)) rhs -= generator_apply(x, cj(ap), bp);
      r.merge(residual(com, rhs));
    }
  });
  return r;
}

namespace {
Covector apply_m_plus(const Covector& x, int n) {
  int a = n, b = n + 1;
  Covector out(x.sig());
  for (int i = 0; i < n; ++i) out += apply_pk(x, i, a, 0, 1, -1);
  out += apply_pk(x, a, b, 0, 1, -1);
  return out;
}

Covector transfer(const MonodromyContext& ctx, const Covector& x, const Rat& v) {
  Covector out(x.sig());
  for (int b = 0; b < ctx.site().dim(); ++b) out += t_entry_apply(ctx, x, v, b, b);
  return out;
}
}  // namespace

Residual check_covariance(const MonodromyContext& ctx, const Rat& v) {
  int n = ctx.n();
  Signature sig(n + 2, ctx.site());
  return op_residual(
      sig, [&](const Covector& x) { return t_act(ctx, apply_m_plus(x, n), v, n + 1); },
      [&](const Covector& x) { return apply_m_plus(t_act(ctx, x, v, n + 1), n); });
}

Residual check_transfer_invariance(const MonodromyContext& ctx, const Rat& v) {
  int N = ctx.site().dim();
  Residual r;
  for (int lo = 0; lo < N; ++lo)
    for (int up = 0; up < N; ++up)
      r.merge(op_residual(
          ctx.quantum_sig(), [&](const Covector& x) { return transfer(ctx, generator_apply(x, lo, up), v); },
          [&](const Covector& x) { return generator_apply(transfer(ctx, x, v), lo, up); }));
  return r;
}

Residual check_t_asymptotics(const MonodromyContext& ctx, const Rat& tol) {
  int N = ctx.site().dim();
  Rat v1(1000000), v2(2000000);
  Rat worst = 0;
  for (int lo = 0; lo < N; ++lo)
    for (int up = 0; up < N; ++up)
      for_each_basis_key(ctx.quantum_sig(), [&](key::Key k) {
        Covector x = Covector::from_key(ctx.quantum_sig(), k);
        Covector d = lo == up ? x : Covector(x.sig());
        Covector x1 = v1 * (t_entry_apply(ctx, x, v1, lo, up) - d);
        Covector x2 = v2 * (t_entry_apply(ctx, x, v2, lo, up) - d);
        Covector ex = Rat(2) * x2 - x1;
        Residual r = residual(ex, generator_apply(x, lo, up));
        if (r.value > worst) worst = r.value;
      });
  return Residual::approx_of(RealAP(worst, RealAP::kMinDigits), RealAP(tol, RealAP::kMinDigits));
}

std::vector<int> covector_weight(const Covector& x, int N) {
  if (x.is_zero()) throw DomainError("the zero covector has no weight");
  std::vector<int> w = weight_of(x.sig(), x.entries().front().first, N);
  for (const auto& e : x.entries())
    if (weight_of(x.sig(), e.first, N) != w) throw DomainError("covector mixes weights");
  return w;
}

std::vector<int> expected_phi_weight(const BetheState& s, key::Key beta) {
  std::vector<int> w = weight_of(Signature(s.m(), reduced_site(s.p.N)), beta, s.p.N);
  w[0] += s.n() - s.m();
  return w;
}

std::vector<int> weight_vector(const BetheState& s) {
  Covector l = s.L(s.v);
  if (l.is_zero()) throw DomainError("level function vanishes at this point");
  std::vector<int> w = covector_weight(l, s.p.N);
  w[0] += s.n() - s.m();
  return w;
}

Residual check_weight_eigen(const Covector& x, int N, const std::vector<int>& w) {
  Residual r;
  for (int k = 0; k < N / 2; ++k) r.merge(residual(generator_apply(x, k, k), Rat(w.at(k)) * x));
  return r;
}

WeightEigenReport check_phi_weight_eigen(const BetheState& s) {
  WeightEigenReport rep;
  for (const auto& [beta, phi] : phi_state(s)) {
    std::vector<int> w = expected_phi_weight(s, beta);
    rep.eigen.merge(check_weight_eigen(phi, s.p.N, w));
    if (!phi.is_zero() && covector_weight(phi, s.p.N) != w) ++rep.formula_mismatches;
  }
  return rep;
}

bool check_weight_ordering(const std::vector<int>& w, int N) {
  int h = N / 2;
  if (int(w.size()) != h) throw DimensionMismatch("weight tuple length must be [N/2]");
  for (int k = 0; k + 1 < h; ++k) {
    int next = (k + 2 == h && N % 2 == 0) ? std::abs(w[k + 1]) : w[k + 1];
    if (w[k] < next) return false;
  }
  if (N % 2 == 1 && w[h - 1] < 0) return false;
  return true;
}

Residual HighestWeightReport::merged() const {
  Residual r = lower_first;
  r.merge(upper_last);
  r.merge(corner);
  r.merge(reduced);
  return r;
}

HighestWeightReport check_highest_weight(const BetheState& s) {
  if (!s.L.is_highest_weight || !s.L.satisfies_symmetry || !s.L.satisfies_shift)
    throw ConditionUnmet("level function " + s.L.name + " is not certified highest weight");
  int N = s.p.N, dr = N - 2, top = N - 1, m = s.m();
  Covector psi = psi_state(s);
  HighestWeightReport rep;
  // sum_i X^(i)_g(v) - X^(i)_g(v^(i)) chi_i, for every reduced g
  std::vector<Covector> single(dr, Covector(psi.sig()));
  for (int i = 0; i < m; ++i) {
    auto x = x_single(s, i), xs = x_single(s.shift_v({i}), i);
    Rat chi = chi_factor(s, i);
    for (int g = 0; g < dr; ++g) single[g] += x[g] - chi * xs[g];
  }
  for (int g = 0; g < dr; ++g) {
    rep.lower_first.merge(residual(generator_apply(psi, embed_code(g), 0), single[g]));
    rep.upper_last.merge(residual(generator_apply(psi, top, embed_code(g)), -single[dr - 1 - g]));
  }
  Covector pair(psi.sig());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Rat c = chi_factor(s.shift_v({j}), i) * chi_factor(s, j);
      pair += x_pair(s, i, j) - c * x_pair(s.shift_v({i, j}), i, j);
    }
  rep.corner = residual(generator_apply(psi, top, 0), pair);
  Covector zero(psi.sig());
  for (int g = 0; g < dr; ++g)
    for (int gp = 0; gp < g; ++gp)
      rep.reduced.merge(residual(generator_apply(psi, embed_code(g), embed_code(gp)), zero));
  return rep;
}

}  // namespace bethe
