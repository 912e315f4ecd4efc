#include "bethe/monodromy.hpp"

#include "bethe/errors.hpp"

namespace bethe {

Covector aux_chain(const Covector& x, const RKind& k, int upper, const std::vector<ChainFactor>& factors, int lower) {
  Covector y = add_slot(x, k.site(), upper);
  int aux = y.rank() - 1;
  for (const auto& f : factors) {
    if (y.is_zero()) break;
    y = apply_factor(y, f.slot, aux, f.kind, f.arg, k);
  }
  return select_slot(y, aux, lower);
}

namespace {
void check_n(const std::vector<Rat>& u) {
  if (u.empty()) throw DomainError("a monodromy needs at least one quantum site");
  if (int(u.size()) + 2 > key::kMaxRank) throw DomainError("too many quantum sites");
}

// 1/nu of the R-matrix family: the K-term pole position.
Rat inv_nu_of(const RKind& k) { return k.fam == RFamily::ONReduced ? k.p.inv_nu_ring : k.p.inv_nu; }

Rat delta(int a, int b) { return a == b ? Rat(1) : Rat(0); }

void check_index(const MonodromyContext& ctx, int i) {
  if (i < 0 || i >= ctx.n()) throw InvalidSlot("site index " + std::to_string(i) + " out of range");
}
}  // namespace

MonodromyContext MonodromyContext::make(const ModelParams& p, std::vector<Rat> u) {
  check_n(u);
  return {p, std::move(u), RKind::on(p)};
}

MonodromyContext MonodromyContext::make_reduced(const ModelParams& p, std::vector<Rat> u) {
  check_n(u);
  return {p, std::move(u), RKind::reduced(p)};
}

MonodromyContext MonodromyContext::shifted(int i) const {
  check_index(*this, i);
  MonodromyContext c = *this;
  c.u[i] = p.shift(c.u[i]);
  return c;
}

AuxLabels block_labels(TBlock b, int N, int r, int s) {
  int top = N - 1;
  if (r < 0 || r >= N - 2 || s < 0 || s >= N - 2) throw InvalidLabel("reduced block index out of range");
  int R = embed_code(r), S = embed_code(s);
  switch (b) {
    case TBlock::A1: return {0, 0};
    case TBlock::B1: return {R, 0};
    case TBlock::B2: return {top, 0};
    case TBlock::C1: return {0, R};
    case TBlock::D: return {R, S};
    case TBlock::B3: return {top, R};
    case TBlock::C2: return {0, top};
    case TBlock::C3: return {R, top};
    case TBlock::A3: return {top, top};
  }
  return {0, 0};
}

Covector t_act(const MonodromyContext& ctx, const Covector& x, const Rat& v, int aux) {
  Covector y = x;
  for (int k = 0; k < ctx.n() && !y.is_zero(); ++k) y = apply_r(y, k, aux, ctx.u[k] - v, ctx.kind);
  return y;
}

namespace {
std::vector<ChainFactor> t_factors(const MonodromyContext& ctx, const Rat& v) {
  std::vector<ChainFactor> f;
  for (int k = 0; k < ctx.n(); ++k) f.push_back({k, FactorKind::R, ctx.u[k] - v});
  return f;
}
std::vector<ChainFactor> crossed_factors(const MonodromyContext& ctx, const Rat& v) {
  std::vector<ChainFactor> f;
  for (int k = ctx.n() - 1; k >= 0; --k) f.push_back({k, FactorKind::R, v - ctx.u[k]});
  return f;
}
}  // namespace

Covector t_entry_apply(const MonodromyContext& ctx, const Covector& x, const Rat& v, int lower, int upper) {
  return aux_chain(x, ctx.kind, upper, t_factors(ctx, v), lower);
}

LinOp t_entry(const MonodromyContext& ctx, const Rat& v, int lower, int upper) {
  auto f = t_factors(ctx, v);
  for (const auto& c : f) (void)ctx.kind.c(c.arg), (void)ctx.kind.d(c.arg);  // surface poles eagerly
  Signature s = ctx.quantum_sig();
  return LinOp::from_function(s, s, [&](const Covector& b) { return aux_chain(b, ctx.kind, upper, f, lower); });
}

Covector crossed_act(const MonodromyContext& ctx, const Covector& x, const Rat& v, int aux) {
  Covector y = x;
  for (int k = ctx.n() - 1; k >= 0 && !y.is_zero(); --k) y = apply_r(y, k, aux, v - ctx.u[k], ctx.kind);
  return y;
}

Covector crossed_entry_apply(const MonodromyContext& ctx, const Covector& x, const Rat& v, int lower, int upper) {
  return aux_chain(x, ctx.kind, upper, crossed_factors(ctx, v), lower);
}

LinOp crossed_t_entry(const MonodromyContext& ctx, const Rat& v, int lower, int upper) {
  auto f = crossed_factors(ctx, v);
  for (const auto& c : f) (void)ctx.kind.c(c.arg), (void)ctx.kind.d(c.arg);
  Signature s = ctx.quantum_sig();
  return LinOp::from_function(s, s, [&](const Covector& b) { return aux_chain(b, ctx.kind, upper, f, lower); });
}

Residual check_crossed(const MonodromyContext& ctx, const Rat& v) {
  int dim = ctx.site().dim();
  Rat vb = v - inv_nu_of(ctx.kind);
  auto fc = crossed_factors(ctx, v), ft = t_factors(ctx, vb);
  Residual r;
  for_each_basis_key(ctx.quantum_sig(), [&](key::Key key) {
    Covector b = Covector::from_key(ctx.quantum_sig(), key);
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        r.merge(residual(aux_chain(b, ctx.kind, x, fc, y), aux_chain(b, ctx.kind, dim - 1 - y, ft, dim - 1 - x)));
  });
  return r;
}

Residual check_tts(const MonodromyContext& ctx, const Rat& ua, const Rat& ub) {
  int n = ctx.n(), a = n, b = n + 1;
  Signature sig(n + 2, ctx.site());
  Rat uab = ua - ub;
  return op_residual(
      sig,
      [&](const Covector& x) { return apply_r(t_act(ctx, t_act(ctx, x, ua, a), ub, b), a, b, uab, ctx.kind); },
      [&](const Covector& x) { return t_act(ctx, t_act(ctx, apply_r(x, a, b, uab, ctx.kind), ub, b), ua, a); });
}

std::pair<Residual, Residual> check_expansions(const MonodromyContext& ctx, const Rat& v) {
  int n = ctx.n(), dim = ctx.site().dim();
  Rat inu = inv_nu_of(ctx.kind);
  const RKind& k = ctx.kind;
  // factor lists and coefficients of the expansion terms, per i
  struct Term {
    Rat coef;
    std::vector<ChainFactor> f;
  };
  std::vector<Term> sb, sa;
  for (int i = 0; i < n; ++i) {
    std::vector<ChainFactor> fp, fk;
    Rat ub = ctx.u[i] - inu;
    for (int q = 0; q < n; ++q) {
      fp.push_back(q == i ? ChainFactor{q, FactorKind::P, 0} : ChainFactor{q, FactorKind::R, ctx.u[q] - ctx.u[i]});
      fk.push_back(q == i ? ChainFactor{q, FactorKind::K, 0} : ChainFactor{q, FactorKind::R, ctx.u[q] - ub});
    }
    sb.push_back({k.c(ctx.u[i] - v), fp});
    sb.push_back({k.d(ctx.u[i] - v), fk});
    std::vector<ChainFactor> cp, ck;
    Rat ua = ctx.u[i] + inu;
    for (int q = n - 1; q >= 0; --q) {
      cp.push_back(q == i ? ChainFactor{q, FactorKind::P, 0} : ChainFactor{q, FactorKind::R, ctx.u[i] - ctx.u[q]});
      ck.push_back(q == i ? ChainFactor{q, FactorKind::K, 0} : ChainFactor{q, FactorKind::R, ua - ctx.u[q]});
    }
    sa.push_back({k.c(v - ctx.u[i]), cp});
    sa.push_back({k.d(v - ctx.u[i]), ck});
  }
  auto ft = t_factors(ctx, v), fc = crossed_factors(ctx, v);
  Residual rb, ra;
  for_each_basis_key(ctx.quantum_sig(), [&](key::Key key) {
    Covector b = Covector::from_key(ctx.quantum_sig(), key);
    for (int lo = 0; lo < dim; ++lo)
      for (int up = 0; up < dim; ++up) {
        Covector eb = delta(lo, up) * b, ea = eb;
        for (const auto& t : sb)
          if (!t.coef.is_zero()) eb += t.coef * aux_chain(b, k, up, t.f, lo);
        for (const auto& t : sa)
          if (!t.coef.is_zero()) ea += t.coef * aux_chain(b, k, up, t.f, lo);
        rb.merge(residual(aux_chain(b, k, up, ft, lo), eb));
        ra.merge(residual(aux_chain(b, k, up, fc, lo), ea));
      }
  });
  return {rb, ra};
}

std::vector<ChainFactor> tq_factors(const MonodromyContext& ctx, int i, bool normalized) {
  check_index(ctx, i);
  FactorKind rk = normalized ? FactorKind::RNorm : FactorKind::R;
  Rat ui = ctx.u[i], uip = ctx.p.shift(ui);
  std::vector<ChainFactor> f;
  for (int k = 0; k < ctx.n(); ++k) {
    if (k < i)
      f.push_back({k, rk, ctx.u[k] - uip});
    else if (k == i)
      f.push_back({k, FactorKind::P, 0});
    else
      f.push_back({k, rk, ctx.u[k] - ui});
  }
  for (const auto& c : f)
    if (c.kind != FactorKind::P) {
      (void)ctx.kind.c(c.arg), (void)ctx.kind.d(c.arg);
      if (normalized && ctx.kind.a(c.arg).is_zero()) throw PoleError("normalized T_Q factor: a(" + c.arg.str() + ") = 0");
    }
  return f;
}

Covector tq_act(const MonodromyContext& ctx, const Covector& x, int i, int aux, bool normalized) {
  Covector y = x;
  for (const auto& f : tq_factors(ctx, i, normalized)) {
    if (y.is_zero()) break;
    y = apply_factor(y, f.slot, aux, f.kind, f.arg, ctx.kind);
  }
  return y;
}

Covector tq_entry_apply(const MonodromyContext& ctx, const Covector& x, int i, int lower, int upper,
                        bool normalized) {
  return aux_chain(x, ctx.kind, upper, tq_factors(ctx, i, normalized), lower);
}

LinOp tq_entry(const MonodromyContext& ctx, int i, int lower, int upper, bool normalized) {
  auto f = tq_factors(ctx, i, normalized);
  Signature s = ctx.quantum_sig();
  return LinOp::from_function(s, s, [&](const Covector& b) { return aux_chain(b, ctx.kind, upper, f, lower); });
}

Covector q_apply(const MonodromyContext& ctx, const Covector& x, int i, bool normalized) {
  auto f = tq_factors(ctx, i, normalized);
  Covector out(x.sig());
  for (int b = 0; b < ctx.site().dim(); ++b) out += aux_chain(x, ctx.kind, b, f, b);
  return out;
}

LinOp q_matrix(const MonodromyContext& ctx, int i, bool normalized) {
  Signature s = ctx.quantum_sig();
  return LinOp::from_function(s, s, [&](const Covector& b) { return q_apply(ctx, b, i, normalized); });
}

Rat q_prefactor(const MonodromyContext& ctx, int i) {
  check_index(ctx, i);
  Rat ui = ctx.u[i], uip = ctx.p.shift(ui), r = 1;
  for (int k = 0; k < ctx.n(); ++k) {
    if (k == i) continue;
    Rat a = ctx.kind.a(ctx.u[k] - (k < i ? uip : ui));
    if (a.is_zero()) throw PoleError("Q prefactor: a(" + (ctx.u[k] - (k < i ? uip : ui)).str() + ") = 0");
    r /= a;
  }
  return r;
}

Residual check_q_prefactor(const MonodromyContext& ctx, int i) {
  return residual(q_matrix(ctx, i, true), q_matrix(ctx, i, false).scaled(q_prefactor(ctx, i)));
}

Residual check_zapletal(const MonodromyContext& ctx, int i, const Rat& v) {
  check_index(ctx, i);
  int n = ctx.n(), a = n, b = n + 1;
  MonodromyContext sh = ctx.shifted(i);
  Rat ui = ctx.u[i], uip = sh.u[i];
  Signature sig(n + 2, ctx.site());
  return op_residual(
      sig,
      [&](const Covector& x) {
        return apply_r(t_act(sh, tq_act(ctx, x, i, a, true), v, b), a, b, ui - v, ctx.kind);
      },
      [&](const Covector& x) {
        return tq_act(ctx, t_act(ctx, apply_r(x, a, b, uip - v, ctx.kind), v, b), i, a, true);
      });
}

Residual check_q_commutation(const MonodromyContext& ctx, int i, int j) {
  check_index(ctx, i);
  check_index(ctx, j);
  if (i == j) throw ConditionUnmet("Q commutation needs two different sites");
  MonodromyContext si = ctx.shifted(i), sj = ctx.shifted(j);
  return op_residual(
      ctx.quantum_sig(), [&](const Covector& x) { return q_apply(si, q_apply(ctx, x, i, true), j, true); },
      [&](const Covector& x) { return q_apply(sj, q_apply(ctx, x, j, true), i, true); });
}

Covector reference_state(const Signature& sig) { return Covector::from_key(sig, 0); }

Residual TriangularityReport::merged() const {
  Residual r = zero_pattern;
  r.merge(a1);
  r.merge(a2);
  r.merge(a3);
  r.merge(tq_pattern);
  return r;
}

TriangularityReport check_triangularity(const MonodromyContext& ctx, const Rat& v) {
  if (ctx.kind.fam != RFamily::ON) throw DomainError("triangularity is checked for the O(N) monodromy");
  int N = ctx.p.N, top = N - 1;
  Covector om = reference_state(ctx.quantum_sig());
  Rat a1 = 1, a3 = 1;
  for (const Rat& uk : ctx.u) {
    a1 *= ctx.p.a(uk - v);
    a3 *= 1 + ctx.p.d(uk - v);
  }
  TriangularityReport rep;
  for (int lo = 0; lo < N; ++lo)
    for (int up = 0; up < N; ++up) {
      Covector y = t_entry_apply(ctx, om, v, lo, up);
      if (lo == up) {
        Rat ev = lo == 0 ? a1 : lo == top ? a3 : Rat(1);
        Residual r = residual(y, ev * om);
        (lo == 0 ? rep.a1 : lo == top ? rep.a3 : rep.a2).merge(r);
      } else if (lo != 0 && up != top) {
        rep.zero_pattern.merge(residual(y, Covector(om.sig())));
      }
    }
  // T_Q(u; first site): only the first column survives on the reference state
  Rat aq = 1;
  for (int k = 1; k < ctx.n(); ++k) aq *= ctx.p.a(ctx.u[k] - ctx.u[0]);
  for (int lo = 0; lo < N; ++lo)
    for (int up = 0; up < N; ++up) {
      Covector y = tq_entry_apply(ctx, om, 0, lo, up, false);
      if (lo == 0 && up == 0)
        rep.tq_pattern.merge(residual(y, aq * om));
      else if (lo != 0)
        rep.tq_pattern.merge(residual(y, Covector(om.sig())));
    }
  return rep;
}

}  // namespace bethe
