#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/monodromy.hpp"

using namespace bethe;

namespace {
bool zero(const Residual& r) { return r.exact && r.value.is_zero(); }

std::vector<Rat> pts(std::initializer_list<Rat> l) { return std::vector<Rat>(l); }
}  // namespace

TEST_CASE("T entries on basis covectors, N = 5") {
  // frozen from an independent rational prototype
  auto ctx = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 5)}));
  Signature s = ctx.quantum_sig();
  Covector a = t_entry_apply(ctx, Covector::from_labels(s, {1, 2}), Rat(3, 7), 1, 0);
  CHECK(a == Covector::from_labels(s, {0, 2}, Rat(21, 2)));
  Covector b = t_entry_apply(ctx, Covector::from_labels(s, {4, 4}), Rat(3, 7), 4, 0);
  CHECK(b.size() == 5);
  CHECK(b.coeff({0, 4}) == Rat(42336, 1943));
  CHECK(b.coeff({1, 3}) == Rat(-1470, 1943));
  CHECK(b.coeff({2, 2}) == Rat(-1470, 1943));
  CHECK(b.coeff({3, 1}) == Rat(-1470, 1943));
  CHECK(b.coeff({4, 0}) == Rat(91875, 316709));
}

TEST_CASE("single-site T is one R") {
  ModelParams p = ModelParams::make(5);
  auto ctx = MonodromyContext::make(p, pts({Rat(2, 9)}));
  Rat v(-1, 4);
  for (int lo = 0; lo < 5; ++lo)
    for (int up = 0; up < 5; ++up)
      for (int x = 0; x < 5; ++x) {
        Covector y = t_entry_apply(ctx, Covector::from_labels({full_site(5)}, {x}), v, lo, up);
        // R = 1 + cP + dK on (x, up), then keep aux label lo
        Rat w = Rat(2, 9) - v;
        for (int z = 0; z < 5; ++z) {
          Rat e = 0;
          if (lo == up && z == x) e += 1;
          if (z == up && lo == x) e += p.c(w);
          if (up == 4 - x && lo == 4 - z) e += p.d(w);
          CHECK(y.coeff(std::vector<int>{z}) == e);
        }
      }
}

TEST_CASE("reference state eigenvalues") {
  auto ctx = MonodromyContext::make(ModelParams::make(3), pts({Rat(4), Rat(2)}));
  Covector om = reference_state(ctx.quantum_sig());
  CHECK(t_entry_apply(ctx, om, 0, 0, 0) == Rat(3, 8) * om);
  CHECK(t_entry_apply(ctx, om, 0, 2, 2) == Rat(15, 7) * om);
  CHECK(tq_entry_apply(ctx, om, 0, 0, 0, false) == Rat(3, 2) * om);
  CHECK(tq_entry_apply(ctx, om, 0, 0, 0, true) == om);
  for (int r = 1; r < 2; ++r) {
    CHECK(tq_entry_apply(ctx, om, 0, r, r, false).is_zero());
    CHECK(t_entry_apply(ctx, om, 0, r, r) == om);
  }
  CHECK(tq_entry_apply(ctx, om, 0, 2, 2, false).is_zero());
}

TEST_CASE("triangularity") {
  for (int N : {3, 5, 6})
    for (int n = 1; n <= 3; ++n) {
      std::vector<Rat> u{Rat(1, 3), Rat(-2, 7), Rat(5, 11)};
      u.resize(n);
      auto ctx = MonodromyContext::make(ModelParams::make(N), u);
      CHECK(zero(check_triangularity(ctx, Rat(4, 13)).merged()));
    }
}

TEST_CASE("triangular pattern is lower-left, not upper-right") {
  // Entries with upper label after the lower label do not vanish: the
  // reference state is mapped by C2 = T_1^1bar, while B2 = T_1bar^1 kills it.
  auto ctx = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7)}));
  Covector om = reference_state(ctx.quantum_sig());
  AuxLabels c2 = block_labels(TBlock::C2, 5), b2 = block_labels(TBlock::B2, 5);
  CHECK(c2.lower == 0);
  CHECK(c2.upper == 4);
  CHECK_FALSE(t_entry_apply(ctx, om, Rat(4, 13), c2.lower, c2.upper).is_zero());
  CHECK(t_entry_apply(ctx, om, Rat(4, 13), b2.lower, b2.upper).is_zero());
}

TEST_CASE("crossed monodromy") {
  for (int N : {3, 5, 6})
    for (int n = 1; n <= 3; ++n) {
      std::vector<Rat> u{Rat(1, 3), Rat(-2, 7), Rat(5, 11)};
      u.resize(n);
      auto ctx = MonodromyContext::make(ModelParams::make(N), u);
      CHECK(zero(check_crossed(ctx, Rat(-8, 5))));
    }
}

TEST_CASE("RTT relation") {
  for (int N : {3, 4, 5}) {
    auto ctx = MonodromyContext::make(ModelParams::make(N), pts({Rat(1, 3), Rat(-2, 7)}));
    CHECK(zero(check_tts(ctx, Rat(3, 4), Rat(-5, 9))));
  }
  auto ctx1 = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3)}));
  CHECK(zero(check_tts(ctx1, Rat(3, 4), Rat(-5, 9))));
}

TEST_CASE("P/K expansion of T and crossed T") {
  for (int N = 3; N <= 7; ++N)
    for (int n = 1; n <= (N <= 5 ? 3 : 2); ++n) {
      std::vector<Rat> u{Rat(1, 3), Rat(-2, 7), Rat(5, 11)};
      u.resize(n);
      auto ctx = MonodromyContext::make(ModelParams::make(N), u);
      auto r = check_expansions(ctx, Rat(7, 6));
      CHECK(zero(r.first));
      CHECK(zero(r.second));
    }
}

TEST_CASE("modified monodromy and Q") {
  ModelParams p5 = ModelParams::make(5);
  // n = 1, i = 0: T_Q = P, Q = identity
  auto c1 = MonodromyContext::make(p5, pts({Rat(2, 3)}));
  CHECK(q_matrix(c1, 0, true) == LinOp::identity(c1.quantum_sig()));
  auto ctx = MonodromyContext::make(p5, pts({Rat(1, 3), Rat(-2, 7), Rat(5, 11)}));
  for (int i = 0; i < 3; ++i) CHECK(zero(check_q_prefactor(ctx, i)));
}

TEST_CASE("Q prefactor needs the shifted argument for k < i") {
  // prod_{k != i} 1/a(u_k - u_i) without the shift agrees only at i = 0
  ModelParams p = ModelParams::make(5);
  auto ctx = MonodromyContext::make(p, pts({Rat(1, 3), Rat(-2, 7), Rat(5, 11)}));
  auto naive = [&](int i) {
    Rat r = 1;
    for (int k = 0; k < ctx.n(); ++k)
      if (k != i) r /= p.a(ctx.u[k] - ctx.u[i]);
    return r;
  };
  CHECK(naive(0) == q_prefactor(ctx, 0));
  for (int i = 1; i < 3; ++i) {
    Residual r = residual(q_matrix(ctx, i, true), q_matrix(ctx, i, false).scaled(naive(i)));
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("Zapletal exchange") {
  auto c3 = MonodromyContext::make(ModelParams::make(3), pts({Rat(1, 3), Rat(-2, 7)}));
  CHECK(zero(check_zapletal(c3, 0, Rat(5, 8))));
  auto c5 = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7)}));
  CHECK(zero(check_zapletal(c5, 1, Rat(5, 8))));
  auto c53 = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7), Rat(5, 11)}));
  for (int i = 0; i < 3; ++i) CHECK(zero(check_zapletal(c53, i, Rat(5, 8))));
  CHECK_THROWS_AS(check_zapletal(c5, 2, Rat(5, 8)), InvalidSlot);
}

TEST_CASE("Zapletal exchange fails with R on the quantum site") {
  // The same exchange with R acting on (site i, aux b) instead of (aux a, aux b).
  auto ctx = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7)}));
  int n = ctx.n(), a = n, b = n + 1, i = 0;
  Rat v(5, 8);
  MonodromyContext sh = ctx.shifted(i);
  Signature sig(n + 2, ctx.site());
  Residual r = op_residual(
      sig,
      [&](const Covector& x) {
        return apply_r(t_act(sh, tq_act(ctx, x, i, a, true), v, b), i, b, ctx.u[i] - v, ctx.kind);
      },
      [&](const Covector& x) {
        return tq_act(ctx, t_act(ctx, apply_r(x, i, b, sh.u[i] - v, ctx.kind), v, b), i, a, true);
      });
  CHECK_FALSE(r.ok());
}

TEST_CASE("Q commutation") {
  auto c3 = MonodromyContext::make(ModelParams::make(3), pts({Rat(1, 3), Rat(-2, 7)}));
  CHECK(zero(check_q_commutation(c3, 0, 1)));
  auto c5 = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7), Rat(5, 11)}));
  CHECK(zero(check_q_commutation(c5, 0, 2)));
  CHECK_THROWS_AS(check_q_commutation(c5, 1, 1), ConditionUnmet);
  CHECK_THROWS_AS(check_q_commutation(c5, 0, 3), InvalidSlot);
}

TEST_CASE("poles surface as PoleError") {
  auto ctx = MonodromyContext::make(ModelParams::make(5), pts({Rat(1, 3), Rat(-2, 7)}));
  CHECK_THROWS_AS(t_entry_apply(ctx, reference_state(ctx.quantum_sig()), Rat(1, 3), 0, 0), PoleError);
}
