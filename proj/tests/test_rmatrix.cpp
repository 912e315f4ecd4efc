#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/rmatrix.hpp"

using namespace bethe;

namespace {
bool zero(const Residual& r) { return r.exact && r.value.is_zero(); }
}  // namespace

TEST_CASE("R on <1, 1bar| for N = 5, u = 2/3") {
  // frozen from an independent rational prototype
  ModelParams p = ModelParams::make(5);
  Signature s2(2, full_site(5));
  Covector y = apply_r(Covector::from_labels(s2, {0, 4}), 0, 1, Rat(2, 3), RKind::on(p));
  CHECK(y.size() == 5);
  CHECK(y.coeff({0, 4}) == Rat(-1, 5));
  CHECK(y.coeff({1, 3}) == Rat(-6, 5));
  CHECK(y.coeff({2, 2}) == Rat(-6, 5));
  CHECK(y.coeff({3, 1}) == Rat(-6, 5));
  CHECK(y.coeff({4, 0}) == Rat(-27, 10));
  Covector z = apply_r(Covector::from_labels(s2, {1, 3}), 0, 1, Rat(2, 3), RKind::on(p));
  CHECK(z.coeff({1, 3}) == Rat(-1, 5));
  CHECK(z.coeff({3, 1}) == Rat(-27, 10));
  CHECK(z.coeff({0, 4}) == Rat(-6, 5));
}

TEST_CASE("R components and symmetry in its slots") {
  ModelParams p = ModelParams::make(6);
  RKind k = RKind::on(p);
  Rat u(3, 7);
  // R_{ab}^{dc} = d_a^c d_b^d + c d_a^d d_b^c + d C_ab C^cd
  CHECK(r_component(u, k, 0, 1, 0, 1) == Rat(1));
  CHECK(r_component(u, k, 0, 1, 1, 0) == p.c(u));
  CHECK(r_component(u, k, 0, 5, 2, 3) == p.d(u));
  CHECK(r_component(u, k, 0, 5, 0, 5) == Rat(1) + p.d(u));
  Signature s3(3, full_site(6));
  for_each_basis_key(s3, [&](key::Key key) {
    Covector x = Covector::from_key(s3, key);
    CHECK(apply_r(x, 0, 2, u, k) == apply_r(x, 2, 0, u, k));
  });
  CHECK(build_r(u, k, true) == build_r(u, k, false).scaled(p.a(u).inv()));
}

TEST_CASE("Yang-Baxter equation") {
  CHECK(zero(check_ybe(5, 3, 2, RKind::on(ModelParams::make(3)))));
  CHECK_THROWS_AS(check_ybe(2, 2, 7, RKind::on(ModelParams::make(3))), PoleError);
  for (int N = 3; N <= 7; ++N) {
    ModelParams p = ModelParams::make(N);
    CHECK(zero(check_ybe(Rat(1, 3), Rat(-2, 7), Rat(5, 4), RKind::on(p))));
    CHECK(zero(check_ybe(Rat(1, 3), Rat(-2, 7), Rat(5, 4), RKind::reduced(p))));
  }
  CHECK(zero(check_ybe(Rat(1, 3), Rat(-2, 7), Rat(5, 4), RKind::su2())));
}

TEST_CASE("unitarity") {
  CHECK(zero(check_unitarity(3, RKind::on(ModelParams::make(5)))));
  CHECK_THROWS_AS(check_unitarity(1, RKind::on(ModelParams::make(5))), PoleError);
  CHECK(zero(check_unitarity(2, RKind::su2())));
  for (int N = 3; N <= 7; ++N) CHECK(zero(check_unitarity(Rat(-4, 9), RKind::on(ModelParams::make(N)))));
}

TEST_CASE("crossing") {
  CHECK(zero(check_crossing(Rat(1, 4), ModelParams::make(3))));
  for (int N = 3; N <= 7; ++N) {
    CHECK(zero(check_crossing(Rat(-5, 6), ModelParams::make(N))));
    CHECK(zero(check_crossing_involution(Rat(7, 5), ModelParams::make(N))));
  }
}

TEST_CASE("eigenvalue decomposition") {
  for (int N = 3; N <= 7; ++N)
    for (Rat u : {Rat(11, 3), Rat(-1, 3), Rat(9, 7)}) {
      auto e = check_eigen_decomp(u, ModelParams::make(N));
      CHECK(zero(e[0]));
      CHECK(zero(e[1]));
      CHECK(zero(e[2]));
    }
  // trace vector at N = 3, u = 2 picks up 5/2
  ModelParams p3 = ModelParams::make(3);
  Signature s2(2, full_site(3));
  Covector t = Covector::from_labels(s2, {0, 2}) + Covector::from_labels(s2, {1, 1}) + Covector::from_labels(s2, {2, 0});
  CHECK(apply_r(t, 0, 1, 2, RKind::on(p3)) == Rat(5, 2) * t);
}

TEST_CASE("reduced R") {
  for (int N = 5; N <= 8; ++N) CHECK(zero(check_reduced_is_lower_rank(Rat(3, 11), ModelParams::make(N))));
  CHECK_THROWS(check_reduced_is_lower_rank(Rat(3, 11), ModelParams::make(3)));
  for (Rat u : {Rat(2), Rat(-3, 7), Rat(5, 3)}) CHECK(zero(check_o3_reduced_scalar(u)));
  // the reduced O(3) R is the scalar 1 - 1/u + 1/(u + 1/2)
  ModelParams p3 = ModelParams::make(3);
  Signature s2(2, reduced_site(3));
  Covector x = Covector::from_labels(s2, {0, 0});
  CHECK(apply_r(x, 0, 1, 2, RKind::reduced(p3)) == Rat(9, 10) * x);
}
