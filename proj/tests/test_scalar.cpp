#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/model.hpp"
#include "bethe/rat.hpp"
#include "bethe/realap.hpp"

using namespace bethe;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -3) == Rat(-1, 3));
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
  CHECK(Rat::parse("-7/21") == Rat(-1, 3));
  CHECK(Rat::parse("5").is_integer());
  CHECK(Rat(-7, 2).floor() == Rat(-4));
  CHECK(Rat(-7, 2).frac() == Rat(1, 2));
  CHECK_THROWS_AS(Rat(0).inv(), PoleError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), PoleError);
  // overflow of the small representation promotes to bignum
  Rat big(1);
  for (int i = 0; i < 40; ++i) big *= Rat(1000003, 7);
  for (int i = 0; i < 40; ++i) big /= Rat(1000003, 7);
  CHECK(big == Rat(1));
}

TEST_CASE("model parameters") {
  ModelParams p3 = ModelParams::make(3), p5 = ModelParams::make(5);
  CHECK(p3.nu == Rat(2));
  CHECK(p3.inv_nu == Rat(1, 2));
  CHECK(p5.kappa == Rat(3));
  CHECK_FALSE(ModelParams::make(4).nu_ring.has_value());
  CHECK_THROWS_AS(ModelParams::make(2), UnsupportedN);
  CHECK_THROWS_AS(ModelParams::make(16), UnsupportedN);
}

TEST_CASE("amplitudes at fixed points") {
  ModelParams p3 = ModelParams::make(3), p5 = ModelParams::make(5);
  CHECK(amp(Amp::c, Rat(1), p5) == Rat(-1));
  CHECK(amp(Amp::a, Rat(1), p5) == Rat(0));
  CHECK(amp(Amp::d, Rat(2), p3) == Rat(2, 3));
  CHECK(amp(Amp::f, Rat(2), p5) == Rat(2, 5));
  CHECK_THROWS_AS(amp(Amp::c, Rat(0), p5), PoleError);
  CHECK_THROWS_AS(amp(Amp::d, Rat(3, 2), p5), PoleError);
  // d_ring = 1/(u - 1/nu + 1)
  CHECK(amp(Amp::d_ring, Rat(1), p5) == Rat(2));
}

TEST_CASE("R eigenvalues") {
  ModelParams p3 = ModelParams::make(3), p7 = ModelParams::make(7);
  CHECK(r_eigenvalues(Rat(1), p7).plus == Rat(0));
  CHECK(r_eigenvalues(Rat(1), p7).minus == Rat(2));
  CHECK(r_eigenvalues(Rat(2), p3).zero == Rat(5, 2));
  // R0 = 1 + c + N d
  for (Rat u : {Rat(2, 7), Rat(-5, 3), Rat(9)}) {
    ModelParams p6 = ModelParams::make(6);
    CHECK(r_eigenvalues(u, p6).zero == Rat(1) + p6.c(u) + Rat(6) * p6.d(u));
  }
}

TEST_CASE("psi and tau closed forms") {
  ModelParams p3 = ModelParams::make(3), p4 = ModelParams::make(4);
  Scalar psi = psi_fn(Rat(3), p3, 60);
  REQUIRE(psi.exact());
  CHECK(psi.rat() == Rat(1, 2));
  CHECK(tau_fn(Rat(-2), p3, 60).rat() == Rat(4));
  CHECK(tau_fn(Rat(7), p4, 60).rat() == Rat(7));
  CHECK_FALSE(psi_fn(Rat(1, 3), ModelParams::make(5), 60).exact());
}

TEST_CASE("psi and tau functional equations") {
  ModelParams p3 = ModelParams::make(3);
  auto r3 = check_functional_eqs(p3, Rat(4), Rat(3), 60);
  CHECK(r3.first.exact);
  CHECK(r3.first.value == Rat(0));
  CHECK(r3.second.value == Rat(0));
  for (int N : {4, 5, 6, 9}) {
    ModelParams p = ModelParams::make(N);
    auto r = check_functional_eqs(p, Rat(2, 7), Rat(-3, 5), 60);
    CHECK(r.first.ok());
    CHECK(r.second.ok());
    if (r.first.approx) CHECK(*r.first.approx <= RealAP::pow10(-50, 60));
    if (r.second.approx) CHECK(*r.second.approx <= RealAP::pow10(-50, 60));
  }
}

TEST_CASE("gamma and tan at high precision") {
  CHECK(rel_residual(gamma_ap(Rat(5), 60), RealAP(24, 60)) <= RealAP::pow10(-55, 60));
  RealAP g = gamma_ap(Rat(1, 2), 60);
  CHECK(rel_residual(g * g, RealAP::pi(60)) <= RealAP::pow10(-55, 60));
  CHECK(rel_residual(tan_pi_ap(Rat(1, 4), 60), RealAP(1, 60)) <= RealAP::pow10(-55, 60));
  // Gamma(x+1) = x Gamma(x) at an awkward argument
  Rat x(-17, 7);
  CHECK(rel_residual(gamma_ap(x + Rat(1), 60), RealAP(x, 60) * gamma_ap(x, 60)) <= RealAP::pow10(-55, 60));
  CHECK_THROWS_AS(gamma_ap(Rat(-2), 60), PoleError);
  CHECK_THROWS_AS(tan_pi_ap(Rat(1, 2), 60), PoleError);
  CHECK_THROWS_AS(check_precision(10), PrecisionError);
}

TEST_CASE("O(3) level function") {
  // tan(pi v) has period 1, so the ratio of L at 5/4 and 1/4 is the ratio of
  // the rational prefactors
  RealAP ratio = o3_L_scalar(Rat(5, 4), 60) / o3_L_scalar(Rat(1, 4), 60);
  Rat expect = o3_L_rational_part(Rat(5, 4)) / o3_L_rational_part(Rat(1, 4));
  CHECK(expect == Rat(9, 5));
  CHECK(rel_residual(ratio, RealAP(expect, 60)) <= RealAP::pow10(-55, 60));
  for (Rat v : {Rat(1, 3), Rat(-2, 7), Rat(5, 11)}) {
    auto r = check_o3_L_relations(v, 60);
    REQUIRE(r.first.approx);
    CHECK(*r.first.approx <= RealAP::pow10(-50, 60));
    CHECK(*r.second.approx <= RealAP::pow10(-50, 60));
  }
  CHECK(o3_reduced_r_tilde(Rat(2)) == Rat(9, 5));
  // the lattice factor obeys both relations exactly
  for (Rat v : {Rat(1, 3), Rat(-2, 7), Rat(5, 11), Rat(7, 3)}) {
    CHECK(o3_level_factor(v) == o3_level_factor(-v) * o3_reduced_r_tilde(v));
    CHECK(o3_level_factor(v + Rat(1)) == o3_level_factor(-v));
  }
  CHECK_THROWS_AS(o3_level_factor(Rat(1, 2)), PoleError);
}

TEST_CASE("two-site amplitude identities") {
  for (int N : {3, 4, 5, 6, 7, 10})
    for (Rat u : {Rat(2, 7), Rat(-5, 3), Rat(11, 4)}) {
      ModelParams p = ModelParams::make(N);
      CHECK(check_amplitude_relations(p, u).ok());
      CHECK(check_f_antisymmetry(p, u).ok());
    }
}

TEST_CASE("scalar residual mixes exact and precision values") {
  Residual r = scalar_residual(Scalar(Rat(1, 3)), Scalar(Rat(1, 3)), 60);
  CHECK(r.exact);
  CHECK(r.ok());
  Residual bad = scalar_residual(Scalar(Rat(1, 3)), Scalar(Rat(1, 4)), 60);
  CHECK_FALSE(bad.ok());
  Residual near = scalar_residual(Scalar(RealAP(Rat(1, 3), 60)), Scalar(Rat(1, 3)), 60);
  CHECK(near.ok());
}
