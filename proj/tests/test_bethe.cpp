#include <doctest.h>

#include "bethe/bethe.hpp"
#include "bethe/errors.hpp"
#include "bethe/o4.hpp"
#include "bethe/rmatrix.hpp"

using namespace bethe;

namespace {
bool zero(const Residual& r) { return r.exact && r.value.is_zero(); }

const std::vector<Rat> kU{Rat(1, 3), Rat(-2, 5), Rat(5, 11)};
const std::vector<Rat> kV{Rat(3, 7), Rat(-1, 5)};

BetheState state(int N, int n, int m) {
  ModelParams p = ModelParams::make(N);
  return BetheState::make(p, std::vector<Rat>(kU.begin(), kU.begin() + n), std::vector<Rat>(kV.begin(), kV.begin() + m),
                          trivial_L(p, m));
}
}  // namespace

TEST_CASE("reference state and empty products") {
  ModelParams p = ModelParams::make(5);
  CHECK(omega_state(p, 1) == Covector::from_labels({full_site(5)}, {0}));
  BetheState s = state(5, 2, 0);
  CHECK(psi_state(s) == omega_state(p, 2));
  auto phi = phi_state(s);
  REQUIRE(phi.size() == 1);
  CHECK(phi.begin()->second == omega_state(p, 2));
}

TEST_CASE("trivial level function") {
  ModelParams p5 = ModelParams::make(5);
  LevelFunction l = trivial_L(p5, 1);
  CHECK(l({Rat(2, 3)}) == Covector::from_labels({reduced_site(5)}, {0}));
  CHECK(label_str(reduced_site(5), 0) == "2");
  CHECK(l.satisfies_symmetry);
  CHECK(l.satisfies_shift);
  CHECK(l.is_highest_weight);
  LevelFunction l3 = trivial_L(ModelParams::make(3), 2);
  CHECK(l3.satisfies_symmetry);
  CHECK(l3.satisfies_shift);
  CHECK_THROWS_AS(trivial_L(ModelParams::make(4), 1), UnsupportedN);
}

TEST_CASE("constant level function fails the exchange property for N = 3") {
  ModelParams p = ModelParams::make(3);
  Signature rs(2, reduced_site(3));
  LevelFunction one{"one", 2, [rs](const std::vector<Rat>&) { return Covector::from_key(rs, 0); }};
  CHECK_FALSE(level_symmetry_residual(p, one, {Rat(1, 3), Rat(-2, 7)}).ok());
  certify(p, one);
  CHECK_FALSE(one.satisfies_symmetry);
  BetheState s = BetheState::make(p, {kU[0], kU[1]}, kV, one);
  CHECK_THROWS_AS(check_psi_symmetry(s), ConditionUnmet);
  CHECK_THROWS_AS(check_master(s), ConditionUnmet);
}

TEST_CASE("Psi at frozen points") {
  // frozen from an independent rational prototype
  Signature f5(2, full_site(5)), f6(2, full_site(6)), f3(2, full_site(3));
  Covector a = psi_state(state(5, 2, 1));
  CHECK(a == Covector::from_labels(f5, {0, 1}, Rat(35, 29)) + Covector::from_labels(f5, {1, 0}, Rat(672, 29)));
  Covector b = psi_state(state(5, 2, 2));
  CHECK(b == Covector::from_labels(f5, {1, 1}, Rat(-24045, 232)));
  Covector c = psi_state(state(3, 2, 2));
  CHECK(c == Covector::from_labels(f3, {0, 2}, Rat(6125, 638)) + Covector::from_labels(f3, {1, 1}, Rat(11025, 10208)) +
                 Covector::from_labels(f3, {2, 0}, Rat(-132300, 319)));
  Covector d = psi_state(state(6, 2, 1));
  CHECK(d == Covector::from_labels(f6, {0, 1}, Rat(35, 29)) + Covector::from_labels(f6, {1, 0}, Rat(672, 29)));
}

TEST_CASE("chi at a frozen point") {
  BetheState s = state(5, 2, 2);
  CHECK(chi_factor(s, 0) == Rat(2425065, 1131416));
  CHECK(chi_factor(s, 1) == Rat(-3071, 5544));
  CHECK(zero(check_chi_onshell(s, 0)));
  CHECK(zero(check_chi_onshell(s, 1)));
}

TEST_CASE("Psi symmetry") {
  for (auto [N, n, m] : {std::tuple{5, 2, 1}, {3, 3, 2}, {5, 2, 2}, {6, 2, 1}, {3, 2, 2}}) {
    PsiSymmetryReport r = check_psi_symmetry(state(N, n, m));
    CHECK(zero(r.merged()));
    CHECK(int(r.u_exchange.size()) == n - 1);
  }
}

TEST_CASE("X terms from reduced states") {
  // trivial L: X^(i)_2 is a1(u, v_i) prod_{k != i} a(v_i - v_k) times the
  // state with v_i removed and L = <2, ...|; other reduced labels vanish
  BetheState s = state(5, 2, 2);
  const ModelParams& p = s.p;
  for (int i = 0; i < 2; ++i) {
    std::vector<Rat> rest;
    Rat pref = a1_fn(p, s.u, s.v[i]);
    for (int k = 0; k < 2; ++k)
      if (k != i) {
        rest.push_back(s.v[k]);
        pref *= p.a(s.v[i] - s.v[k]);
      }
    Covector l = Covector::from_key(Signature(1, reduced_site(5)), 0);
    auto x = x_single(s, i);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == pref * psi_from_level(p, s.u, rest, l));
    CHECK(x[1].is_zero());
    CHECK(x[2].is_zero());
  }
  // <2, 2| holds no conjugate pair, so the C contraction vanishes
  CHECK(x_pair(s, 0, 1).is_zero());
}

TEST_CASE("wanted term and master decomposition") {
  for (auto [N, n, m] : {std::tuple{5, 2, 1}, {3, 3, 2}, {5, 3, 2}, {5, 1, 1}, {3, 2, 1}}) {
    BetheState s = state(N, n, m);
    CHECK(zero(check_wanted(s)));
    CHECK(zero(check_master(s)));
  }
}

TEST_CASE("shift relations") {
  CHECK(zero(check_shift_relations(state(5, 2, 1)).c1));
  CHECK(zero(check_shift_relations(state(3, 2, 1)).c2));
  CHECK(zero(check_shift_relations(state(5, 2, 2)).c3));
  for (auto [N, n, m] : {std::tuple{5, 3, 2}, {3, 3, 2}, {6, 2, 1}}) CHECK(zero(check_shift_relations(state(N, n, m)).merged()));
}

TEST_CASE("g shift") {
  BetheState s3 = state(3, 3, 2);
  for (int i = 0; i < 2; ++i) {
    Residual r = check_g_shift(s3, i, 60);
    CHECK(r.exact);
    CHECK(zero(r));
  }
  CHECK(zero(check_g_u_shift(s3, 60)));
  for (int N : {5, 6}) {
    BetheState s = state(N, 2, 2);
    for (int i = 0; i < 2; ++i) {
      Residual r = check_g_shift(s, i, 60);
      REQUIRE(r.approx);
      CHECK(*r.approx <= RealAP::pow10(-50, 60));
    }
  }
}

TEST_CASE("lattice points") {
  auto pts = lattice_points({Rat(1, 3), Rat(2, 5)}, 1);
  CHECK(pts.size() == 9);
  ModelParams p = ModelParams::make(5);
  CHECK(pts.front().v(p) == std::vector<Rat>{Rat(1, 3) + Rat(3), Rat(2, 5) + Rat(3)});
  CHECK_THROWS_AS(lattice_points({Rat(1)}, -1), DomainError);
}

TEST_CASE("state validation") {
  ModelParams p = ModelParams::make(5);
  CHECK_THROWS_AS(BetheState::make(p, {Rat(1)}, {Rat(2), Rat(3)}, trivial_L(p, 2)), DomainError);
  CHECK_THROWS_AS(BetheState::make(p, {Rat(1), Rat(2)}, {Rat(3)}, trivial_L(p, 2)), DimensionMismatch);
  CHECK_THROWS_AS(BetheState::make(p, {Rat(1), Rat(2)}, {Rat(2)}, trivial_L(p, 1)), PoleError);
}

TEST_CASE("O(4) intertwiner") {
  CHECK(gamma_entry(0, 0).code == 0);
  CHECK(gamma_entry(0, 0).sign == -1);
  CHECK(gamma_entry(0, 1).code == 1);
  CHECK(gamma_entry(1, 0).code == 2);
  CHECK(gamma_entry(1, 1).code == 3);
  CHECK(gamma_entry(1, 1).sign == 1);
  CHECK_THROWS_AS(gamma_entry(2, 0), InvalidLabel);
  auto oc = check_oc();
  CHECK(zero(oc[0]));
  CHECK(zero(oc[1]));
  CHECK(gamma_weight_mismatches() == 0);
}

TEST_CASE("O(4) R decomposition and transfer split") {
  CHECK(zero(check_o4_r_decomposition(2)));
  CHECK(zero(check_o4_r_decomposition(-3)));
  CHECK(zero(check_o4_r_decomposition(Rat(5, 7))));
  CHECK_THROWS_AS(check_o4_r_decomposition(1), PoleError);
  CHECK(zero(check_o4_transfer_split({Rat(1, 3), Rat(-2, 5)}, Rat(3, 7))));
  CHECK(zero(check_o4_transfer_split({Rat(1, 3), Rat(-2, 5), Rat(7, 2)}, Rat(3, 7))));
}

TEST_CASE("SU(2) creation operator") {
  Rat u(2, 3), v(-1, 4);
  Covector k = su2_bethe_state({u}, {v});
  CHECK(k == Covector::from_labels({su2_site()}, {1}, ModelParams::make(4).c(u - v)));
  Covector kp = su2_bethe_state({Rat(1, 3), Rat(-2, 5)}, {Rat(3, 7)});
  Covector km = su2_bethe_state({Rat(1, 3), Rat(-2, 5)}, {});
  Covector big = o4_assemble_K(kp, km);
  CHECK(big.sig() == Signature(2, full_site(4)));
  CHECK(big.size() == kp.size() * km.size());
}
