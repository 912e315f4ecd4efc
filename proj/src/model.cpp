#include "bethe/model.hpp"

#include "bethe/errors.hpp"

namespace bethe {

ModelParams ModelParams::make(int N) {
  if (N < 3 || N > 15) throw UnsupportedN("N must lie in [3, 15], got " + std::to_string(N));
  ModelParams p;
  p.N = N;
  p.nu = Rat(2, N - 2);
  p.inv_nu = Rat(N - 2, 2);
  p.kappa = Rat(N - 2);
  p.inv_nu_ring = p.inv_nu - 1;
  if (N != 4) p.nu_ring = Rat(2, N - 4);
  return p;
}

namespace {
Rat inv_or_pole(const Rat& x, const char* name, const Rat& u) {
  if (x.is_zero()) throw PoleError(std::string("amplitude ") + name + " has a pole at u = " + u.str());
  return x.inv();
}
}  // namespace

Rat ModelParams::c(const Rat& u) const { return -inv_or_pole(u, "c", u); }
Rat ModelParams::d(const Rat& u) const { return inv_or_pole(u - inv_nu, "d", u); }
Rat ModelParams::a(const Rat& u) const { return 1 - inv_or_pole(u, "a", u); }
Rat ModelParams::f(const Rat& u) const { return -inv_or_pole(1 - u - inv_nu, "f", u); }
Rat ModelParams::d_ring(const Rat& u) const { return inv_or_pole(u - inv_nu_ring, "d_ring", u); }

const char* amp_name(Amp k) {
  switch (k) {
    case Amp::c: return "c";
    case Amp::d: return "d";
    case Amp::a: return "a";
    case Amp::f: return "f";
    case Amp::d_ring: return "d_ring";
  }
  return "?";
}

Rat amp(Amp kind, const Rat& u, const ModelParams& p) {
  switch (kind) {
    case Amp::c: return p.c(u);
    case Amp::d: return p.d(u);
    case Amp::a: return p.a(u);
    case Amp::f: return p.f(u);
    case Amp::d_ring: return p.d_ring(u);
  }
  throw DomainError("unknown amplitude");
}

REigenvalues r_eigenvalues(const Rat& u, const ModelParams& p) {
  Rat c = p.c(u), d = p.d(u);
  return {1 + c, 1 - c, 1 + c + Rat(p.N) * d};
}

RealAP Scalar::real(int digits) const {
  if (exact()) return RealAP(rat(), digits);
  return std::get<RealAP>(v_);
}

std::string Scalar::str(int digits) const {
  if (exact()) return rat().str();
  return std::get<RealAP>(v_).str(digits);
}

namespace {
int digits_of(const Scalar& a, const Scalar& b) {
  int d = RealAP::kMinDigits;
  if (!a.exact()) d = std::max(d, a.real(RealAP::kMinDigits).digits());
  if (!b.exact()) d = std::max(d, b.real(RealAP::kMinDigits).digits());
  return d;
}
}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(a.rat() * b.rat());
  int d = digits_of(a, b);
  return Scalar(a.real(d) * b.real(d));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(a.rat() / b.rat());
  int d = digits_of(a, b);
  RealAP den = b.real(d);
  if (den.is_zero()) throw PoleError("division by zero scalar");
  return Scalar(a.real(d) / den);
}

Residual scalar_residual(const Scalar& a, const Scalar& b, int digits) {
  if (a.exact() && b.exact()) return residual(a.rat(), b.rat());
  return Residual::approx_of(rel_residual(a.real(digits), b.real(digits)), precision_tolerance(digits));
}

Scalar psi_fn(const Rat& u, const ModelParams& p, int digits) {
  check_precision(digits);
  if (p.N == 3) {
    if (u == 1) throw PoleError("psi has a pole at u = 1");
    return Scalar((u - 1).inv());
  }
  Rat h = p.nu / 2;
  return Scalar(gamma_ap(-h + u * h, digits) / gamma_ap(u * h, digits));
}

Scalar tau_fn(const Rat& v, const ModelParams& p, int digits) {
  check_precision(digits);
  if (p.N == 3) return Scalar(v * v);
  if (p.N == 4) return Scalar(v);
  Rat h = p.nu / 2;
  return Scalar(RealAP(v, digits) * gamma_ap(h + v * h, digits) / gamma_ap(1 - h + v * h, digits));
}

std::pair<Residual, Residual> check_functional_eqs(const ModelParams& p, const Rat& u, const Rat& v, int digits) {
  Scalar lhs1 = psi_fn(p.shift(u), p, digits);
  Scalar rhs1 = Scalar(p.a(u)) * psi_fn(u, p, digits);
  Rat vp = p.shift(v);
  Scalar lhs2 = tau_fn(vp, p, digits) * Scalar(p.a(vp));
  Scalar rhs2 = Scalar(p.a(-v)) * tau_fn(v, p, digits);
  return {scalar_residual(lhs1, rhs1, digits), scalar_residual(lhs2, rhs2, digits)};
}

Rat o3_L_rational_part(const Rat& v) {
  Rat den = v * (v - 1);
  if (den.is_zero()) throw PoleError("O(3) level function has a pole at v = " + v.str());
  return (v - Rat(1, 2)) / den;
}

RealAP o3_L_scalar(const Rat& v, int digits) {
  Rat r = o3_L_rational_part(v);
  return RealAP::pi(digits) / RealAP(4L, digits) * RealAP(r, digits) * tan_pi_ap(v, digits);
}

Rat o3_reduced_r_tilde(const Rat& v) {
  Rat den = (v - 1) * (v + Rat(1, 2));
  if (den.is_zero()) throw PoleError("reduced O(3) amplitude has a pole at v = " + v.str());
  return (v + 1) * (v - Rat(1, 2)) / den;
}

std::pair<Residual, Residual> check_o3_L_relations(const Rat& v, int digits) {
  RealAP Lv = o3_L_scalar(v, digits);
  RealAP Lm = o3_L_scalar(-v, digits);
  RealAP Lp = o3_L_scalar(v + 1, digits);
  RealAP tol = precision_tolerance(digits);
  RealAP r1 = rel_residual(Lv, Lm * RealAP(o3_reduced_r_tilde(v), digits));
  RealAP r2 = rel_residual(Lp, Lm);
  return {Residual::approx_of(r1, tol), Residual::approx_of(r2, tol)};
}

Rat o3_level_factor(const Rat& v) {
  Rat fr = v.frac();
  if (fr.is_zero() || fr == Rat(1, 2))
    throw PoleError("O(3) lattice level factor undefined at v = " + v.str());
  int sigma = fr < Rat(1, 2) ? 1 : -1;
  return Rat(sigma) * o3_L_rational_part(v);
}

Residual check_amplitude_relations(const ModelParams& p, const Rat& u) {
  Rat d = p.d(u), fm = p.f(-u), dr = p.d_ring(u), c = p.c(u);
  Rat rr0 = p.a(u) + Rat(p.N - 2) * dr;
  Residual r = residual(dr, d + fm * d);
  r.merge(residual(Rat(0), d + fm * (1 + d)));
  r.merge(residual(p.f(u) * rr0, d + fm * (c + d)));
  return r;
}

Residual check_f_antisymmetry(const ModelParams& p, const Rat& v) {
  Rat rr0 = p.a(v) + Rat(p.N - 2) * p.d_ring(v);
  return residual(p.f(v) * rr0, -p.a(-v) * p.f(-v));
}

}  // namespace bethe
