#pragma once
#include <optional>
#include <utility>
#include <variant>

#include "bethe/rat.hpp"
#include "bethe/realap.hpp"
#include "bethe/residual.hpp"

namespace bethe {

// N together with nu = 2/(N-2) and the derived constants every amplitude
// depends on. kappa = 2/nu is the shift u -> u' used by the difference
// equations at every level.
struct ModelParams {
  int N = 0;
  Rat nu, inv_nu, kappa;
  Rat inv_nu_ring;             // 1/nu - 1, defined for every N
  std::optional<Rat> nu_ring;  // 2/(N-4), absent for N = 4

  static ModelParams make(int N);  // UnsupportedN outside [3, 15]

  Rat c(const Rat& u) const;
  Rat d(const Rat& u) const;
  Rat a(const Rat& u) const;
  Rat f(const Rat& u) const;
  Rat d_ring(const Rat& u) const;
  Rat shift(const Rat& u) const { return u + kappa; }
};

enum class Amp { c, d, a, f, d_ring };
const char* amp_name(Amp k);
Rat amp(Amp kind, const Rat& u, const ModelParams& p);

struct REigenvalues {
  Rat plus, minus, zero;
};
// Eigenvalues of R(u) on the symmetric traceless, antisymmetric and trace
// parts of V(x)V.
REigenvalues r_eigenvalues(const Rat& u, const ModelParams& p);

// A value that is exact when a closed rational form exists and an
// arbitrary-precision real otherwise.
class Scalar {
 public:
  Scalar(const Rat& q) : v_(q) {}  // NOLINT(google-explicit-constructor)
  Scalar(const RealAP& r) : v_(r) {}  // NOLINT(google-explicit-constructor)
  bool exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  RealAP real(int digits) const;
  std::string str(int digits = 20) const;
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rat, RealAP> v_;
};
// |a - b| as an exact residual when both are exact, relative otherwise.
Residual scalar_residual(const Scalar& a, const Scalar& b, int digits);

// psi(u) = Gamma(-nu/2 + u nu/2) / Gamma(u nu/2)
// tau(v) = v Gamma(nu/2 + v nu/2) / Gamma(1 - nu/2 + v nu/2)
// Exact closed forms: N = 3 gives psi = 1/(u-1), tau = v^2; N = 4 gives tau = v.
Scalar psi_fn(const Rat& u, const ModelParams& p, int digits);
Scalar tau_fn(const Rat& v, const ModelParams& p, int digits);

// psi(u') = a(u) psi(u) and tau(v') a(v') = a(-v) tau(v).
std::pair<Residual, Residual> check_functional_eqs(const ModelParams& p, const Rat& u, const Rat& v, int digits);

// O(3) two-particle level function L(v) = pi/4 (v-1/2)/(v(v-1)) tan(pi v).
RealAP o3_L_scalar(const Rat& v, int digits);
// (v-1/2)/(v(v-1)): the rational factor of L.
Rat o3_L_rational_part(const Rat& v);
// L(v) = L(-v) Rr~(v) and L(v+1) = L(-v), with Rr~ the normalized reduced
// O(3) amplitude.
std::pair<Residual, Residual> check_o3_L_relations(const Rat& v, int digits);
// Normalized scalar R-matrix on the one-dimensional reduced O(3) space:
// (v+1)(v-1/2)/((v-1)(v+1/2)).
Rat o3_reduced_r_tilde(const Rat& v);
// L(v) divided by (pi/4)|tan(pi v)|. The divisor is invariant under
// v -> -v and v -> v+1, so this rational function obeys the same two
// relations as L. Undefined (PoleError) at integers and half-integers.
Rat o3_level_factor(const Rat& v);

// Identities used for the two-site Pi matrix:
//   dr(u) = d(u) + f(-u) d(u)
//   0     = d(u) + f(-u)(1 + d(u))
//   f(u) Rr0(u) = d(u) + f(-u)(c(u) + d(u)),  Rr0 = a + (N-2) dr
Residual check_amplitude_relations(const ModelParams& p, const Rat& u);
// f(v) Rr0(v) = -a(-v) f(-v)
Residual check_f_antisymmetry(const ModelParams& p, const Rat& v);

}  // namespace bethe
