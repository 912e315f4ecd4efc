#include "bethe/residual.hpp"

#include "bethe/errors.hpp"

namespace bethe {

Residual Residual::approx_of(const RealAP& err, const RealAP& tolerance) {
  Residual r;
  r.exact = false;
  r.approx = err.abs();
  r.tol = tolerance;
  return r;
}

bool Residual::ok() const {
  if (!value.is_zero()) return false;
  if (approx && tol) return *approx <= *tol;
  return true;
}

void Residual::merge(const Residual& o) {
  if (o.value > value) value = o.value;
  if (o.approx) {
    if (!approx || *approx < *o.approx) approx = o.approx;
    if (!tol || *o.tol < *tol) tol = o.tol;
    exact = false;
  }
}

std::string Residual::str() const {
  if (!approx) return value.str();
  std::string s = approx->str(6);
  if (!value.is_zero()) s += " (exact part " + value.str() + ")";
  return s;
}

Residual residual(const Covector& a, const Covector& b) {
  Covector d = a - b;
  Rat m = 0;
  for (const auto& e : d.entries()) {
    Rat v = e.second.abs();
    if (v > m) m = v;
  }
  return Residual::of(m);
}

Residual residual(const Rat& a, const Rat& b) { return Residual::of(a - b); }

Residual residual(const LinOp& a, const LinOp& b) {
  LinOp d = a - b;
  Rat m = 0;
  for (const auto& [k, row] : d.rows())
    for (const auto& e : row) {
      Rat v = e.second.abs();
      if (v > m) m = v;
    }
  return Residual::of(m);
}

Residual op_residual(const Signature& in, const std::function<Covector(const Covector&)>& lhs,
                     const std::function<Covector(const Covector&)>& rhs) {
  Residual r;
  for_each_basis_key(in, [&](key::Key k) {
    Covector b = Covector::from_key(in, k);
    r.merge(residual(lhs(b), rhs(b)));
  });
  return r;
}

RealAP precision_tolerance(int digits) { return RealAP::pow10(8 - digits, digits); }

}  // namespace bethe
