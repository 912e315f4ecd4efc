#pragma once
#include <functional>
#include <optional>
#include <string>

#include "bethe/rat.hpp"
#include "bethe/realap.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// Outcome of one identity check. Exact checks carry the largest absolute
// coefficient of the difference of both sides (zero means the identity
// holds). Precision checks carry a relative error and the tolerance it was
// compared with.
struct Residual {
  bool exact = true;
  Rat value;                     // exact checks
  std::optional<RealAP> approx;  // precision checks
  std::optional<RealAP> tol;

  static Residual zero() { return Residual{}; }
  static Residual of(const Rat& r) {
    Residual x;
    x.value = r.abs();
    return x;
  }
  static Residual approx_of(const RealAP& err, const RealAP& tolerance);

  bool ok() const;
  // Keeps the worse of the two; exact and precision residuals may be mixed.
  void merge(const Residual& o);
  std::string str() const;
};

// max |coefficient| of a - b
Residual residual(const Covector& a, const Covector& b);
Residual residual(const Rat& a, const Rat& b);
Residual residual(const LinOp& a, const LinOp& b);

// Compares two linear maps given by their action, on every basis covector of
// the input signature.
Residual op_residual(const Signature& in, const std::function<Covector(const Covector&)>& lhs,
                     const std::function<Covector(const Covector&)>& rhs);

// 10^(8 - digits): the tolerance for precision-tracked identities.
RealAP precision_tolerance(int digits);

}  // namespace bethe
