#pragma once
#include <string>

#include <mpfr.h>

#include "bethe/rat.hpp"

namespace bethe {

// Arbitrary-precision real backed by MPFR. Precision is given in decimal
// digits; the binary precision carries a few guard bits on top.
class RealAP {
 public:
  static constexpr int kMinDigits = 30;

  explicit RealAP(int digits = 60);
  RealAP(const Rat& q, int digits);
  RealAP(long v, int digits);
  RealAP(const RealAP& o);
  RealAP(RealAP&& o) noexcept;
  RealAP& operator=(const RealAP& o);
  RealAP& operator=(RealAP&& o) noexcept;
  ~RealAP();

  int digits() const { return digits_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  friend RealAP operator+(const RealAP& a, const RealAP& b);
  friend RealAP operator-(const RealAP& a, const RealAP& b);
  friend RealAP operator*(const RealAP& a, const RealAP& b);
  friend RealAP operator/(const RealAP& a, const RealAP& b);
  RealAP operator-() const;
  RealAP abs() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  friend bool operator<(const RealAP& a, const RealAP& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const RealAP& a, const RealAP& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

  // Scientific decimal string with the given number of significant digits
  // (defaults to the working precision).
  std::string str(int sig = 0) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static RealAP pi(int digits);
  // 10^e at the given precision
  static RealAP pow10(long e, int digits);

 private:
  void init(int digits);
  int digits_;
  mpfr_t v_;
};

// Gamma function on the real line. Arguments below 1/2 go through the
// reflection formula; larger ones are shifted up until the Stirling series
// converges to the working precision, then shifted back down.
RealAP gamma_ap(const RealAP& x);
RealAP gamma_ap(const Rat& x, int digits);  // detects poles exactly
// tan(pi x), evaluated after reducing x modulo 1.
RealAP tan_pi_ap(const RealAP& x);
RealAP tan_pi_ap(const Rat& x, int digits);

// Relative discrepancy |a-b| / max(|a|,|b|,1); used for precision-checked
// identities.
RealAP rel_residual(const RealAP& a, const RealAP& b);

void check_precision(int digits);

}  // namespace bethe
