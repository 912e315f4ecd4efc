#pragma once
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bethe {

// Exact rational number, always in lowest terms with positive denominator.
// Values whose numerator and denominator fit in int64 are kept inline; larger
// ones live in a shared immutable GMP rational. The representation is
// canonical, so equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(long long v);  // NOLINT(google-explicit-constructor)
  Rat(long long p, long long q);
  explicit Rat(const mpq_class& q);

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view s);

  bool is_zero() const { return !big_ && n_ == 0; }
  int sign() const;
  bool is_integer() const;
  mpq_class to_mpq() const;
  std::string str() const;  // "p/q", or "p" when q == 1
  double to_double() const;

  Rat inv() const;  // throws PoleError on zero
  Rat abs() const;
  Rat operator-() const;
  // floor(x) as a Rat, and x - floor(x) in [0,1)
  Rat floor() const;
  Rat frac() const { return *this - floor(); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend int cmp(const Rat& a, const Rat& b);
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

 private:
  static Rat from_mpq(mpq_class q);  // q already canonical
  static Rat small(int64_t n, int64_t d) {
    Rat r;
    r.n_ = n;
    r.d_ = d;
    return r;
  }
  int64_t n_ = 0;
  int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace bethe
