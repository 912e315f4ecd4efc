#include "bethe/rat.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

uint64_t uabs(int64_t x) { return x < 0 ? uint64_t(0) - uint64_t(x) : uint64_t(x); }

bool fits(const mpz_class& z) {
  // INT64_MIN is excluded so that negation never overflows on the fast path.
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

int64_t to_i64(const mpz_class& z) {
  // mpz_get_si is long; long is 64-bit on the supported platforms.
  static_assert(sizeof(long) == 8);
  return mpz_get_si(z.get_mpz_t());
}

mpz_class from_i64(int64_t x) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), long(x));
  return z;
}

}  // namespace

Rat::Rat(long long v) {
  if (v == kMin) {
    *this = from_mpq(mpq_class(from_i64(v)));
  } else {
    n_ = v;
  }
}

Rat::Rat(long long p, long long q) {
  if (q == 0) throw PoleError("Rat: zero denominator");
  if (p == kMin || q == kMin) {
    mpq_class r(from_i64(p), from_i64(q));
    r.canonicalize();
    *this = from_mpq(r);
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  int64_t g = int64_t(std::gcd(uabs(p), uabs(q)));
  n_ = p / g;
  d_ = q / g;
}

Rat::Rat(const mpq_class& q) {
  mpq_class r(q);
  r.canonicalize();
  *this = from_mpq(r);
}

Rat Rat::from_mpq(mpq_class q) {
  if (fits(q.get_num()) && fits(q.get_den())) return small(to_i64(q.get_num()), to_i64(q.get_den()));
  Rat r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::parse(std::string_view s) {
  std::string t(s);
  mpq_class q;
  if (t.empty() || q.set_str(t, 10) != 0) throw DomainError("Rat: cannot parse '" + t + "'");
  if (q.get_den() == 0) throw PoleError("Rat: zero denominator in '" + t + "'");
  q.canonicalize();
  return from_mpq(q);
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(from_i64(n_), from_i64(d_));
}

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

bool Rat::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return d_ == 1;
}

std::string Rat::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return double(n_) / double(d_);
}

Rat Rat::inv() const {
  if (is_zero()) throw PoleError("Rat: inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return n_ < 0 ? small(-d_, -n_) : small(d_, n_);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::operator-() const {
  if (big_) return from_mpq(-*big_);
  return small(-n_, d_);
}

Rat Rat::floor() const {
  if (big_) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return from_mpq(mpq_class(f));
  }
  int64_t q = n_ / d_;
  if (n_ % d_ != 0 && n_ < 0) --q;
  return small(q, 1);
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0) return b;
    if (b.n_ == 0) return a;
    int64_t g = int64_t(std::gcd(uint64_t(a.d_), uint64_t(b.d_)));
    int64_t ad = a.d_ / g, bd = b.d_ / g;
    int64_t x, y, num, den;
    if (!__builtin_mul_overflow(a.n_, bd, &x) && !__builtin_mul_overflow(b.n_, ad, &y) &&
        !__builtin_add_overflow(x, y, &num) && !__builtin_mul_overflow(a.d_, bd, &den) && num != kMin) {
      if (num == 0) return Rat();
      int64_t h = int64_t(std::gcd(uabs(num), uint64_t(den)));
      return Rat::small(num / h, den / h);
    }
  }
  return Rat::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.n_ == 0 || b.n_ == 0) return Rat();
    int64_t g1 = int64_t(std::gcd(uabs(a.n_), uint64_t(b.d_)));
    int64_t g2 = int64_t(std::gcd(uabs(b.n_), uint64_t(a.d_)));
    int64_t num, den;
    if (!__builtin_mul_overflow(a.n_ / g1, b.n_ / g2, &num) &&
        !__builtin_mul_overflow(a.d_ / g2, b.d_ / g1, &den) && num != kMin)
      return Rat::small(num, den);
  }
  return Rat::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals a small one
}

int cmp(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = __int128(a.n_) * b.d_, r = __int128(b.n_) * a.d_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return ::cmp(a.to_mpq(), b.to_mpq());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace bethe
