#include "bethe/realap.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

mpfr_prec_t bits_for(int digits) { return mpfr_prec_t(std::ceil(digits * 3.3219280948873623)) + 32; }

// B_0, B_2, B_4, ... as exact rationals, extended on demand.
const mpq_class& bernoulli_even(size_t k) {
  static std::mutex mu;
  static std::vector<mpq_class> all{mpq_class(1)};  // B_0 .. B_j for all j
  std::lock_guard<std::mutex> lock(mu);
  size_t need = 2 * k;
  while (all.size() <= need) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    size_t m = all.size();
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (size_t j = 0; j < m; ++j) {
      s += binom * all[j];
      binom = binom * mpz_class(long(m + 1 - j)) / mpz_class(long(j + 1));
    }
    mpq_class b = -s / mpq_class(long(m + 1));
    b.canonicalize();
    all.push_back(b);
  }
  return all[need];
}

// log Gamma(x) for x large enough that the Stirling tail is below 10^-digits.
RealAP lgamma_stirling(const RealAP& x, int digits) {
  mpfr_prec_t p = bits_for(digits);
  mpfr_t t, lx, acc, xp, x2, term, eps, b;
  mpfr_inits2(p, t, lx, acc, xp, x2, term, eps, b, (mpfr_ptr)nullptr);
  mpfr_log(lx, x.get(), MPFR_RNDN);
  // (x - 1/2) log x - x + log(2 pi)/2
  mpfr_sub_d(t, x.get(), 0.5, MPFR_RNDN);
  mpfr_mul(acc, t, lx, MPFR_RNDN);
  mpfr_sub(acc, acc, x.get(), MPFR_RNDN);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_div_ui(t, t, 2, MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  mpfr_set(xp, x.get(), MPFR_RNDN);  // x^(2k-1)
  mpfr_mul(x2, x.get(), x.get(), MPFR_RNDN);
  mpfr_set_ui(eps, 10, MPFR_RNDN);
  mpfr_pow_si(eps, eps, -long(digits) - 8, MPFR_RNDN);
  for (size_t k = 1; k < 400; ++k) {
    const mpq_class& bk = bernoulli_even(k);
    mpfr_set_q(b, bk.get_mpq_t(), MPFR_RNDN);
    mpfr_div_ui(b, b, (unsigned long)(2 * k * (2 * k - 1)), MPFR_RNDN);
    mpfr_div(term, b, xp, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
    mpfr_abs(term, term, MPFR_RNDN);
    if (mpfr_less_p(term, eps)) break;
    mpfr_mul(xp, xp, x2, MPFR_RNDN);
  }
  RealAP out(digits);
  mpfr_set(out.get(), acc, MPFR_RNDN);
  mpfr_clears(t, lx, acc, xp, x2, term, eps, b, (mpfr_ptr)nullptr);
  return out;
}

}  // namespace

void check_precision(int digits) {
  if (digits < RealAP::kMinDigits) throw PrecisionError("precision must be at least 30 digits");
}

void RealAP::init(int digits) {
  check_precision(digits);
  digits_ = digits;
  mpfr_init2(v_, bits_for(digits));
}

RealAP::RealAP(int digits) {
  init(digits);
  mpfr_set_zero(v_, 1);
}
RealAP::RealAP(const Rat& q, int digits) {
  init(digits);
  mpq_class m = q.to_mpq();
  mpfr_set_q(v_, m.get_mpq_t(), MPFR_RNDN);
}
RealAP::RealAP(long v, int digits) {
  init(digits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
RealAP::RealAP(const RealAP& o) {
  init(o.digits_);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
RealAP::RealAP(RealAP&& o) noexcept : RealAP(static_cast<const RealAP&>(o)) {}
RealAP& RealAP::operator=(const RealAP& o) {
  if (this != &o) {
    mpfr_clear(v_);
    init(o.digits_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
RealAP& RealAP::operator=(RealAP&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_), std::swap(digits_, o.digits_);
  return *this;
}
RealAP::~RealAP() { mpfr_clear(v_); }

#define BETHE_BINOP(OP, FN)                                  \
  RealAP operator OP(const RealAP& a, const RealAP& b) {     \
    RealAP r(std::max(a.digits_, b.digits_));                \
    FN(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
    return r;                                                \
  }
BETHE_BINOP(+, mpfr_add)
BETHE_BINOP(-, mpfr_sub)
BETHE_BINOP(*, mpfr_mul)
BETHE_BINOP(/, mpfr_div)
#undef BETHE_BINOP

RealAP RealAP::operator-() const {
  RealAP r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}
RealAP RealAP::abs() const {
  RealAP r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string RealAP::str(int sig) const {
  if (sig <= 0) sig = digits_;
  std::vector<char> buf(size_t(sig) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig - 1, v_);
  return std::string(buf.data());
}

RealAP RealAP::pi(int digits) {
  RealAP r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

RealAP RealAP::pow10(long e, int digits) {
  RealAP r(10L, digits);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

RealAP gamma_ap(const RealAP& x) {
  int digits = x.digits();
  if (mpfr_integer_p(x.get()) && x.sign() <= 0) throw PoleError("Gamma: pole at non-positive integer");
  RealAP half(Rat(1, 2), digits);
  if (x < half) {
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    RealAP one(1L, digits);
    RealAP s(digits);
    RealAP px = RealAP::pi(digits) * x;
    mpfr_sin(s.get(), px.get(), MPFR_RNDN);
    return RealAP::pi(digits) / (s * gamma_ap(one - x));
  }
  // Shift up to x + k >= digits so the asymptotic series is accurate.
  long k = 0;
  RealAP target(long(std::max(digits, 20)), digits);
  RealAP y = x;
  RealAP prod(1L, digits);
  RealAP one(1L, digits);
  while (y < target) {
    prod = prod * y;
    y = y + one;
    ++k;
  }
  RealAP lg = lgamma_stirling(y, digits);
  RealAP g(digits);
  mpfr_exp(g.get(), lg.get(), MPFR_RNDN);
  return g / prod;
}

RealAP gamma_ap(const Rat& x, int digits) {
  check_precision(digits);
  if (x.is_integer() && x.sign() <= 0) throw PoleError("Gamma: pole at " + x.str());
  return gamma_ap(RealAP(x, digits));
}

RealAP tan_pi_ap(const RealAP& x) {
  int digits = x.digits();
  RealAP f(digits);
  mpfr_frac(f.get(), x.get(), MPFR_RNDN);  // in (-1, 1)
  RealAP half(Rat(1, 2), digits);
  RealAP af = f.abs();
  RealAP diff = (af - half).abs();
  if (diff.is_zero()) throw PoleError("tan(pi x): pole at half-integer");
  RealAP r(digits);
  RealAP arg = RealAP::pi(digits) * f;
  mpfr_tan(r.get(), arg.get(), MPFR_RNDN);
  return r;
}

RealAP tan_pi_ap(const Rat& x, int digits) {
  check_precision(digits);
  if (x.frac() == Rat(1, 2)) throw PoleError("tan(pi x): pole at " + x.str());
  // reduce exactly before converting
  return tan_pi_ap(RealAP(x.frac(), digits));
}

RealAP rel_residual(const RealAP& a, const RealAP& b) {
  int digits = std::max(a.digits(), b.digits());
  RealAP scale(1L, digits);
  RealAP aa = a.abs(), bb = b.abs();
  if (scale < aa) scale = aa;
  if (scale < bb) scale = bb;
  return (a - b).abs() / scale;
}

}  // namespace bethe
