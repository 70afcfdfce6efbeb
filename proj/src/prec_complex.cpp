#include "qzeta/prec_complex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qzeta/errors.hpp"

namespace qzeta {

namespace {

long result_prec(const PrecFloat& a, const PrecFloat& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

PrecFloat::PrecFloat(long prec) {
  if (prec < 53) fail(Errc::config_invalid, "precision below 53 bits");
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

PrecFloat::PrecFloat(long value, long prec) {
  if (prec < 53) fail(Errc::config_invalid, "precision below 53 bits");
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

PrecFloat::PrecFloat(const Rational& value, long prec) {
  if (prec < 53) fail(Errc::config_invalid, "precision below 53 bits");
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

PrecFloat::PrecFloat(const PrecFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecFloat::PrecFloat(PrecFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

PrecFloat& PrecFloat::operator=(const PrecFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

PrecFloat& PrecFloat::operator=(PrecFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

PrecFloat::~PrecFloat() { mpfr_clear(v_); }

PrecFloat PrecFloat::from_string(const std::string& text, long prec) {
  PrecFloat x(prec);
  if (mpfr_set_str(x.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    fail(Errc::config_invalid, "bad numeric literal '" + text + "'");
  return x;
}

PrecFloat PrecFloat::pi(long prec) {
  PrecFloat x(prec);
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

PrecFloat PrecFloat::ln2(long prec) {
  PrecFloat x(prec);
  mpfr_const_log2(x.v_, MPFR_RNDN);
  return x;
}

PrecFloat PrecFloat::operator-() const {
  PrecFloat out(prec());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

PrecFloat PrecFloat::abs() const {
  PrecFloat out(prec());
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

std::string PrecFloat::str() const {
  // enough decimal digits to reconstruct the mantissa
  long digits = static_cast<long>(std::ceil(prec() * 0.30103)) + 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define QZETA_BINOP(name, fn)                                   \
  PrecFloat name(const PrecFloat& a, const PrecFloat& b) {      \
    PrecFloat out(result_prec(a, b));                           \
    fn(out.raw(), a.raw(), b.raw(), MPFR_RNDN);                 \
    return out;                                                 \
  }

QZETA_BINOP(operator+, mpfr_add)
QZETA_BINOP(operator-, mpfr_sub)
QZETA_BINOP(operator*, mpfr_mul)
QZETA_BINOP(operator/, mpfr_div)
QZETA_BINOP(atan2, mpfr_atan2)
QZETA_BINOP(hypot, mpfr_hypot)
#undef QZETA_BINOP

bool operator<(const PrecFloat& a, const PrecFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const PrecFloat& a, const PrecFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const PrecFloat& a, const PrecFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const PrecFloat& a, const PrecFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
bool operator==(const PrecFloat& a, const PrecFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

PrecFloat exp(const PrecFloat& x) {
  PrecFloat out(x.prec());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

PrecFloat log(const PrecFloat& x) {
  PrecFloat out(x.prec());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

PrecFloat sqrt(const PrecFloat& x) {
  PrecFloat out(x.prec());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

PrecFloat pow(const PrecFloat& base, const PrecFloat& e) {
  PrecFloat out(result_prec(base, e));
  mpfr_pow(out.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return out;
}

PrecFloat pow_si(const PrecFloat& base, long e) {
  PrecFloat out(base.prec());
  mpfr_pow_si(out.raw(), base.raw(), e, MPFR_RNDN);
  return out;
}

std::pair<PrecFloat, PrecFloat> sin_cos(const PrecFloat& x) {
  PrecFloat s(x.prec()), c(x.prec());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

std::string PrecComplex::str() const {
  if (is_real()) return re_.str();
  std::string im_part = im_.str();
  if (!im_part.empty() && im_part[0] == '-') return re_.str() + im_part + "i";
  return re_.str() + "+" + im_part + "i";
}

PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}

PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}

PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
  if (b.is_zero()) fail(Errc::zero_base, "complex division by zero");
  PrecFloat d = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / d,
          (a.im() * b.re() - a.re() * b.im()) / d};
}

PrecComplex exp(const PrecComplex& z) {
  PrecFloat m = exp(z.re());
  if (z.im().is_zero()) return {m, PrecFloat(0, z.prec())};
  auto [s, c] = sin_cos(z.im());
  return {m * c, m * s};
}

PrecComplex log(const PrecComplex& z) {
  if (z.is_zero()) fail(Errc::zero_base, "log of zero");
  if (z.im().is_zero() && z.re().sign() > 0)
    return {log(z.re()), PrecFloat(0, z.prec())};
  return {log(z.abs()), atan2(z.im(), z.re())};
}

PrecComplex pow(const PrecComplex& z, const PrecComplex& s) {
  if (s.is_zero()) return PrecComplex(1, std::max(z.prec(), s.prec()));
  if (z.is_zero()) fail(Errc::zero_base, "0 as a power base");
  // real positive base with real exponent: keep the imaginary part exactly 0
  if (z.is_real() && s.is_real() && z.re().sign() > 0) {
    long p = std::max(z.prec(), s.prec());
    PrecFloat r = pow(z.re(), s.re());
    return {std::move(r), PrecFloat(0, p)};
  }
  return exp(s * log(z));
}

PrecComplex pow_si(const PrecComplex& z, long e) {
  if (e == 0) return PrecComplex(1, z.prec());
  if (z.is_zero()) {
    if (e > 0) return PrecComplex(0, z.prec());
    fail(Errc::zero_base, "0 raised to a negative power");
  }
  if (z.is_real()) return {pow_si(z.re(), e), PrecFloat(0, z.prec())};
  bool invert = e < 0;
  unsigned long n = static_cast<unsigned long>(invert ? -e : e);
  PrecComplex acc(1, z.prec());
  PrecComplex base = z;
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (invert) return PrecComplex(1, z.prec()) / acc;
  return acc;
}

}  // namespace qzeta
