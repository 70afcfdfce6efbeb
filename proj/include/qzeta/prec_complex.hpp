#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qzeta/rational.hpp"

namespace qzeta {

// Binary floating value with an explicit mantissa precision in bits.
// Every operation is correctly rounded (round-to-nearest) at the result
// precision, which is the larger of the operand precisions.
class PrecFloat {
 public:
  explicit PrecFloat(long prec = 128);
  PrecFloat(long value, long prec);
  PrecFloat(const Rational& value, long prec);
  PrecFloat(const PrecFloat& other);
  PrecFloat(PrecFloat&& other) noexcept;
  PrecFloat& operator=(const PrecFloat& other);
  PrecFloat& operator=(PrecFloat&& other) noexcept;
  ~PrecFloat();

  static PrecFloat from_string(const std::string& text, long prec);
  static PrecFloat pi(long prec);
  static PrecFloat ln2(long prec);

  long prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  PrecFloat operator-() const;
  PrecFloat abs() const;

  // Full-precision scientific notation; deterministic for identical inputs.
  std::string str() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend PrecFloat operator+(const PrecFloat& a, const PrecFloat& b);
  friend PrecFloat operator-(const PrecFloat& a, const PrecFloat& b);
  friend PrecFloat operator*(const PrecFloat& a, const PrecFloat& b);
  friend PrecFloat operator/(const PrecFloat& a, const PrecFloat& b);
  friend bool operator<(const PrecFloat& a, const PrecFloat& b);
  friend bool operator<=(const PrecFloat& a, const PrecFloat& b);
  friend bool operator>(const PrecFloat& a, const PrecFloat& b);
  friend bool operator>=(const PrecFloat& a, const PrecFloat& b);
  friend bool operator==(const PrecFloat& a, const PrecFloat& b);

 private:
  mpfr_t v_;
};

PrecFloat exp(const PrecFloat& x);
PrecFloat log(const PrecFloat& x);
PrecFloat sqrt(const PrecFloat& x);
PrecFloat atan2(const PrecFloat& y, const PrecFloat& x);
PrecFloat hypot(const PrecFloat& x, const PrecFloat& y);
PrecFloat pow(const PrecFloat& base, const PrecFloat& e);  // real path, base > 0
PrecFloat pow_si(const PrecFloat& base, long e);
std::pair<PrecFloat, PrecFloat> sin_cos(const PrecFloat& x);

// Complex value over two PrecFloat components of equal precision.
class PrecComplex {
 public:
  explicit PrecComplex(long prec = 128) : re_(prec), im_(prec) {}
  PrecComplex(PrecFloat re, PrecFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  PrecComplex(long value, long prec) : re_(value, prec), im_(0, prec) {}
  PrecComplex(const Rational& value, long prec) : re_(value, prec), im_(0, prec) {}

  const PrecFloat& re() const { return re_; }
  const PrecFloat& im() const { return im_; }
  long prec() const { return re_.prec(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  PrecComplex operator-() const { return PrecComplex(-re_, -im_); }
  PrecFloat abs() const { return hypot(re_, im_); }

  std::string str() const;

 private:
  PrecFloat re_;
  PrecFloat im_;
};

PrecComplex operator+(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator-(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator*(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator/(const PrecComplex& a, const PrecComplex& b);

PrecComplex exp(const PrecComplex& z);
// Principal logarithm: log|z| + i*atan2(im, re).
PrecComplex log(const PrecComplex& z);
// exp(s * Log z), principal branch; real positive base with real exponent
// stays exactly real. Throws ZeroBase for z = 0 (except s = 0 -> 1).
PrecComplex pow(const PrecComplex& z, const PrecComplex& s);
PrecComplex pow_si(const PrecComplex& z, long e);

}  // namespace qzeta
