#pragma once

#include <span>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

// Truncated formal power series in t, where q = t^scale: the coefficient of
// q^{e/scale} is stored at integer index e. Indices 0..order are tracked and
// every arithmetic result is coefficient-exact through that window.
//
// Values are immutable after construction as far as the public arithmetic is
// concerned; all operations return fresh series.
class QSeries {
 public:
  QSeries(long scale, long order);

  static QSeries monomial(long e, long scale, long order);
  static QSeries constant(const Rational& c, long scale, long order);
  static QSeries one(long scale, long order) { return constant(Rational(1), scale, order); }

  long scale() const { return scale_; }
  long order() const { return order_; }

  const Rational& operator[](long e) const { return c_[static_cast<size_t>(e)]; }
  Rational& at(long e) { return c_[static_cast<size_t>(e)]; }
  std::span<const Rational> coeffs() const { return c_; }

  bool is_zero() const;
  Rational max_abs_coeff() const;

  // Exact index re-mapping from scale d to d' (requires d | d'); coefficients
  // beyond the new order are truncated away.
  QSeries rescaled(long new_scale, long new_order) const;

  QSeries operator-() const;
  QSeries inverse() const;  // requires a unit constant term
  QSeries pow(long k) const;

  bool operator==(const QSeries& other) const;

 private:
  long scale_;
  long order_;
  std::vector<Rational> c_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

namespace serial {
// Reference convolution kernel; the production operator* dispatches to an
// OpenMP version for large orders and must agree with this coefficient-exactly.
QSeries mul(const QSeries& a, const QSeries& b);
}  // namespace serial

namespace kernels {
QSeries mul_parallel(const QSeries& a, const QSeries& b);
}  // namespace kernels

}  // namespace qzeta
