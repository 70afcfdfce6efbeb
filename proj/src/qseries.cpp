#include "qzeta/qseries.hpp"

#include <algorithm>

#include "qzeta/errors.hpp"

namespace qzeta {

namespace {

void require_compatible(const QSeries& a, const QSeries& b) {
  if (a.scale() != b.scale())
    fail(Errc::scale_mismatch, "scales " + std::to_string(a.scale()) + " vs " +
                                   std::to_string(b.scale()));
  if (a.order() != b.order())
    fail(Errc::order_mismatch, "orders " + std::to_string(a.order()) + " vs " +
                                   std::to_string(b.order()));
}

}  // namespace

QSeries::QSeries(long scale, long order) : scale_(scale), order_(order) {
  if (scale < 1) fail(Errc::scale_overflow, "scale must be >= 1");
  if (order < 1) fail(Errc::order_mismatch, "order must be >= 1");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

QSeries QSeries::monomial(long e, long scale, long order) {
  if (e < 0) fail(Errc::negative_exponent, "monomial exponent " + std::to_string(e));
  QSeries s(scale, order);
  if (e <= order) s.c_[static_cast<size_t>(e)] = 1;
  return s;  // beyond truncation the monomial is the zero series
}

QSeries QSeries::constant(const Rational& c, long scale, long order) {
  QSeries s(scale, order);
  s.c_[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

Rational QSeries::max_abs_coeff() const {
  Rational m(0);
  for (const Rational& r : c_) {
    Rational a = abs(r);
    if (a > m) m = a;
  }
  return m;
}

QSeries QSeries::rescaled(long new_scale, long new_order) const {
  if (new_scale % scale_ != 0)
    fail(Errc::scale_overflow, "rescale requires old scale to divide new scale");
  long r = new_scale / scale_;
  QSeries out(new_scale, new_order);
  for (long e = 0; e <= order_; ++e) {
    if (e * r > new_order) break;
    out.c_[static_cast<size_t>(e * r)] = c_[static_cast<size_t>(e)];
  }
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out(scale_, order_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  QSeries out(a.scale(), a.order());
  for (long e = 0; e <= a.order(); ++e) out.at(e) = a[e] + b[e];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  QSeries out(a.scale(), a.order());
  for (long e = 0; e <= a.order(); ++e) out.at(e) = a[e] - b[e];
  return out;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out(a.scale(), a.order());
  for (long e = 0; e <= a.order(); ++e) out.at(e) = c * a[e];
  return out;
}

namespace serial {

QSeries mul(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  const long K = a.order();
  QSeries out(a.scale(), K);
  for (long e = 0; e <= K; ++e) {
    Rational acc(0);
    for (long i = 0; i <= e; ++i) {
      if (a[i] == 0) continue;
      acc += a[i] * b[e - i];
    }
    out.at(e) = acc;
  }
  return out;
}

}  // namespace serial

namespace kernels {

QSeries mul_parallel(const QSeries& a, const QSeries& b) {
  require_compatible(a, b);
  const long K = a.order();
  QSeries out(a.scale(), K);
#pragma omp parallel for schedule(dynamic, 8)
  for (long e = 0; e <= K; ++e) {
    Rational acc(0);
    for (long i = 0; i <= e; ++i) {
      if (a[i] == 0) continue;
      acc += a[i] * b[e - i];
    }
    out.at(e) = acc;
  }
  return out;
}

}  // namespace kernels

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Each output coefficient is independent, so the parallel kernel is
  // bit-identical to the serial one; below this size the fork overhead wins.
  if (a.order() >= 192) return kernels::mul_parallel(a, b);
  return serial::mul(a, b);
}

QSeries QSeries::inverse() const {
  if (c_[0] == 0)
    fail(Errc::non_unit_constant_term, "series has zero constant term");
  QSeries out(scale_, order_);
  Rational inv0 = Rational(1) / c_[0];
  out.c_[0] = inv0;
  for (long e = 1; e <= order_; ++e) {
    Rational acc(0);
    for (long i = 1; i <= e; ++i) {
      if (c_[static_cast<size_t>(i)] == 0) continue;
      acc += c_[static_cast<size_t>(i)] * out.c_[static_cast<size_t>(e - i)];
    }
    out.c_[static_cast<size_t>(e)] = -acc * inv0;
  }
  return out;
}

QSeries QSeries::pow(long k) const {
  if (k < 0) fail(Errc::negative_exponent, "series pow exponent " + std::to_string(k));
  QSeries acc = QSeries::one(scale_, order_);
  QSeries base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool QSeries::operator==(const QSeries& other) const {
  return scale_ == other.scale_ && order_ == other.order_ && c_ == other.c_;
}

}  // namespace qzeta
