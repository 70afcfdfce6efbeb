#pragma once

#include <variant>

#include "qzeta/prec_complex.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

enum class Backend { exact, numeric };

// Parameter bundle shared by the weighted families. The exact backend works
// with q as a formal variable (truncation order K, scale fixed up front per
// computation); the numeric backend carries a concrete q with |q| < 1.
//
// q exactly 1 may be constructed but is accepted only by operations that
// document a finite limit (q_bracket, classical limits); everything else
// raises QOutOfDomain.
struct QContext {
  Backend backend = Backend::exact;
  Rational alpha{1};  // weight; exact backend requires a positive integer
  long h = 1;         // >= 0

  // exact backend
  long order = 64;

  // numeric backend
  PrecComplex q;
  long prec = 128;
  PrecFloat tol = PrecFloat::from_string("1e-30", 128);
  long max_terms = 1000000;
};

QContext exact_context(long alpha, long h, long order = 64);
QContext numeric_context(const Rational& alpha, long h, const PrecComplex& q,
                         long prec = 128, const char* tol = "1e-30");

// Backend-dependent result carrier: exact series, exact rational (concrete
// rational q), or configurable-precision numeric.
using Value = std::variant<QSeries, Rational, PrecComplex>;

}  // namespace qzeta
