#include "qzeta/rational.hpp"

#include <climits>
#include <numeric>

#include "qzeta/errors.hpp"

namespace qzeta {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::negative_exponent: return "NegativeExponent";
    case Errc::negative_exponent_in_exact_backend: return "NegativeExponentInExactBackend";
    case Errc::scale_overflow: return "ScaleOverflow";
    case Errc::scale_mismatch: return "ScaleMismatch";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case Errc::q_out_of_domain: return "QOutOfDomain";
    case Errc::zero_base: return "ZeroBase";
    case Errc::negative_index: return "NegativeIndex";
    case Errc::h0_in_exact_backend: return "H0InExactBackend";
    case Errc::insufficient_terms: return "InsufficientTerms";
    case Errc::non_positive_x: return "NonPositiveX";
    case Errc::max_terms_exceeded: return "MaxTermsExceeded";
    case Errc::convergence_domain: return "ConvergenceDomain";
    case Errc::invalid_prime: return "InvalidPrime";
    case Errc::residue_out_of_range: return "ResidueOutOfRange";
    case Errc::q_not_padically_close: return "QNotPadicallyClose";
    case Errc::level_too_large: return "LevelTooLarge";
    case Errc::negative_net_exponent: return "NegativeNetExponent";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::backend_unsupported: return "BackendUnsupported";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::unsupported_format: return "UnsupportedFormat";
  }
  return "UnknownError";
}

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(Errc::config_invalid, "empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point away and divide by the matching
    // power of ten, so exactness is never silently lost
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      fail(Errc::config_invalid, "bad decimal literal '" + s + "'");
    for (size_t i = 0; i < digits.size(); ++i) {
      char c = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) ||
            (i == 0 && (c == '-' || c == '+'))))
        fail(Errc::config_invalid, "bad decimal literal '" + s + "'");
    }
    Integer num(digits, 10);
    Integer den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    fail(Errc::config_invalid, "bad rational literal '" + s + "'");
  if (r.get_den() == 0)
    fail(Errc::config_invalid, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    fail(Errc::config_invalid, "expected a small integer, got " + to_string(r));
  return r.get_num().get_si();
}

Rational pow(const Rational& r, long k) {
  if (k == 0) return Rational(1);
  if (r == 0 && k < 0) fail(Errc::zero_base, "0 raised to a negative power");
  Integer num, den;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
  Rational out = (k > 0) ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

long lcm_long(long a, long b) {
  if (a <= 0 || b <= 0) fail(Errc::config_invalid, "lcm of non-positive values");
  long g = std::gcd(a, b);
  long l = a / g;
  if (l > LONG_MAX / b) fail(Errc::scale_overflow, "scale lcm overflows");
  return l * b;
}

}  // namespace qzeta
