#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

// Every domain error the library can raise. Ops document which subset they
// throw; the CLI maps any of them to exit code 2.
enum class Errc {
  negative_exponent,
  negative_exponent_in_exact_backend,
  scale_overflow,
  scale_mismatch,
  order_mismatch,
  non_unit_constant_term,
  q_out_of_domain,
  zero_base,
  negative_index,
  h0_in_exact_backend,
  insufficient_terms,
  non_positive_x,
  max_terms_exceeded,
  convergence_domain,
  invalid_prime,
  residue_out_of_range,
  q_not_padically_close,
  level_too_large,
  negative_net_exponent,
  parity_violation,
  backend_unsupported,
  config_invalid,
  unsupported_format,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace qzeta
