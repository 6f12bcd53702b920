#pragma once

#include <stdexcept>
#include <string>

namespace qkz {

/* Typed failure conditions. Every throwing path in the library uses one of
   these codes so callers (CLI, tests) can react without string matching. */
enum class errc {
  ring_mismatch,
  inexact_division,
  index_out_of_range,
  non_square,
  not_skew_symmetric,
  odd_dimension,
  insufficient_vanishing,
  precision_exhausted,
  size_cap_exceeded,
  invalid_word,
  shape_mismatch,
  ballot_violation,
  unsupported_parameters,
  bad_tau_value,
  inconsistent_derivation,
  non_unique_solution,
  positivity_uncertified,
  degenerate_alternant,
  degenerate_input,
  non_integer_coefficient,
  non_integer,
  format_version_mismatch,
  corrupt_cache,
  usage_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace qkz
