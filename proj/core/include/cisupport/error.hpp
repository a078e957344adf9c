#ifndef CISUPPORT_ERROR_HPP
#define CISUPPORT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cisupport {

enum class errc {
  duplicate_variable,
  bad_weight,
  ring_mismatch,
  non_homogeneous_input,
  not_regular_sequence,
  zero_module,
  bound_exceeded,
  lift_decomposition_failure,
  commutation_failure,
  truncation_insufficient,
  singular_matrix,
  degenerate_form,
  complexity_mismatch,
  not_finite_length,
  eventual_nonvanishing,
  no_witness,
  parse_error,
  name_error,
  internal,
};

const char* errc_name(errc c);

/// Every engine failure is thrown as one of these; `code()` carries the
/// machine-readable reason and `what()` the human-readable one.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), m_code(code) {}
  errc code() const { return m_code; }

 private:
  errc m_code;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void check(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace cisupport

#endif
