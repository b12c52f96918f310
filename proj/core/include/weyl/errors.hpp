#ifndef WEYL_ERRORS_HPP
#define WEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weyl {

// Machine-readable failure kinds; the CLI reports kind_name() on stderr.
enum class errc {
  invalid_argument,
  signature_mismatch,
  invalid_index,
  defining_relations_violated,
  not_central_image,
  jacobian_not_scalar,
  jacobian_zero,
  kronecker_check_failed,
  nilpotency_cap_exceeded,
  degree_bound_exceeded,
  not_scalar_result,
  verification_failed,
  non_scalar_commutator,
  commutation_check_failed,
  not_invertible,
  not_an_automorphism,
  parse_error,
  io_error,
};

const char* errc_name(errc kind) noexcept;

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  errc kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return errc_name(kind_); }

 private:
  errc kind_;
};

// Syntax errors carry a 1-based source position.
class parse_error : public error {
 public:
  parse_error(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace weyl

#endif
