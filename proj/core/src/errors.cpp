#include "weyl/errors.hpp"

#include <sstream>

namespace weyl {

const char* errc_name(errc kind) noexcept {
  switch (kind) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::signature_mismatch: return "signature_mismatch";
    case errc::invalid_index: return "invalid_index";
    case errc::defining_relations_violated: return "defining_relations_violated";
    case errc::not_central_image: return "not_central_image";
    case errc::jacobian_not_scalar: return "jacobian_not_scalar";
    case errc::jacobian_zero: return "jacobian_zero";
    case errc::kronecker_check_failed: return "kronecker_check_failed";
    case errc::nilpotency_cap_exceeded: return "nilpotency_cap_exceeded";
    case errc::degree_bound_exceeded: return "degree_bound_exceeded";
    case errc::not_scalar_result: return "not_scalar_result";
    case errc::verification_failed: return "verification_failed";
    case errc::non_scalar_commutator: return "non_scalar_commutator";
    case errc::commutation_check_failed: return "commutation_check_failed";
    case errc::not_invertible: return "not_invertible";
    case errc::not_an_automorphism: return "not_an_automorphism";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

namespace {
std::string position_message(int line, int column, const std::string& message) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  return os.str();
}
}  // namespace

parse_error::parse_error(int line, int column, const std::string& message)
    : error(errc::parse_error, position_message(line, column, message)),
      line_(line),
      column_(column) {}

}  // namespace weyl
