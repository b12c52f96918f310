#include "weyl/scalar.hpp"

#include <cctype>

namespace weyl {

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer falling_factorial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return Integer(0);
  Integer r(1);
  for (std::uint64_t i = 0; i < b; ++i) r *= Integer(a - i);
  return r;
}

std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

std::optional<Scalar> scalar_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  bool seen_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (seen_slash || j + 1 == text.size()) return std::nullopt;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  Scalar s;
  if (mpq_set_str(s.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(s.get_mpq_t())) == 0) return std::nullopt;
  s.canonicalize();
  return s;
}

}  // namespace weyl
