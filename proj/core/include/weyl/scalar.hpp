#ifndef WEYL_SCALAR_HPP
#define WEYL_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace weyl {

// Every coefficient in the library is an exact rational of unbounded size.
// The inversion and projection formulas divide by k! and alpha!, so floating
// point is never an option.
using Scalar = mpq_class;
using Integer = mpz_class;

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

// a(a-1)...(a-b+1); equals 0 when b > a.
Integer falling_factorial(std::uint64_t a, std::uint64_t b);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// Reduced "p/q" (or "p" for integers).
std::string scalar_to_string(const Scalar& s);

// Accepts optional leading '-', digits, optional "/digits"; rejects the rest.
std::optional<Scalar> scalar_from_string(const std::string& text);

}  // namespace weyl

#endif
