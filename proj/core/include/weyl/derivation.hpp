#ifndef WEYL_DERIVATION_HPP
#define WEYL_DERIVATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

// A K-derivation of A_n (x) P_m, one of:
//   - a coordinate partial d/dx_i,
//   - an inner derivation +-ad(a): b -> +-(ab - ba),
//   - a linear combination sum c_l d/dx_l with central coefficients c_l,
//     where each coefficient multiplies on the left after differentiation.
class Derivation {
 public:
  struct CoordinatePartial {
    std::uint32_t index;
  };
  struct Inner {
    Element generator;
    int sign;  // +1 or -1
  };
  struct LinearCombination {
    std::vector<std::pair<Element, std::uint32_t>> parts;  // (c_l, l)
  };

  static Derivation coordinate_partial(AlgebraSignature sig,
                                       std::uint32_t index);
  static Derivation inner(Element generator, int sign = 1);
  static Derivation linear_combination(
      AlgebraSignature sig,
      std::vector<std::pair<Element, std::uint32_t>> parts);

  const AlgebraSignature& signature() const { return sig_; }

  Element apply(const Element& a) const;

  bool is_inner() const { return std::holds_alternative<Inner>(impl_); }
  bool is_coordinate_partial() const {
    return std::holds_alternative<CoordinatePartial>(impl_);
  }

 private:
  Derivation(AlgebraSignature sig,
             std::variant<CoordinatePartial, Inner, LinearCombination> impl)
      : sig_(sig), impl_(std::move(impl)) {}

  AlgebraSignature sig_;
  std::variant<CoordinatePartial, Inner, LinearCombination> impl_;
};

// True iff d1(d2(a)) = d2(d1(a)) on every generator and every probe.
bool commute_on(const Derivation& d1, const Derivation& d2,
                std::span<const Element> probes = {});

// Least k <= cap with d^k(a) = 0; nullopt when no such k exists within cap.
std::optional<int> nilpotency_index(const Derivation& d, const Element& a,
                                    int cap);

// The projection sum_k (-1)^k x^k/k! d^k(a), summed until an exact zero
// derivative appears. Requires d(x) = 1. x^k multiplies on the left, which
// matters when x is not central. Throws nilpotency_cap_exceeded when d^k(a)
// stays nonzero for all k <= cap.
Element phi_map(const Element& x, const Derivation& d, const Element& a,
                int cap);

// Composition of the coordinate phi maps, phi_1 applied first; lands in K
// and extracts the coefficient lambda_0.
Scalar full_projection(const Element& a);

}  // namespace weyl

#endif
