#ifndef WEYL_ELEMENT_HPP
#define WEYL_ELEMENT_HPP

#include <map>
#include <optional>

#include "weyl/errors.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/scalar.hpp"
#include "weyl/signature.hpp"

namespace weyl {

// A normal-ordered element of A_n (x) P_m: a finite sparse map from exponent
// vectors to nonzero rationals. The monomial basis x^alpha = x_1^a1...x_s^as
// (q's, then p's, then central y's) makes the representation canonical, so
// equality of term maps is equality in the algebra.
//
// Elements are immutable values; every operation returns a fresh Element.
class Element {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GrlexLess>;

  explicit Element(AlgebraSignature sig) : sig_(sig) {}

  static Element zero(AlgebraSignature sig) { return Element(sig); }
  static Element constant(AlgebraSignature sig, Scalar value);
  static Element one(AlgebraSignature sig) {
    return constant(sig, Scalar(1));
  }
  static Element generator(AlgebraSignature sig, std::uint32_t index);
  static Element monomial(AlgebraSignature sig, MultiIndex alpha,
                          Scalar coefficient = Scalar(1));
  static Element from_terms(AlgebraSignature sig, TermMap terms);

  const AlgebraSignature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  // True when the element lies in the centre P_m (no q/p exponents).
  bool is_central() const;

  Scalar constant_term() const;
  Scalar coefficient(const MultiIndex& alpha) const;
  // Max |alpha| over stored terms; nullopt is the zero element's -infinity.
  std::optional<int> degree() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  friend Element operator*(const Element& a, const Scalar& c);

  friend bool operator==(const Element& a, const Element& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraSignature sig_;
  TermMap terms_;  // invariant: no zero coefficients
};

Element commutator(const Element& a, const Element& b);
Element power(const Element& a, std::uint32_t k);

void require_same_signature(const Element& a, const Element& b);

}  // namespace weyl

#endif
