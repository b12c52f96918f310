#ifndef WEYL_ENDOMORPHISM_HPP
#define WEYL_ENDOMORPHISM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/derivation.hpp"
#include "weyl/element.hpp"

namespace weyl {

// An algebra endomorphism of A_n (x) P_m, determined by the images of the
// s generators. Construction checks the defining relations
// [images[i], images[j]] = [x_i, x_j], which makes substitution a
// well-defined homomorphism.
class Endomorphism {
 public:
  Endomorphism(AlgebraSignature sig, std::vector<Element> images);

  static Endomorphism identity(AlgebraSignature sig);
  // Skips the relation check; for probing invalid data in tests.
  static Endomorphism unchecked(AlgebraSignature sig,
                                std::vector<Element> images);

  const AlgebraSignature& signature() const { return sig_; }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(std::uint32_t i) const { return images_[i]; }

  // Substitution x_i -> images[i], factors multiplied in the monomial's
  // written order.
  Element apply(const Element& a) const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.sig_ == b.sig_ && a.images_ == b.images_;
  }

 private:
  struct unchecked_tag {};
  Endomorphism(AlgebraSignature sig, std::vector<Element> images,
               unchecked_tag);

  AlgebraSignature sig_;
  std::vector<Element> images_;
};

Endomorphism compose(const Endomorphism& sigma, const Endomorphism& tau);

// max deg sigma(x_i); at least 1 for any valid endomorphism.
int degree_of(const Endomorphism& sigma);

// Degree budget for inversion: (deg sigma)^(s-1).
Integer inversion_degree_bound(const Endomorphism& sigma);

// Determinant of the m x m matrix of partials of the central images.
// Requires m >= 1 and central central-images; must land in K*.
Scalar central_jacobian_det(const Endomorphism& sigma);

// The derivations dual to the generator images: partials[i] sends
// sigma(x_j) to delta_ij. Weyl-part duals are inner derivations of the
// opposite images; central duals expand the operator-row determinant of
// the central Jacobian (minors multiply on the left after the partial).
//
// The central construction is the dual system exactly when the images of
// the Weyl generators are free of the central variables; the Kronecker
// check rejects everything else (kronecker_check_failed), since the
// adjugate row applied to a nonzero central gradient cannot vanish.
struct DualDerivations {
  std::vector<Derivation> partials;
  Scalar delta;  // central Jacobian determinant (1 when m = 0)
};

DualDerivations dual_derivations(const Endomorphism& sigma);

// The projection attached to sigma: phi'_1 applied first, then phi'_2, ...
// Lands in K exactly when sigma is an automorphism; a positive-degree
// remainder throws not_scalar_result.
Scalar phi_sigma(const Endomorphism& sigma, const Element& a,
                 std::optional<int> cap = std::nullopt);

// sigma^{-1} via the coefficient formula
//   sigma^{-1}(a) = sum_alpha phi_sigma((d')^alpha/alpha! a) x^alpha,
// enumerated level by level in |alpha| until a whole level of derivatives
// vanishes. Exceeding (deg sigma)^(s-1) levels proves sigma is not an
// automorphism and throws degree_bound_exceeded. The round trip
// sigma o tau = tau o sigma = id is verified before returning.
Endomorphism invert(const Endomorphism& sigma,
                    std::optional<Integer> cap_override = std::nullopt);

// deg'(a): the largest |alpha| whose dual-Taylor coefficient of a is
// nonzero (nullopt for the zero element). For generators this computes
// deg sigma^{-1} without inverting.
std::optional<int> dual_degree(const Endomorphism& sigma, const Element& a,
                               std::optional<Integer> cap_override =
                                   std::nullopt);

struct Certification {
  enum class Obstruction {
    none,
    central_image_not_central,
    jacobian_not_scalar,
    jacobian_zero,
    kronecker_check_failed,
    not_locally_nilpotent,
  };

  bool certified = false;
  Obstruction obstruction = Obstruction::none;
  std::string detail;
  // Failing (i, j) for the local-nilpotency test.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness_pair;
};

// Automorphism iff the dual derivations are locally nilpotent, tested as
// (d'_i)^(B+1)(x_j) = 0 for all i,j with B = (deg sigma)^(s-1); the central
// Jacobian must lie in K* first.
Certification certify_automorphism(const Endomorphism& sigma);

// Coefficients of a recovered through the projection formula
// a = sum_alpha phi(d^alpha/alpha! a) x^alpha; equals the stored term map.
std::map<MultiIndex, Scalar, GrlexLess> taylor_expand(const Element& a);

}  // namespace weyl

#endif
