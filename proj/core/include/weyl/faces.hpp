#ifndef WEYL_FACES_HPP
#define WEYL_FACES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/endomorphism.hpp"

namespace weyl {

// Reduction of an element modulo the one-sided ideal x_i A (or A x_i): the
// unique representative supported on exponent 0 at the dropped generator,
// re-indexed densely into the quotient algebra. Dropping a central variable
// yields A_n (x) P_{m-1}; dropping half a Weyl pair orphans its partner into
// the centre, yielding A_{n-1} (x) P_{m+1}.
struct FaceImage {
  std::uint32_t dropped_index = 0;
  AlgebraSignature quotient_signature;
  Element representative = Element(AlgebraSignature(0, 0));
  std::vector<std::uint32_t> original_index;  // quotient index -> original

  friend bool operator==(const FaceImage& a, const FaceImage& b) {
    return a.dropped_index == b.dropped_index &&
           a.representative == b.representative;
  }
};

// The quotient shape and dense re-indexing used by both face maps.
std::pair<AlgebraSignature, std::vector<std::uint32_t>> face_quotient(
    const AlgebraSignature& sig, std::uint32_t dropped);

// a mod x_i A. Central and q generators drop straight off the normal form;
// for p_k the pair reduces through
//   q_k^a p_k^b = (-1)^b a(a-1)...(a-b+1) q_k^(a-b)   (mod p_k A),
// zero when b > a.
FaceImage right_face(std::uint32_t i, const Element& a);

// a mod A x_i, computed through the q <-> p self-duality composed with
// right_face.
FaceImage left_face(std::uint32_t i, const Element& a);

// The self-duality A -> A^op: on normal-ordered monomials it swaps each
// Weyl pair's exponents and fixes the central part.
Element dual_swap(const Element& a);

// Re-embeds a representative into the original algebra.
Element face_lift(const FaceImage& face, const AlgebraSignature& sig);

struct FaceComparison {
  bool equal = true;
  // Failing (generator dropped, generator mapped) pair.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

// sigma = tau iff all faces of all images agree; callers are expected to
// pass certified automorphisms, for which a verdict of Equal is exact.
// Needs at least two generators: on K[y] every scaling shares its single
// face with the identity.
FaceComparison faces_distinguish(const Endomorphism& sigma,
                                 const Endomorphism& tau,
                                 bool use_left_faces = false);

}  // namespace weyl

#endif
