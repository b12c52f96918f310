#include "weyl/faces.hpp"

namespace weyl {

std::pair<AlgebraSignature, std::vector<std::uint32_t>> face_quotient(
    const AlgebraSignature& sig, std::uint32_t dropped) {
  if (!sig.valid_index(dropped))
    throw error(errc::invalid_index, "face index out of range");
  std::vector<std::uint32_t> old_of_new;
  AlgebraSignature qsig;
  if (sig.is_central(dropped)) {
    qsig = AlgebraSignature(sig.n(), sig.m() - 1);
    for (std::uint32_t i = 0; i < sig.s(); ++i)
      if (i != dropped) old_of_new.push_back(i);
  } else {
    // Surviving pairs keep their order; the orphaned partner joins the
    // centre ahead of the existing y's (original index order).
    qsig = AlgebraSignature(sig.n() - 1, sig.m() + 1);
    std::uint32_t k = sig.pair_of(dropped);
    for (std::uint32_t pair = 0; pair < sig.n(); ++pair)
      if (pair != k) old_of_new.push_back(pair);  // q's
    for (std::uint32_t pair = 0; pair < sig.n(); ++pair)
      if (pair != k) old_of_new.push_back(sig.n() + pair);  // p's
    old_of_new.push_back(sig.partner(dropped));
    for (std::uint32_t j = 0; j < sig.m(); ++j)
      old_of_new.push_back(2 * sig.n() + j);
  }
  return {qsig, old_of_new};
}

FaceImage right_face(std::uint32_t i, const Element& a) {
  const AlgebraSignature& sig = a.signature();
  auto [qsig, old_of_new] = face_quotient(sig, i);
  Element::TermMap acc;
  const bool is_p = sig.is_p(i);
  const std::uint32_t q_index = is_p ? sig.partner(i) : 0;
  for (const auto& [alpha, c] : a.terms()) {
    std::uint32_t b = alpha[i];
    Scalar coeff = c;
    MultiIndex reduced = alpha;
    if (b > 0) {
      if (!is_p) continue;  // x_i^b (rest) lies in x_i A
      std::uint32_t aq = alpha[q_index];
      if (b > aq) continue;
      Integer ff = falling_factorial(aq, b);
      coeff *= Scalar(b % 2 == 0 ? ff : -ff);
      reduced = reduced.minus(q_index, b).minus(i, b);
    }
    std::vector<std::uint32_t> qexp(old_of_new.size());
    for (std::size_t t = 0; t < old_of_new.size(); ++t)
      qexp[t] = reduced[old_of_new[t]];
    MultiIndex qalpha(std::move(qexp));
    auto [it, inserted] = acc.emplace(std::move(qalpha), coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) acc.erase(it);
    }
  }
  FaceImage face;
  face.dropped_index = i;
  face.quotient_signature = qsig;
  face.representative = Element::from_terms(qsig, std::move(acc));
  face.original_index = std::move(old_of_new);
  return face;
}

Element dual_swap(const Element& a) {
  const AlgebraSignature& sig = a.signature();
  const std::uint32_t n = sig.n();
  Element::TermMap acc;
  for (const auto& [alpha, c] : a.terms()) {
    std::vector<std::uint32_t> e = alpha.exponents();
    for (std::uint32_t k = 0; k < n; ++k) std::swap(e[k], e[n + k]);
    acc.emplace(MultiIndex(std::move(e)), c);
  }
  return Element::from_terms(sig, std::move(acc));
}

FaceImage left_face(std::uint32_t i, const Element& a) {
  const AlgebraSignature& sig = a.signature();
  if (!sig.valid_index(i))
    throw error(errc::invalid_index, "face index out of range");
  if (sig.is_central(i)) return right_face(i, a);  // l_i = r_i in the centre
  // A x_i maps to x_partner(i) A under the self-duality, and the dual of the
  // mirrored representative is supported away from x_i again.
  FaceImage mirrored = right_face(sig.partner(i), dual_swap(a));
  auto [qsig, old_of_new] = face_quotient(sig, i);
  FaceImage face;
  face.dropped_index = i;
  face.quotient_signature = qsig;
  face.representative = dual_swap(mirrored.representative);
  face.original_index = std::move(old_of_new);
  return face;
}

Element face_lift(const FaceImage& face, const AlgebraSignature& sig) {
  Element::TermMap acc;
  for (const auto& [alpha, c] : face.representative.terms()) {
    std::vector<std::uint32_t> e(sig.s(), 0);
    for (std::size_t t = 0; t < face.original_index.size(); ++t)
      e[face.original_index[t]] = alpha[t];
    acc.emplace(MultiIndex(std::move(e)), c);
  }
  return Element::from_terms(sig, std::move(acc));
}

FaceComparison faces_distinguish(const Endomorphism& sigma,
                                 const Endomorphism& tau,
                                 bool use_left_faces) {
  if (!(sigma.signature() == tau.signature()))
    throw error(errc::signature_mismatch, "maps on different algebras");
  const AlgebraSignature& sig = sigma.signature();
  for (std::uint32_t i = 0; i < sig.s(); ++i) {
    for (std::uint32_t j = 0; j < sig.s(); ++j) {
      FaceImage fs = use_left_faces ? left_face(i, sigma.image(j))
                                    : right_face(i, sigma.image(j));
      FaceImage ft = use_left_faces ? left_face(i, tau.image(j))
                                    : right_face(i, tau.image(j));
      if (!(fs == ft)) return FaceComparison{false, std::make_pair(i, j)};
    }
  }
  return FaceComparison{};
}

}  // namespace weyl
