#include "weyl/derivation.hpp"

namespace weyl {

Derivation Derivation::coordinate_partial(AlgebraSignature sig,
                                          std::uint32_t index) {
  if (!sig.valid_index(index))
    throw error(errc::invalid_index, "partial index out of range");
  return Derivation(sig, CoordinatePartial{index});
}

Derivation Derivation::inner(Element generator, int sign) {
  if (sign != 1 && sign != -1)
    throw error(errc::invalid_argument, "inner derivation sign must be +-1");
  AlgebraSignature sig = generator.signature();
  return Derivation(sig, Inner{std::move(generator), sign});
}

Derivation Derivation::linear_combination(
    AlgebraSignature sig,
    std::vector<std::pair<Element, std::uint32_t>> parts) {
  for (const auto& [coeff, index] : parts) {
    if (!(coeff.signature() == sig))
      throw error(errc::signature_mismatch,
                  "linear-combination coefficient in a different algebra");
    if (!sig.valid_index(index))
      throw error(errc::invalid_index, "partial index out of range");
    if (!coeff.is_central())
      throw error(errc::invalid_argument,
                  "linear-combination coefficients must be central");
  }
  return Derivation(sig, LinearCombination{std::move(parts)});
}

namespace {

Element apply_partial(const AlgebraSignature& sig, std::uint32_t index,
                      const Element& a) {
  Element::TermMap acc;
  for (const auto& [alpha, c] : a.terms()) {
    std::uint32_t e = alpha[index];
    if (e == 0) continue;
    Scalar nc = c * Scalar(e);
    acc.emplace(alpha.minus(index), std::move(nc));
  }
  return Element::from_terms(sig, std::move(acc));
}

}  // namespace

Element Derivation::apply(const Element& a) const {
  if (!(a.signature() == sig_))
    throw error(errc::signature_mismatch,
                "derivation and element signatures differ");
  if (const auto* p = std::get_if<CoordinatePartial>(&impl_)) {
    return apply_partial(sig_, p->index, a);
  }
  if (const auto* inner = std::get_if<Inner>(&impl_)) {
    Element c = commutator(inner->generator, a);
    return inner->sign == 1 ? c : -c;
  }
  const auto& lc = std::get<LinearCombination>(impl_);
  Element r(sig_);
  for (const auto& [coeff, index] : lc.parts)
    r = r + coeff * apply_partial(sig_, index, a);
  return r;
}

bool commute_on(const Derivation& d1, const Derivation& d2,
                std::span<const Element> probes) {
  const AlgebraSignature& sig = d1.signature();
  auto check = [&](const Element& a) {
    return d1.apply(d2.apply(a)) == d2.apply(d1.apply(a));
  };
  for (std::uint32_t i = 0; i < sig.s(); ++i)
    if (!check(Element::generator(sig, i))) return false;
  for (const Element& probe : probes)
    if (!check(probe)) return false;
  return true;
}

std::optional<int> nilpotency_index(const Derivation& d, const Element& a,
                                    int cap) {
  Element cur = a;
  for (int k = 0; k <= cap; ++k) {
    if (cur.is_zero()) return k;
    cur = d.apply(cur);
  }
  return std::nullopt;
}

Element phi_map(const Element& x, const Derivation& d, const Element& a,
                int cap) {
  if (!(d.apply(x) == Element::one(x.signature())))
    throw error(errc::invalid_argument, "phi map requires d(x) = 1");
  Element acc = a;
  Element deriv = a;
  Element x_pow = Element::one(x.signature());
  for (int k = 1; !deriv.is_zero(); ++k) {
    if (k > cap)
      throw error(errc::nilpotency_cap_exceeded,
                  "derivative chain did not vanish within the cap");
    deriv = d.apply(deriv);
    if (deriv.is_zero()) break;
    x_pow = x_pow * x;
    Scalar c = Scalar(k % 2 == 0 ? 1 : -1) / Scalar(factorial(k));
    acc = acc + c * (x_pow * deriv);
  }
  return acc;
}

Scalar full_projection(const Element& a) {
  const AlgebraSignature& sig = a.signature();
  int cap = a.degree().value_or(0) + 2;
  Element cur = a;
  for (std::uint32_t i = 0; i < sig.s(); ++i) {
    cur = phi_map(Element::generator(sig, i),
                  Derivation::coordinate_partial(sig, i), cur, cap);
  }
  return cur.constant_term();
}

}  // namespace weyl
