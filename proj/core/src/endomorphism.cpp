#include "weyl/endomorphism.hpp"

#include <climits>

#include "weyl/printer.hpp"

namespace weyl {

Endomorphism::Endomorphism(AlgebraSignature sig, std::vector<Element> images,
                           unchecked_tag)
    : sig_(sig), images_(std::move(images)) {
  if (images_.size() != sig_.s())
    throw error(errc::invalid_argument,
                "expected one image per generator");
  for (const Element& im : images_)
    if (!(im.signature() == sig_))
      throw error(errc::signature_mismatch,
                  "image lives in a different algebra");
}

Endomorphism::Endomorphism(AlgebraSignature sig, std::vector<Element> images)
    : Endomorphism(sig, std::move(images), unchecked_tag{}) {
  for (std::uint32_t i = 0; i < sig_.s(); ++i) {
    for (std::uint32_t j = i + 1; j < sig_.s(); ++j) {
      Element expected =
          Element::constant(sig_, Scalar(sig_.canonical_commutator(i, j)));
      if (!(commutator(images_[i], images_[j]) == expected))
        throw error(errc::defining_relations_violated,
                    "images break the relation [" + sig_.generator_name(i) +
                        ", " + sig_.generator_name(j) + "]");
    }
  }
}

Endomorphism Endomorphism::identity(AlgebraSignature sig) {
  std::vector<Element> images;
  images.reserve(sig.s());
  for (std::uint32_t i = 0; i < sig.s(); ++i)
    images.push_back(Element::generator(sig, i));
  return Endomorphism(sig, std::move(images), unchecked_tag{});
}

Endomorphism Endomorphism::unchecked(AlgebraSignature sig,
                                     std::vector<Element> images) {
  return Endomorphism(sig, std::move(images), unchecked_tag{});
}

Element Endomorphism::apply(const Element& a) const {
  if (!(a.signature() == sig_))
    throw error(errc::signature_mismatch,
                "element lives in a different algebra");
  std::vector<std::vector<Element>> pows(sig_.s());
  auto image_power = [&](std::uint32_t i, std::uint32_t k) -> const Element& {
    std::vector<Element>& cache = pows[i];
    if (cache.empty()) cache.push_back(Element::one(sig_));
    while (cache.size() <= k) cache.push_back(cache.back() * images_[i]);
    return cache[k];
  };
  Element result(sig_);
  for (const auto& [alpha, c] : a.terms()) {
    Element term = Element::constant(sig_, c);
    for (std::uint32_t i = 0; i < sig_.s(); ++i)
      if (alpha[i] > 0) term = term * image_power(i, alpha[i]);
    result = result + term;
  }
  return result;
}

Endomorphism compose(const Endomorphism& sigma, const Endomorphism& tau) {
  if (!(sigma.signature() == tau.signature()))
    throw error(errc::signature_mismatch, "maps on different algebras");
  std::vector<Element> images;
  images.reserve(sigma.signature().s());
  for (const Element& im : tau.images()) images.push_back(sigma.apply(im));
  return Endomorphism::unchecked(sigma.signature(), std::move(images));
}

int degree_of(const Endomorphism& sigma) {
  int d = 0;
  for (const Element& im : sigma.images())
    d = std::max(d, im.degree().value_or(0));
  return d;
}

Integer inversion_degree_bound(const Endomorphism& sigma) {
  std::uint32_t s = sigma.signature().s();
  Integer base(degree_of(sigma));
  Integer b;
  mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), s == 0 ? 0 : s - 1);
  return b;
}

namespace {

// Partial of a central element with respect to a central generator.
Element central_partial(const Element& a, std::uint32_t index) {
  return Derivation::coordinate_partial(a.signature(), index).apply(a);
}

// Cofactor determinant for small matrices over the algebra.
Element element_det(const std::vector<std::vector<Element>>& m,
                    const AlgebraSignature& sig) {
  std::size_t k = m.size();
  if (k == 0) return Element::one(sig);
  if (k == 1) return m[0][0];
  Element acc(sig);
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::vector<Element>> minor;
    minor.reserve(k - 1);
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Element> row;
      row.reserve(k - 1);
      for (std::size_t j = 0; j < k; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Element cofactor = m[0][col] * element_det(minor, sig);
    acc = col % 2 == 0 ? acc + cofactor : acc - cofactor;
  }
  return acc;
}

std::vector<std::vector<Element>> central_jacobian(const Endomorphism& sigma) {
  const AlgebraSignature& sig = sigma.signature();
  std::uint32_t n = sig.n();
  std::uint32_t m = sig.m();
  for (std::uint32_t j = 0; j < m; ++j)
    if (!sigma.image(2 * n + j).is_central())
      throw error(errc::not_central_image,
                  "image of " + sig.generator_name(2 * n + j) +
                      " is not central");
  std::vector<std::vector<Element>> jac(m, std::vector<Element>());
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      jac[i].push_back(central_partial(sigma.image(2 * n + i), 2 * n + j));
  return jac;
}

Element minor_det(const std::vector<std::vector<Element>>& jac,
                  std::size_t drop_row, std::size_t drop_col,
                  const AlgebraSignature& sig) {
  std::vector<std::vector<Element>> minor;
  for (std::size_t i = 0; i < jac.size(); ++i) {
    if (i == drop_row) continue;
    std::vector<Element> row;
    for (std::size_t j = 0; j < jac.size(); ++j)
      if (j != drop_col) row.push_back(jac[i][j]);
    minor.push_back(std::move(row));
  }
  return element_det(minor, sig);
}

int clamp_to_int(const Integer& v) {
  if (!v.fits_sint_p()) return INT_MAX;
  return static_cast<int>(v.get_si());
}

// Default phi-map budget: deg'(a) <= deg(a) * (deg sigma)^(s-1).
int default_phi_cap(const Endomorphism& sigma, const Element& a) {
  Integer cap = Integer(a.degree().value_or(0)) *
                    inversion_degree_bound(sigma) +
                1;
  return clamp_to_int(cap);
}

Scalar phi_sigma_with(const Endomorphism& sigma, const DualDerivations& duals,
                      const Element& a, int cap) {
  Element cur = a;
  for (std::uint32_t i = 0; i < sigma.signature().s(); ++i)
    cur = phi_map(sigma.image(i), duals.partials[i], cur, cap);
  if (!cur.is_scalar())
    throw error(errc::not_scalar_result,
                "projection left positive-degree terms; the map is not an "
                "automorphism");
  return cur.constant_term();
}

// Walks the dual-Taylor coefficients of a level by level, feeding each
// nonzero lambda'_alpha to the sink. Derivatives are shared through the
// canonical decomposition alpha -> (min support, alpha - e_j), which keeps
// the applications consistent with the fixed operator order
// (d'_1)^a1 ... (d'_s)^as. Throws degree_bound_exceeded when a nonzero
// derivative survives past level_cap.
template <typename Sink>
void dual_taylor_scan(const Endomorphism& sigma, const DualDerivations& duals,
                      const Element& a, const Integer& level_cap, int phi_cap,
                      Sink&& sink) {
  const std::uint32_t s = sigma.signature().s();
  std::map<MultiIndex, Element, GrlexLess> level;
  if (!a.is_zero()) level.emplace(MultiIndex(s), a);
  Integer depth(0);
  while (!level.empty()) {
    if (depth > level_cap)
      throw error(errc::degree_bound_exceeded,
                  "dual derivatives did not vanish within the degree bound; "
                  "the map is not an automorphism");
    for (const auto& [alpha, value] : level) {
      Scalar scale = Scalar(1) / Scalar(alpha.factorial());
      Scalar coeff = phi_sigma_with(sigma, duals, scale * value, phi_cap);
      if (!is_zero(coeff)) sink(alpha, coeff);
    }
    std::map<MultiIndex, Element, GrlexLess> next;
    for (const auto& [alpha, value] : level) {
      std::size_t limit = alpha.min_support().value_or(s - 1);
      for (std::size_t j = 0; j <= limit; ++j) {
        Element der = duals.partials[j].apply(value);
        if (!der.is_zero()) next.emplace(alpha.plus(j), std::move(der));
      }
    }
    level = std::move(next);
    depth += 1;
  }
}

}  // namespace

Scalar central_jacobian_det(const Endomorphism& sigma) {
  const AlgebraSignature& sig = sigma.signature();
  if (sig.m() == 0)
    throw error(errc::invalid_argument,
                "no central generators: the central Jacobian is empty");
  Element d = element_det(central_jacobian(sigma), sig);
  if (!d.is_scalar())
    throw error(errc::jacobian_not_scalar,
                "central Jacobian determinant " + print(d) +
                    " is not a scalar");
  if (d.is_zero())
    throw error(errc::jacobian_zero,
                "central Jacobian determinant vanishes");
  return d.constant_term();
}

DualDerivations dual_derivations(const Endomorphism& sigma) {
  const AlgebraSignature& sig = sigma.signature();
  const std::uint32_t n = sig.n();
  const std::uint32_t m = sig.m();
  DualDerivations duals;
  duals.delta = Scalar(1);
  std::vector<std::vector<Element>> jac;
  if (m >= 1) {
    duals.delta = central_jacobian_det(sigma);
    jac = central_jacobian(sigma);
  }
  duals.partials.reserve(sig.s());
  for (std::uint32_t k = 0; k < n; ++k)
    duals.partials.push_back(Derivation::inner(sigma.image(n + k), 1));
  for (std::uint32_t k = 0; k < n; ++k)
    duals.partials.push_back(Derivation::inner(sigma.image(k), -1));
  Scalar delta_inv = m >= 1 ? Scalar(Scalar(1) / duals.delta) : Scalar(1);
  for (std::uint32_t j = 0; j < m; ++j) {
    std::vector<std::pair<Element, std::uint32_t>> parts;
    for (std::uint32_t l = 0; l < m; ++l) {
      Element coeff = minor_det(jac, j, l, sig);
      if (coeff.is_zero()) continue;
      Scalar sign = (j + l) % 2 == 0 ? delta_inv : Scalar(-delta_inv);
      parts.emplace_back(sign * coeff, 2 * n + l);
    }
    duals.partials.push_back(
        Derivation::linear_combination(sig, std::move(parts)));
  }
  for (std::uint32_t i = 0; i < sig.s(); ++i)
    for (std::uint32_t j = 0; j < sig.s(); ++j) {
      Element expected = Element::constant(sig, Scalar(i == j ? 1 : 0));
      if (!(duals.partials[i].apply(sigma.image(j)) == expected))
        throw error(errc::kronecker_check_failed,
                    "dual derivation of " + sig.generator_name(i) +
                        " fails the Kronecker property on " +
                        sig.generator_name(j));
    }
  return duals;
}

Scalar phi_sigma(const Endomorphism& sigma, const Element& a,
                 std::optional<int> cap) {
  DualDerivations duals = dual_derivations(sigma);
  return phi_sigma_with(sigma, duals, a,
                        cap.value_or(default_phi_cap(sigma, a)));
}

Endomorphism invert(const Endomorphism& sigma,
                    std::optional<Integer> cap_override) {
  const AlgebraSignature& sig = sigma.signature();
  DualDerivations duals = dual_derivations(sigma);
  Integer bound = cap_override.value_or(inversion_degree_bound(sigma));
  std::vector<Element> inverse_images;
  inverse_images.reserve(sig.s());
  for (std::uint32_t i = 0; i < sig.s(); ++i) {
    Element gen = Element::generator(sig, i);
    Element::TermMap terms;
    dual_taylor_scan(sigma, duals, gen, bound,
                     default_phi_cap(sigma, gen),
                     [&](const MultiIndex& alpha, const Scalar& coeff) {
                       terms.emplace(alpha, coeff);
                     });
    inverse_images.push_back(Element::from_terms(sig, std::move(terms)));
  }
  Endomorphism tau = Endomorphism::unchecked(sig, std::move(inverse_images));
  for (std::uint32_t i = 0; i < sig.s(); ++i) {
    Element gen = Element::generator(sig, i);
    if (!(sigma.apply(tau.image(i)) == gen) ||
        !(tau.apply(sigma.image(i)) == gen))
      throw error(errc::verification_failed,
                  "round trip through the computed inverse fails on " +
                      sig.generator_name(i));
  }
  try {
    return Endomorphism(sig, tau.images());
  } catch (const error&) {
    throw error(errc::verification_failed,
                "computed inverse violates the defining relations");
  }
}

std::optional<int> dual_degree(const Endomorphism& sigma, const Element& a,
                               std::optional<Integer> cap_override) {
  DualDerivations duals = dual_derivations(sigma);
  Integer bound = Integer(a.degree().value_or(0)) *
                  inversion_degree_bound(sigma);
  if (cap_override) bound = *cap_override;
  std::optional<int> deg;
  dual_taylor_scan(sigma, duals, a, bound, default_phi_cap(sigma, a),
                   [&](const MultiIndex& alpha, const Scalar&) {
                     int t = static_cast<int>(alpha.total());
                     if (!deg || t > *deg) deg = t;
                   });
  return deg;
}

Certification certify_automorphism(const Endomorphism& sigma) {
  const AlgebraSignature& sig = sigma.signature();
  Certification result;
  DualDerivations duals;
  try {
    duals = dual_derivations(sigma);
  } catch (const error& e) {
    switch (e.kind()) {
      case errc::not_central_image:
        result.obstruction = Certification::Obstruction::central_image_not_central;
        break;
      case errc::jacobian_not_scalar:
        result.obstruction = Certification::Obstruction::jacobian_not_scalar;
        break;
      case errc::jacobian_zero:
        result.obstruction = Certification::Obstruction::jacobian_zero;
        break;
      case errc::kronecker_check_failed:
        result.obstruction = Certification::Obstruction::kronecker_check_failed;
        break;
      default:
        throw;
    }
    result.detail = e.what();
    return result;
  }
  Integer bound = inversion_degree_bound(sigma);
  for (std::uint32_t i = 0; i < sig.s(); ++i) {
    for (std::uint32_t j = 0; j < sig.s(); ++j) {
      Element val = Element::generator(sig, j);
      Integer k(0);
      while (k <= bound && !val.is_zero()) {
        val = duals.partials[i].apply(val);
        k += 1;
      }
      if (!val.is_zero()) {
        Integer exponent = bound + 1;
        result.obstruction = Certification::Obstruction::not_locally_nilpotent;
        result.witness_pair = std::make_pair(i, j);
        result.detail = "(d'_" + sig.generator_name(i) + ")^" +
                        exponent.get_str() + " does not kill " +
                        sig.generator_name(j);
        return result;
      }
    }
  }
  result.certified = true;
  return result;
}

std::map<MultiIndex, Scalar, GrlexLess> taylor_expand(const Element& a) {
  const AlgebraSignature& sig = a.signature();
  const std::uint32_t s = sig.s();
  std::map<MultiIndex, Scalar, GrlexLess> coefficients;
  std::map<MultiIndex, Element, GrlexLess> level;
  if (!a.is_zero()) level.emplace(MultiIndex(s), a);
  while (!level.empty()) {
    for (const auto& [alpha, value] : level) {
      Scalar scale = Scalar(1) / Scalar(alpha.factorial());
      Scalar coeff = full_projection(scale * value);
      if (!is_zero(coeff)) coefficients.emplace(alpha, coeff);
    }
    std::map<MultiIndex, Element, GrlexLess> next;
    for (const auto& [alpha, value] : level) {
      std::size_t limit = alpha.min_support().value_or(s - 1);
      for (std::size_t j = 0; j <= limit; ++j) {
        Element der =
            Derivation::coordinate_partial(sig, static_cast<std::uint32_t>(j))
                .apply(value);
        if (!der.is_zero()) next.emplace(alpha.plus(j), std::move(der));
      }
    }
    level = std::move(next);
  }
  return coefficients;
}

}  // namespace weyl
