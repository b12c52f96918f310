#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/gen.hpp"
#include "weyl/endomorphism.hpp"

using namespace weyl;
using weyl::testing::Rng;

namespace {

const AlgebraSignature a1(1, 0);
const AlgebraSignature p2(0, 2);  // y1 = x, y2 = y

Element q(const AlgebraSignature& sig = a1) { return Element::generator(sig, 0); }
Element p(const AlgebraSignature& sig = a1) {
  return Element::generator(sig, sig.n());
}

// q -> q, p -> p + q^2.
Endomorphism shear_a1() {
  return Endomorphism(a1, {q(), p() + power(q(), 2)});
}

// x -> x, y -> y + x^2 on the polynomial plane.
Endomorphism shear_p2() {
  Element x = Element::generator(p2, 0);
  Element y = Element::generator(p2, 1);
  return Endomorphism(p2, {x, y + power(x, 2)});
}

}  // namespace

TEST_CASE("construction rejects images violating the defining relations") {
  CHECK_THROWS_AS(Endomorphism(a1, {q(), q()}), error);
  CHECK_THROWS_AS(Endomorphism(a1, {q(), p() + power(p(), 2)}), error);
  CHECK_NOTHROW(Endomorphism(a1, {q(), p() + power(q(), 2)}));
}

TEST_CASE("substitution multiplies factors in written order") {
  Endomorphism sigma = shear_a1();
  CHECK(sigma.apply(q() * p()) == q() * p() + power(q(), 3));

  Endomorphism id = Endomorphism::identity(a1);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = weyl::testing::random_element(rng, a1, 3, 4);
    CHECK(id.apply(a) == a);
  }

  // sigma(x^alpha) = sigma(x_1)^a1 ... sigma(x_s)^as.
  MultiIndex alpha({2, 1});
  Element expected = power(sigma.image(0), 2) * sigma.image(1);
  CHECK(sigma.apply(Element::monomial(a1, alpha)) == expected);
}

TEST_CASE("composition") {
  Endomorphism sigma = shear_a1();
  Endomorphism tau = invert(sigma);
  Endomorphism id = Endomorphism::identity(a1);
  CHECK(compose(sigma, tau) == id);
  CHECK(compose(tau, sigma) == id);
  CHECK(compose(sigma, id) == sigma);
  CHECK(compose(id, sigma) == sigma);

  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Endomorphism f = weyl::testing::random_automorphism(rng, a1, 3, 3);
    Endomorphism g = weyl::testing::random_automorphism(rng, a1, 3, 3);
    Endomorphism h = weyl::testing::random_automorphism(rng, a1, 3, 3);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("central Jacobian determinants") {
  CHECK(central_jacobian_det(Endomorphism::identity(p2)) == Scalar(1));
  CHECK(central_jacobian_det(shear_p2()) == Scalar(1));

  Element x = Element::generator(p2, 0);
  Element y = Element::generator(p2, 1);
  Endomorphism squared(p2, {x, power(y, 2)});
  CHECK_THROWS_AS(central_jacobian_det(squared), error);
  try {
    central_jacobian_det(squared);
  } catch (const error& e) {
    CHECK(e.kind() == errc::jacobian_not_scalar);
  }

  Endomorphism collapsed(p2, {x, x});
  try {
    central_jacobian_det(collapsed);
  } catch (const error& e) {
    CHECK(e.kind() == errc::jacobian_zero);
  }

  CHECK_THROWS_AS(central_jacobian_det(Endomorphism::identity(a1)), error);
}

TEST_CASE("dual derivations satisfy the Kronecker property") {
  // Identity: the duals are the coordinate partials.
  const AlgebraSignature a1p1(1, 1);
  DualDerivations duals = dual_derivations(Endomorphism::identity(a1p1));
  Rng rng(9);
  for (std::uint32_t i = 0; i < a1p1.s(); ++i) {
    Derivation partial = Derivation::coordinate_partial(a1p1, i);
    for (int trial = 0; trial < 10; ++trial) {
      Element a = weyl::testing::random_element(rng, a1p1, 3, 4);
      CHECK(duals.partials[i].apply(a) == partial.apply(a));
    }
  }

  // x -> x, y -> y + x^2: d'_1 = d/dx - 2x d/dy, d'_2 = d/dy.
  DualDerivations plane = dual_derivations(shear_p2());
  Element x = Element::generator(p2, 0);
  Element y = Element::generator(p2, 1);
  CHECK(plane.delta == Scalar(1));
  CHECK(plane.partials[0].apply(y) == Scalar(-2) * x);
  CHECK(plane.partials[0].apply(x) == Element::one(p2));
  CHECK(plane.partials[1].apply(y) == Element::one(p2));

  // q -> q, p -> p + q^2: inner duals ad(p + q^2) and -ad(q).
  Endomorphism sigma = shear_a1();
  DualDerivations weyl_duals = dual_derivations(sigma);
  CHECK(weyl_duals.partials[0].apply(sigma.image(0)) == Element::one(a1));
  CHECK(weyl_duals.partials[1].apply(sigma.image(1)) == Element::one(a1));
  CHECK(weyl_duals.partials[0].apply(sigma.image(1)).is_zero());
  CHECK(weyl_duals.partials[1].apply(sigma.image(0)).is_zero());
}

TEST_CASE("Kronecker property on corpus automorphisms") {
  auto corpus = weyl::testing::automorphism_corpus(101, 16);
  for (const Endomorphism& sigma : corpus) {
    DualDerivations duals = dual_derivations(sigma);
    const AlgebraSignature& sig = sigma.signature();
    for (std::uint32_t i = 0; i < sig.s(); ++i)
      for (std::uint32_t j = 0; j < sig.s(); ++j)
        CHECK(duals.partials[i].apply(sigma.image(j)) ==
              Element::constant(sig, Scalar(i == j ? 1 : 0)));
  }
}

TEST_CASE("phi_sigma projects onto the dual constant coefficient") {
  Rng rng(13);
  Endomorphism id = Endomorphism::identity(a1);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = weyl::testing::random_element(rng, a1, 3, 4);
    CHECK(phi_sigma(id, a) == a.constant_term());
  }

  Endomorphism sigma = shear_p2();
  Element y = Element::generator(p2, 1);
  CHECK(phi_sigma(sigma, y) == Scalar(0));
  CHECK(phi_sigma(sigma, Element::constant(p2, Scalar(-1))) == Scalar(-1));

  // (d'_1)^2 y = -2, so phi_sigma(d'_1 d'_1 y / 2) = -1.
  DualDerivations duals = dual_derivations(sigma);
  Element twice = duals.partials[0].apply(duals.partials[0].apply(y));
  CHECK(twice == Element::constant(p2, Scalar(-2)));
}

TEST_CASE("the identity inverts to itself") {
  const AlgebraSignature a1p1(1, 1);
  Endomorphism id = Endomorphism::identity(a1p1);
  CHECK(invert(id) == id);
}

TEST_CASE("inversion of the forced triangular examples") {
  Endomorphism sigma = shear_p2();
  Endomorphism inv = invert(sigma);
  Element x = Element::generator(p2, 0);
  Element y = Element::generator(p2, 1);
  CHECK(inv.image(0) == x);
  CHECK(inv.image(1) == y - power(x, 2));

  Endomorphism weyl_sigma = shear_a1();
  Endomorphism weyl_inv = invert(weyl_sigma);
  CHECK(weyl_inv.image(0) == q());
  CHECK(weyl_inv.image(1) == p() - power(q(), 2));
}

TEST_CASE("inversion round trip on random compositions") {
  Rng rng(17);
  const AlgebraSignature a1p1(1, 1);
  for (int trial = 0; trial < 8; ++trial) {
    Endomorphism sigma = weyl::testing::random_automorphism(rng, a1p1, 3, 3);
    Endomorphism tau = invert(sigma);
    Endomorphism id = Endomorphism::identity(a1p1);
    CHECK(compose(sigma, tau) == id);
    CHECK(compose(tau, sigma) == id);
  }
}

TEST_CASE("degree accounting") {
  CHECK(degree_of(Endomorphism::identity(a1)) == 1);
  CHECK(degree_of(shear_a1()) == 2);
  CHECK(inversion_degree_bound(shear_a1()) == Integer(2));  // s = 2

  const AlgebraSignature a1p1(1, 1);
  CHECK(inversion_degree_bound(Endomorphism::identity(a1p1)) == Integer(1));
}

TEST_CASE("dual degrees compute deg sigma^{-1} without inverting") {
  Endomorphism id = Endomorphism::identity(a1);
  CHECK(dual_degree(id, q()) == 1);

  Endomorphism sigma = shear_p2();
  Element y = Element::generator(p2, 1);
  CHECK(dual_degree(sigma, y) == 2);

  Rng rng(19);
  const AlgebraSignature sigs[] = {{1, 0}, {1, 1}, {0, 2}};
  for (int trial = 0; trial < 9; ++trial) {
    const AlgebraSignature& sig = sigs[trial % 3];
    Endomorphism f = weyl::testing::random_automorphism(rng, sig, 3, 3);
    int expected = degree_of(invert(f));
    int got = 0;
    for (std::uint32_t i = 0; i < sig.s(); ++i)
      got = std::max(got,
                     dual_degree(f, Element::generator(sig, i)).value_or(0));
    CHECK(got == expected);
  }
}

TEST_CASE("degree bound can be overridden to force failure") {
  Endomorphism sigma = shear_a1();
  CHECK_THROWS_AS(invert(sigma, Integer(0)), error);
  try {
    invert(sigma, Integer(0));
  } catch (const error& e) {
    CHECK(e.kind() == errc::degree_bound_exceeded);
  }
  // The true bound is enough.
  CHECK_NOTHROW(invert(sigma, Integer(2)));
}

TEST_CASE("certification") {
  CHECK(certify_automorphism(Endomorphism::identity(a1)).certified);
  CHECK(certify_automorphism(shear_a1()).certified);

  Element x = Element::generator(p2, 0);
  Element y = Element::generator(p2, 1);
  Certification cert = certify_automorphism(Endomorphism(p2, {x, power(y, 2)}));
  CHECK_FALSE(cert.certified);
  CHECK(cert.obstruction == Certification::Obstruction::jacobian_not_scalar);

  Certification zero_jac = certify_automorphism(Endomorphism(p2, {x, x}));
  CHECK_FALSE(zero_jac.certified);
  CHECK(zero_jac.obstruction == Certification::Obstruction::jacobian_zero);

  // Broken images (only constructible unchecked) fail the Kronecker test.
  Certification broken =
      certify_automorphism(Endomorphism::unchecked(a1, {q(), q()}));
  CHECK_FALSE(broken.certified);
  CHECK(broken.obstruction ==
        Certification::Obstruction::kronecker_check_failed);

  const AlgebraSignature a1p1(1, 1);
  Element yy = Element::generator(a1p1, 2);
  Certification central = certify_automorphism(
      Endomorphism::unchecked(a1p1, {q(a1p1), p(a1p1), q(a1p1) * yy}));
  CHECK_FALSE(central.certified);
  CHECK(central.obstruction ==
        Certification::Obstruction::central_image_not_central);
}

TEST_CASE("certification agrees with the round-trip oracle on samples") {
  auto corpus = weyl::testing::automorphism_corpus(211, 12);
  for (const Endomorphism& sigma : corpus) {
    CHECK(certify_automorphism(sigma).certified);
    Endomorphism tau = invert(sigma);
    CHECK(compose(sigma, tau) == Endomorphism::identity(sigma.signature()));
  }
  for (const Endomorphism& bad : weyl::testing::non_automorphism_corpus()) {
    CHECK_FALSE(certify_automorphism(bad).certified);
    CHECK_THROWS_AS(invert(bad), error);
  }
}

TEST_CASE("injectivity of endomorphisms with scalar Jacobian") {
  Rng rng(23);
  auto corpus = weyl::testing::automorphism_corpus(307, 6);
  for (const Endomorphism& sigma : corpus) {
    for (int trial = 0; trial < 5; ++trial) {
      Element a = weyl::testing::random_element(rng, sigma.signature(), 3, 4);
      Element b = weyl::testing::random_element(rng, sigma.signature(), 3, 4);
      if (a == b) continue;
      CHECK_FALSE(sigma.apply(a - b).is_zero());
    }
  }
}

TEST_CASE("taylor expansion reproduces the stored coefficients") {
  Element a = power(q(), 2) * p() + Element::constant(a1, Scalar(3));
  auto coefficients = taylor_expand(a);
  REQUIRE(coefficients.size() == 2);
  CHECK(coefficients.at(MultiIndex({2, 1})) == Scalar(1));
  CHECK(coefficients.at(MultiIndex({0, 0})) == Scalar(3));

  CHECK(taylor_expand(Element::zero(a1)).empty());

  MultiIndex alpha({1, 3});
  auto single = taylor_expand(Element::monomial(a1, alpha));
  REQUIRE(single.size() == 1);
  CHECK(single.at(alpha) == Scalar(1));

  Rng rng(29);
  const AlgebraSignature sigs[] = {{1, 0}, {1, 1}, {0, 2}, {2, 0}};
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraSignature& sig = sigs[trial % 4];
    Element r = weyl::testing::random_element(rng, sig, 4, 5);
    auto table = taylor_expand(r);
    CHECK(table == r.terms());
  }
}

TEST_CASE("dual Taylor coefficients of sigma(x_i) reproduce x_i") {
  // The expansion of a = sigma(x_i) through phi_sigma((d')^alpha/alpha! a)
  // is sigma^{-1}(a) = x_i: the identity coefficient at alpha = e_i and
  // nothing else.
  Endomorphism sigma = shear_a1();
  DualDerivations duals = dual_derivations(sigma);
  Endomorphism tau = invert(sigma);
  for (std::uint32_t i = 0; i < a1.s(); ++i) {
    Element a = sigma.image(i);
    CHECK(tau.apply(a) == Element::generator(a1, i));
    CHECK(phi_sigma(sigma, a) == Scalar(0));  // lambda'_0
    for (std::uint32_t j = 0; j < a1.s(); ++j) {
      Scalar level_one = phi_sigma(sigma, duals.partials[j].apply(a));
      CHECK(level_one == Scalar(i == j ? 1 : 0));
    }
  }
}
