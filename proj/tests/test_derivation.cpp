#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/gen.hpp"
#include "weyl/derivation.hpp"

using namespace weyl;
using weyl::testing::Rng;

namespace {

const AlgebraSignature a1(1, 0);
const AlgebraSignature p2(0, 2);  // y1, y2: a pure polynomial plane

Element q(const AlgebraSignature& sig = a1) { return Element::generator(sig, 0); }
Element p(const AlgebraSignature& sig = a1) {
  return Element::generator(sig, sig.n());
}

}  // namespace

TEST_CASE("coordinate partial acts by the power rule") {
  Element a = power(q(), 2) * p();
  Element got = Derivation::coordinate_partial(a1, 0).apply(a);
  CHECK(got == Scalar(2) * (q() * p()));
}

TEST_CASE("ad(p) agrees with d/dq") {
  Derivation ad_p = Derivation::inner(p());
  CHECK(ad_p.apply(power(q(), 2)) == Scalar(2) * q());
  Rng rng(7);
  Derivation dq = Derivation::coordinate_partial(a1, 0);
  Derivation dp = Derivation::coordinate_partial(a1, 1);
  Derivation minus_ad_q = Derivation::inner(q(), -1);
  for (int trial = 0; trial < 25; ++trial) {
    Element a = weyl::testing::random_element(rng, a1, 4, 5);
    CHECK(ad_p.apply(a) == dq.apply(a));
    CHECK(minus_ad_q.apply(a) == dp.apply(a));
  }
}

TEST_CASE("linear combinations differentiate first, multiply after") {
  // (-2 x d/dy + d/dx)(y) = -2x on the polynomial plane (x = y1, y = y2).
  Element x = Element::generator(p2, 0);
  Derivation d = Derivation::linear_combination(
      p2, {{Scalar(-2) * x, 1}, {Element::one(p2), 0}});
  Element y = Element::generator(p2, 1);
  CHECK(d.apply(y) == Scalar(-2) * x);
  CHECK(d.apply(x) == Element::one(p2));
}

TEST_CASE("linear combinations require central coefficients") {
  const AlgebraSignature a1p1(1, 1);
  Element qq = Element::generator(a1p1, 0);
  CHECK_THROWS_AS(
      Derivation::linear_combination(a1p1, {{qq, 2}}), error);
}

TEST_CASE("derivations reject elements from other algebras") {
  Derivation dq = Derivation::coordinate_partial(a1, 0);
  CHECK_THROWS_AS(dq.apply(Element::one(AlgebraSignature(1, 1))), error);
}

TEST_CASE("commuting checks") {
  const AlgebraSignature a2(2, 0);
  Derivation d1 = Derivation::coordinate_partial(a2, 0);
  Derivation d2 = Derivation::coordinate_partial(a2, 1);
  CHECK(commute_on(d1, d2));

  Derivation ad_p = Derivation::inner(p());
  Derivation ad_q = Derivation::inner(q());
  CHECK(commute_on(ad_p, ad_q));

  // [ad(q^2), ad(p)] = ad([q^2, p]) = ad(-2q) is not zero.
  Derivation ad_q2 = Derivation::inner(power(q(), 2));
  Element probe = q() * p();
  CHECK_FALSE(commute_on(ad_q2, ad_p, std::span(&probe, 1)));
}

TEST_CASE("nilpotency indices") {
  Derivation dq = Derivation::coordinate_partial(a1, 0);
  CHECK(nilpotency_index(dq, power(q(), 3), 10) == 4);
  CHECK(nilpotency_index(dq, Element::constant(a1, Scalar(5)), 10) == 1);
  CHECK(nilpotency_index(dq, Element::zero(a1), 10) == 0);

  Derivation ad_q = Derivation::inner(q());
  CHECK(nilpotency_index(ad_q, power(p(), 2), 10) == 3);

  // d/dq is nilpotent of index 6 on q^5; a cap of 2 cannot see that.
  CHECK_FALSE(nilpotency_index(dq, power(q(), 5), 2).has_value());
}

TEST_CASE("phi map projects onto the kernel") {
  Derivation dq = Derivation::coordinate_partial(a1, 0);
  CHECK(phi_map(q(), dq, q(), 10).is_zero());
  CHECK(phi_map(q(), dq, p(), 10) == p());
  Element a = power(q(), 2) * p() + Element::constant(a1, Scalar(3));
  CHECK(phi_map(q(), dq, a, 10) == Element::constant(a1, Scalar(3)));
}

TEST_CASE("phi map preconditions and caps") {
  Derivation dq = Derivation::coordinate_partial(a1, 0);
  CHECK_THROWS_AS(phi_map(power(q(), 2), dq, q(), 10), error);
  CHECK_THROWS_AS(phi_map(q(), dq, power(q(), 5), 2), error);
}

TEST_CASE("phi map laws") {
  Rng rng(19);
  const AlgebraSignature a1p1(1, 1);
  Derivation dq = Derivation::coordinate_partial(a1p1, 0);
  Element x = Element::generator(a1p1, 0);
  for (std::uint32_t i = 1; i <= 5; ++i)
    CHECK(phi_map(x, dq, power(x, i), 8).is_zero());
  for (int trial = 0; trial < 40; ++trial) {
    Element a = weyl::testing::random_element(rng, a1p1, 3, 4);
    int cap = a.degree().value_or(0) + 2;
    Element pa = phi_map(x, dq, a, cap);
    // Projection: applying phi twice changes nothing.
    CHECK(phi_map(x, dq, pa, cap) == pa);
    // phi kills the left ideal x A.
    CHECK(phi_map(x, dq, x * a, cap + 2).is_zero());
    // Right module law: phi(a c) = phi(a) c when d(c) = 0.
    Element c = weyl::testing::random_element(rng, a1p1, 2, 3);
    Element c_const = Element::zero(a1p1);
    for (const auto& [alpha, coeff] : c.terms())
      if (alpha[0] == 0)
        c_const = c_const + Element::monomial(a1p1, alpha, coeff);
    CHECK(dq.apply(c_const).is_zero());
    CHECK(phi_map(x, dq, a * c_const, cap + c_const.degree().value_or(0) + 2) ==
          pa * c_const);
  }
}

TEST_CASE("phi is multiplicative for a central x") {
  Rng rng(29);
  const AlgebraSignature a1p1(1, 1);
  Element y = Element::generator(a1p1, 2);
  Derivation dy = Derivation::coordinate_partial(a1p1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Element a = weyl::testing::random_element(rng, a1p1, 3, 3);
    Element b = weyl::testing::random_element(rng, a1p1, 3, 3);
    int cap = a.degree().value_or(0) + b.degree().value_or(0) + 3;
    CHECK(phi_map(y, dy, a * b, cap) ==
          phi_map(y, dy, a, cap) * phi_map(y, dy, b, cap));
  }
}

TEST_CASE("Leibniz rule for every derivation kind") {
  Rng rng(37);
  const AlgebraSignature a1p1(1, 1);
  std::vector<Derivation> derivations;
  derivations.push_back(Derivation::coordinate_partial(a1p1, 1));
  derivations.push_back(
      Derivation::inner(weyl::testing::random_element(rng, a1p1, 2, 3)));
  Element y = Element::generator(a1p1, 2);
  derivations.push_back(Derivation::linear_combination(
      a1p1, {{y, 0}, {Element::one(a1p1), 2}}));
  for (const Derivation& d : derivations) {
    for (int trial = 0; trial < 20; ++trial) {
      Element a = weyl::testing::random_element(rng, a1p1, 3, 4);
      Element b = weyl::testing::random_element(rng, a1p1, 3, 4);
      CHECK(d.apply(a * b) == d.apply(a) * b + a * d.apply(b));
    }
  }
}

TEST_CASE("full projection extracts the constant coefficient") {
  Element a = Element::constant(a1, Scalar(3)) + Scalar(2) * q() + q() * p();
  CHECK(full_projection(a) == Scalar(3));
  CHECK(full_projection(Element::monomial(a1, MultiIndex({2, 1}))) ==
        Scalar(0));

  Rng rng(43);
  const AlgebraSignature sigs[] = {{1, 0}, {1, 1}, {0, 2}, {2, 0}};
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraSignature& sig = sigs[trial % 4];
    Element a = weyl::testing::random_element(rng, sig, 4, 5);
    CHECK(full_projection(a) == a.constant_term());
  }
}
