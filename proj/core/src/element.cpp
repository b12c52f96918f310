#include "weyl/element.hpp"

#include <utility>

namespace weyl {

void require_same_signature(const Element& a, const Element& b) {
  if (!(a.signature() == b.signature()))
    throw error(errc::signature_mismatch,
                "elements live in different algebras");
}

Element Element::constant(AlgebraSignature sig, Scalar value) {
  Element e(sig);
  if (!weyl::is_zero(value))
    e.terms_.emplace(MultiIndex(sig.s()), std::move(value));
  return e;
}

Element Element::generator(AlgebraSignature sig, std::uint32_t index) {
  if (!sig.valid_index(index))
    throw error(errc::invalid_index, "generator index out of range");
  return monomial(sig, MultiIndex(sig.s()).plus(index));
}

Element Element::monomial(AlgebraSignature sig, MultiIndex alpha,
                          Scalar coefficient) {
  if (alpha.size() != sig.s())
    throw error(errc::signature_mismatch,
                "exponent vector length does not match the signature");
  Element e(sig);
  if (!weyl::is_zero(coefficient))
    e.terms_.emplace(std::move(alpha), std::move(coefficient));
  return e;
}

Element Element::from_terms(AlgebraSignature sig, TermMap terms) {
  Element e(sig);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != sig.s())
      throw error(errc::signature_mismatch,
                  "exponent vector length does not match the signature");
    if (weyl::is_zero(it->second))
      it = terms.erase(it);
    else
      ++it;
  }
  e.terms_ = std::move(terms);
  return e;
}

bool Element::is_scalar() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

bool Element::is_central() const {
  std::uint32_t weyl_part = 2 * sig_.n();
  for (const auto& [alpha, c] : terms_) {
    for (std::uint32_t i = 0; i < weyl_part; ++i)
      if (alpha[i] != 0) return false;
  }
  return true;
}

Scalar Element::constant_term() const {
  auto it = terms_.find(MultiIndex(sig_.s()));
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Element::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Grlex order keeps the top-degree term last.
  return static_cast<int>(terms_.rbegin()->first.total());
}

Element Element::operator-() const {
  Element r(sig_);
  for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
  return r;
}

namespace {

void accumulate(Element::TermMap& acc, const MultiIndex& alpha,
                const Scalar& c) {
  auto [it, inserted] = acc.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same_signature(a, b);
  Element::TermMap acc = a.terms();
  for (const auto& [alpha, c] : b.terms()) accumulate(acc, alpha, c);
  return Element::from_terms(a.signature(), std::move(acc));
}

Element operator-(const Element& a, const Element& b) {
  require_same_signature(a, b);
  Element::TermMap acc = a.terms();
  for (const auto& [alpha, c] : b.terms()) accumulate(acc, alpha, -c);
  return Element::from_terms(a.signature(), std::move(acc));
}

Element operator*(const Scalar& c, const Element& a) {
  Element::TermMap acc;
  if (!is_zero(c)) {
    for (const auto& [alpha, v] : a.terms()) {
      Scalar cv = c * v;
      if (!is_zero(cv)) acc.emplace(alpha, std::move(cv));
    }
  }
  return Element::from_terms(a.signature(), std::move(acc));
}

Element operator*(const Element& a, const Scalar& c) { return c * a; }

// Normal-ordered product. Monomial by monomial, the Weyl pairs reorder
// independently through the closed form
//   p_k^a q_k^b = sum_j j! C(a,j) C(b,j) q_k^(b-j) p_k^(a-j),
// central variables commute with everything. Validated against a
// single-swap rewriting oracle in the test suite.
Element operator*(const Element& a, const Element& b) {
  require_same_signature(a, b);
  const AlgebraSignature& sig = a.signature();
  const std::uint32_t n = sig.n();
  const std::uint32_t s = sig.s();
  Element::TermMap acc;
  std::vector<std::uint32_t> jmax(n), j(n);
  for (const auto& [al, ac] : a.terms()) {
    for (const auto& [be, bc] : b.terms()) {
      Scalar base = ac * bc;
      bool any = false;
      for (std::uint32_t k = 0; k < n; ++k) {
        jmax[k] = std::min(al[n + k], be[k]);
        j[k] = 0;
        if (jmax[k] > 0) any = true;
      }
      while (true) {
        Scalar c = base;
        std::vector<std::uint32_t> gamma(s);
        for (std::uint32_t k = 0; k < n; ++k) {
          gamma[k] = al[k] + be[k] - j[k];
          gamma[n + k] = al[n + k] + be[n + k] - j[k];
          if (j[k] > 0) {
            Integer w = factorial(j[k]) * binomial(al[n + k], j[k]) *
                        binomial(be[k], j[k]);
            c *= Scalar(w);
          }
        }
        for (std::uint32_t i = 2 * n; i < s; ++i) gamma[i] = al[i] + be[i];
        accumulate(acc, MultiIndex(std::move(gamma)), c);
        if (!any) break;
        std::uint32_t k = 0;
        while (k < n && j[k] == jmax[k]) {
          j[k] = 0;
          ++k;
        }
        if (k == n) break;
        ++j[k];
      }
    }
  }
  return Element::from_terms(sig, std::move(acc));
}

Element commutator(const Element& a, const Element& b) {
  return a * b - b * a;
}

Element power(const Element& a, std::uint32_t k) {
  Element r = Element::one(a.signature());
  for (std::uint32_t i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace weyl
