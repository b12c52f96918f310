#ifndef WEYL_SERIES_HPP
#define WEYL_SERIES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

// An element of K[[x_1..x_m]] held exactly modulo total degree order+1.
// Arithmetic never rounds; everything simply lives in the quotient by the
// ideal generated by the monomials of degree order+1.
class TruncatedSeries {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GrlexLess>;

  TruncatedSeries(std::uint32_t vars, std::uint32_t order)
      : vars_(vars), order_(order) {}

  static TruncatedSeries constant(std::uint32_t vars, std::uint32_t order,
                                  Scalar value);
  static TruncatedSeries variable(std::uint32_t vars, std::uint32_t order,
                                  std::uint32_t index);
  static TruncatedSeries from_terms(std::uint32_t vars, std::uint32_t order,
                                    TermMap terms);

  std::uint32_t vars() const { return vars_; }
  std::uint32_t order() const { return order_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar constant_term() const;
  Scalar coefficient(const MultiIndex& alpha) const;

  TruncatedSeries truncated(std::uint32_t new_order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries&,
                                   const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&,
                                   const TruncatedSeries&);
  friend TruncatedSeries operator*(const TruncatedSeries&,
                                   const TruncatedSeries&);
  friend TruncatedSeries operator*(const Scalar&, const TruncatedSeries&);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  std::uint32_t vars_;
  std::uint32_t order_;
  TermMap terms_;  // invariant: |alpha| <= order, no zero coefficients
};

TruncatedSeries series_partial(const TruncatedSeries& a, std::uint32_t index);

// v with u v = 1 mod the truncation ideal; needs a nonzero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& u);

// f(args...): substitution of zero-constant-term series.
TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::vector<TruncatedSeries>& args);

// A continuous endomorphism of the series algebra: images of the variables,
// all with zero constant term.
struct SeriesEndomorphism {
  std::uint32_t vars = 0;
  std::uint32_t order = 0;
  std::vector<TruncatedSeries> images;

  static SeriesEndomorphism make(std::uint32_t vars, std::uint32_t order,
                                 std::vector<TruncatedSeries> images);
  static SeriesEndomorphism identity(std::uint32_t vars, std::uint32_t order);

  TruncatedSeries apply(const TruncatedSeries& a) const;
};

// sum_l coeffs[l] d/dx_l, coefficients multiplying after differentiation.
struct SeriesOperator {
  std::vector<TruncatedSeries> coeffs;

  TruncatedSeries apply(const TruncatedSeries& a) const;
  // Same map, keeping only terms of total degree <= bound.
  TruncatedSeries apply_bounded(const TruncatedSeries& a,
                                std::uint32_t bound) const;
};

// The derivations dual to the images: row j of the Jacobian replaced by the
// partials and expanded, scaled by 1/det. Kronecker checked one order low
// (differentiation costs one order of precision).
std::vector<SeriesOperator> series_dual_derivations(
    const SeriesEndomorphism& sigma);

// One projection factor phi' = sum_k (-1)^k x^k/k! d^k; the sum is finite
// because x has zero constant term. An algebra endomorphism of the
// truncated ring.
TruncatedSeries series_phi_map(const TruncatedSeries& x_image,
                               const SeriesOperator& dual,
                               const TruncatedSeries& a);

// phi'_m applied first, then ... then phi'_1; each
// phi'_i = sum_k (-1)^k (x'_i)^k/k! (d'_i)^k, finite because x'_i has zero
// constant term. Lands in K; positive-degree leftovers mean sigma is not an
// automorphism modulo the truncation ideal.
Scalar series_phi_sigma(const SeriesEndomorphism& sigma,
                        const TruncatedSeries& a);

// Coefficients of sigma^{-1}(x_i) for |alpha| <= order via
//   sigma^{-1}(a) = sum_alpha phi_sigma((d')^alpha/alpha! a) x^alpha,
// verified by composing both ways modulo the truncation ideal.
SeriesEndomorphism series_invert(const SeriesEndomorphism& sigma);

}  // namespace weyl

#endif
