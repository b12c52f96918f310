#include "weyl/series.hpp"

namespace weyl {

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars() != b.vars() || a.order() != b.order())
    throw error(errc::signature_mismatch,
                "series with different variable counts or orders");
}

void accumulate(TruncatedSeries::TermMap& acc, MultiIndex alpha, Scalar c) {
  auto [it, inserted] = acc.emplace(std::move(alpha), c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(std::uint32_t vars,
                                          std::uint32_t order, Scalar value) {
  TruncatedSeries s(vars, order);
  if (!weyl::is_zero(value))
    s.terms_.emplace(MultiIndex(vars), std::move(value));
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::uint32_t vars,
                                          std::uint32_t order,
                                          std::uint32_t index) {
  if (index >= vars)
    throw error(errc::invalid_index, "series variable out of range");
  TruncatedSeries s(vars, order);
  if (order >= 1) s.terms_.emplace(MultiIndex(vars).plus(index), Scalar(1));
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(std::uint32_t vars,
                                            std::uint32_t order,
                                            TermMap terms) {
  TruncatedSeries s(vars, order);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != vars)
      throw error(errc::signature_mismatch,
                  "exponent length does not match the variable count");
    if (it->first.total() > order || weyl::is_zero(it->second))
      it = terms.erase(it);
    else
      ++it;
  }
  s.terms_ = std::move(terms);
  return s;
}

Scalar TruncatedSeries::constant_term() const {
  auto it = terms_.find(MultiIndex(vars_));
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar TruncatedSeries::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t new_order) const {
  TermMap terms;
  for (const auto& [alpha, c] : terms_)
    if (alpha.total() <= new_order) terms.emplace(alpha, c);
  return from_terms(vars_, new_order, std::move(terms));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(vars_, order_);
  for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries::TermMap acc = a.terms();
  for (const auto& [alpha, c] : b.terms()) accumulate(acc, alpha, c);
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries::TermMap acc = a.terms();
  for (const auto& [alpha, c] : b.terms()) accumulate(acc, alpha, -c);
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries::TermMap acc;
  for (const auto& [al, ac] : a.terms()) {
    std::uint32_t ta = al.total();
    for (const auto& [be, bc] : b.terms()) {
      if (ta + be.total() > a.order()) continue;
      accumulate(acc, al.plus(be), Scalar(ac * bc));
    }
  }
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a) {
  TruncatedSeries::TermMap acc;
  if (!is_zero(c))
    for (const auto& [alpha, v] : a.terms()) {
      Scalar cv = c * v;
      if (!is_zero(cv)) acc.emplace(alpha, std::move(cv));
    }
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

TruncatedSeries series_partial(const TruncatedSeries& a, std::uint32_t index) {
  if (index >= a.vars())
    throw error(errc::invalid_index, "series variable out of range");
  TruncatedSeries::TermMap acc;
  for (const auto& [alpha, c] : a.terms()) {
    std::uint32_t e = alpha[index];
    if (e == 0) continue;
    acc.emplace(alpha.minus(index), Scalar(c * Scalar(e)));
  }
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& u) {
  Scalar c0 = u.constant_term();
  if (is_zero(c0))
    throw error(errc::not_invertible,
                "series with zero constant term has no reciprocal");
  // u = c0 (1 + w), w in the augmentation ideal; invert by geometric series.
  Scalar c0_inv = Scalar(1) / c0;
  TruncatedSeries w =
      c0_inv * u - TruncatedSeries::constant(u.vars(), u.order(), Scalar(1));
  TruncatedSeries acc =
      TruncatedSeries::constant(u.vars(), u.order(), Scalar(1));
  TruncatedSeries w_pow =
      TruncatedSeries::constant(u.vars(), u.order(), Scalar(1));
  for (std::uint32_t k = 1; k <= u.order(); ++k) {
    w_pow = w_pow * w;
    if (w_pow.is_zero()) break;
    acc = k % 2 == 0 ? acc + w_pow : acc - w_pow;
  }
  return c0_inv * acc;
}

TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::vector<TruncatedSeries>& args) {
  if (args.size() != f.vars())
    throw error(errc::invalid_argument,
                "substitution needs one series per variable");
  for (const TruncatedSeries& a : args) {
    if (a.vars() != args.front().vars() || a.order() != f.order())
      throw error(errc::signature_mismatch, "incompatible substitution data");
    if (!is_zero(a.constant_term()))
      throw error(errc::invalid_argument,
                  "substituted series must have zero constant term");
  }
  std::uint32_t out_vars = f.vars() == 0 ? 0 : args.front().vars();
  TruncatedSeries result(out_vars, f.order());
  // Powers of each argument, extended on demand.
  std::vector<std::vector<TruncatedSeries>> pows(args.size());
  auto arg_power = [&](std::size_t i, std::uint32_t k) -> const TruncatedSeries& {
    std::vector<TruncatedSeries>& cache = pows[i];
    if (cache.empty())
      cache.push_back(
          TruncatedSeries::constant(out_vars, f.order(), Scalar(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * args[i]);
    return cache[k];
  };
  for (const auto& [alpha, c] : f.terms()) {
    TruncatedSeries term =
        TruncatedSeries::constant(out_vars, f.order(), c);
    for (std::uint32_t i = 0; i < f.vars(); ++i)
      if (alpha[i] > 0) term = term * arg_power(i, alpha[i]);
    result = result + term;
  }
  return result;
}

SeriesEndomorphism SeriesEndomorphism::make(
    std::uint32_t vars, std::uint32_t order,
    std::vector<TruncatedSeries> images) {
  if (images.size() != vars)
    throw error(errc::invalid_argument, "expected one image per variable");
  for (const TruncatedSeries& im : images) {
    if (im.vars() != vars || im.order() != order)
      throw error(errc::signature_mismatch,
                  "image with wrong variable count or order");
    if (!is_zero(im.constant_term()))
      throw error(errc::invalid_argument,
                  "continuity requires images with zero constant term");
  }
  return SeriesEndomorphism{vars, order, std::move(images)};
}

SeriesEndomorphism SeriesEndomorphism::identity(std::uint32_t vars,
                                                std::uint32_t order) {
  std::vector<TruncatedSeries> images;
  images.reserve(vars);
  for (std::uint32_t i = 0; i < vars; ++i)
    images.push_back(TruncatedSeries::variable(vars, order, i));
  return SeriesEndomorphism{vars, order, std::move(images)};
}

TruncatedSeries SeriesEndomorphism::apply(const TruncatedSeries& a) const {
  return substitute(a, images);
}

namespace {

// Product keeping only terms of total degree <= bound.
TruncatedSeries bounded_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                            std::uint32_t bound) {
  TruncatedSeries::TermMap acc;
  for (const auto& [al, ac] : a.terms()) {
    std::uint32_t ta = al.total();
    if (ta > bound) continue;
    for (const auto& [be, bc] : b.terms()) {
      if (ta + be.total() > bound) continue;
      MultiIndex gamma = al.plus(be);
      Scalar c = ac * bc;
      auto [it, inserted] = acc.emplace(std::move(gamma), c);
      if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) acc.erase(it);
      }
    }
  }
  return TruncatedSeries::from_terms(a.vars(), a.order(), std::move(acc));
}

}  // namespace

TruncatedSeries SeriesOperator::apply(const TruncatedSeries& a) const {
  TruncatedSeries r(a.vars(), a.order());
  for (std::uint32_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l].is_zero()) continue;
    r = r + coeffs[l] * series_partial(a, l);
  }
  return r;
}

TruncatedSeries SeriesOperator::apply_bounded(const TruncatedSeries& a,
                                              std::uint32_t bound) const {
  TruncatedSeries r(a.vars(), a.order());
  for (std::uint32_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l].is_zero()) continue;
    r = r + bounded_mul(coeffs[l], series_partial(a, l), bound);
  }
  return r;
}

namespace {

TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m,
                           std::uint32_t vars, std::uint32_t order) {
  std::size_t k = m.size();
  if (k == 0) return TruncatedSeries::constant(vars, order, Scalar(1));
  if (k == 1) return m[0][0];
  TruncatedSeries acc(vars, order);
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::vector<TruncatedSeries>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<TruncatedSeries> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    TruncatedSeries cof = m[0][col] * series_det(minor, vars, order);
    acc = col % 2 == 0 ? acc + cof : acc - cof;
  }
  return acc;
}

std::vector<std::vector<TruncatedSeries>> jacobian(
    const SeriesEndomorphism& sigma) {
  std::vector<std::vector<TruncatedSeries>> jac(sigma.vars);
  for (std::uint32_t i = 0; i < sigma.vars; ++i)
    for (std::uint32_t j = 0; j < sigma.vars; ++j)
      jac[i].push_back(series_partial(sigma.images[i], j));
  return jac;
}

TruncatedSeries minor_det(const std::vector<std::vector<TruncatedSeries>>& jac,
                          std::size_t drop_row, std::size_t drop_col,
                          std::uint32_t vars, std::uint32_t order) {
  std::vector<std::vector<TruncatedSeries>> minor;
  for (std::size_t i = 0; i < jac.size(); ++i) {
    if (i == drop_row) continue;
    std::vector<TruncatedSeries> row;
    for (std::size_t j = 0; j < jac.size(); ++j)
      if (j != drop_col) row.push_back(jac[i][j]);
    minor.push_back(std::move(row));
  }
  return series_det(minor, vars, order);
}

// One projection factor with the image powers precomputed. The k-th
// derivative is only needed up to degree order-k: everything higher is
// killed by the x'^k factor, so the chain runs through bounded products.
struct PhiFactor {
  std::vector<TruncatedSeries> x_powers;  // x'^0 .. x'^order
  const SeriesOperator* dual = nullptr;

  PhiFactor(const TruncatedSeries& x_image, const SeriesOperator& d)
      : dual(&d) {
    x_powers.push_back(TruncatedSeries::constant(x_image.vars(),
                                                 x_image.order(), Scalar(1)));
    for (std::uint32_t k = 1; k <= x_image.order(); ++k) {
      TruncatedSeries next = x_powers.back() * x_image;
      if (next.is_zero()) break;
      x_powers.push_back(std::move(next));
    }
  }

  TruncatedSeries apply(const TruncatedSeries& a) const {
    TruncatedSeries acc = a;
    TruncatedSeries deriv = a;
    const std::uint32_t order = a.order();
    for (std::uint32_t k = 1; k <= order; ++k) {
      if (k >= x_powers.size()) break;
      deriv = dual->apply_bounded(deriv, order - k);
      if (deriv.is_zero()) break;
      Scalar c = Scalar(k % 2 == 0 ? 1 : -1) / Scalar(factorial(k));
      acc = acc + c * (x_powers[k] * deriv);
    }
    return acc;
  }
};

}  // namespace

// The sum stops at the truncation order since x_image lies in the
// augmentation ideal.
TruncatedSeries series_phi_map(const TruncatedSeries& x_image,
                               const SeriesOperator& dual,
                               const TruncatedSeries& a) {
  return PhiFactor(x_image, dual).apply(a);
}

std::vector<SeriesOperator> series_dual_derivations(
    const SeriesEndomorphism& sigma) {
  const std::uint32_t m = sigma.vars;
  const std::uint32_t order = sigma.order;
  std::vector<std::vector<TruncatedSeries>> jac = jacobian(sigma);
  TruncatedSeries delta = series_det(jac, m, order);
  TruncatedSeries delta_inv = series_reciprocal(delta);  // throws on zero c0
  std::vector<SeriesOperator> duals;
  duals.reserve(m);
  for (std::uint32_t j = 0; j < m; ++j) {
    SeriesOperator op;
    for (std::uint32_t l = 0; l < m; ++l) {
      TruncatedSeries c = delta_inv * minor_det(jac, j, l, m, order);
      if ((j + l) % 2 == 1) c = -c;
      op.coeffs.push_back(std::move(c));
    }
    duals.push_back(std::move(op));
  }
  // One order is lost to differentiation, so the Kronecker property is
  // asserted modulo degree `order`.
  if (order >= 1) {
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) {
        TruncatedSeries got =
            duals[i].apply(sigma.images[j]).truncated(order - 1);
        TruncatedSeries want = TruncatedSeries::constant(
            m, order - 1, Scalar(i == j ? 1 : 0));
        if (!(got == want))
          throw error(errc::kronecker_check_failed,
                      "series dual derivations fail the Kronecker property");
      }
  }
  return duals;
}

Scalar series_phi_sigma(const SeriesEndomorphism& sigma,
                        const TruncatedSeries& a) {
  std::vector<SeriesOperator> duals = series_dual_derivations(sigma);
  TruncatedSeries cur = a;
  for (std::uint32_t i = sigma.vars; i-- > 0;)
    cur = series_phi_map(sigma.images[i], duals[i], cur);
  TruncatedSeries rest =
      cur - TruncatedSeries::constant(sigma.vars, sigma.order,
                                      cur.constant_term());
  if (!rest.is_zero())
    throw error(errc::not_scalar_result,
                "series projection left positive-degree terms");
  return cur.constant_term();
}

SeriesEndomorphism series_invert(const SeriesEndomorphism& sigma) {
  const std::uint32_t m = sigma.vars;
  const std::uint32_t order = sigma.order;
  std::vector<SeriesOperator> duals = series_dual_derivations(sigma);
  std::vector<PhiFactor> factors;
  factors.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i)
    factors.emplace_back(sigma.images[i], duals[i]);

  auto phi = [&](const TruncatedSeries& a) {
    TruncatedSeries cur = a;
    for (std::uint32_t i = m; i-- > 0;) cur = factors[i].apply(cur);
    TruncatedSeries rest = cur - TruncatedSeries::constant(
                                     m, order, cur.constant_term());
    if (!rest.is_zero())
      throw error(errc::not_scalar_result,
                  "series projection left positive-degree terms");
    return cur.constant_term();
  };

  std::vector<TruncatedSeries> inverse_images;
  inverse_images.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    TruncatedSeries::TermMap terms;
    // (d')^alpha x_i level by level through the canonical decomposition
    // alpha -> (min support, alpha - e_j).
    std::map<MultiIndex, TruncatedSeries, GrlexLess> level;
    level.emplace(MultiIndex(m), TruncatedSeries::variable(m, order, i));
    std::uint32_t depth = 0;
    while (!level.empty() && depth <= order) {
      for (const auto& [alpha, value] : level) {
        Scalar scale = Scalar(1) / Scalar(alpha.factorial());
        Scalar coeff = phi(scale * value);
        if (!is_zero(coeff)) terms.emplace(alpha, coeff);
      }
      std::map<MultiIndex, TruncatedSeries, GrlexLess> next;
      if (depth < order) {
        for (const auto& [alpha, value] : level) {
          std::size_t limit = alpha.min_support().value_or(m - 1);
          for (std::size_t j = 0; j <= limit; ++j) {
            TruncatedSeries der = duals[j].apply(value);
            if (!der.is_zero()) next.emplace(alpha.plus(j), std::move(der));
          }
        }
      }
      level = std::move(next);
      ++depth;
    }
    inverse_images.push_back(
        TruncatedSeries::from_terms(m, order, std::move(terms)));
  }
  SeriesEndomorphism tau =
      SeriesEndomorphism::make(m, order, std::move(inverse_images));
  for (std::uint32_t i = 0; i < m; ++i) {
    TruncatedSeries x = TruncatedSeries::variable(m, order, i);
    if (!(sigma.apply(tau.images[i]) == x) ||
        !(tau.apply(sigma.images[i]) == x))
      throw error(errc::verification_failed,
                  "series round trip fails modulo the truncation ideal");
  }
  return tau;
}

}  // namespace weyl
