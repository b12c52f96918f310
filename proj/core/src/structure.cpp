#include "weyl/structure.hpp"

#include <algorithm>
#include <map>

namespace weyl {

CommutatorMatrix commutator_matrix(const std::vector<Element>& generators) {
  const std::size_t s = generators.size();
  Mat lambda(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      Element c = commutator(generators[i], generators[j]);
      if (!c.is_scalar())
        throw error(errc::non_scalar_commutator,
                    "commutator of generators " + std::to_string(i + 1) +
                        " and " + std::to_string(j + 1) + " is not a scalar");
      lambda.at(i, j) = c.constant_term();
      lambda.at(j, i) = -c.constant_term();
    }
  }
  return CommutatorMatrix{std::move(lambda)};
}

Mat canonical_block_matrix(std::uint32_t pairs, std::uint32_t kernel_dim) {
  std::uint32_t s = 2 * pairs + kernel_dim;
  Mat c(s, s);
  for (std::uint32_t k = 0; k < pairs; ++k) {
    c.at(2 * k, 2 * k + 1) = Scalar(1);
    c.at(2 * k + 1, 2 * k) = Scalar(-1);
  }
  return c;
}

namespace {

Scalar pair_value(const Mat& lambda, const std::vector<Scalar>& u,
                  const std::vector<Scalar>& v) {
  Scalar acc(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (is_zero(v[j])) continue;
      acc += u[i] * lambda.at(i, j) * v[j];
    }
  }
  return acc;
}

}  // namespace

// Symplectic Gram-Schmidt over exact rationals. The working set starts as
// the standard basis; each round extracts the lowest-index nonzero pairing,
// rescales it to 1 and projects the remainder.
DarbouxBasis darboux_basis(const CommutatorMatrix& form) {
  const Mat& lambda = form.lambda;
  const std::size_t s = lambda.rows();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (!(lambda.at(i, j) == -lambda.at(j, i)))
        throw error(errc::invalid_argument, "form matrix is not antisymmetric");

  std::vector<std::vector<Scalar>> work;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Scalar> e(s, Scalar(0));
    e[i] = Scalar(1);
    work.push_back(std::move(e));
  }

  std::vector<std::vector<Scalar>> columns;  // p_1, q_1, p_2, q_2, ...
  std::uint32_t pairs = 0;
  while (true) {
    std::size_t ui = work.size(), vi = work.size();
    for (std::size_t i = 0; i < work.size() && ui == work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j)
        if (!is_zero(pair_value(lambda, work[i], work[j]))) {
          ui = i;
          vi = j;
          break;
        }
    if (ui == work.size()) break;
    std::vector<Scalar> p = std::move(work[ui]);
    std::vector<Scalar> q = std::move(work[vi]);
    Scalar scale = Scalar(1) / pair_value(lambda, p, q);
    for (Scalar& c : q) c *= scale;  // now B(p, q) = 1
    std::vector<std::vector<Scalar>> rest;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == ui || i == vi) continue;
      std::vector<Scalar> w = std::move(work[i]);
      Scalar wq = pair_value(lambda, w, q);
      Scalar wp = pair_value(lambda, w, p);
      for (std::size_t t = 0; t < s; ++t) w[t] += -wq * p[t] + wp * q[t];
      rest.push_back(std::move(w));
    }
    columns.push_back(std::move(p));
    columns.push_back(std::move(q));
    ++pairs;
    work = std::move(rest);
  }
  std::uint32_t kernel_dim = static_cast<std::uint32_t>(work.size());
  for (auto& w : work) columns.push_back(std::move(w));

  DarbouxBasis basis;
  basis.pairs = pairs;
  basis.kernel_dim = kernel_dim;
  basis.change_of_basis = Mat(s, s);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < s; ++i)
      basis.change_of_basis.at(i, j) = columns[j][i];
  return basis;
}

std::pair<std::uint32_t, std::uint32_t> classify(const CommutatorMatrix& form) {
  std::size_t r = rank(form.lambda);
  std::size_t s = form.lambda.rows();
  return {static_cast<std::uint32_t>(r / 2),
          static_cast<std::uint32_t>(s - r)};
}

std::vector<MultiIndex> monomials_up_to(std::uint32_t vars, int degree) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(vars, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, int remaining) -> void {
    if (pos == vars) {
      out.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  if (vars == 0) {
    out.emplace_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::optional<std::vector<Element>> find_coordinates(
    const std::vector<Derivation>& derivations, int degree_bound) {
  if (derivations.empty())
    throw error(errc::invalid_argument, "no derivations given");
  const AlgebraSignature sig = derivations.front().signature();
  for (const Derivation& d : derivations)
    if (!(d.signature() == sig))
      throw error(errc::signature_mismatch,
                  "derivations on different algebras");
  for (std::size_t i = 0; i < derivations.size(); ++i)
    for (std::size_t j = i + 1; j < derivations.size(); ++j)
      if (!commute_on(derivations[i], derivations[j]))
        throw error(errc::commutation_check_failed,
                    "derivations " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " do not commute");

  std::vector<MultiIndex> basis = monomials_up_to(sig.s(), degree_bound);
  // Images of the basis monomials under each derivation; equation rows are
  // indexed by the monomials appearing anywhere in those images.
  std::vector<std::vector<Element>> images(derivations.size());
  std::map<MultiIndex, std::size_t, GrlexLess> row_of;
  for (std::size_t d = 0; d < derivations.size(); ++d) {
    for (const MultiIndex& alpha : basis) {
      Element im =
          derivations[d].apply(Element::monomial(sig, alpha, Scalar(1)));
      for (const auto& [beta, c] : im.terms())
        row_of.emplace(beta, row_of.size());
      images[d].push_back(std::move(im));
    }
  }
  const std::size_t rows_per_derivation = row_of.size();
  const std::size_t rows = rows_per_derivation * derivations.size();
  Mat system(rows, basis.size());
  for (std::size_t d = 0; d < derivations.size(); ++d)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [beta, c] : images[d][b].terms())
        system.at(d * rows_per_derivation + row_of.at(beta), b) = c;

  const MultiIndex zero_index(sig.s());
  std::vector<Element> coordinates;
  for (std::size_t j = 0; j < derivations.size(); ++j) {
    std::vector<Scalar> rhs(rows, Scalar(0));
    auto it = row_of.find(zero_index);
    if (it == row_of.end()) return std::nullopt;  // 1 is not reachable
    rhs[j * rows_per_derivation + it->second] = Scalar(1);
    std::optional<std::vector<Scalar>> sol = solve(system, rhs);
    if (!sol) return std::nullopt;
    Element::TermMap terms;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (is_zero((*sol)[b]) || basis[b].is_zero()) continue;  // drop constant
      terms.emplace(basis[b], (*sol)[b]);
    }
    coordinates.push_back(Element::from_terms(sig, std::move(terms)));
  }
  return coordinates;
}

CommutatorMatrix ore_presentation(const std::vector<Element>& coordinates) {
  return commutator_matrix(coordinates);
}

}  // namespace weyl
