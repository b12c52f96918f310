#ifndef WEYL_STRUCTURE_HPP
#define WEYL_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/derivation.hpp"
#include "weyl/element.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

// Antisymmetric matrix of the scalar pairwise commutators of a generating
// set; the data of an iterated Ore presentation with scalar relations.
struct CommutatorMatrix {
  Mat lambda;
};

// Throws non_scalar_commutator when some [g_i, g_j] has positive degree.
CommutatorMatrix commutator_matrix(const std::vector<Element>& generators);

// Change of basis J with J^T L J in the canonical form: pair blocks
// [[0,1],[-1,0]] (columns ordered p_1, q_1, ..., p_n, q_n) followed by an
// m x m zero block.
struct DarbouxBasis {
  Mat change_of_basis;
  std::uint32_t pairs = 0;       // n
  std::uint32_t kernel_dim = 0;  // m
};

DarbouxBasis darboux_basis(const CommutatorMatrix& form);

Mat canonical_block_matrix(std::uint32_t pairs, std::uint32_t kernel_dim);

// (n, m) = (rank/2, s - rank).
std::pair<std::uint32_t, std::uint32_t> classify(const CommutatorMatrix& form);

// Bounded search for elements with d_i(z_j) = delta_ij: an exact linear
// solve over the span of monomials of total degree <= degree_bound.
// Solutions are normalized to zero constant term, free coordinates pinned
// to zero. nullopt means not found within the bound, which is inconclusive.
std::optional<std::vector<Element>> find_coordinates(
    const std::vector<Derivation>& derivations, int degree_bound);

// The Ore presentation data of a coordinate tuple; same scalar check as
// commutator_matrix.
CommutatorMatrix ore_presentation(const std::vector<Element>& coordinates);

// All exponent vectors over `vars` variables with |alpha| <= degree, in
// graded-lex order. Shared by the bounded searches and the series tests.
std::vector<MultiIndex> monomials_up_to(std::uint32_t vars, int degree);

}  // namespace weyl

#endif
