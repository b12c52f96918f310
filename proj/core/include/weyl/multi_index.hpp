#ifndef WEYL_MULTI_INDEX_HPP
#define WEYL_MULTI_INDEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/scalar.hpp"

namespace weyl {

// Exponent vector alpha; the basis label of the monomial x^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t size) : e_(size, 0) {}
  explicit MultiIndex(std::vector<std::uint32_t> exponents)
      : e_(std::move(exponents)) {}
  // Keeps brace lists like MultiIndex({2, 1}) and MultiIndex({1}) meaning
  // exponents, never a size.
  MultiIndex(std::initializer_list<std::uint32_t> exponents)
      : e_(exponents) {}

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint32_t total() const;
  bool is_zero() const { return total() == 0; }

  Integer factorial() const;  // alpha!

  MultiIndex plus(std::size_t i, std::uint32_t k = 1) const;
  MultiIndex minus(std::size_t i, std::uint32_t k = 1) const;  // asserts e_[i] >= k
  MultiIndex plus(const MultiIndex& other) const;

  // Smallest index with a nonzero exponent; nullopt for alpha = 0.
  std::optional<std::size_t> min_support() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

// Graded lexicographic order: lower total degree first, lexicographic
// comparison of exponent vectors inside a degree. This is the canonical
// term order used for storage and printing.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

}  // namespace weyl

#endif
