#ifndef WEYL_SIGNATURE_HPP
#define WEYL_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace weyl {

// Shape of the algebra A_n (x) P_m. Generator roles are fixed by index:
// 0..n-1 are q_1..q_n, n..2n-1 are p_1..p_n, 2n..2n+m-1 are the central
// y_1..y_m. s = 2n+m generators total. s = 0 only arises internally as the
// face quotient of a one-generator algebra.
class AlgebraSignature {
 public:
  AlgebraSignature() : n_(0), m_(0) {}
  AlgebraSignature(std::uint32_t weyl_pairs, std::uint32_t central_vars)
      : n_(weyl_pairs), m_(central_vars) {}

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t s() const { return 2 * n_ + m_; }

  bool valid_index(std::uint32_t i) const { return i < s(); }
  bool is_q(std::uint32_t i) const { return i < n_; }
  bool is_p(std::uint32_t i) const { return i >= n_ && i < 2 * n_; }
  bool is_central(std::uint32_t i) const { return i >= 2 * n_ && i < s(); }

  // 0-based Weyl pair of a q/p index.
  std::uint32_t pair_of(std::uint32_t i) const { return is_q(i) ? i : i - n_; }
  // q_k <-> p_k.
  std::uint32_t partner(std::uint32_t i) const {
    return is_q(i) ? i + n_ : i - n_;
  }

  // [x_i, x_j] on canonical generators: +1, -1 or 0.
  int canonical_commutator(std::uint32_t i, std::uint32_t j) const {
    if (is_p(i) && is_q(j) && pair_of(i) == pair_of(j)) return 1;
    if (is_q(i) && is_p(j) && pair_of(i) == pair_of(j)) return -1;
    return 0;
  }

  std::string generator_name(std::uint32_t i) const;
  std::optional<std::uint32_t> index_of_name(const std::string& name) const;

  friend bool operator==(const AlgebraSignature&,
                         const AlgebraSignature&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
};

}  // namespace weyl

#endif
