#include "weyl/multi_index.hpp"

#include <cassert>

namespace weyl {

std::uint32_t MultiIndex::total() const {
  std::uint32_t t = 0;
  for (std::uint32_t e : e_) t += e;
  return t;
}

Integer MultiIndex::factorial() const {
  Integer r(1);
  for (std::uint32_t e : e_) {
    if (e > 1) r *= weyl::factorial(e);
  }
  return r;
}

MultiIndex MultiIndex::plus(std::size_t i, std::uint32_t k) const {
  assert(i < e_.size());
  std::vector<std::uint32_t> e = e_;
  e[i] += k;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(std::size_t i, std::uint32_t k) const {
  assert(i < e_.size() && e_[i] >= k);
  std::vector<std::uint32_t> e = e_;
  e[i] -= k;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  assert(e_.size() == other.e_.size());
  std::vector<std::uint32_t> e = e_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.e_[i];
  return MultiIndex(std::move(e));
}

std::optional<std::size_t> MultiIndex::min_support() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) return i;
  return std::nullopt;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  std::uint32_t ta = a.total();
  std::uint32_t tb = b.total();
  if (ta != tb) return ta < tb;
  return a.exponents() < b.exponents();
}

}  // namespace weyl
