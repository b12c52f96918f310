#include "weyl/signature.hpp"

namespace weyl {

std::string AlgebraSignature::generator_name(std::uint32_t i) const {
  if (is_q(i)) return "q" + std::to_string(i + 1);
  if (is_p(i)) return "p" + std::to_string(pair_of(i) + 1);
  return "y" + std::to_string(i - 2 * n_ + 1);
}

std::optional<std::uint32_t> AlgebraSignature::index_of_name(
    const std::string& name) const {
  if (name.size() < 2) return std::nullopt;
  char role = name[0];
  if (role != 'q' && role != 'p' && role != 'y') return std::nullopt;
  std::uint32_t k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    k = k * 10 + static_cast<std::uint32_t>(name[i] - '0');
  }
  if (name[1] == '0') return std::nullopt;  // no leading zeros, no q0
  if (role == 'q' && k >= 1 && k <= n_) return k - 1;
  if (role == 'p' && k >= 1 && k <= n_) return n_ + k - 1;
  if (role == 'y' && k >= 1 && k <= m_) return 2 * n_ + k - 1;
  return std::nullopt;
}

}  // namespace weyl
