#include "weyl/printer.hpp"

#include <sstream>

#include "weyl/parser.hpp"

namespace weyl {

namespace {

// Shared term joining for elements and series. `name_of` maps a variable
// slot to its printed name.
template <typename Terms, typename NameOf>
std::string print_terms(const Terms& terms, NameOf&& name_of) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, coeff] : terms) {
    Scalar c = coeff;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name_of(i);
      if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
    }
    if (mono.empty()) {
      os << scalar_to_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << scalar_to_string(c) << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string print_monomial(const AlgebraSignature& sig,
                           const MultiIndex& alpha) {
  std::string mono;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += sig.generator_name(static_cast<std::uint32_t>(i));
    if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
  }
  return mono.empty() ? "1" : mono;
}

std::string print(const Element& a) {
  const AlgebraSignature& sig = a.signature();
  return print_terms(a.terms(), [&](std::size_t i) {
    return sig.generator_name(static_cast<std::uint32_t>(i));
  });
}

std::string print(const Endomorphism& sigma, const std::string& name) {
  const AlgebraSignature& sig = sigma.signature();
  std::ostringstream os;
  os << "map " << name << " {\n";
  for (std::uint32_t i = 0; i < sig.s(); ++i)
    os << "  " << sig.generator_name(i) << " -> " << print(sigma.image(i))
       << ";\n";
  os << "}";
  return os.str();
}

std::string print(const FaceImage& face, const AlgebraSignature& original) {
  return print_terms(face.representative.terms(), [&](std::size_t i) {
    return original.generator_name(face.original_index[i]);
  });
}

std::string print(const TruncatedSeries& a) {
  AlgebraSignature names(0, a.vars());
  std::string body = print_terms(a.terms(), [&](std::size_t i) {
    return names.generator_name(static_cast<std::uint32_t>(i));
  });
  return body + " + O(deg " + std::to_string(a.order() + 1) + ")";
}

std::string print(const SourceDocument& doc) {
  std::ostringstream os;
  os << "algebra n=" << doc.signature.n() << " m=" << doc.signature.m()
     << ";\n";
  for (const auto& [name, map] : doc.maps) os << print(map, name) << "\n";
  for (const auto& [name, element] : doc.elements)
    os << "element " << name << " = " << print(element) << ";\n";
  return os.str();
}

}  // namespace weyl
