#ifndef WEYL_PARSER_HPP
#define WEYL_PARSER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/endomorphism.hpp"

namespace weyl {

// A parsed batch document: one algebra declaration, then named maps and
// named elements. Statements end with ';', expressions use explicit
// noncommutative '*', '^' with nonnegative integer exponents, and '#' line
// comments. Inputs are normal-ordered on parse, so syntactically different
// spellings of equal elements compare equal downstream.
struct SourceDocument {
  AlgebraSignature signature;
  std::vector<std::pair<std::string, Endomorphism>> maps;
  std::vector<std::pair<std::string, Element>> elements;

  const Endomorphism* find_map(const std::string& name) const;
  const Element* find_element(const std::string& name) const;
};

SourceDocument parse_document(const std::string& text);

// Parses a single expression against a known signature (used by tests and
// the round-trip checks).
Element parse_expression(const std::string& text,
                         const AlgebraSignature& sig);

}  // namespace weyl

#endif
