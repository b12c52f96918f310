#ifndef WEYL_PRINTER_HPP
#define WEYL_PRINTER_HPP

#include <string>

#include "weyl/element.hpp"
#include "weyl/endomorphism.hpp"
#include "weyl/faces.hpp"
#include "weyl/series.hpp"

namespace weyl {

struct SourceDocument;

// Deterministic text forms: terms in ascending graded-lex order, reduced
// rational coefficients, explicit '*' and '^'. Everything printed here
// parses back to an equal value (series modulo their order marker).

std::string print_monomial(const AlgebraSignature& sig,
                           const MultiIndex& alpha);
std::string print(const Element& a);
std::string print(const Endomorphism& sigma,
                  const std::string& name = "sigma");
// Face representatives print in the original algebra's generator names.
std::string print(const FaceImage& face, const AlgebraSignature& original);
// "... + O(deg N+1)".
std::string print(const TruncatedSeries& a);
std::string print(const SourceDocument& doc);

}  // namespace weyl

#endif
