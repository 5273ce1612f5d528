#pragma once

#include "palin/coefficient.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace palin {

class Polynomial;

/// Malformed polynomial or rational text. `position()` is the byte offset
/// into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts the term grammar
///
///   poly     := term (('+'|'-') term)*
///   term     := rational? ('q' ('^' uint)?)?
///   rational := int ('/' uint)?
///
/// with insignificant whitespace (a leading sign on the first term and an
/// optional '*' between coefficient and q are tolerated), or the JSON
/// coefficient-list form {"ord": r, "coeffs": ["a0", "a1", ...]} when the
/// text starts with '{'. Repeated powers are summed.
Polynomial parse_polynomial(std::string_view text);

/// Renders in the term grammar, ascending powers, e.g. "1 + 4q + q^2",
/// "1/2 - 1/2q^2". The zero polynomial renders as "0".
std::string to_string(const Polynomial& f);

/// {"ord": r, "coeffs": [...]} with coefficients as decimal rational strings.
std::string to_json(const Polynomial& f);
Polynomial polynomial_from_json(std::string_view json);

}  // namespace palin
