#ifndef SECMAT_PARSER_HPP
#define SECMAT_PARSER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secmat/polynomial.hpp"

namespace secmat {

/// Parses a polynomial expression over `ring`:
///
///   expr    := term (("+" | "-") term)*
///   term    := factor ("*" factor)*
///   factor  := ("-" | "+") factor | power
///   power   := primary ("^" integer)?
///   primary := integer ("/" integer)? | identifier | "(" expr ")"
///
/// `*` is mandatory between factors, `^` binds tighter than `*` and unary
/// minus, whitespace is insignificant and `#` starts a comment running to
/// the end of the line. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Contents of an ideal description file:
///
///   ring x, y, z;
///   ideal x^4 - y^2*z^2, x*y^2 - y*z^2 - z^3;
///   # optional directives, in any order:
///   order degrevlex;
///   seed 42;
///   max-degree 9;
///   truncate 3, 4;
struct InputDocument {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<TermOrder> order;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  std::vector<int> truncations;

  IdealPresentation ideal() const { return IdealPresentation(ring, generators); }
};

InputDocument parse_document(std::string_view text);

}  // namespace secmat

#endif  // SECMAT_PARSER_HPP
