#pragma once

// Surface syntax for cuspidal symbols, twists, segments, Speh data and Arthur
// parameters.
//
//   expr    := "0" | term (("+" | "x") term)*
//   term    := "u(" symbol ";" int "," int ")"
//            | "Z[" half ".." half "]{" symbol "}"
//            | "Q[" half ".." half "]{" symbol "}"
//            | "triv(" int ")" | "st(" int ")"
//            | symbol
//   symbol  := ident (":" int)?
//   half    := int | int "/2"
//
//   segment  := "[" half ".." half "]{" symbol "}"
//   twisted  := ("nu^(" half ")")? symbol
//   multiset := "{" (twisted ("*" int)? ("," twisted ("*" int)?)*)? "}"
//
// "+" (sum of Arthur terms) and "x" (product of representations) build the
// same multiset. The identifier "x" is reserved for the product. Whitespace
// between tokens is ignored.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "arthur/core.hpp"
#include "arthur/types.hpp"

namespace arthur::dsl {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(SourceSpan span, std::string message, std::set<std::string> expected);

  const SourceSpan& span() const { return span_; }
  const std::set<std::string>& expected() const { return expected_; }
  /// Two-line rendering: the message, then the input with a caret marker.
  std::string render(std::string_view input) const;

private:
  SourceSpan span_;
  std::set<std::string> expected_;
};

/// A parsed expression: a single Z/Q term keeps its segment, anything else is
/// a parameter.
using Rep = std::variant<ArthurParameter, SegmentRep>;

/// Z/Q terms must be centered (unitary) here.
ArthurParameter parse_param(std::string_view text);
Rep parse_rep(std::string_view text);
Segment parse_segment(std::string_view text);
TwistedCuspidal parse_twisted(std::string_view text);
CuspidalMultiset parse_multiset(std::string_view text);

std::string format(HalfInt x);
std::string format(const CuspidalSymbol& s);
std::string format(const TwistedCuspidal& t);
std::string format(const CuspidalMultiset& m);
std::string format(const SpehDatum& s);
std::string format(const ArthurParameter& a);
std::string format(const Segment& s);
std::string format(const SegmentRep& r);
std::string format(const Rep& r);

}  // namespace arthur::dsl
