#pragma once

#include <string>
#include <string_view>

#include "crnkit/network.hpp"

namespace crn {

/// Syntax error with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the reaction-list text format, one reaction per line:
///
///   complex "->" complex          e.g.  X1 -> 2 X1 + X2
///   complex "<->" complex         expands to the two directed reactions
///
/// complex := "0" | term ("+" term)*, term := [coefficient] name, where a
/// coefficient is a nonnegative rational like 2 or 3/2. "#" starts a comment.
/// Species are indexed and complexes deduplicated in first-appearance order.
Network parse_network(std::string_view text);

/// Canonical reaction-list text; parse(serialize(net)) reconstructs an
/// identical network.
std::string serialize_network(const Network& net);

/// Renders a single complex, e.g. "2 X1 + X2" or "0".
std::string format_complex(const Network& net, const Complex& complex);

}  // namespace crn
