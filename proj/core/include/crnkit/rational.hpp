#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace crn {

/// Exact rational scalar. All structural computations in crnkit are carried
/// out over this type; no floating point enters deficiency arithmetic.
using Rational = mpq_class;

/// Parses "2", "-7" or "3/2". Throws std::invalid_argument on anything else
/// (including a zero denominator).
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  for (char c : s) {
    if ((c < '0' || c > '9') && c != '/' && c != '-')
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace crn
