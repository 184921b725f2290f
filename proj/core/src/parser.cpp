#include "crnkit/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace crn {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line;

  std::size_t column() const { return pos + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, column(), msg);
  }
};

bool is_name_start(char c) { return std::isalpha(c) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(c) || c == '_'; }

std::string lex_name(Cursor& cur) {
  std::size_t start = cur.pos;
  while (!cur.done() && is_name_char(cur.peek())) ++cur.pos;
  return std::string(cur.text.substr(start, cur.pos - start));
}

Rational lex_coefficient(Cursor& cur) {
  std::size_t start = cur.pos;
  while (!cur.done() && std::isdigit(cur.peek())) ++cur.pos;
  if (!cur.done() && cur.peek() == '/') {
    ++cur.pos;
    if (cur.done() || !std::isdigit(cur.peek()))
      cur.fail("expected denominator digits after '/'");
    while (!cur.done() && std::isdigit(cur.peek())) ++cur.pos;
  }
  std::string lit(cur.text.substr(start, cur.pos - start));
  try {
    return parse_rational(lit);
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

struct NetworkBuilder {
  std::vector<std::string> species;
  std::map<std::string, int> species_index;
  std::vector<Complex> complexes;
  std::vector<Reaction> reactions;

  int species_id(const std::string& name) {
    auto [it, inserted] =
        species_index.emplace(name, static_cast<int>(species.size()));
    if (inserted) species.push_back(name);
    return it->second;
  }
};

// complex := "0" | term ("+" term)*, term := [coefficient] name
Complex parse_complex(Cursor& cur, NetworkBuilder& b) {
  std::map<int, Rational> coeffs;
  bool first = true;
  while (true) {
    cur.skip_space();
    if (cur.done()) cur.fail("expected a complex");
    if (first && cur.peek() == '0' &&
        (cur.pos + 1 >= cur.text.size() ||
         !is_name_char(cur.text[cur.pos + 1]))) {
      ++cur.pos;
      cur.skip_space();
      if (!cur.done() && cur.peek() == '+')
        cur.fail("the zero complex cannot be part of a sum");
      return Complex::zero();
    }

    Rational coeff = 1;
    if (std::isdigit(cur.peek())) {
      coeff = lex_coefficient(cur);
      cur.skip_space();
    }
    if (cur.done() || !is_name_start(cur.peek()))
      cur.fail("expected species name");
    std::string name = lex_name(cur);
    coeffs[b.species_id(name)] += coeff;

    cur.skip_space();
    if (!cur.done() && cur.peek() == '+') {
      ++cur.pos;
      first = false;
      continue;
    }
    break;
  }
  return Complex(std::move(coeffs));
}

}  // namespace

Network parse_network(std::string_view text) {
  NetworkBuilder b;
  std::set<std::pair<int, int>> reaction_keys;
  std::map<Complex, int> complex_index;
  auto intern = [&](const Complex& c) {
    auto [it, inserted] =
        complex_index.emplace(c, static_cast<int>(b.complexes.size()));
    if (inserted) b.complexes.push_back(c);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    Cursor cur{raw, 0, line_no};
    cur.skip_space();
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }

    Complex lhs = parse_complex(cur, b);
    cur.skip_space();
    bool reversible = false;
    if (cur.text.substr(cur.pos, 3) == "<->") {
      reversible = true;
      cur.pos += 3;
    } else if (cur.text.substr(cur.pos, 2) == "->") {
      cur.pos += 2;
    } else {
      cur.fail("expected '->' or '<->'");
    }
    Complex rhs = parse_complex(cur, b);
    cur.skip_space();
    if (!cur.done()) cur.fail("unexpected trailing input");

    int li = intern(lhs), ri = intern(rhs);
    if (li == ri) throw ParseError(line_no, 1, "loop reaction");
    if (!reaction_keys.emplace(li, ri).second)
      throw ParseError(line_no, 1, "duplicate reaction");
    b.reactions.push_back({li, ri, std::nullopt});
    if (reversible) {
      if (!reaction_keys.emplace(ri, li).second)
        throw ParseError(line_no, 1, "duplicate reaction");
      b.reactions.push_back({ri, li, std::nullopt});
    }
    if (end == text.size()) break;
  }

  if (b.reactions.empty()) throw ParseError(line_no, 1, "no reactions found");
  return Network::create(std::move(b.species), std::move(b.complexes),
                         std::move(b.reactions));
}

std::string format_complex(const Network& net, const Complex& complex) {
  if (complex.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : complex.coefficients()) {
    if (!first) out << " + ";
    if (c != 1) out << to_string(c) << " ";
    out << net.species_name(s);
    first = false;
  }
  return out.str();
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    int ji = static_cast<int>(j);
    out << format_complex(net, net.reactant_of(ji)) << " -> "
        << format_complex(net, net.product_of(ji)) << "\n";
  }
  return out.str();
}

}  // namespace crn
