#include <doctest.h>

#include "crnkit/network.hpp"
#include "crnkit/parser.hpp"
#include "helpers.hpp"

using namespace crn;
using crn::testing::net;

TEST_SUITE_BEGIN("network model and parser");

TEST_CASE("paper example parses to m=2, n=4, r=2") {
  const Network n = net("X1 -> 2 X1 + X2\nX2 -> 2 X2 + X1");
  CHECK(n.species_count() == 2);
  CHECK(n.complex_count() == 4);
  CHECK(n.reaction_count() == 2);
  // Both reaction vectors are (1, 1): hand subtraction of the complexes.
  for (int j : {0, 1}) {
    const RationalVector v = n.reaction_vector(j);
    CHECK(v[0] == 1);
    CHECK(v[1] == 1);
  }
}

TEST_CASE("minimal network") {
  const Network n = net("A -> B");
  CHECK(n.species_count() == 2);
  CHECK(n.complex_count() == 2);
  CHECK(n.reaction_count() == 1);
  const RationalVector v = n.reaction_vector(0);
  CHECK(v[0] == -1);
  CHECK(v[1] == 1);
}

TEST_CASE("zero complex is the empty coefficient map") {
  const Network n = net("0 -> X\nX -> 0");
  CHECK(n.complex_count() == 2);
  CHECK(n.zero_complex_index() >= 0);
  CHECK(n.complexes()[n.zero_complex_index()].is_zero());
}

TEST_CASE("rational coefficients and merged terms") {
  const Network n = net("3/2 A + A -> B");
  CHECK(n.reactant_of(0).coefficient(0) == Rational(5, 2));
}

TEST_CASE("reversible shorthand expands to two reactions") {
  const Network n = net("A <-> B");
  CHECK(n.reaction_count() == 2);
  CHECK(n.reactions()[0].reactant == n.reactions()[1].product);
  CHECK(n.reactions()[0].product == n.reactions()[1].reactant);
}

TEST_CASE("comments and blank lines are skipped") {
  const Network n = net("# header\n\nA -> B # tail comment\n");
  CHECK(n.reaction_count() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(net("A -> "), ParseError);
  CHECK_THROWS_AS(net("A B"), ParseError);
  CHECK_THROWS_AS(net("-> B"), ParseError);
  CHECK_THROWS_AS(net("A -> A"), ParseError);            // loop
  CHECK_THROWS_AS(net("A -> B\nA -> B"), ParseError);    // duplicate
  CHECK_THROWS_AS(net("A <-> B\nB -> A"), ParseError);   // duplicate via expansion
  CHECK_THROWS_AS(net(""), ParseError);
  try {
    net("A -> B\nA -> ");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("validation rejects malformed hand-built networks") {
  CHECK_THROWS_AS(Complex({{0, Rational(-1)}}), ValidationError);
  // Unused species.
  CHECK_THROWS_AS(
      Network::create({"A", "B", "C"}, {Complex::unit_sum({0}), Complex::unit_sum({1})},
                      {{0, 1, std::nullopt}}),
      ValidationError);
  // Isolated complex.
  CHECK_THROWS_AS(
      Network::create({"A", "B"},
                      {Complex::unit_sum({0}), Complex::unit_sum({1}),
                       Complex::unit_sum({0, 1})},
                      {{0, 1, std::nullopt}}),
      ValidationError);
  // Duplicate species name.
  CHECK_THROWS_AS(
      Network::create({"A", "A"}, {Complex::unit_sum({0}), Complex::unit_sum({1})},
                      {{0, 1, std::nullopt}}),
      ValidationError);
}

TEST_CASE("stoichiometric, incidence and complex maps factor") {
  SUBCASE("chain incidence columns") {
    const Network n = net("A -> B\nB -> C");
    const RationalMatrix ia = n.incidence_matrix();
    CHECK(ia.rows() == 3);
    CHECK(ia.cols() == 2);
    CHECK(ia.at(0, 0) == -1);
    CHECK(ia.at(1, 0) == 1);
    CHECK(ia.at(2, 0) == 0);
    CHECK(ia.at(1, 1) == -1);
    CHECK(ia.at(2, 1) == 1);
  }
  SUBCASE("column sums vanish and Y * Ia = N") {
    for (const char* text :
         {"X1 -> 2 X1 + X2\nX2 -> 2 X2 + X1", "0 -> X\nX -> Y\nY -> Z\nZ -> 0",
          "A <-> B\nB -> C\n2 A + 3/2 C -> B"}) {
      const Network n = net(text);
      const RationalMatrix ia = n.incidence_matrix();
      for (std::size_t j = 0; j < ia.cols(); ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < ia.rows(); ++i) sum += ia.at(i, j);
        CHECK(sum == 0);
      }
      CHECK(n.map_of_complexes() * ia == n.stoichiometric_matrix());
    }
  }
  SUBCASE("zero complex gives a zero column in Y") {
    const Network n = net("0 -> X\nX -> 0");
    const RationalMatrix y = n.map_of_complexes();
    const int zero = n.zero_complex_index();
    for (std::size_t i = 0; i < y.rows(); ++i) CHECK(y.at(i, zero) == 0);
  }
}

TEST_CASE("round trip: serialize then reparse is identical") {
  for (const char* text :
       {"X1 -> 2 X1 + X2\nX2 -> 2 X2 + X1", "0 -> X\nX -> Y\nY -> Z\nZ -> 0",
        "A <-> B\nB -> C\n2 A + 3/2 C -> B\nC -> A"}) {
    const Network a = net(text);
    const Network b = net(serialize_network(a));
    CHECK(a.species() == b.species());
    CHECK(a.complexes() == b.complexes());
    CHECK(a.reactions().size() == b.reactions().size());
    for (std::size_t j = 0; j < a.reactions().size(); ++j) {
      CHECK(a.reactions()[j].reactant == b.reactions()[j].reactant);
      CHECK(a.reactions()[j].product == b.reactions()[j].product);
    }
  }
}

TEST_CASE("union of networks") {
  const Network a = net("A -> B");
  const Network b = net("B -> C");
  SUBCASE("idempotent") {
    const Network u = union_networks(std::vector<Network>{a, a});
    CHECK(u.species_count() == a.species_count());
    CHECK(u.reaction_count() == a.reaction_count());
  }
  SUBCASE("set union identifies species by name") {
    const Network u = union_networks(std::vector<Network>{a, b});
    CHECK(u.species_count() == 3);
    CHECK(u.complex_count() == 3);
    CHECK(u.reaction_count() == 2);
  }
  SUBCASE("commutative up to canonical reordering") {
    const Network u = union_networks(std::vector<Network>{a, b});
    const Network v = union_networks(std::vector<Network>{b, a});
    CHECK(u.reaction_count() == v.reaction_count());
    CHECK(u.complex_count() == v.complex_count());
    // Same reactions as complex pairs, independent of ordering.
    for (std::size_t j = 0; j < u.reaction_count(); ++j) {
      const Complex& y = u.reactant_of(static_cast<int>(j));
      const Complex& yp = u.product_of(static_cast<int>(j));
      bool found = false;
      for (std::size_t k = 0; k < v.reaction_count(); ++k) {
        // Complexes are over different species orderings; compare by name.
        auto by_name = [](const Network& n, const Complex& c) {
          std::map<std::string, Rational> named;
          for (const auto& [s, coeff] : c.coefficients())
            named[n.species_name(s)] = coeff;
          return named;
        };
        if (by_name(u, y) == by_name(v, v.reactant_of(static_cast<int>(k))) &&
            by_name(u, yp) == by_name(v, v.product_of(static_cast<int>(k))))
          found = true;
      }
      CHECK(found);
    }
  }
}

TEST_SUITE_END();
