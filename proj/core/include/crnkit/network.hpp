#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crnkit/matrix.hpp"
#include "crnkit/rational.hpp"

namespace crn {

/// Raised when a network violates a structural invariant (loop reaction,
/// duplicate reaction, isolated complex, unused species, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex: formal nonnegative rational combination of species. Stored
/// sparse with nonzero coefficients only; the empty map is the zero complex.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::map<int, Rational> coefficients);

  static Complex zero() { return Complex(); }
  /// Sum of unit species, e.g. {2, 5} -> X2 + X5.
  static Complex unit_sum(const std::vector<int>& species);

  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(int species) const;
  const std::map<int, Rational>& coefficients() const { return coefficients_; }

  Complex operator+(const Complex& rhs) const;
  bool operator==(const Complex& rhs) const = default;
  bool operator<(const Complex& rhs) const {
    return coefficients_ < rhs.coefficients_;
  }

  /// Dense species-space vector of length m.
  RationalVector as_vector(std::size_t species_count) const;
  /// Coefficients remapped through old-index -> new-index. Species mapped to
  /// a negative index are dropped (used for embedded projections).
  Complex remap(const std::vector<int>& species_map) const;

 private:
  std::map<int, Rational> coefficients_;
};

struct Reaction {
  int reactant = -1;  // complex index
  int product = -1;   // complex index
  std::optional<std::string> label;
};

/// Immutable chemical reaction network: species, deduplicated complexes and
/// reactions. Construction validates every structural invariant; after that
/// the object is safe to share across threads.
class Network {
 public:
  /// Builds and validates. Complexes are deduplicated in first-appearance
  /// order and reaction endpoints remapped accordingly.
  static Network create(std::vector<std::string> species,
                        std::vector<Complex> complexes,
                        std::vector<Reaction> reactions);

  std::size_t species_count() const { return species_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  const std::string& species_name(int s) const { return species_[s]; }
  int species_index(const std::string& name) const;  // -1 when absent

  const Complex& reactant_of(int reaction) const {
    return complexes_[reactions_[reaction].reactant];
  }
  const Complex& product_of(int reaction) const {
    return complexes_[reactions_[reaction].product];
  }

  /// Product-minus-reactant complex vector in species space.
  RationalVector reaction_vector(int reaction) const;

  /// Index of the zero complex, or -1 when the network has none.
  int zero_complex_index() const;

  /// Distinct reactant complex indices, ascending.
  std::vector<int> reactant_complex_indices() const;

  /// m x r matrix N, column j = reaction vector of reaction j.
  RationalMatrix stoichiometric_matrix() const;
  /// n x r incidence matrix I_a: column j has -1 at the reactant complex and
  /// +1 at the product complex.
  RationalMatrix incidence_matrix() const;
  /// m x n map of complexes Y, column i = complex i in species space.
  RationalMatrix map_of_complexes() const;

  /// Reaction index with the given endpoints, or -1.
  int find_reaction(int reactant_complex, int product_complex) const;
  /// Reaction index whose label matches, or -1.
  int find_label(const std::string& label) const;

 private:
  Network() = default;

  std::vector<std::string> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  std::map<std::string, int> species_lookup_;
};

/// Set-union of networks. Species with equal names are identified, complexes
/// and reactions are unioned in first-appearance order, and the result is
/// validated.
Network union_networks(std::span<const Network> nets);

}  // namespace crn
