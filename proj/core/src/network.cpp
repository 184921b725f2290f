#include "crnkit/network.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace crn {

Complex::Complex(std::map<int, Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto it = coefficients_.begin(); it != coefficients_.end();) {
    it->second.canonicalize();  // gmpxx two-argument construction skips this
    if (it->second < 0)
      throw ValidationError("negative coefficient in complex");
    if (it->second == 0)
      it = coefficients_.erase(it);
    else
      ++it;
  }
}

Complex Complex::unit_sum(const std::vector<int>& species) {
  std::map<int, Rational> c;
  for (int s : species) c[s] += 1;
  return Complex(std::move(c));
}

Rational Complex::coefficient(int species) const {
  auto it = coefficients_.find(species);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

Complex Complex::operator+(const Complex& rhs) const {
  std::map<int, Rational> sum = coefficients_;
  for (const auto& [s, c] : rhs.coefficients_) sum[s] += c;
  return Complex(std::move(sum));
}

RationalVector Complex::as_vector(std::size_t species_count) const {
  RationalVector v(species_count);
  for (const auto& [s, c] : coefficients_) v[s] = c;
  return v;
}

Complex Complex::remap(const std::vector<int>& species_map) const {
  std::map<int, Rational> c;
  for (const auto& [s, coeff] : coefficients_) {
    int t = species_map[s];
    if (t >= 0) c[t] += coeff;
  }
  return Complex(std::move(c));
}

Network Network::create(std::vector<std::string> species,
                        std::vector<Complex> complexes,
                        std::vector<Reaction> reactions) {
  Network net;
  net.species_ = std::move(species);
  for (std::size_t i = 0; i < net.species_.size(); ++i) {
    const std::string& name = net.species_[i];
    if (name.empty()) throw ValidationError("empty species name");
    if (!net.species_lookup_.emplace(name, static_cast<int>(i)).second)
      throw ValidationError("duplicate species name: " + name);
  }

  // Deduplicate complexes in first-appearance order.
  std::vector<int> complex_map(complexes.size());
  std::map<Complex, int> seen;
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    auto [it, inserted] =
        seen.emplace(complexes[i], static_cast<int>(net.complexes_.size()));
    if (inserted) net.complexes_.push_back(complexes[i]);
    complex_map[i] = it->second;
  }

  std::set<std::pair<int, int>> reaction_keys;
  for (Reaction r : reactions) {
    if (r.reactant < 0 || r.product < 0 ||
        r.reactant >= static_cast<int>(complex_map.size()) ||
        r.product >= static_cast<int>(complex_map.size()))
      throw ValidationError("reaction references a complex out of range");
    r.reactant = complex_map[r.reactant];
    r.product = complex_map[r.product];
    if (r.reactant == r.product)
      throw ValidationError("loop reaction (reactant equals product)");
    if (!reaction_keys.emplace(r.reactant, r.product).second)
      throw ValidationError("duplicate reaction");
    net.reactions_.push_back(std::move(r));
  }

  std::vector<bool> complex_used(net.complexes_.size(), false);
  for (const Reaction& r : net.reactions_) {
    complex_used[r.reactant] = true;
    complex_used[r.product] = true;
  }
  for (std::size_t i = 0; i < complex_used.size(); ++i)
    if (!complex_used[i]) throw ValidationError("isolated complex");

  std::vector<bool> species_used(net.species_.size(), false);
  for (const Complex& c : net.complexes_)
    for (const auto& [s, coeff] : c.coefficients()) {
      if (s < 0 || s >= static_cast<int>(net.species_.size()))
        throw ValidationError("complex references a species out of range");
      species_used[s] = true;
    }
  for (std::size_t i = 0; i < species_used.size(); ++i)
    if (!species_used[i])
      throw ValidationError("species occurs in no complex: " +
                            net.species_[i]);
  return net;
}

int Network::species_index(const std::string& name) const {
  auto it = species_lookup_.find(name);
  return it == species_lookup_.end() ? -1 : it->second;
}

RationalVector Network::reaction_vector(int reaction) const {
  RationalVector v = product_of(reaction).as_vector(species_.size());
  const Complex& y = reactant_of(reaction);
  for (const auto& [s, c] : y.coefficients()) v[s] -= c;
  return v;
}

int Network::zero_complex_index() const {
  for (std::size_t i = 0; i < complexes_.size(); ++i)
    if (complexes_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

std::vector<int> Network::reactant_complex_indices() const {
  std::set<int> idx;
  for (const Reaction& r : reactions_) idx.insert(r.reactant);
  return {idx.begin(), idx.end()};
}

RationalMatrix Network::stoichiometric_matrix() const {
  RationalMatrix n(species_.size(), reactions_.size());
  for (std::size_t j = 0; j < reactions_.size(); ++j) {
    RationalVector v = reaction_vector(static_cast<int>(j));
    for (std::size_t i = 0; i < species_.size(); ++i) n.at(i, j) = v[i];
  }
  return n;
}

RationalMatrix Network::incidence_matrix() const {
  RationalMatrix ia(complexes_.size(), reactions_.size());
  for (std::size_t j = 0; j < reactions_.size(); ++j) {
    ia.at(reactions_[j].reactant, j) = -1;
    ia.at(reactions_[j].product, j) = 1;
  }
  return ia;
}

RationalMatrix Network::map_of_complexes() const {
  RationalMatrix y(species_.size(), complexes_.size());
  for (std::size_t i = 0; i < complexes_.size(); ++i)
    for (const auto& [s, c] : complexes_[i].coefficients()) y.at(s, i) = c;
  return y;
}

int Network::find_reaction(int reactant_complex, int product_complex) const {
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    if (reactions_[j].reactant == reactant_complex &&
        reactions_[j].product == product_complex)
      return static_cast<int>(j);
  return -1;
}

int Network::find_label(const std::string& label) const {
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    if (reactions_[j].label && *reactions_[j].label == label)
      return static_cast<int>(j);
  return -1;
}

Network union_networks(std::span<const Network> nets) {
  std::vector<std::string> species;
  std::map<std::string, int> species_index;
  std::vector<Complex> complexes;
  std::map<Complex, int> complex_index;
  std::vector<Reaction> reactions;
  std::set<std::pair<int, int>> reaction_keys;

  for (const Network& net : nets) {
    std::vector<int> species_map(net.species_count());
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      const std::string& name = net.species_name(static_cast<int>(s));
      auto [it, inserted] =
          species_index.emplace(name, static_cast<int>(species.size()));
      if (inserted) species.push_back(name);
      species_map[s] = it->second;
    }
    std::vector<int> complex_map(net.complex_count());
    for (std::size_t c = 0; c < net.complex_count(); ++c) {
      Complex mapped = net.complexes()[c].remap(species_map);
      auto [it, inserted] =
          complex_index.emplace(mapped, static_cast<int>(complexes.size()));
      if (inserted) complexes.push_back(std::move(mapped));
      complex_map[c] = it->second;
    }
    for (const Reaction& r : net.reactions()) {
      Reaction mapped{complex_map[r.reactant], complex_map[r.product],
                      r.label};
      if (reaction_keys.emplace(mapped.reactant, mapped.product).second)
        reactions.push_back(std::move(mapped));
    }
  }
  return Network::create(std::move(species), std::move(complexes),
                         std::move(reactions));
}

}  // namespace crn
