#include "crnkit/ssystem.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "crnkit/decomposition.hpp"
#include "crnkit/structure.hpp"

namespace crn {

void SSystemModel::validate() const {
  if (m <= 0) throw std::invalid_argument("S-system needs at least one species");
  auto expect_m = [&](std::size_t got, const char* what) {
    if (got != static_cast<std::size_t>(m))
      throw std::invalid_argument(std::string("S-system: ") + what +
                                  " has wrong length");
  };
  expect_m(dependent.size(), "dependent");
  expect_m(alpha.size(), "alpha");
  expect_m(beta.size(), "beta");
  expect_m(g.size(), "g");
  expect_m(h.size(), "h");
  for (const auto& row : g) expect_m(row.size(), "g row");
  for (const auto& row : h) expect_m(row.size(), "h row");
  if (!names.empty()) expect_m(names.size(), "names");
  for (int i = 0; i < m; ++i) {
    if (!dependent[i]) continue;
    if (alpha[i] < 0 || beta[i] < 0)
      throw std::invalid_argument("S-system: negative rate constant");
    if (alpha[i] == 0 && beta[i] == 0)
      throw std::invalid_argument(
          "S-system: dependent species with both terms dropped");
  }
}

std::vector<std::string> SSystemModel::species_names() const {
  if (!names.empty()) return names;
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("X" + std::to_string(i + 1));
  return out;
}

std::string to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::Independent: return "independent";
    case RealizationKind::Embedded: return "embedded";
    case RealizationKind::Subnetwork: return "subnetwork";
    case RealizationKind::Total: return "total";
  }
  return "?";
}

namespace {

/// Regulators of an arrow: species with a nonzero kinetic order, excluding
/// the species the arrow belongs to (it is the substrate or product of the
/// arrow, not a regulator; its own order still acts through the kinetics).
std::vector<int> regulators(const std::vector<double>& row, int self) {
  std::vector<int> out;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0.0 && static_cast<int>(j) != self)
      out.push_back(static_cast<int>(j));
  return out;
}

struct RealizationBuilder {
  std::vector<Complex> complexes;
  std::map<Complex, int> complex_index;
  std::vector<Reaction> reactions;
  std::map<std::pair<int, int>, int> reaction_index;
  PowerLawKinetics kinetics;

  int intern(const Complex& c) {
    auto [it, inserted] =
        complex_index.emplace(c, static_cast<int>(complexes.size()));
    if (inserted) complexes.push_back(c);
    return it->second;
  }

  /// Adds y -> y' with the given kinetics, merging exact duplicates. A
  /// duplicate whose kinetics disagrees is an inconsistency in the choices.
  int add(const Complex& y, const Complex& yp, double rate,
          std::vector<double> orders) {
    int a = intern(y), b = intern(yp);
    if (a == b)
      throw std::invalid_argument("realization produced a loop reaction");
    auto [it, inserted] =
        reaction_index.emplace(std::make_pair(a, b),
                               static_cast<int>(reactions.size()));
    if (!inserted) {
      int j = it->second;
      if (kinetics.rates[j] != rate || kinetics.orders[j] != orders)
        throw std::invalid_argument(
            "merged duplicate reaction with inconsistent kinetics");
      return j;
    }
    reactions.push_back({a, b, std::nullopt});
    kinetics.rates.push_back(rate);
    kinetics.orders.push_back(std::move(orders));
    return it->second;
  }
};

Complex sum_complex(const std::vector<int>& regulators, int extra = -1) {
  std::vector<int> parts = regulators;
  if (extra >= 0) parts.push_back(extra);
  return Complex::unit_sum(parts);
}

Realization realize_full(const SSystemModel& model,
                         const RealizationSpec& spec) {
  const bool subnetwork = spec.kind == RealizationKind::Subnetwork;
  if (subnetwork && spec.choices.size() != static_cast<std::size_t>(model.m))
    throw std::invalid_argument("subnetwork realization needs one choice per species");

  RealizationBuilder b;
  std::vector<std::vector<int>> pairs(model.m);
  std::set<int> used;
  bool disjoint = true;

  auto record = [&](int species, int reaction) {
    pairs[species].push_back(reaction);
    if (!used.insert(reaction).second) disjoint = false;
  };

  for (int i = 0; i < model.m; ++i) {
    if (!model.dependent[i]) continue;
    int rho = -1, pi = -1;
    std::vector<int> in_reg, out_reg;
    if (subnetwork) {
      const SpeciesChoice& c = spec.choices[i];
      if (c.rho == i || c.pi == i)
        throw std::invalid_argument(
            "invalid choice: X_rho/X_pi must differ from the species");
      if (c.rho >= model.m || c.pi >= model.m)
        throw std::invalid_argument("species choice out of range");
      rho = c.rho;
      pi = c.pi;
      in_reg = c.inflow_regulators;
      out_reg = c.outflow_regulators;
    } else {
      in_reg = regulators(model.g[i], i);
      out_reg = regulators(model.h[i], i);
    }

    if (model.alpha[i] < 0 || model.beta[i] < 0)
      throw std::invalid_argument("negative rate constant");
    if (model.alpha[i] > 0)
      record(i, b.add(sum_complex(in_reg, rho), sum_complex(in_reg, i),
                      model.alpha[i], model.g[i]));
    if (model.beta[i] > 0)
      record(i, b.add(sum_complex(out_reg, i), sum_complex(out_reg, pi),
                      model.beta[i], model.h[i]));
  }

  // Independent variables enter with a canceling inflow/outflow pair, which
  // keeps dX/dt = 0 while making the species part of the network.
  const std::vector<double> flat(model.m, 0.0);
  for (int j = 0; j < model.m; ++j) {
    if (model.dependent[j]) continue;
    Complex unit = Complex::unit_sum({j});
    record(j, b.add(Complex::zero(), unit, 1.0, flat));
    record(j, b.add(unit, Complex::zero(), 1.0, flat));
  }

  Realization real{Network::create(model.species_names(),
                                   std::move(b.complexes),
                                   std::move(b.reactions)),
                   std::move(b.kinetics), std::move(pairs), disjoint};
  return real;
}

Realization realize_embedded(const SSystemModel& model) {
  RealizationBuilder b;
  std::vector<int> model_to_net(model.m, -1);
  std::vector<std::string> names;
  const auto full_names = model.species_names();
  for (int i = 0; i < model.m; ++i)
    if (model.dependent[i]) {
      model_to_net[i] = static_cast<int>(names.size());
      names.push_back(full_names[i]);
    }
  const std::size_t dep_count = names.size();
  if (dep_count == 0)
    throw std::invalid_argument("embedded realization needs a dependent species");

  auto restrict_row = [&](const std::vector<double>& row) {
    std::vector<double> out(dep_count, 0.0);
    for (int j = 0; j < model.m; ++j)
      if (model_to_net[j] >= 0) out[model_to_net[j]] = row[j];
    return out;
  };
  auto project = [&](const std::vector<int>& regulators, int extra) {
    std::vector<int> parts;
    for (int r : regulators)
      if (model_to_net[r] >= 0) parts.push_back(model_to_net[r]);
    if (extra >= 0) parts.push_back(model_to_net[extra]);
    return Complex::unit_sum(parts);
  };

  std::vector<std::vector<int>> pairs(model.m);
  std::set<int> used;
  bool disjoint = true;
  for (int i = 0; i < model.m; ++i) {
    if (!model.dependent[i]) continue;
    const std::vector<int> in_reg = regulators(model.g[i], i);
    const std::vector<int> out_reg = regulators(model.h[i], i);
    if (model.alpha[i] > 0) {
      int j = b.add(project(in_reg, -1), project(in_reg, i), model.alpha[i],
                    restrict_row(model.g[i]));
      pairs[i].push_back(j);
      if (!used.insert(j).second) disjoint = false;
    }
    if (model.beta[i] > 0) {
      int j = b.add(project(out_reg, i), project(out_reg, -1), model.beta[i],
                    restrict_row(model.h[i]));
      pairs[i].push_back(j);
      if (!used.insert(j).second) disjoint = false;
    }
  }
  return {Network::create(std::move(names), std::move(b.complexes),
                          std::move(b.reactions)),
          std::move(b.kinetics), std::move(pairs), disjoint};
}

}  // namespace

Realization realize(const SSystemModel& model, const RealizationSpec& spec) {
  model.validate();
  switch (spec.kind) {
    case RealizationKind::Independent:
    case RealizationKind::Total:
    case RealizationKind::Subnetwork:
      return realize_full(model, spec);
    case RealizationKind::Embedded:
      return realize_embedded(model);
  }
  throw std::invalid_argument("unknown realization kind");
}

std::vector<OdeTerms> assemble_ode(const Network& net,
                                   const PowerLawKinetics& kin) {
  kin.validate(net);
  std::vector<OdeTerms> ode(net.species_count());
  const RationalMatrix n = net.stoichiometric_matrix();
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
      const double coeff = n.at(s, j).get_d() * kin.rates[j];
      if (coeff == 0.0) continue;
      double& slot = ode[s][kin.orders[j]];
      slot += coeff;
      if (slot == 0.0) ode[s].erase(kin.orders[j]);
    }
  }
  return ode;
}

std::vector<OdeTerms> model_ode(const SSystemModel& model,
                                const std::vector<int>& network_to_model) {
  std::vector<int> model_to_net(model.m, -1);
  for (std::size_t s = 0; s < network_to_model.size(); ++s)
    model_to_net[network_to_model[s]] = static_cast<int>(s);

  auto restrict_row = [&](const std::vector<double>& row) {
    std::vector<double> out(network_to_model.size(), 0.0);
    for (int j = 0; j < model.m; ++j)
      if (model_to_net[j] >= 0) out[model_to_net[j]] = row[j];
    return out;
  };

  std::vector<OdeTerms> ode(network_to_model.size());
  for (std::size_t s = 0; s < network_to_model.size(); ++s) {
    const int i = network_to_model[s];
    if (!model.dependent[i]) continue;
    auto add = [&](const std::vector<double>& orders, double coeff) {
      if (coeff == 0.0) return;
      double& slot = ode[s][orders];
      slot += coeff;
      if (slot == 0.0) ode[s].erase(orders);
    };
    add(restrict_row(model.g[i]), model.alpha[i]);
    add(restrict_row(model.h[i]), -model.beta[i]);
  }
  return ode;
}

bool dynamically_equivalent(const SSystemModel& model,
                            const Realization& real) {
  std::vector<int> net_to_model;
  const auto names = model.species_names();
  for (std::size_t s = 0; s < real.network.species_count(); ++s) {
    auto it = std::find(names.begin(), names.end(),
                        real.network.species_name(static_cast<int>(s)));
    if (it == names.end()) return false;
    net_to_model.push_back(static_cast<int>(it - names.begin()));
  }
  return assemble_ode(real.network, real.kinetics) ==
         model_ode(model, net_to_model);
}

namespace {

struct PairCandidate {
  int reaction = -1;
  int other = -1;  // rho for inflows, pi for outflows; -1 = zero complex
  std::vector<int> regulators;
};

/// y - e_k (k < 0 meaning nothing subtracted) must have all coefficients in
/// {0, 1}; on success the support is the regulator set.
bool unit_residue(const Complex& y, int k, std::vector<int>& regulators) {
  regulators.clear();
  for (const auto& [s, c] : y.coefficients()) {
    Rational residue = c - (s == k ? 1 : 0);
    if (residue == 0) continue;
    if (residue != 1) return false;
    regulators.push_back(s);
  }
  return true;
}

/// The reaction vector must be e_i - e_k for some k != i (k = -1 for zero).
bool matches_direction(const RationalVector& diff, int i, int& k) {
  k = -1;
  for (std::size_t s = 0; s < diff.size(); ++s) {
    if (diff[s] == 0) continue;
    if (static_cast<int>(s) == i) {
      if (diff[s] != 1) return false;
    } else {
      if (diff[s] != -1 || k != -1) return false;
      k = static_cast<int>(s);
    }
  }
  return diff[i] == 1;
}

struct CoverCandidates {
  std::vector<PairCandidate> in, out;
};

std::vector<CoverCandidates> find_candidates(const Network& net) {
  const int m = static_cast<int>(net.species_count());
  std::vector<CoverCandidates> cand(m);
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    const RationalVector diff = net.reaction_vector(static_cast<int>(j));
    for (int i = 0; i < m; ++i) {
      int k;
      std::vector<int> regs;
      if (matches_direction(diff, i, k)) {
        if (unit_residue(net.reactant_of(static_cast<int>(j)), k, regs))
          cand[i].in.push_back({static_cast<int>(j), k, regs});
      } else {
        RationalVector neg(diff.size());
        for (std::size_t s = 0; s < diff.size(); ++s) neg[s] = -diff[s];
        if (matches_direction(neg, i, k) &&
            unit_residue(net.product_of(static_cast<int>(j)), k, regs))
          cand[i].out.push_back({static_cast<int>(j), k, regs});
      }
    }
  }
  return cand;
}

bool covers_all(const Network& net,
                const std::vector<std::pair<int, int>>& selection) {
  std::vector<bool> hit(net.reaction_count(), false);
  for (const auto& [a, b] : selection) hit[a] = hit[b] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
}

struct CoverSearch {
  const std::vector<CoverCandidates>& cand;
  std::vector<int> multiplicity;
  int uncovered;

  CoverSearch(const Network& net, const std::vector<CoverCandidates>& cand)
      : cand(cand),
        multiplicity(net.reaction_count(), 0),
        uncovered(static_cast<int>(net.reaction_count())) {}

  void take(int j) {
    if (multiplicity[j]++ == 0) --uncovered;
  }
  void drop(int j) {
    if (--multiplicity[j] == 0) ++uncovered;
  }

  bool run(std::size_t i, std::vector<std::pair<int, int>>& selection) {
    if (i == cand.size()) return uncovered == 0;
    // Each remaining species covers at most two new reactions.
    if (uncovered > 2 * static_cast<int>(cand.size() - i)) return false;
    for (const PairCandidate& in : cand[i].in)
      for (const PairCandidate& out : cand[i].out) {
        take(in.reaction);
        take(out.reaction);
        selection.emplace_back(in.reaction, out.reaction);
        if (run(i + 1, selection)) return true;
        selection.pop_back();
        drop(out.reaction);
        drop(in.reaction);
      }
    return false;
  }
};

}  // namespace

CoverabilityReport coverability(const Network& net, bool exhaustive) {
  CoverabilityReport rep;
  rep.delta = analyze(net).delta;

  const auto cand = find_candidates(net);
  const int m = static_cast<int>(net.species_count());
  for (int i = 0; i < m; ++i)
    if (cand[i].in.empty() || cand[i].out.empty()) return rep;

  // Greedy: first candidate pair per species, in canonical order.
  std::vector<std::pair<int, int>> selection;
  for (int i = 0; i < m; ++i)
    selection.emplace_back(cand[i].in.front().reaction,
                           cand[i].out.front().reaction);
  if (!covers_all(net, selection)) {
    if (!exhaustive) return rep;
    selection.clear();
    CoverSearch search(net, cand);
    if (!search.run(0, selection)) return rep;
  }

  rep.species_coverable = true;
  std::set<int> used;
  rep.is_decomposition = true;
  for (int i = 0; i < m; ++i) {
    const auto [in_j, out_j] = selection[i];
    const PairCandidate* in = nullptr;
    const PairCandidate* out = nullptr;
    for (const auto& c : cand[i].in)
      if (c.reaction == in_j) in = &c;
    for (const auto& c : cand[i].out)
      if (c.reaction == out_j) out = &c;

    SpeciesCoverEntry e;
    e.in_reaction = in_j;
    e.out_reaction = out_j;
    e.rho = in->other;
    e.pi = out->other;
    e.inflow_regulators = in->regulators;
    e.outflow_regulators = out->regulators;
    const Reaction& rin = net.reactions()[in_j];
    const Reaction& rout = net.reactions()[out_j];
    e.reversible = rin.reactant == rout.product && rin.product == rout.reactant;
    e.independent = e.rho < 0 && e.pi < 0 && e.inflow_regulators.empty() &&
                    e.outflow_regulators.empty();
    rep.m_rev += e.reversible ? 1 : 0;
    rep.m_dep += e.independent ? 0 : 1;
    if (!used.insert(in_j).second || !used.insert(out_j).second)
      rep.is_decomposition = false;
    rep.covering.push_back(std::move(e));
  }

  rep.delta_bound = m - rep.m_rev;
  rep.bound_tight = rep.delta == rep.delta_bound;
  if (rep.is_decomposition) {
    std::vector<std::vector<int>> blocks;
    for (const auto& e : rep.covering)
      blocks.push_back({e.in_reaction, e.out_reaction});
    const DecompositionReport cls =
        classify(net, Decomposition::create(std::move(blocks),
                                            net.reaction_count()));
    rep.species_decomposable = cls.independent;
    rep.bi_independent = cls.bi_independent;
  }
  return rep;
}

bool verify_species_decomposition_theorem(const Network& net, bool exhaustive) {
  const CoverabilityReport rep = coverability(net, exhaustive);
  if (!rep.species_decomposable)
    throw std::invalid_argument("network is not species decomposable");

  std::set<std::vector<int>> species_blocks;
  for (const auto& e : rep.covering) {
    std::vector<int> block{e.in_reaction, e.out_reaction};
    std::sort(block.begin(), block.end());
    species_blocks.insert(std::move(block));
  }
  const Decomposition finest = finest_independent_decomposition(net);
  std::set<std::vector<int>> finest_blocks(finest.blocks.begin(),
                                           finest.blocks.end());
  return species_blocks == finest_blocks;
}

}  // namespace crn
