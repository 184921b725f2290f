#pragma once

#include <map>
#include <string>
#include <vector>

#include "crnkit/kinetics.hpp"
#include "crnkit/network.hpp"

namespace crn {

/// S-system dX_i/dt = alpha_i prod X_j^{g_ij} - beta_i prod X_j^{h_ij} for
/// dependent species; independent species are held constant. alpha/beta/g/h
/// entries for independent species are ignored by the realizations.
struct SSystemModel {
  int m = 0;
  std::vector<bool> dependent;
  std::vector<double> alpha, beta;
  std::vector<std::vector<double>> g, h;   // m x m kinetic orders
  std::vector<std::string> names;          // defaults to X1..Xm

  void validate() const;  // throws std::invalid_argument
  std::vector<std::string> species_names() const;
};

enum class RealizationKind { Independent, Embedded, Subnetwork, Total };
std::string to_string(RealizationKind k);

/// Per-species stoichiometric choices for the subnetwork realization:
/// inflow X_rho + R -> X + R, outflow X + P -> X_pi + P. rho/pi use -1 for
/// the zero complex; regulator sets hold species indices.
struct SpeciesChoice {
  int rho = -1;
  int pi = -1;
  std::vector<int> inflow_regulators;
  std::vector<int> outflow_regulators;
};

struct RealizationSpec {
  RealizationKind kind = RealizationKind::Independent;
  std::vector<SpeciesChoice> choices;  // used by the subnetwork kind
};

struct Realization {
  Network network;
  PowerLawKinetics kinetics;
  /// Reaction indices of each model species' inflow/outflow pair, in model
  /// species order. Empty for species without reactions in this kind (e.g.
  /// independent species in the embedded realization).
  std::vector<std::vector<int>> species_pairs;
  /// False when distinct species pairs share a reaction, i.e. the species
  /// covering is a proper covering rather than a decomposition.
  bool pairs_disjoint = true;
};

/// Builds the requested realization of the model together with its matched
/// power-law kinetics. Throws std::invalid_argument on ill-formed choices
/// (X_rho equal to the species itself, negative rate constants, inconsistent
/// kinetics on a merged duplicate reaction).
Realization realize(const SSystemModel& model, const RealizationSpec& spec);

/// One species' ODE as a canonical sum of power-law terms: kinetic-order row
/// -> signed coefficient, zero coefficients dropped.
using OdeTerms = std::map<std::vector<double>, double>;

/// ODE assembled from a network with power-law kinetics, one entry per
/// species of the network.
std::vector<OdeTerms> assemble_ode(const Network& net,
                                   const PowerLawKinetics& kin);

/// The model's S-system ODE projected onto the given network species (each
/// entry maps a network species to its model index). Kinetic-order rows are
/// restricted to those species; absent factors are treated as held at 1.
std::vector<OdeTerms> model_ode(const SSystemModel& model,
                                const std::vector<int>& network_to_model);

/// Term-by-term dynamic equivalence of a realization against its model.
bool dynamically_equivalent(const SSystemModel& model, const Realization& real);

/// One species' entry in a discovered species covering.
struct SpeciesCoverEntry {
  int in_reaction = -1;
  int out_reaction = -1;
  int rho = -1;  // -1 encodes the zero complex
  int pi = -1;
  std::vector<int> inflow_regulators;   // R_i
  std::vector<int> outflow_regulators;  // P_i
  bool reversible = false;    // the two reactions are mutual reverses
  bool independent = false;   // rho = pi = 0 and both regulator sets empty
};

struct CoverabilityReport {
  bool species_coverable = false;
  bool is_decomposition = false;      // the covering's pairs are disjoint
  bool species_decomposable = false;  // decomposition and independent
  std::vector<SpeciesCoverEntry> covering;  // per species when coverable
  int m_rev = 0;
  int m_dep = 0;
  int delta = 0;
  int delta_bound = 0;  // m - m_rev
  bool bound_tight = false;
  bool bi_independent = false;  // of the species decomposition
};

/// Searches for a species covering. Candidates are read off the reaction
/// shapes present in the network; by default the first per-species match in
/// canonical order wins, with `exhaustive` enabling a backtracking search
/// over all candidate pairs.
CoverabilityReport coverability(const Network& net, bool exhaustive = false);

/// For a species decomposable network: true iff the finest independent
/// decomposition equals the species decomposition as a partition of the
/// reactions. Throws std::invalid_argument if the network is not species
/// decomposable.
bool verify_species_decomposition_theorem(const Network& net,
                                          bool exhaustive = false);

}  // namespace crn
