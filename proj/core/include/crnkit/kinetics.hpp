#pragma once

#include <Eigen/Dense>
#include <vector>

#include "crnkit/decomposition.hpp"
#include "crnkit/network.hpp"

namespace crn {

/// Power-law kinetics: K_j(x) = rate_j * prod_s x_s^{orders(j,s)} on the
/// positive orthant. Rates are strictly positive; kinetic orders are
/// arbitrary reals and deliberately decoupled from stoichiometry.
struct PowerLawKinetics {
  std::vector<double> rates;                // size r
  std::vector<std::vector<double>> orders;  // r x m

  /// Orders copied from the reactant stoichiometry of each reaction.
  static PowerLawKinetics mass_action(const Network& net,
                                      std::vector<double> rates);

  void validate(const Network& net) const;  // throws std::invalid_argument
};

struct Evaluation {
  Eigen::VectorXd k;                  // rate vector K(x), size r
  Eigen::VectorXd f;                  // species formation rate N K(x), size m
  Eigen::VectorXd complex_formation;  // I_a K(x), size n
};

/// Evaluates rates, SFRF and complex-formation vector at strictly positive x.
Evaluation evaluate(const Network& net, const PowerLawKinetics& kin,
                    const Eigen::VectorXd& x);

struct EquilibriumWitness {
  Eigen::VectorXd x;          // strictly positive state
  double residual_sfrf = 0;   // max-norm of N K(x)
  double residual_cb = 0;     // max-norm of I_a K(x)
  bool is_cb = false;
};

struct SolveOptions {
  int starts = 24;
  unsigned long seed = 0;
  double tol = 1e-9;        // absolute max-norm residual acceptance
  int max_iterations = 200;
  /// Witnesses must satisfy |log x_i| <= log_bound: a residual that only
  /// vanishes while x escapes to the boundary of the positive orthant is not
  /// an equilibrium.
  double log_bound = 12.0;
};

/// Multistart damped Gauss-Newton in log coordinates for I_a K(e^u) = 0.
/// Starts are drawn log-uniform in [e^-3, e^3]^m from a seeded generator;
/// accepted witnesses are deduplicated within tol in log space and returned
/// sorted by log coordinates. An empty list means no convergence, which for
/// non weakly reversible networks is the expected outcome.
std::vector<EquilibriumWitness> find_cb_equilibria(const Network& net,
                                                   const PowerLawKinetics& kin,
                                                   const SolveOptions& opts);

/// Like find_cb_equilibria but for the stacked per-block systems of a
/// decomposition: joint complex balance (every block balanced) or joint
/// equilibrium (every block SFRF zero).
std::vector<EquilibriumWitness> find_joint_block_cb(const Network& net,
                                                    const PowerLawKinetics& kin,
                                                    const Decomposition& d,
                                                    const SolveOptions& opts);
std::vector<EquilibriumWitness> find_joint_block_equilibria(
    const Network& net, const PowerLawKinetics& kin, const Decomposition& d,
    const SolveOptions& opts);

/// CB witnesses of a single subnetwork, in the coordinates of the parent
/// network (the restricted kinetics is the column projection of K).
std::vector<EquilibriumWitness> find_block_cb(const Network& net,
                                              const PowerLawKinetics& kin,
                                              const std::vector<int>& block,
                                              const SolveOptions& opts);

/// Max-norm residuals of one block's complex-formation and SFRF vectors.
struct BlockResiduals {
  double cb = 0;
  double sfrf = 0;
};
BlockResiduals block_residuals(const Network& net, const PowerLawKinetics& kin,
                               const std::vector<int>& block,
                               const Eigen::VectorXd& x);

struct CheckCounts {
  int checked = 0;
  int violations = 0;
};

/// Numerical verification report for the equilibria-set theorems on one
/// decomposition. Directions that the theory only guarantees under a
/// hypothesis carry the matching flag so a violation can be told apart from
/// an inapplicable check.
struct EquilibriaVerification {
  bool incidence_independent = false;
  bool independent = false;
  bool is_C = false;
  bool blocks_weakly_reversible = false;

  int whole_cb_witnesses = 0;
  CheckCounts whole_cb_restricts_to_blocks;  // needs incidence independence
  int joint_cb_witnesses = 0;
  CheckCounts joint_cb_is_whole_cb;  // unconditional inclusion
  int joint_eq_witnesses = 0;
  CheckCounts joint_eq_is_whole_eq;  // unconditional (Feinberg inclusion)

  bool converse_applicable = false;  // weakly reversible C-decomposition with
                                     // a CB witness on every block
  bool converse_found_whole_witness = false;

  /// Violations of directions the theory actually asserts for this input.
  int total_violations() const;
};

EquilibriaVerification verify_equilibria_theorems(const Network& net,
                                                  const PowerLawKinetics& kin,
                                                  const Decomposition& d,
                                                  const SolveOptions& opts);

}  // namespace crn
