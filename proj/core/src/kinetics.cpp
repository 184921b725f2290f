#include "crnkit/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "crnkit/structure.hpp"

namespace crn {

namespace {

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).get_d();
  return out;
}

Eigen::MatrixXd orders_matrix(const PowerLawKinetics& kin) {
  const std::size_t r = kin.orders.size();
  const std::size_t m = r ? kin.orders.front().size() : 0;
  Eigen::MatrixXd o(r, m);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t s = 0; s < m; ++s) o(j, s) = kin.orders[j][s];
  return o;
}

Eigen::VectorXd rates_at_log(const PowerLawKinetics& kin,
                             const Eigen::MatrixXd& orders,
                             const Eigen::VectorXd& u) {
  Eigen::VectorXd k = (orders * u).array().exp();
  for (Eigen::Index j = 0; j < k.size(); ++j) k[j] *= kin.rates[j];
  return k;
}

/// Zeroes the columns of `a` outside `block`.
Eigen::MatrixXd restrict_columns(const Eigen::MatrixXd& a,
                                 const std::vector<int>& block) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (int j : block) out.col(j) = a.col(j);
  return out;
}

/// Multistart damped Gauss-Newton for A K(e^u) = 0 in log coordinates.
std::vector<EquilibriumWitness> solve_power_law(
    const Network& net, const PowerLawKinetics& kin, const Eigen::MatrixXd& a,
    const SolveOptions& opts) {
  kin.validate(net);
  const int m = static_cast<int>(net.species_count());
  const Eigen::MatrixXd orders = orders_matrix(kin);
  const Eigen::MatrixXd n_mat = to_double(net.stoichiometric_matrix());
  const Eigen::MatrixXd ia_mat = to_double(net.incidence_matrix());

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> box(-3.0, 3.0);

  std::vector<Eigen::VectorXd> accepted;
  for (int start = 0; start < opts.starts; ++start) {
    Eigen::VectorXd u(m);
    for (int i = 0; i < m; ++i) u[i] = box(rng);

    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      if (u.lpNorm<Eigen::Infinity>() > 2 * opts.log_bound) break;
      const Eigen::VectorXd k = rates_at_log(kin, orders, u);
      const Eigen::VectorXd g = a * k;
      if (g.lpNorm<Eigen::Infinity>() < opts.tol) {
        converged = true;
        break;
      }
      const Eigen::MatrixXd jac = a * k.asDiagonal() * orders;
      Eigen::VectorXd step =
          jac.completeOrthogonalDecomposition().solve(-g);
      if (!step.allFinite() || step.norm() < 1e-15) break;

      // Armijo backtracking on the squared residual.
      const double phi0 = 0.5 * g.squaredNorm();
      const double slope = g.dot(jac * step);
      double alpha = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Eigen::VectorXd trial = u + alpha * step;
        const Eigen::VectorXd gt = a * rates_at_log(kin, orders, trial);
        if (gt.allFinite() &&
            0.5 * gt.squaredNorm() <= phi0 + 1e-4 * alpha * slope) {
          u = trial;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    if (!converged) {
      const Eigen::VectorXd k = rates_at_log(kin, orders, u);
      converged = (a * k).lpNorm<Eigen::Infinity>() < opts.tol;
    }
    if (converged && u.lpNorm<Eigen::Infinity>() <= opts.log_bound)
      accepted.push_back(u);
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
              return std::lexicographical_compare(
                  x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
            });
  std::vector<EquilibriumWitness> out;
  for (const Eigen::VectorXd& u : accepted) {
    if (!out.empty()) {
      Eigen::VectorXd prev = out.back().x.array().log();
      if ((prev - u).lpNorm<Eigen::Infinity>() < opts.tol) continue;
    }
    EquilibriumWitness w;
    w.x = u.array().exp();
    const Eigen::VectorXd k = rates_at_log(kin, orders, u);
    w.residual_sfrf = (n_mat * k).lpNorm<Eigen::Infinity>();
    w.residual_cb = (ia_mat * k).lpNorm<Eigen::Infinity>();
    w.is_cb = w.residual_cb < opts.tol;
    out.push_back(std::move(w));
  }
  return out;
}

Eigen::MatrixXd stacked_blocks(const Eigen::MatrixXd& a,
                               const Decomposition& d) {
  Eigen::MatrixXd out(a.rows() * d.blocks.size(), a.cols());
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    out.middleRows(b * a.rows(), a.rows()) = restrict_columns(a, d.blocks[b]);
  return out;
}

}  // namespace

PowerLawKinetics PowerLawKinetics::mass_action(const Network& net,
                                               std::vector<double> rates) {
  PowerLawKinetics kin;
  kin.rates = std::move(rates);
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    std::vector<double> row(net.species_count(), 0.0);
    for (const auto& [s, c] : net.reactant_of(static_cast<int>(j)).coefficients())
      row[s] = c.get_d();
    kin.orders.push_back(std::move(row));
  }
  kin.validate(net);
  return kin;
}

void PowerLawKinetics::validate(const Network& net) const {
  if (rates.size() != net.reaction_count())
    throw std::invalid_argument("kinetics: rate count != reaction count");
  if (orders.size() != net.reaction_count())
    throw std::invalid_argument("kinetics: order row count != reaction count");
  for (const auto& row : orders)
    if (row.size() != net.species_count())
      throw std::invalid_argument("kinetics: order row length != species count");
  for (double r : rates)
    if (!(r > 0.0))
      throw std::invalid_argument("kinetics: rate constants must be positive");
}

Evaluation evaluate(const Network& net, const PowerLawKinetics& kin,
                    const Eigen::VectorXd& x) {
  kin.validate(net);
  if (x.size() != static_cast<Eigen::Index>(net.species_count()))
    throw std::invalid_argument("state dimension mismatch");
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0))
      throw std::invalid_argument("state must be strictly positive");

  Evaluation ev;
  const Eigen::MatrixXd orders = orders_matrix(kin);
  ev.k = rates_at_log(kin, orders, x.array().log().matrix());
  ev.f = to_double(net.stoichiometric_matrix()) * ev.k;
  ev.complex_formation = to_double(net.incidence_matrix()) * ev.k;
  return ev;
}

std::vector<EquilibriumWitness> find_cb_equilibria(const Network& net,
                                                   const PowerLawKinetics& kin,
                                                   const SolveOptions& opts) {
  return solve_power_law(net, kin, to_double(net.incidence_matrix()), opts);
}

std::vector<EquilibriumWitness> find_joint_block_cb(const Network& net,
                                                    const PowerLawKinetics& kin,
                                                    const Decomposition& d,
                                                    const SolveOptions& opts) {
  return solve_power_law(
      net, kin, stacked_blocks(to_double(net.incidence_matrix()), d), opts);
}

std::vector<EquilibriumWitness> find_block_cb(const Network& net,
                                              const PowerLawKinetics& kin,
                                              const std::vector<int>& block,
                                              const SolveOptions& opts) {
  return solve_power_law(
      net, kin, restrict_columns(to_double(net.incidence_matrix()), block),
      opts);
}

std::vector<EquilibriumWitness> find_joint_block_equilibria(
    const Network& net, const PowerLawKinetics& kin, const Decomposition& d,
    const SolveOptions& opts) {
  return solve_power_law(
      net, kin, stacked_blocks(to_double(net.stoichiometric_matrix()), d),
      opts);
}

BlockResiduals block_residuals(const Network& net, const PowerLawKinetics& kin,
                               const std::vector<int>& block,
                               const Eigen::VectorXd& x) {
  const Evaluation ev = evaluate(net, kin, x);
  Eigen::VectorXd cb = Eigen::VectorXd::Zero(net.complex_count());
  Eigen::VectorXd f = Eigen::VectorXd::Zero(net.species_count());
  const Eigen::MatrixXd n_mat = to_double(net.stoichiometric_matrix());
  const Eigen::MatrixXd ia_mat = to_double(net.incidence_matrix());
  for (int j : block) {
    cb += ev.k[j] * ia_mat.col(j);
    f += ev.k[j] * n_mat.col(j);
  }
  return {cb.lpNorm<Eigen::Infinity>(), f.lpNorm<Eigen::Infinity>()};
}

int EquilibriaVerification::total_violations() const {
  int v = 0;
  if (incidence_independent) v += whole_cb_restricts_to_blocks.violations;
  v += joint_cb_is_whole_cb.violations;
  v += joint_eq_is_whole_eq.violations;
  if (converse_applicable && !converse_found_whole_witness) ++v;
  return v;
}

EquilibriaVerification verify_equilibria_theorems(const Network& net,
                                                  const PowerLawKinetics& kin,
                                                  const Decomposition& d,
                                                  const SolveOptions& opts) {
  EquilibriaVerification rep;
  const DecompositionReport cls = classify(net, d);
  rep.incidence_independent = cls.incidence_independent;
  rep.independent = cls.independent;
  rep.is_C = cls.is_C;

  rep.blocks_weakly_reversible = true;
  for (const auto& block : d.blocks) {
    const Subnetwork sub = extract_subnetwork(net, block);
    if (!analyze(sub.network).weakly_reversible)
      rep.blocks_weakly_reversible = false;
  }

  // Whole-network CB witnesses restrict to every block.
  const auto whole = find_cb_equilibria(net, kin, opts);
  rep.whole_cb_witnesses = static_cast<int>(whole.size());
  for (const auto& w : whole) {
    for (const auto& block : d.blocks) {
      ++rep.whole_cb_restricts_to_blocks.checked;
      if (block_residuals(net, kin, block, w.x).cb > opts.tol)
        ++rep.whole_cb_restricts_to_blocks.violations;
    }
  }

  // Joint per-block CB witnesses are whole-network CB equilibria.
  const auto joint_cb = find_joint_block_cb(net, kin, d, opts);
  rep.joint_cb_witnesses = static_cast<int>(joint_cb.size());
  const double whole_tol = opts.tol * static_cast<double>(d.blocks.size());
  for (const auto& w : joint_cb) {
    ++rep.joint_cb_is_whole_cb.checked;
    const Evaluation ev = evaluate(net, kin, w.x);
    if (ev.complex_formation.lpNorm<Eigen::Infinity>() > whole_tol)
      ++rep.joint_cb_is_whole_cb.violations;
  }

  // Joint per-block equilibria are whole-network equilibria.
  const auto joint_eq = find_joint_block_equilibria(net, kin, d, opts);
  rep.joint_eq_witnesses = static_cast<int>(joint_eq.size());
  for (const auto& w : joint_eq) {
    ++rep.joint_eq_is_whole_eq.checked;
    const Evaluation ev = evaluate(net, kin, w.x);
    if (ev.f.lpNorm<Eigen::Infinity>() > whole_tol)
      ++rep.joint_eq_is_whole_eq.violations;
  }

  // Converse for weakly reversible C-decompositions: per-block witnesses
  // imply a whole-network CB witness.
  if (rep.is_C && rep.blocks_weakly_reversible) {
    bool all_blocks_nonempty = true;
    for (const auto& block : d.blocks)
      if (find_block_cb(net, kin, block, opts).empty())
        all_blocks_nonempty = false;
    rep.converse_applicable = all_blocks_nonempty;
    if (rep.converse_applicable) {
      const int joint_passing =
          rep.joint_cb_is_whole_cb.checked - rep.joint_cb_is_whole_cb.violations;
      rep.converse_found_whole_witness = !whole.empty() || joint_passing > 0;
    }
  }
  return rep;
}

}  // namespace crn
