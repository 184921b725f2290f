#pragma once

#include <utility>

#include "crnkit/decomposition.hpp"
#include "crnkit/network.hpp"
#include "crnkit/ssystem.hpp"

namespace crn {

/// Desk-scale guard rails for the fixture generators.
inline constexpr int kMaxGeneratedSpecies = 20;
inline constexpr int kMaxGeneratedReactions = 60;

struct GeneratorParams {
  int species = 4;
  int linkage_classes = 2;  // cycles or petals, depending on the kind
  int max_cycle_length = 4;
  unsigned long seed = 0;
  /// Deficiency-zero cycles only (needed when mass-action CB equilibria
  /// must exist for every rate choice).
  bool deficiency_zero_blocks = false;
  /// Let distinct cycles draw from a common species pool so subnetworks may
  /// share species.
  bool share_species = true;
};

/// Union of directed cycles on distinct complexes; weakly reversible by
/// construction, one linkage class per cycle.
Network generate_weakly_reversible(const GeneratorParams& params);

/// Random S-system with the requested species count: every species dependent
/// with probability 3/4, sparse g/h rows, rates in [1/2, 2].
SSystemModel generate_random_ssystem(int m, unsigned long seed);

/// Independent realization of a random S-system; species decomposable by
/// construction.
Network generate_species_decomposable(const GeneratorParams& params);

/// Network with several linkage classes plus a random coarsening of the
/// linkage class decomposition, i.e. a C-decomposition.
std::pair<Network, Decomposition> generate_c_decomposed(
    const GeneratorParams& params);

/// Network whose zero-complex linkage class is split across several blocks:
/// a C*-decomposition with k0 > 1 petals through the zero complex.
std::pair<Network, Decomposition> generate_c_star_decomposed(
    const GeneratorParams& params);

}  // namespace crn
