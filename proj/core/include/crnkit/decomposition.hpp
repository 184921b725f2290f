#pragma once

#include <set>
#include <utility>
#include <vector>

#include "crnkit/network.hpp"

namespace crn {

/// A covering of the reaction set: blocks are nonempty sets of reaction
/// indices whose union is the whole set. With covering_flag == false the
/// blocks are additionally pairwise disjoint (a decomposition).
struct Decomposition {
  std::vector<std::vector<int>> blocks;  // each sorted ascending
  bool covering_flag = false;

  /// Validates block contents against a network with `reaction_count`
  /// reactions: nonempty blocks, indices in range, union covers everything,
  /// and disjointness unless overlaps are allowed (which sets covering_flag).
  static Decomposition create(std::vector<std::vector<int>> blocks,
                              std::size_t reaction_count,
                              bool allow_overlap = false);

  std::size_t block_count() const { return blocks.size(); }
};

/// One block per reaction.
Decomposition discrete_decomposition(const Network& net);
/// Blocks grouped by the linkage class of the reaction endpoints.
Decomposition linkage_class_decomposition(const Network& net);

/// Subnetwork induced by a reaction block: the complexes occurring in the
/// block and the species occurring in those complexes, both reindexed
/// densely. The maps give parent indices.
struct Subnetwork {
  Network network;
  std::vector<int> species_map;   // sub species -> parent species
  std::vector<int> complex_map;   // sub complex -> parent complex
  std::vector<int> reaction_map;  // sub reaction -> parent reaction
};
Subnetwork extract_subnetwork(const Network& net, const std::vector<int>& block);

struct BlockStats {
  int n = 0;      // complexes touched by the block
  int l = 0;      // linkage classes of the block subgraph
  int s = 0;      // rank of the block reaction vectors
  int delta = 0;  // n - l - s
};

struct DecompositionReport {
  int k = 0;
  std::vector<BlockStats> per_block;
  bool independent = false;            // s == sum s_i
  bool incidence_independent = false;  // n - l == sum (n_i - l_i)
  bool bi_independent = false;
  bool is_C = false;       // block complex sets pairwise disjoint
  bool is_C_star = false;  // nonzero complex sets pairwise disjoint
  int k0 = 0;              // blocks containing the zero complex
  int delta = 0;
  int delta_sum = 0;              // sum of block deficiencies
  int deficiency_slack_low = 0;   // delta - delta_sum (>= 0 when incidence independent)
  int deficiency_slack_high = 0;  // delta_sum - delta (>= 0 when independent)
};

/// Classifies a decomposition exactly. Throws std::invalid_argument when a
/// covering with overlapping blocks is passed: independence is only defined
/// for partitions.
DecompositionReport classify(const Network& net, const Decomposition& d);

/// Unions blocks according to a partition of the block indices 0..k-1.
Decomposition coarsen(const Decomposition& d,
                      const std::vector<std::vector<int>>& grouping);

/// True iff every block of `fine` is contained in exactly one block of
/// `coarse`.
bool is_refinement(const Decomposition& fine, const Decomposition& coarse);

/// Structure theorem check: evaluates "d is a C-decomposition" and "every
/// block is a union of whole linkage classes" independently and returns true
/// iff the two sides agree.
bool verify_C_structure(const Network& net, const Decomposition& d);

/// Structure theorem check for a C*-decomposition d (throws if d is not
/// one). Verifies that the zero-complex linkage class splits into a
/// C*-decomposition, that the remainder forms a C-decomposition of the rest,
/// and the count identity sum(l_i) - l == k0 - 1 when k0 > 0. Returns the
/// conjunction plus k0.
std::pair<bool, int> verify_Cstar_structure(const Network& net,
                                            const Decomposition& d);

/// Splits reactions into those whose two complexes both lie in the
/// stoichiometric subspace and the rest. Also returns the set of S-complex
/// indices. A reaction with exactly one endpoint in S is mathematically
/// impossible and raises std::logic_error.
std::pair<Decomposition, std::set<int>> s_decomposition(const Network& net);

/// Finest independent decomposition via the kernel coordinate graph of the
/// oriented reaction-vector map: orient away one member of each reversible
/// pair, join oriented reactions sharing a nonzero coordinate in some kernel
/// basis vector, take connected components, and attach each omitted reverse
/// reaction to its partner's block.
Decomposition finest_independent_decomposition(const Network& net);

}  // namespace crn
