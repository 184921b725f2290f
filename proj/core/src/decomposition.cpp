#include "crnkit/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "crnkit/structure.hpp"

namespace crn {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::set<int> block_complexes(const Network& net, const std::vector<int>& block) {
  std::set<int> cs;
  for (int j : block) {
    cs.insert(net.reactions()[j].reactant);
    cs.insert(net.reactions()[j].product);
  }
  return cs;
}

BlockStats block_stats(const Network& net, const std::vector<int>& block) {
  BlockStats st;
  const std::set<int> cs = block_complexes(net, block);
  st.n = static_cast<int>(cs.size());

  std::map<int, int> local;
  for (int c : cs) local.emplace(c, static_cast<int>(local.size()));
  UnionFind uf(local.size());
  std::vector<RationalVector> vecs;
  for (int j : block) {
    uf.unite(local[net.reactions()[j].reactant], local[net.reactions()[j].product]);
    vecs.push_back(net.reaction_vector(j));
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < local.size(); ++i)
    roots.insert(uf.find(static_cast<int>(i)));
  st.l = static_cast<int>(roots.size());
  st.s = static_cast<int>(rank(RationalMatrix::from_columns(vecs)));
  st.delta = st.n - st.l - st.s;
  return st;
}

}  // namespace

Decomposition Decomposition::create(std::vector<std::vector<int>> blocks,
                                    std::size_t reaction_count,
                                    bool allow_overlap) {
  std::vector<int> multiplicity(reaction_count, 0);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty decomposition block");
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (int j : block) {
      if (j < 0 || j >= static_cast<int>(reaction_count))
        throw std::invalid_argument("reaction index out of range in block");
      ++multiplicity[j];
    }
  }
  bool overlap = false;
  for (std::size_t j = 0; j < reaction_count; ++j) {
    if (multiplicity[j] == 0)
      throw std::invalid_argument("blocks do not cover reaction " +
                                  std::to_string(j));
    if (multiplicity[j] > 1) overlap = true;
  }
  if (overlap && !allow_overlap)
    throw std::invalid_argument("blocks overlap: covering, not a decomposition");
  return Decomposition{std::move(blocks), overlap};
}

Decomposition discrete_decomposition(const Network& net) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    blocks.push_back({static_cast<int>(j)});
  return Decomposition::create(std::move(blocks), net.reaction_count());
}

Decomposition linkage_class_decomposition(const Network& net) {
  const auto classes = linkage_classes(net);
  std::vector<int> complex_class(net.complex_count());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int c : classes[i]) complex_class[c] = static_cast<int>(i);
  std::vector<std::vector<int>> blocks(classes.size());
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    blocks[complex_class[net.reactions()[j].reactant]].push_back(
        static_cast<int>(j));
  return Decomposition::create(std::move(blocks), net.reaction_count());
}

Subnetwork extract_subnetwork(const Network& net, const std::vector<int>& block) {
  if (block.empty()) throw std::invalid_argument("empty reaction block");

  std::vector<int> complex_map, species_map, reaction_map;
  std::map<int, int> complex_local;
  for (int j : block) {
    if (j < 0 || j >= static_cast<int>(net.reaction_count()))
      throw std::invalid_argument("reaction index out of range");
    for (int c : {net.reactions()[j].reactant, net.reactions()[j].product})
      if (complex_local.emplace(c, static_cast<int>(complex_local.size())).second)
        complex_map.push_back(c);
  }
  std::map<int, int> species_local;
  for (int c : complex_map)
    for (const auto& [s, coeff] : net.complexes()[c].coefficients())
      if (species_local.emplace(s, static_cast<int>(species_local.size())).second)
        species_map.push_back(s);

  std::vector<int> parent_to_local(net.species_count(), -1);
  for (std::size_t i = 0; i < species_map.size(); ++i)
    parent_to_local[species_map[i]] = static_cast<int>(i);

  std::vector<std::string> species;
  for (int s : species_map) species.push_back(net.species_name(s));
  std::vector<Complex> complexes;
  for (int c : complex_map)
    complexes.push_back(net.complexes()[c].remap(parent_to_local));
  std::vector<Reaction> reactions;
  for (int j : block) {
    const Reaction& r = net.reactions()[j];
    reactions.push_back(
        {complex_local[r.reactant], complex_local[r.product], r.label});
    reaction_map.push_back(j);
  }
  return {Network::create(std::move(species), std::move(complexes),
                          std::move(reactions)),
          std::move(species_map), std::move(complex_map),
          std::move(reaction_map)};
}

DecompositionReport classify(const Network& net, const Decomposition& d) {
  if (d.covering_flag)
    throw std::invalid_argument(
        "classification requires a partition, got an overlapping covering");

  DecompositionReport rep;
  rep.k = static_cast<int>(d.blocks.size());

  int sum_s = 0, sum_nl = 0;
  for (const auto& block : d.blocks) {
    BlockStats st = block_stats(net, block);
    sum_s += st.s;
    sum_nl += st.n - st.l;
    rep.delta_sum += st.delta;
    rep.per_block.push_back(st);
  }

  const StructuralReport whole = analyze(net);
  rep.delta = whole.delta;
  rep.independent = whole.s == sum_s;
  rep.incidence_independent = (whole.n - whole.l) == sum_nl;
  rep.bi_independent = rep.independent && rep.incidence_independent;
  rep.deficiency_slack_low = rep.delta - rep.delta_sum;
  rep.deficiency_slack_high = rep.delta_sum - rep.delta;

  std::vector<std::set<int>> complex_sets;
  for (const auto& block : d.blocks)
    complex_sets.push_back(block_complexes(net, block));

  const int zero = net.zero_complex_index();
  rep.is_C = true;
  rep.is_C_star = true;
  std::map<int, int> complex_owner_count;
  for (const auto& cs : complex_sets) {
    if (zero >= 0 && cs.count(zero)) ++rep.k0;
    for (int c : cs) ++complex_owner_count[c];
  }
  for (const auto& [c, count] : complex_owner_count) {
    if (count <= 1) continue;
    rep.is_C = false;
    if (c != zero) rep.is_C_star = false;
  }
  return rep;
}

Decomposition coarsen(const Decomposition& d,
                      const std::vector<std::vector<int>>& grouping) {
  std::vector<bool> used(d.blocks.size(), false);
  std::vector<std::vector<int>> blocks;
  for (const auto& group : grouping) {
    if (group.empty()) throw std::invalid_argument("empty group in coarsening");
    std::vector<int> merged;
    for (int b : group) {
      if (b < 0 || b >= static_cast<int>(d.blocks.size()))
        throw std::invalid_argument("block index out of range in coarsening");
      if (used[b])
        throw std::invalid_argument("block repeated in coarsening grouping");
      used[b] = true;
      merged.insert(merged.end(), d.blocks[b].begin(), d.blocks[b].end());
    }
    std::sort(merged.begin(), merged.end());
    blocks.push_back(std::move(merged));
  }
  for (bool u : used)
    if (!u) throw std::invalid_argument("coarsening grouping misses a block");

  Decomposition out;
  out.blocks = std::move(blocks);
  out.covering_flag = d.covering_flag;
  return out;
}

bool is_refinement(const Decomposition& fine, const Decomposition& coarse) {
  std::map<int, int> owner;
  for (std::size_t b = 0; b < coarse.blocks.size(); ++b)
    for (int j : coarse.blocks[b]) owner[j] = static_cast<int>(b);
  for (const auto& block : fine.blocks) {
    auto it = owner.find(block.front());
    if (it == owner.end()) return false;
    for (int j : block) {
      auto jt = owner.find(j);
      if (jt == owner.end() || jt->second != it->second) return false;
    }
  }
  return true;
}

bool verify_C_structure(const Network& net, const Decomposition& d) {
  // Side one: the complex sets are pairwise disjoint.
  std::vector<std::set<int>> complex_sets;
  for (const auto& block : d.blocks)
    complex_sets.push_back(block_complexes(net, block));
  bool c_decomposition = !d.covering_flag;
  for (std::size_t a = 0; a < complex_sets.size() && c_decomposition; ++a)
    for (std::size_t b = a + 1; b < complex_sets.size() && c_decomposition; ++b)
      for (int c : complex_sets[a])
        if (complex_sets[b].count(c)) {
          c_decomposition = false;
          break;
        }

  // Side two: the linkage class decomposition refines d.
  bool refined = is_refinement(linkage_class_decomposition(net), d);
  return c_decomposition == refined;
}

std::pair<bool, int> verify_Cstar_structure(const Network& net,
                                            const Decomposition& d) {
  DecompositionReport rep = classify(net, d);
  if (!rep.is_C_star)
    throw std::invalid_argument("not a C*-decomposition");

  const int zero = net.zero_complex_index();
  if (zero < 0) return {verify_C_structure(net, d), 0};

  // Linkage class of the zero complex, in complexes and in reactions.
  const auto classes = linkage_classes(net);
  std::vector<int> complex_class(net.complex_count());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int c : classes[i]) complex_class[c] = static_cast<int>(i);
  const int zero_class = complex_class[zero];

  bool ok = true;

  // (i) Restricted to L0, the zero-containing pieces of the blocks must
  // partition the nonzero complexes of L0, each piece being the linkage
  // class of the zero complex inside its block.
  std::set<int> l0_nonzero;
  for (std::size_t c = 0; c < net.complex_count(); ++c)
    if (complex_class[c] == zero_class && static_cast<int>(c) != zero)
      l0_nonzero.insert(static_cast<int>(c));

  std::set<int> covered;  // nonzero complexes of L0 reached via some L0i
  int k0 = 0;
  std::vector<std::set<int>> l0i_reactions(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const std::set<int> cs = block_complexes(net, d.blocks[b]);
    if (!cs.count(zero)) continue;
    ++k0;
    // Component of the zero complex inside block b.
    std::map<int, int> local;
    for (int c : cs) local.emplace(c, static_cast<int>(local.size()));
    UnionFind uf(local.size());
    for (int j : d.blocks[b])
      uf.unite(local[net.reactions()[j].reactant],
               local[net.reactions()[j].product]);
    const int zero_root = uf.find(local[zero]);
    for (int c : cs) {
      if (uf.find(local[c]) != zero_root || c == zero) continue;
      if (!l0_nonzero.count(c) || covered.count(c)) ok = false;
      covered.insert(c);
    }
    for (int j : d.blocks[b]) {
      const Reaction& r = net.reactions()[j];
      if (uf.find(local[r.reactant]) == zero_root)
        l0i_reactions[b].insert(j);
    }
  }
  if (covered != l0_nonzero) ok = false;

  // Every reaction of L0 must land in some L0i, and the L0i reaction sets
  // must be pairwise disjoint (they are, since blocks are).
  std::set<int> l0_reactions;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    if (complex_class[net.reactions()[j].reactant] == zero_class)
      l0_reactions.insert(static_cast<int>(j));
  std::set<int> l0i_union;
  for (const auto& rs : l0i_reactions) l0i_union.insert(rs.begin(), rs.end());
  if (l0i_union != l0_reactions) ok = false;

  // (ii) The leftovers N_i \ L0i must form a C-decomposition of N \ L0.
  std::vector<std::set<int>> rest_complex_sets;
  std::set<int> rest_reactions;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    std::vector<int> rest;
    for (int j : d.blocks[b])
      if (!l0i_reactions[b].count(j)) rest.push_back(j);
    if (rest.empty()) continue;
    rest_complex_sets.push_back(block_complexes(net, rest));
    rest_reactions.insert(rest.begin(), rest.end());
  }
  std::set<int> expected_rest;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    if (!l0_reactions.count(static_cast<int>(j)))
      expected_rest.insert(static_cast<int>(j));
  if (rest_reactions != expected_rest) ok = false;
  for (std::size_t a = 0; a < rest_complex_sets.size(); ++a)
    for (std::size_t b = a + 1; b < rest_complex_sets.size(); ++b)
      for (int c : rest_complex_sets[a])
        if (rest_complex_sets[b].count(c)) ok = false;

  // (iii) Count identity from the incidence-independence corollary.
  if (k0 > 0) {
    int sum_l = 0;
    for (const auto& st : rep.per_block) sum_l += st.l;
    const int l = static_cast<int>(classes.size());
    if (sum_l - l != k0 - 1) ok = false;
  }
  return {ok, k0};
}

std::pair<Decomposition, std::set<int>> s_decomposition(const Network& net) {
  std::vector<RationalVector> s_basis;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    s_basis.push_back(net.reaction_vector(static_cast<int>(j)));

  std::set<int> s_complexes;
  for (std::size_t c = 0; c < net.complex_count(); ++c)
    if (member(net.complexes()[c].as_vector(net.species_count()), s_basis))
      s_complexes.insert(static_cast<int>(c));

  std::vector<int> s_reactions, rest;
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    const Reaction& r = net.reactions()[j];
    const bool ra = s_complexes.count(r.reactant) > 0;
    const bool pa = s_complexes.count(r.product) > 0;
    if (ra != pa)
      throw std::logic_error(
          "reaction with exactly one endpoint in S: impossible");
    (ra ? s_reactions : rest).push_back(static_cast<int>(j));
  }

  std::vector<std::vector<int>> blocks;
  if (!s_reactions.empty()) blocks.push_back(std::move(s_reactions));
  if (!rest.empty()) blocks.push_back(std::move(rest));
  return {Decomposition::create(std::move(blocks), net.reaction_count()),
          std::move(s_complexes)};
}

Decomposition finest_independent_decomposition(const Network& net) {
  const int r = static_cast<int>(net.reaction_count());

  // Orientation: drop the higher-indexed member of each reversible pair.
  std::vector<int> partner(r, -1);
  for (int j = 0; j < r; ++j) {
    const Reaction& rx = net.reactions()[j];
    int back = net.find_reaction(rx.product, rx.reactant);
    if (back >= 0) partner[j] = back;
  }
  std::vector<int> oriented;
  std::vector<bool> kept(r, false);
  for (int j = 0; j < r; ++j) {
    if (partner[j] >= 0 && partner[j] < j) continue;
    oriented.push_back(j);
    kept[j] = true;
  }

  std::vector<RationalVector> cols;
  for (int j : oriented) cols.push_back(net.reaction_vector(j));
  const auto kernel = kernel_basis(RationalMatrix::from_columns(cols));

  UnionFind uf(oriented.size());
  for (const auto& v : kernel) {
    int first = -1;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      if (v[idx] == 0) continue;
      if (first < 0)
        first = static_cast<int>(idx);
      else
        uf.unite(first, static_cast<int>(idx));
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (std::size_t idx = 0; idx < oriented.size(); ++idx) {
    int root = uf.find(static_cast<int>(idx));
    by_root[root].push_back(oriented[idx]);
    int j = oriented[idx];
    if (partner[j] >= 0 && !kept[partner[j]])
      by_root[root].push_back(partner[j]);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [root, block] : by_root) {
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Decomposition::create(std::move(blocks), net.reaction_count());
}

}  // namespace crn
