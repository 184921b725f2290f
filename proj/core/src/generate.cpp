#include "crnkit/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "crnkit/structure.hpp"

namespace crn {

namespace {

void check_limits(int species, int reactions) {
  if (species < 1 || species > kMaxGeneratedSpecies)
    throw std::invalid_argument("generator: species count out of range");
  if (reactions > kMaxGeneratedReactions)
    throw std::invalid_argument("generator: reaction budget exceeded");
}

std::vector<std::string> default_names(int m) {
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

/// Drops species that ended up in no complex, keeping names stable.
Network build_compacted(int m, std::vector<Complex> complexes,
                        std::vector<Reaction> reactions) {
  std::vector<bool> used(m, false);
  for (const Complex& c : complexes)
    for (const auto& [s, v] : c.coefficients()) used[s] = true;

  std::vector<int> remap(m, -1);
  std::vector<std::string> names;
  const auto all = default_names(m);
  for (int s = 0; s < m; ++s)
    if (used[s]) {
      remap[s] = static_cast<int>(names.size());
      names.push_back(all[s]);
    }
  for (Complex& c : complexes) c = c.remap(remap);
  return Network::create(std::move(names), std::move(complexes),
                         std::move(reactions));
}

Complex random_complex(int m, int max_coeff, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(0, max_coeff);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<int, Rational> c;
    for (int s = 0; s < m; ++s) {
      int v = coeff(rng);
      // Bias towards sparse complexes on wider windows.
      if (v > 0 && (m <= 2 || keep(rng) == 0)) c[s] = v;
    }
    if (!c.empty()) return Complex(std::move(c));
  }
  return Complex::unit_sum({0});
}

/// Distinct complexes over a species window [lo, hi), avoiding `taken`. The
/// coefficient range grows until the window offers enough fresh complexes.
std::vector<Complex> distinct_complexes(int lo, int hi, int count,
                                        std::mt19937_64& rng,
                                        const std::set<Complex>& taken = {}) {
  std::set<Complex> seen = taken;
  std::vector<Complex> out;
  for (int max_coeff = 2; max_coeff <= 16; max_coeff += 2) {
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 2048) {
      Complex c = random_complex(hi - lo, max_coeff, rng);
      std::map<int, Rational> shifted;
      for (const auto& [s, v] : c.coefficients()) shifted[s + lo] = v;
      Complex placed{std::move(shifted)};
      if (seen.insert(placed).second) out.push_back(std::move(placed));
    }
    if (static_cast<int>(out.size()) >= count) return out;
  }
  throw std::runtime_error("generator could not draw distinct complexes");
}

int rank_of_cycle(const std::vector<Complex>& cycle, int m) {
  std::vector<RationalVector> vecs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    RationalVector v = cycle[(i + 1) % cycle.size()].as_vector(m);
    const RationalVector w = cycle[i].as_vector(m);
    for (int s = 0; s < m; ++s) v[s] -= w[s];
    vecs.push_back(std::move(v));
  }
  return static_cast<int>(rank(RationalMatrix::from_columns(vecs)));
}

}  // namespace

Network generate_weakly_reversible(const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  const int m = params.species;
  const int cycles = std::max(1, params.linkage_classes);
  check_limits(m, cycles * params.max_cycle_length);


  std::vector<Complex> complexes;
  std::set<Complex> seen;
  std::vector<Reaction> reactions;
  for (int cycle = 0; cycle < cycles; ++cycle) {
    int lo = 0, hi = m;
    if (!params.share_species && cycles > 1) {
      // Carve a private species window per cycle.
      const int width = std::max(1, m / cycles);
      lo = cycle * width;
      hi = cycle + 1 == cycles ? m : lo + width;
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 256)
        throw std::runtime_error("generator: no usable cycle found");
      // Narrow windows only support short deficiency-zero cycles.
      const int cap = params.deficiency_zero_blocks && hi - lo == 1
                          ? 2
                          : std::max(2, params.max_cycle_length);
      const int len = std::uniform_int_distribution<int>(2, cap)(rng);
      std::vector<Complex> nodes = distinct_complexes(lo, hi, len, rng, seen);
      if (params.deficiency_zero_blocks && rank_of_cycle(nodes, m) != len - 1)
        continue;

      const int base = static_cast<int>(complexes.size());
      for (const Complex& c : nodes) {
        seen.insert(c);
        complexes.push_back(c);
      }
      for (int i = 0; i < len; ++i)
        reactions.push_back({base + i, base + (i + 1) % len, std::nullopt});
      break;
    }
  }
  return build_compacted(m, std::move(complexes), std::move(reactions));
}

SSystemModel generate_random_ssystem(int m, unsigned long seed) {
  if (m < 1 || m > kMaxGeneratedSpecies)
    throw std::invalid_argument("generator: species count out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rate(0.5, 2.0);
  std::uniform_int_distribution<int> order(-2, 2);
  std::uniform_int_distribution<int> pick(0, 3);

  SSystemModel model;
  model.m = m;
  model.dependent.resize(m);
  model.alpha.resize(m);
  model.beta.resize(m);
  model.g.assign(m, std::vector<double>(m, 0.0));
  model.h.assign(m, std::vector<double>(m, 0.0));

  bool any_dependent = false;
  for (int i = 0; i < m; ++i) {
    model.dependent[i] = pick(rng) != 0;  // dependent with probability 3/4
    if (model.dependent[i]) any_dependent = true;
  }
  if (!any_dependent) model.dependent[0] = true;

  for (int i = 0; i < m; ++i) {
    if (!model.dependent[i]) continue;
    model.alpha[i] = rate(rng);
    model.beta[i] = rate(rng);
    for (int j = 0; j < m; ++j) {
      if (pick(rng) == 0) model.g[i][j] = order(rng);
      if (pick(rng) == 0) model.h[i][j] = order(rng);
    }
  }
  return model;
}

Network generate_species_decomposable(const GeneratorParams& params) {
  const SSystemModel model =
      generate_random_ssystem(params.species, params.seed);
  return realize(model, {RealizationKind::Independent, {}}).network;
}

std::pair<Network, Decomposition> generate_c_decomposed(
    const GeneratorParams& params) {
  GeneratorParams base = params;
  base.linkage_classes = std::max(2, params.linkage_classes);
  Network net = generate_weakly_reversible(base);

  // Random coarsening of the linkage class decomposition.
  std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ull);
  const Decomposition linkage = linkage_class_decomposition(net);
  const int k = static_cast<int>(linkage.block_count());
  std::uniform_int_distribution<int> group_count(1, k);
  const int groups = group_count(rng);
  std::vector<std::vector<int>> grouping(groups);
  for (int b = 0; b < k; ++b)
    grouping[std::uniform_int_distribution<int>(0, groups - 1)(rng)].push_back(b);
  grouping.erase(std::remove_if(grouping.begin(), grouping.end(),
                                [](const auto& g) { return g.empty(); }),
                 grouping.end());
  return {std::move(net), coarsen(linkage, grouping)};
}

std::pair<Network, Decomposition> generate_c_star_decomposed(
    const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  const int m = params.species;
  const int petals = std::max(2, params.linkage_classes);
  check_limits(m, petals * 3);

  // Petals through the zero complex: 0 -> A_i -> ... -> 0, with all nonzero
  // complexes distinct across petals. Each petal is one block, giving a
  // C*-decomposition with k0 = number of petals.
  std::vector<Complex> complexes{Complex::zero()};
  std::set<Complex> seen;
  std::vector<Reaction> reactions;
  std::vector<std::vector<int>> blocks;
  std::uniform_int_distribution<int> len_dist(1, 2);
  for (int p = 0; p < petals; ++p) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 128)
        throw std::runtime_error("generator: no usable petal found");
      const int len = len_dist(rng);
      std::vector<Complex> nodes = distinct_complexes(0, m, len, rng, seen);

      std::vector<int> block;
      int prev = 0;  // zero complex
      for (const Complex& c : nodes) {
        seen.insert(c);
        complexes.push_back(c);
        const int idx = static_cast<int>(complexes.size()) - 1;
        block.push_back(static_cast<int>(reactions.size()));
        reactions.push_back({prev, idx, std::nullopt});
        prev = idx;
      }
      block.push_back(static_cast<int>(reactions.size()));
      reactions.push_back({prev, 0, std::nullopt});
      blocks.push_back(std::move(block));
      break;
    }
  }
  Network net = build_compacted(m, std::move(complexes), std::move(reactions));
  Decomposition d = Decomposition::create(std::move(blocks), net.reaction_count());
  return {std::move(net), std::move(d)};
}

}  // namespace crn
