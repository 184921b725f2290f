#include "crnkit/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace crn {

std::string to_string(NetworkClass c) {
  switch (c) {
    case NetworkClass::SRS: return "SRS";
    case NetworkClass::RSS: return "RSS";
    case NetworkClass::TRS: return "TRS";
    case NetworkClass::NRN: return "NRN";
  }
  return "?";
}

std::string to_string(RssSubclass c) {
  switch (c) {
    case RssSubclass::None: return "";
    case RssSubclass::RES: return "RES";
    case RssSubclass::RSP: return "RSP";
  }
  return "?";
}

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

std::vector<std::vector<int>> groups_by_min(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<int>> by_root(n);
  for (std::size_t i = 0; i < n; ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& g : by_root)
    if (!g.empty()) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<int>> linkage_classes(const Network& net) {
  UnionFind uf(net.complex_count());
  for (const Reaction& r : net.reactions()) uf.unite(r.reactant, r.product);
  return groups_by_min(uf, net.complex_count());
}

StrongClasses strong_and_terminal_classes(const Network& net) {
  const int n = static_cast<int>(net.complex_count());
  std::vector<std::vector<int>> succ(n);
  for (const Reaction& r : net.reactions()) succ[r.reactant].push_back(r.product);

  // Tarjan, iterative to be safe on long chains.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;
  std::vector<std::vector<int>> comps;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < succ[f.v].size()) {
        int w = succ[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> scc;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            scc.push_back(w);
          } while (w != v);
          std::sort(scc.begin(), scc.end());
          comps.push_back(std::move(scc));
          ++comp_count;
        }
      }
    }
  }

  // Reorder components by smallest member for deterministic reports.
  std::vector<int> order(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return comps[a].front() < comps[b].front();
  });
  std::vector<int> new_id(comps.size());
  StrongClasses result;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    new_id[order[rank]] = static_cast<int>(rank);
    result.strong.push_back(comps[order[rank]]);
  }
  for (int v = 0; v < n; ++v) comp[v] = new_id[comp[v]];

  std::vector<bool> has_out_edge(result.strong.size(), false);
  for (const Reaction& r : net.reactions())
    if (comp[r.reactant] != comp[r.product]) has_out_edge[comp[r.reactant]] = true;
  for (std::size_t i = 0; i < result.strong.size(); ++i)
    if (!has_out_edge[i]) result.terminal.push_back(static_cast<int>(i));
  return result;
}

StructuralReport analyze(const Network& net) {
  StructuralReport rep;
  rep.n = static_cast<int>(net.complex_count());
  rep.linkage_classes = linkage_classes(net);
  rep.l = static_cast<int>(rep.linkage_classes.size());

  StrongClasses sc = strong_and_terminal_classes(net);
  rep.strong_classes = sc.strong;
  for (int t : sc.terminal) rep.terminal_strong_classes.push_back(sc.strong[t]);
  rep.sl = static_cast<int>(sc.strong.size());
  rep.t = static_cast<int>(sc.terminal.size());
  rep.weakly_reversible = rep.sl == rep.l;
  rep.t_minimal = rep.t == rep.l;

  const RationalMatrix stoich = net.stoichiometric_matrix();
  rep.s = static_cast<int>(rank(stoich));
  rep.delta = rep.n - rep.l - rep.s;

  const std::vector<int> reactants = net.reactant_complex_indices();
  rep.n_r = static_cast<int>(reactants.size());
  std::vector<RationalVector> reactant_vecs;
  for (int c : reactants)
    reactant_vecs.push_back(net.complexes()[c].as_vector(net.species_count()));
  rep.q = reactant_vecs.empty()
              ? 0
              : static_cast<int>(rank(RationalMatrix::from_columns(reactant_vecs)));
  rep.delta_p = rep.n_r - rep.q;

  // Per linkage class: delta_i = n_i - 1 - s_i.
  std::vector<int> complex_class(net.complex_count());
  for (std::size_t i = 0; i < rep.linkage_classes.size(); ++i)
    for (int c : rep.linkage_classes[i]) complex_class[c] = static_cast<int>(i);
  for (std::size_t i = 0; i < rep.linkage_classes.size(); ++i) {
    std::vector<RationalVector> vecs;
    for (std::size_t j = 0; j < net.reaction_count(); ++j)
      if (complex_class[net.reactions()[j].reactant] == static_cast<int>(i))
        vecs.push_back(net.reaction_vector(static_cast<int>(j)));
    int s_i = vecs.empty()
                  ? 0
                  : static_cast<int>(rank(RationalMatrix::from_columns(vecs)));
    rep.per_linkage_deficiency.push_back(
        static_cast<int>(rep.linkage_classes[i].size()) - 1 - s_i);
  }

  rep.c = static_cast<int>(rank(net.map_of_complexes()));

  // Classes after the R/S intersection taxonomy; tested in precedence order.
  if (rep.c == rep.s) {
    rep.network_class = NetworkClass::SRS;
  } else if (rep.c == rep.q) {
    rep.network_class = NetworkClass::RSS;
    // RES when every complex lies in S, RSP otherwise.
    std::vector<RationalVector> s_basis;
    for (std::size_t j = 0; j < net.reaction_count(); ++j)
      s_basis.push_back(net.reaction_vector(static_cast<int>(j)));
    bool all_in_s = true;
    for (const Complex& cx : net.complexes())
      if (!member(cx.as_vector(net.species_count()), s_basis)) {
        all_in_s = false;
        break;
      }
    rep.rss_subclass = all_in_s ? RssSubclass::RES : RssSubclass::RSP;
  } else {
    std::vector<RationalVector> r_and_s;
    for (int c : reactants)
      r_and_s.push_back(net.complexes()[c].as_vector(net.species_count()));
    for (std::size_t j = 0; j < net.reaction_count(); ++j)
      r_and_s.push_back(net.reaction_vector(static_cast<int>(j)));
    int dim_sum = static_cast<int>(rank(RationalMatrix::from_columns(r_and_s)));
    if (rep.c == rep.q + rep.s && dim_sum == rep.q + rep.s)
      rep.network_class = NetworkClass::TRS;
    else
      rep.network_class = NetworkClass::NRN;
  }
  return rep;
}

}  // namespace crn
