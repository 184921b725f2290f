#pragma once

#include <string>
#include <vector>

#include "crnkit/network.hpp"

namespace crn {

/// Classification of a network by how the image of the map of complexes
/// relates to the reactant subspace R and the stoichiometric subspace S.
enum class NetworkClass { SRS, RSS, TRS, NRN };
enum class RssSubclass { None, RES, RSP };

std::string to_string(NetworkClass c);
std::string to_string(RssSubclass c);

/// Connected components of the undirected reaction graph, as sets of complex
/// indices ordered by smallest member.
std::vector<std::vector<int>> linkage_classes(const Network& net);

/// Strongly connected components of the directed reaction graph plus the
/// terminal ones (no edge leaving the class).
struct StrongClasses {
  std::vector<std::vector<int>> strong;    // each sorted, ordered by min
  std::vector<int> terminal;               // indices into `strong`
};
StrongClasses strong_and_terminal_classes(const Network& net);

struct StructuralReport {
  int n = 0;        // complexes
  int n_r = 0;      // distinct reactant complexes
  int l = 0;        // linkage classes
  int sl = 0;       // strong linkage classes
  int t = 0;        // terminal strong linkage classes
  int s = 0;        // rank of the stoichiometric subspace
  int q = 0;        // reactant rank
  int c = 0;        // dim of the image of the map of complexes
  int delta = 0;    // n - l - s
  int delta_p = 0;  // n_r - q
  bool weakly_reversible = false;  // sl == l
  bool t_minimal = false;          // t == l
  std::vector<std::vector<int>> linkage_classes;
  std::vector<std::vector<int>> strong_classes;
  std::vector<std::vector<int>> terminal_strong_classes;
  std::vector<int> per_linkage_deficiency;  // n_i - 1 - s_i
  NetworkClass network_class = NetworkClass::NRN;
  RssSubclass rss_subclass = RssSubclass::None;
};

/// Full structural analysis of a single network.
StructuralReport analyze(const Network& net);

}  // namespace crn
