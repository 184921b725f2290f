#pragma once

#include <random>
#include <set>
#include <vector>

#include "crnkit/matrix.hpp"
#include "crnkit/network.hpp"
#include "crnkit/parser.hpp"

namespace crn::testing {

/// Independent rank oracle: largest k with a nonvanishing k x k minor,
/// by brute-force enumeration. Only for small matrices.
inline Rational minor_determinant(const RationalMatrix& m,
                                  const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Rational det = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Rational cofactor = minor_determinant(m, sub_rows, sub_cols);
    if (j % 2 == 1) cofactor = -cofactor;
    det += m.at(rows[0], cols[j]) * cofactor;
  }
  return det;
}

inline void enumerate_subsets(std::size_t n, std::size_t k,
                              std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline std::size_t oracle_rank(const RationalMatrix& m) {
  const std::size_t max_k = std::min(m.rows(), m.cols());
  for (std::size_t k = max_k; k >= 1; --k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    enumerate_subsets(m.rows(), k, row_sets);
    enumerate_subsets(m.cols(), k, col_sets);
    for (const auto& rows : row_sets)
      for (const auto& cols : col_sets)
        if (minor_determinant(m, rows, cols) != 0) return k;
  }
  return 0;
}

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> sparse(0, 2);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (sparse(rng) != 0) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        m.at(i, j) = q;
      }
  return m;
}

/// Independent strong-component oracle for small digraphs: mutual
/// reachability by transitive closure, terminal classes by edge scan.
struct OracleScc {
  std::vector<std::set<int>> classes;
  std::vector<std::set<int>> terminal;
};

inline OracleScc oracle_scc(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (auto [a, b] : edges) reach[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  OracleScc out;
  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cls[i] != -1) continue;
    std::set<int> scc;
    for (int j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        scc.insert(j);
        cls[j] = static_cast<int>(out.classes.size());
      }
    out.classes.push_back(std::move(scc));
  }
  for (const auto& scc : out.classes) {
    bool term = true;
    for (auto [a, b] : edges)
      if (scc.count(a) && !scc.count(b)) term = false;
    if (term) out.terminal.push_back(scc);
  }
  return out;
}

inline Network net(std::string_view text) { return parse_network(text); }

}  // namespace crn::testing
