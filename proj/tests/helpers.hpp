#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "chroma/combinat.hpp"
#include "chroma/polyring.hpp"

namespace chroma::testing {

inline Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

inline Polynomial one(int n) { return Polynomial::constant(n, 1); }

/// c * v^exps
inline Polynomial mono(std::vector<int> exps, long c = 1) {
  return Polynomial::term(Monomial::from_exponents(std::move(exps)), BigInt(c));
}

/// Sum over stable k-subsets of g, computed without the library.
inline Polynomial stable_set_sum(const Graph& g, int k) {
  const int n = g.size();
  Polynomial out(n);
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    if (std::popcount(s) != k || !g.is_independent(s)) continue;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = (s >> i) & 1u;
    out += mono(exps);
  }
  if (k == 0) out = one(n);
  return out;
}

inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabel(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  const int n = a.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u)
      for (int v = u + 1; v < n && same; ++v)
        same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace chroma::testing
