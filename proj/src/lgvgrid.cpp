#include "chroma/lgvgrid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chroma/determinant.hpp"
#include "chroma/errors.hpp"

namespace chroma {

GridSpec build_grid(const UnitIntervalOrder& u, int k, const Partition& lambda) {
  if (k < 0) throw BadParameter("build_grid: k must be nonnegative");
  if (lambda.length() > k)
    throw BadShape("partition " + lambda.str() + " has more than k = " + std::to_string(k) + " parts");
  GridSpec g;
  g.uio = u;
  g.k = k;
  for (int i = 0; i < k; ++i) g.lambda.push_back(lambda[i]);
  g.columns = std::max(k + lambda[0], 1);
  for (int i = 1; i <= k; ++i) {
    g.sources.push_back({k + 1 - i, 1});
    g.destinations.push_back({k + 1 - i + g.lambda[static_cast<std::size_t>(i - 1)], u.size() + 1});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Paths

Monomial GridPath::weight(int variable_count) const {
  Monomial m(variable_count);
  for (int r : picked) m.set_exponent(r - 1, m.exponent(r - 1) + 1);
  return m;
}

bool GridPath::contains(GridVertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

GridPath make_path(const GridSpec& g, GridVertex a, const std::vector<int>& picked_rows) {
  if (!g.contains(a)) throw BadParameter("path start lies outside the grid");
  GridPath p;
  GridVertex cur = a;
  p.vertices.push_back(cur);
  for (int r : picked_rows) {
    if (r < cur.row || r > g.n()) throw BadParameter("picked rows do not form a chain along the grid");
    while (cur.row < r) {
      ++cur.row;
      p.vertices.push_back(cur);
    }
    cur = {cur.col + 1, g.uio.next(r - 1)};
    if (!g.contains(cur)) throw BadParameter("path leaves the grid window");
    p.vertices.push_back(cur);
    p.picked.push_back(r);
  }
  while (cur.row < g.last_row()) {
    ++cur.row;
    p.vertices.push_back(cur);
  }
  return p;
}

GridPath path_from_vertices(const GridSpec& g, std::vector<GridVertex> vertices) {
  if (vertices.empty()) throw BadParameter("empty path");
  GridPath p;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.contains(vertices[i])) throw BadParameter("path vertex outside the grid");
    if (i == 0) continue;
    const GridVertex s = vertices[i - 1];
    const GridVertex t = vertices[i];
    if (s.row > g.n()) throw BadParameter("path continues past the last row");
    if (t.col == s.col && t.row == s.row + 1) continue;
    if (t.col == s.col + 1 && t.row == g.uio.next(s.row - 1)) {
      p.picked.push_back(s.row);
      continue;
    }
    throw BadParameter("consecutive path vertices are not joined by a grid edge");
  }
  p.vertices = std::move(vertices);
  return p;
}

Polynomial path_sum(const GridSpec& g, GridVertex a, GridVertex b) {
  const int n = g.n();
  Polynomial zero(n);
  if (!g.contains(a) || !g.contains(b) || b.col < a.col || b.row < a.row) return zero;
  // f[(c,r)] = weighted paths from a to (c,r); rows are processed in order,
  // which is a topological order since every edge increases the row.
  std::map<GridVertex, Polynomial> f;
  f.emplace(a, Polynomial::constant(n, 1));
  for (int r = a.row; r <= b.row; ++r)
    for (int c = a.col; c <= b.col; ++c) {
      auto it = f.find({c, r});
      if (it == f.end() || r > n) continue;
      const Polynomial here = it->second;
      auto [down, ins1] = f.try_emplace({c, r + 1}, n);
      down->second += here;
      if (c + 1 <= b.col) {
        auto [diag, ins2] = f.try_emplace({c + 1, g.uio.next(r - 1)}, n);
        diag->second += here * Polynomial::variable(n, r - 1);
      }
    }
  auto it = f.find(b);
  return it == f.end() ? zero : it->second;
}

namespace {

void paths_dfs(const GridSpec& g, GridVertex cur, GridVertex b, GridPath& partial, std::vector<GridPath>& out) {
  if (cur == b) {
    out.push_back(partial);
    return;
  }
  if (cur.row > g.n() || cur.row >= b.row) return;
  // Diagonal first so that paths come out in lexicographic order of picks.
  if (cur.col < b.col) {
    const GridVertex next{cur.col + 1, g.uio.next(cur.row - 1)};
    if (next.row <= b.row) {
      partial.vertices.push_back(next);
      partial.picked.push_back(cur.row);
      paths_dfs(g, next, b, partial, out);
      partial.picked.pop_back();
      partial.vertices.pop_back();
    }
  }
  const GridVertex down{cur.col, cur.row + 1};
  partial.vertices.push_back(down);
  paths_dfs(g, down, b, partial, out);
  partial.vertices.pop_back();
}

}  // namespace

std::vector<GridPath> enumerate_paths(const GridSpec& g, GridVertex a, GridVertex b) {
  std::vector<GridPath> out;
  if (!g.contains(a) || !g.contains(b) || b.col < a.col || b.row < a.row) return out;
  GridPath partial;
  partial.vertices.push_back(a);
  paths_dfs(g, a, b, partial, out);
  return out;
}

// ---------------------------------------------------------------------------
// Multipaths

int Multipath::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j) inversions += sigma[i] > sigma[j];
  return inversions % 2 == 0 ? 1 : -1;
}

int Multipath::multiplier() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] == 0) return static_cast<int>(i) + 1;
  return 0;
}

bool Multipath::non_intersecting() const {
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      for (const auto& v : paths[i].vertices)
        if (paths[j].contains(v)) return false;
  return true;
}

Polynomial Multipath::weight(int variable_count) const {
  Monomial m(variable_count);
  for (const auto& p : paths) m = m * p.weight(variable_count);
  return Polynomial::term(m, 1);
}

std::vector<Monomial> Multipath::weight_vector(int variable_count) const {
  std::vector<Monomial> out;
  for (const auto& p : paths) out.push_back(p.weight(variable_count));
  return out;
}

Multipath make_multipath(const GridSpec& g, std::vector<GridPath> paths) {
  if (static_cast<int>(paths.size()) != g.k) throw BadParameter("multipath needs exactly k paths");
  Multipath mp;
  std::vector<bool> used(paths.size(), false);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].start() != g.sources[i]) throw BadParameter("path " + std::to_string(i + 1) + " does not start at a_" + std::to_string(i + 1));
    auto it = std::find(g.destinations.begin(), g.destinations.end(), paths[i].end());
    if (it == g.destinations.end()) throw BadParameter("path " + std::to_string(i + 1) + " does not end in B");
    const auto j = static_cast<std::size_t>(it - g.destinations.begin());
    if (used[j]) throw BadParameter("two paths end at the same destination");
    used[j] = true;
    mp.sigma.push_back(static_cast<int>(j));
  }
  mp.paths = std::move(paths);
  return mp;
}

nlohmann::json to_json(const Multipath& mp) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : mp.paths) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : p.vertices) verts.push_back({v.col, v.row});
    paths.push_back(verts);
  }
  nlohmann::json sigma = nlohmann::json::array();
  for (int s : mp.sigma) sigma.push_back(s + 1);
  return {{"paths", paths}, {"sigma", sigma}};
}

namespace {

struct MultipathSearch {
  const GridSpec& g;
  const MultipathOptions& opts;
  std::vector<std::vector<std::vector<GridPath>>> table;  // [i][j] paths a_i -> b_j
  std::vector<std::vector<std::vector<std::uint64_t>>> masks;
  std::vector<Multipath> out;
  std::uint64_t nodes = 0;
  std::size_t words = 0;

  MultipathSearch(const GridSpec& grid, const MultipathOptions& o) : g(grid), opts(o) {
    const std::size_t cells = static_cast<std::size_t>(g.columns + 1) * static_cast<std::size_t>(g.last_row() + 1);
    words = (cells + 63) / 64;
    const auto k = static_cast<std::size_t>(g.k);
    table.assign(k, std::vector<std::vector<GridPath>>(k));
    masks.assign(k, std::vector<std::vector<std::uint64_t>>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        table[i][j] = enumerate_paths(g, g.sources[i], g.destinations[j]);
        for (const auto& p : table[i][j]) {
          masks[i][j].insert(masks[i][j].end(), words, 0);
          set_mask(p, masks[i][j]);
        }
      }
  }

  void set_mask(const GridPath& p, std::vector<std::uint64_t>& flat) {
    std::uint64_t* m = flat.data() + flat.size() - words;
    for (const auto& v : p.vertices) {
      const std::size_t id = static_cast<std::size_t>(v.col) * static_cast<std::size_t>(g.last_row() + 1) + static_cast<std::size_t>(v.row);
      m[id / 64] |= std::uint64_t{1} << (id % 64);
    }
  }

  void charge() {
    if (++nodes > opts.budget) throw TooLarge("multipath enumeration exceeded its budget of " + std::to_string(opts.budget));
  }

  void run() {
    const int k = g.k;
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::size_t> choice(static_cast<std::size_t>(k));
    std::vector<std::uint64_t> occupied(words, 0);
    do {
      dfs(0, sigma, choice, occupied);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  void dfs(std::size_t i, const std::vector<int>& sigma, std::vector<std::size_t>& choice, std::vector<std::uint64_t>& occupied) {
    const auto k = static_cast<std::size_t>(g.k);
    if (i == k) {
      charge();
      Multipath mp;
      mp.sigma = sigma;
      for (std::size_t t = 0; t < k; ++t) mp.paths.push_back(table[t][static_cast<std::size_t>(sigma[t])][choice[t]]);
      out.push_back(std::move(mp));
      return;
    }
    const auto j = static_cast<std::size_t>(sigma[i]);
    const auto& options = table[i][j];
    for (std::size_t c = 0; c < options.size(); ++c) {
      charge();
      const std::uint64_t* m = masks[i][j].data() + c * words;
      if (opts.non_intersecting_only) {
        bool clash = false;
        for (std::size_t w = 0; w < words && !clash; ++w) clash = (occupied[w] & m[w]) != 0;
        if (clash) continue;
        for (std::size_t w = 0; w < words; ++w) occupied[w] |= m[w];
      }
      choice[i] = c;
      dfs(i + 1, sigma, choice, occupied);
      if (opts.non_intersecting_only)
        for (std::size_t w = 0; w < words; ++w) occupied[w] &= ~m[w];
    }
  }
};

}  // namespace

std::vector<Multipath> enumerate_multipaths(const GridSpec& g, const MultipathOptions& opts) {
  if (g.k > 10) throw TooLarge("multipath enumeration limited to k <= 10");
  MultipathSearch search(g, opts);
  search.run();
  return std::move(search.out);
}

Polynomial lgv_determinant(const GridSpec& g) {
  const int n = g.n();
  const auto k = static_cast<std::size_t>(g.k);
  SquareMatrix<Polynomial> m(k, std::vector<Polynomial>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = path_sum(g, g.sources[i], g.destinations[j]);
  return determinant(m, Polynomial(n), Polynomial::constant(n, 1), [](const Polynomial& p) { return p.is_zero(); });
}

LgvResult lgv_report(const GridSpec& g, const MultipathOptions& opts) {
  const int n = g.n();
  const Polynomial det = lgv_determinant(g);
  Polynomial all(n);
  Polynomial disjoint(n);
  bool identity = true;
  for (const auto& mp : enumerate_multipaths(g, {false, opts.budget})) {
    const Polynomial w = mp.weight(n) * BigInt(mp.sign());
    all += w;
    if (mp.non_intersecting()) {
      disjoint += w;
      for (std::size_t i = 0; i < mp.sigma.size(); ++i) identity = identity && mp.sigma[i] == static_cast<int>(i);
    }
  }
  return {det == disjoint, det == all, identity};
}

bool lgv_check(const GridSpec& g) { return lgv_report(g).ok(); }

Polynomial schur_via_lgv(const UnitIntervalOrder& u, const Partition& lambda) {
  const int n = u.size();
  const GridSpec g = build_grid(u, lambda.length(), lambda);
  Polynomial out(n);
  if (g.k == 0) return Polynomial::constant(n, 1);
  for (const auto& mp : enumerate_multipaths(g, {true, MultipathOptions{}.budget})) {
    for (std::size_t i = 0; i < mp.sigma.size(); ++i)
      if (mp.sigma[i] != static_cast<int>(i))
        throw NonIdentityPermutation("non-intersecting multipath with sigma != id: " + to_json(mp).dump());
    out += mp.weight(n);
  }
  return out;
}

namespace {

struct Segment {
  GridVertex s, t;
};

long long cross(GridVertex o, GridVertex a, GridVertex b) {
  return static_cast<long long>(a.col - o.col) * (b.row - o.row) - static_cast<long long>(a.row - o.row) * (b.col - o.col);
}

bool on_segment(GridVertex p, const Segment& e) {
  return cross(e.s, e.t, p) == 0 && std::min(e.s.col, e.t.col) <= p.col && p.col <= std::max(e.s.col, e.t.col) &&
         std::min(e.s.row, e.t.row) <= p.row && p.row <= std::max(e.s.row, e.t.row);
}

// Two edges conflict when they meet anywhere other than a shared endpoint.
bool conflict(const Segment& a, const Segment& b) {
  const bool share = a.s == b.s || a.s == b.t || a.t == b.s || a.t == b.t;
  const long long d1 = cross(a.s, a.t, b.s);
  const long long d2 = cross(a.s, a.t, b.t);
  const long long d3 = cross(b.s, b.t, a.s);
  const long long d4 = cross(b.s, b.t, a.t);
  if (d1 == 0 && d2 == 0) {
    // Collinear: overlapping beyond a single shared endpoint is a conflict.
    int touching = 0;
    for (GridVertex p : {b.s, b.t}) touching += on_segment(p, a) && p != a.s && p != a.t;
    for (GridVertex p : {a.s, a.t}) touching += on_segment(p, b) && p != b.s && p != b.t;
    return touching > 0;
  }
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  if (share) return false;
  return on_segment(b.s, a) || on_segment(b.t, a) || on_segment(a.s, b) || on_segment(a.t, b);
}

}  // namespace

bool grid_is_planar_dag(const GridSpec& g) {
  std::vector<Segment> edges;
  for (int c = 1; c <= g.columns; ++c)
    for (int r = 1; r <= g.n(); ++r) {
      edges.push_back({{c, r}, {c, r + 1}});
      if (c < g.columns) edges.push_back({{c, r}, {c + 1, g.uio.next(r - 1)}});
    }
  for (const auto& e : edges)
    if (!g.contains(e.t) || e.t.row <= e.s.row) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (conflict(edges[i], edges[j])) return false;
  return true;
}

}  // namespace chroma
