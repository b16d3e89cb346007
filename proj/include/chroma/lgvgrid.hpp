#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "chroma/combinat.hpp"
#include "chroma/polyring.hpp"

namespace chroma {

/// Grid vertex (column, row); both 1-based. Rows grow in the direction of
/// travel, so row 1 holds the sources and row n+1 the destinations.
struct GridVertex {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// The grid of a UIO: unit edges (c,r) -> (c,r+1) and edges
/// (c,r) -> (c+1,next(r)) of weight v_r, for r <= n, on columns 1..columns.
struct GridSpec {
  UnitIntervalOrder uio;
  int k = 0;
  std::vector<int> lambda;  // zero-padded to length k
  int columns = 0;
  std::vector<GridVertex> sources;       // a_1..a_k
  std::vector<GridVertex> destinations;  // b_1..b_k

  int n() const { return uio.size(); }
  int last_row() const { return uio.size() + 1; }
  bool contains(GridVertex v) const { return v.col >= 1 && v.col <= columns && v.row >= 1 && v.row <= last_row(); }
};

/// a_i = (k+1-i, 1), b_i = (k+1-i+lambda_i, n+1). Throws BadShape when
/// lambda has more than k parts.
GridSpec build_grid(const UnitIntervalOrder& u, int k, const Partition& lambda);

/// Explicit vertex sequence plus the rows picked by diagonal steps.
struct GridPath {
  std::vector<GridVertex> vertices;
  std::vector<int> picked;  // 1-based rows, increasing; v_r for each

  GridVertex start() const { return vertices.front(); }
  GridVertex end() const { return vertices.back(); }
  Monomial weight(int variable_count) const;
  bool contains(GridVertex v) const;

  friend bool operator==(const GridPath&, const GridPath&) = default;
};

/// Path from `a` picking the given rows in order, then running straight to
/// the last row. Throws BadParameter if the picks are not a chain of the UIO
/// or leave the grid.
GridPath make_path(const GridSpec& g, GridVertex a, const std::vector<int>& picked_rows);

/// Checks the edge rule along an explicit vertex list and fills in picks.
GridPath path_from_vertices(const GridSpec& g, std::vector<GridVertex> vertices);

/// Sum of path weights from a to b (dynamic programming over the grid).
Polynomial path_sum(const GridSpec& g, GridVertex a, GridVertex b);
/// Every path from a to b, in lexicographic order of picked rows.
std::vector<GridPath> enumerate_paths(const GridSpec& g, GridVertex a, GridVertex b);

/// k paths, path i running from a_i to b_{sigma[i]} (0-based sigma).
struct Multipath {
  std::vector<GridPath> paths;
  std::vector<int> sigma;

  int size() const { return static_cast<int>(paths.size()); }
  int sign() const;
  /// sigma^{-1}(1), 1-based: index of the source whose path ends at b_1.
  int multiplier() const;
  bool non_intersecting() const;
  Polynomial weight(int variable_count) const;
  std::vector<Monomial> weight_vector(int variable_count) const;

  friend bool operator==(const Multipath&, const Multipath&) = default;
};

/// Builds sigma from the endpoints. Throws BadParameter if a path does not
/// start at a_i or does not end at some destination, or sigma is not a
/// permutation.
Multipath make_multipath(const GridSpec& g, std::vector<GridPath> paths);

/// {"paths": [[[col,row],...],...], "sigma": [1-based one-line notation]}.
nlohmann::json to_json(const Multipath& mp);

struct MultipathOptions {
  bool non_intersecting_only = false;
  /// Bound on the number of multipaths produced (and on search nodes).
  std::uint64_t budget = 10'000'000;
};

/// All multipaths over every sigma, ordered by sigma (lexicographic) and then
/// by the paths' positions in enumerate_paths. Throws TooLarge past budget.
std::vector<Multipath> enumerate_multipaths(const GridSpec& g, const MultipathOptions& opts = {});

/// det(path_sum(a_i, b_j)).
Polynomial lgv_determinant(const GridSpec& g);

struct LgvResult {
  bool determinant_matches = false;       // det == signed non-intersecting sum
  bool all_signed_sum_matches = false;    // det == signed sum over every multipath
  bool identity_permutations = false;     // every non-intersecting sigma is id
  bool ok() const { return determinant_matches && all_signed_sum_matches && identity_permutations; }
};

LgvResult lgv_report(const GridSpec& g, const MultipathOptions& opts = {});
bool lgv_check(const GridSpec& g);

/// Sum of weights of non-intersecting multipaths for the grid of lambda with
/// k = length(lambda); equals s^G of the conjugate partition. Throws
/// NonIdentityPermutation if a non-intersecting multipath has sigma != id.
Polynomial schur_via_lgv(const UnitIntervalOrder& u, const Partition& lambda);

/// Structural checks: every edge stays in the window, moves strictly down,
/// and no two edges cross in the (column,row) drawing.
bool grid_is_planar_dag(const GridSpec& g);

}  // namespace chroma
