#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chroma/numeric.hpp"

namespace chroma {

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
///
/// Ordering is by weight first, then reverse lexicographic, so that a
/// std::map keyed by Partition lists [3] < [2,1] < [1,1,1].
class Partition {
 public:
  Partition() = default;
  /// Throws BadParameter unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros; never throws for nonnegative input.
  static Partition from_parts(std::vector<int> parts);
  /// "4,4,3,2"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// 0 beyond the last part, matching the zero-padded convention.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  bool is_rectangle_of_ones() const;

  /// Multiplicity of each part size: result[i] = #{j : parts[j] == i}.
  std::vector<int> multiplicities() const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
inline Partition conjugate(const Partition& p) { return p.conjugate(); }

// ---------------------------------------------------------------------------
// Graphs and posets on at most 32 vertices, stored as adjacency bitmasks.
// ---------------------------------------------------------------------------

using VertexMask = std::uint32_t;
inline constexpr int kMaxVertices = 32;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph edgeless(int n);
  static Graph path(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  VertexMask neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  void add_edge(int u, int v);
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool is_independent(VertexMask set) const;
  /// Disjoint union; the vertices of `other` follow those of *this.
  Graph disjoint_union(const Graph& other) const;
  std::string str() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// Strict partial order. less(i, j) means element i precedes element j.
class Poset {
 public:
  Poset() = default;
  /// Throws BadParameter unless the relation is irreflexive and transitive.
  Poset(int n, std::vector<VertexMask> above);

  static Poset chain(int n);
  static Poset antichain(int n);
  /// Disjoint union with no relations across the two parts.
  Poset disjoint_union(const Poset& other) const;

  int size() const { return n_; }
  bool less(int i, int j) const { return (above_[static_cast<std::size_t>(i)] >> j) & 1u; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  VertexMask above(int i) const { return above_[static_cast<std::size_t>(i)]; }
  VertexMask below(int i) const;

  /// The poset with element i renamed to perm[i].
  Poset relabel(std::span<const int> perm) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> above_;
};

/// Every strict partial order on {0..n-1} in which i < j whenever i precedes
/// j. Each isomorphism class appears at least once. Capped at n <= 6.
std::vector<Poset> enumerate_natural_posets(int n);

/// All labelled simple graphs on n vertices (2^(n(n-1)/2) of them).
std::vector<Graph> enumerate_graphs(int n);

// ---------------------------------------------------------------------------
// Unit interval orders
// ---------------------------------------------------------------------------

/// Unit interval order on elements v_1 < ... < v_n sorted by real position,
/// encoded by next(i) = min{j : v_j > v_i} (n+1 if none). Values of `next`
/// are 1-based as in the textual encoding "3,4,4"; element indices in the
/// API are 0-based.
class UnitIntervalOrder {
 public:
  UnitIntervalOrder() = default;
  /// Throws MalformedNext.
  static UnitIntervalOrder from_next(std::vector<int> next);
  static UnitIntervalOrder parse(std::string_view text);
  /// `points` sorted nondecreasing.
  static UnitIntervalOrder from_points(std::span<const Rational> points);

  int size() const { return static_cast<int>(next_.size()); }
  /// 1-based next value of 0-based element i.
  int next(int i) const { return next_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& next_vector() const { return next_; }

  /// v_i < v_j in the order (0-based).
  bool precedes(int i, int j) const { return j + 1 >= next(i); }
  bool incomparable(int i, int j) const { return i != j && !precedes(i, j) && !precedes(j, i); }

  Poset poset() const;
  /// Exact rational points reproducing the order; verified by round trip.
  std::vector<Rational> realize() const;

  std::string str() const;

  friend auto operator<=>(const UnitIntervalOrder&, const UnitIntervalOrder&) = default;

 private:
  std::vector<int> next_;
};

/// All UIOs on n elements in lexicographic order of next-vectors; there are
/// Catalan(n) of them.
std::vector<UnitIntervalOrder> enumerate_uios(int n);

/// P_{n,k} = {i/(k+1)} for i = 1..n.
UnitIntervalOrder uio_family(int n, int k);

Graph inc_graph(const Poset& p);
Graph inc_graph(const UnitIntervalOrder& u);

/// True iff p has no a-chain and b-chain with all cross pairs incomparable.
bool is_ab_free(const Poset& p, int a, int b);

/// Some UIO isomorphic to p, when p is (2+2)- and (3+1)-free.
std::optional<UnitIntervalOrder> uio_recognize(const Poset& p);

/// Replace v by a clique of alpha[v] copies; alpha[v] == 0 deletes v.
/// Copies of vertex v are numbered consecutively in vertex order.
Graph clan_graph(const Graph& g, std::span<const int> alpha);

BigInt catalan(int n);

}  // namespace chroma
