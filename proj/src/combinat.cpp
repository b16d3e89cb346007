#include "chroma/combinat.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && token[b] == ' ') ++b;
    while (e > b && token[e - 1] == ' ') --e;
    const auto t = token.substr(b, e - b);
    if (t.empty()) throw ParseError(std::string("empty entry in ") + what + " '" + std::string(text) + "'");
    int value = 0;
    for (char c : t) {
      if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + " '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw ParseError(std::string(what) + " entry too large");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void check_size(int n) {
  if (n < 0 || n > kMaxVertices) throw BadParameter("vertex count out of range: " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw BadParameter("partition parts must be positive: " + join(parts_));
    if (i > 0 && parts_[i] > parts_[i - 1]) throw BadParameter("partition must be weakly decreasing: " + join(parts_));
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto parts = parse_int_list(text, "partition");
  try {
    return Partition(std::move(parts));
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  const int rows = length();
  for (int i = 1; rows > 0 && i <= parts_.front(); ++i) {
    int count = 0;
    while (count < rows && parts_[static_cast<std::size_t>(count)] >= i) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

bool Partition::is_rectangle_of_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> mult(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++mult[static_cast<std::size_t>(p)];
  return mult;
}

std::string Partition::str() const { return join(parts_); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // Reverse lexicographic: the lexicographically larger partition sorts first.
  return b.parts_ <=> a.parts_;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw BadParameter("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { check_size(n); }

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw BadParameter("edge endpoint out of range");
  if (u == v) throw BadParameter("self-loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
  adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

bool Graph::is_independent(VertexMask set) const {
  for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (adj_[static_cast<std::size_t>(v)] & set) return false;
  }
  return true;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(n_ + other.n_);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
  return g;
}

std::string Graph::str() const {
  std::ostringstream os;
  os << "n=" << n_ << ";E=";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) os << ',';
    os << u << '-' << v;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(int n, std::vector<VertexMask> above) : n_(n), above_(std::move(above)) {
  check_size(n);
  if (static_cast<int>(above_.size()) != n) throw BadParameter("poset relation has wrong size");
  for (int i = 0; i < n; ++i) {
    if (less(i, i)) throw BadParameter("poset relation is not irreflexive");
    for (int j = 0; j < n; ++j) {
      if (less(i, j) && (above_[static_cast<std::size_t>(i)] | above_[static_cast<std::size_t>(j)]) != above_[static_cast<std::size_t>(i)])
        throw BadParameter("poset relation is not transitive");
    }
  }
}

Poset Poset::chain(int n) {
  std::vector<VertexMask> above(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) above[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
  return Poset(n, std::move(above));
}

Poset Poset::antichain(int n) { return Poset(n, std::vector<VertexMask>(static_cast<std::size_t>(n), 0)); }

Poset Poset::disjoint_union(const Poset& other) const {
  std::vector<VertexMask> above = above_;
  for (VertexMask m : other.above_) above.push_back(m << n_);
  return Poset(n_ + other.n_, std::move(above));
}

VertexMask Poset::below(int i) const {
  VertexMask m = 0;
  for (int j = 0; j < n_; ++j)
    if (less(j, i)) m |= VertexMask{1} << j;
  return m;
}

Poset Poset::relabel(std::span<const int> perm) const {
  std::vector<VertexMask> above(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j)) above[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] |= VertexMask{1} << perm[static_cast<std::size_t>(j)];
  return Poset(n_, std::move(above));
}

std::vector<Poset> enumerate_natural_posets(int n) {
  if (n < 0 || n > 6) throw TooLarge("poset enumeration is capped at 6 elements");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<VertexMask> above(static_cast<std::size_t>(n));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(above.begin(), above.end(), 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1u) above[static_cast<std::size_t>(slots[s].first)] |= VertexMask{1} << slots[s].second;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j)
        if ((above[static_cast<std::size_t>(i)] >> j) & 1u)
          transitive = (above[static_cast<std::size_t>(i)] | above[static_cast<std::size_t>(j)]) == above[static_cast<std::size_t>(i)];
    if (transitive) out.emplace_back(n, above);
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > 7) throw TooLarge("graph enumeration is capped at 7 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1u) g.add_edge(slots[s].first, slots[s].second);
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unit interval orders

UnitIntervalOrder UnitIntervalOrder::from_next(std::vector<int> next) {
  const int n = static_cast<int>(next.size());
  if (n < 1) throw MalformedNext("next-vector must be nonempty");
  if (n > kMaxVertices) throw MalformedNext("next-vector too long");
  for (int i = 0; i < n; ++i) {
    const int v = next[static_cast<std::size_t>(i)];
    // 1-based element i+1 needs i+1 < next <= n+1.
    if (v <= i + 1 || v > n + 1)
      throw MalformedNext("next[" + std::to_string(i + 1) + "] = " + std::to_string(v) + " out of range in " + join(next));
    if (i > 0 && v < next[static_cast<std::size_t>(i - 1)])
      throw MalformedNext("next-vector is not nondecreasing: " + join(next));
  }
  UnitIntervalOrder u;
  u.next_ = std::move(next);
  return u;
}

UnitIntervalOrder UnitIntervalOrder::parse(std::string_view text) {
  return from_next(parse_int_list(text, "uio"));
}

UnitIntervalOrder UnitIntervalOrder::from_points(std::span<const Rational> points) {
  const int n = static_cast<int>(points.size());
  for (int i = 1; i < n; ++i)
    if (points[static_cast<std::size_t>(i)] < points[static_cast<std::size_t>(i - 1)])
      throw BadParameter("points must be sorted nondecreasing");
  std::vector<int> next(static_cast<std::size_t>(n), n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[static_cast<std::size_t>(j)] >= points[static_cast<std::size_t>(i)] + 1) {
        next[static_cast<std::size_t>(i)] = j + 1;
        break;
      }
    }
  }
  return from_next(std::move(next));
}

Poset UnitIntervalOrder::poset() const {
  const int n = size();
  std::vector<VertexMask> above(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = next(i) - 1; j < n; ++j) above[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
  return Poset(n, std::move(above));
}

std::vector<Rational> UnitIntervalOrder::realize() const {
  const int n = size();
  std::vector<Rational> p(static_cast<std::size_t>(n));
  p[0] = 0;
  for (int j = 1; j < n; ++j) {
    // Elements below v_j form the prefix 0..t-1 because next is nondecreasing.
    int t = 0;
    while (t < j && next(t) <= j + 1) ++t;
    Rational lower = p[static_cast<std::size_t>(j - 1)];
    if (t > 0) lower = std::max(lower, Rational(p[static_cast<std::size_t>(t - 1)] + 1));
    if (t < j) {
      // Must stay strictly below p[t] + 1 to remain incomparable with v_t.
      const Rational upper = p[static_cast<std::size_t>(t)] + 1;
      p[static_cast<std::size_t>(j)] = (lower + upper) / 2;
    } else {
      p[static_cast<std::size_t>(j)] = lower;
    }
  }
  if (from_points(p) != *this) throw Error("realize: round trip failed for " + str());
  return p;
}

std::string UnitIntervalOrder::str() const { return join(next_); }

std::vector<UnitIntervalOrder> enumerate_uios(int n) {
  if (n < 1) throw BadParameter("enumerate_uios: n must be positive");
  if (n > 16) throw TooLarge("enumerate_uios: n too large");
  std::vector<UnitIntervalOrder> out;
  std::vector<int> next(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int i, int floor) {
    if (i == n) {
      out.push_back(UnitIntervalOrder::from_next(next));
      return;
    }
    for (int v = std::max(floor, i + 2); v <= n + 1; ++v) {
      next[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

UnitIntervalOrder uio_family(int n, int k) {
  if (n < 1 || k < 0) throw BadParameter("uio_family: need n >= 1 and k >= 0");
  std::vector<Rational> pts;
  for (int i = 1; i <= n; ++i) pts.emplace_back(i, k + 1);
  return UnitIntervalOrder::from_points(pts);
}

Graph inc_graph(const Poset& p) {
  Graph g(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (!p.comparable(i, j)) g.add_edge(i, j);
  return g;
}

Graph inc_graph(const UnitIntervalOrder& u) { return inc_graph(u.poset()); }

bool is_ab_free(const Poset& p, int a, int b) {
  if (a < 1 || b < 1) throw BadParameter("is_ab_free: a and b must be positive");
  const int n = p.size();
  if (n > 20) throw TooLarge("is_ab_free: poset too large for subset search");
  auto chains_of_size = [&](int size) {
    std::vector<VertexMask> out;
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
      if (std::popcount(s) != size) continue;
      bool chain = true;
      for (VertexMask r = s; r && chain; r &= r - 1) {
        const int i = std::countr_zero(r);
        for (VertexMask q = r & (r - 1); q && chain; q &= q - 1) chain = p.comparable(i, std::countr_zero(q));
      }
      if (chain) out.push_back(s);
    }
    return out;
  };
  const auto as = chains_of_size(a);
  const auto bs = a == b ? as : chains_of_size(b);
  for (VertexMask x : as) {
    for (VertexMask y : bs) {
      if (x & y) continue;
      bool separated = true;
      for (VertexMask r = x; r && separated; r &= r - 1) {
        const int i = std::countr_zero(r);
        const VertexMask related = p.above(i) | p.below(i);
        separated = (related & y) == 0;
      }
      if (separated) return false;
    }
  }
  return true;
}

std::optional<UnitIntervalOrder> uio_recognize(const Poset& p) {
  if (!is_ab_free(p, 2, 2) || !is_ab_free(p, 3, 1)) return std::nullopt;
  const int n = p.size();
  if (n == 0) return std::nullopt;
  // In a semiorder the down-sets are nested and the up-sets are nested in the
  // opposite direction, so sorting by (|down|, -|up|) recovers the real-line
  // order of some representation.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const int dx = std::popcount(p.below(x));
    const int dy = std::popcount(p.below(y));
    if (dx != dy) return dx < dy;
    return std::popcount(p.above(x)) > std::popcount(p.above(y));
  });
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) position[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
  const Poset sorted = p.relabel(position);
  std::vector<int> next(static_cast<std::size_t>(n), n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sorted.less(i, j)) {
        next[static_cast<std::size_t>(i)] = j + 1;
        break;
      }
    }
  }
  UnitIntervalOrder u;
  try {
    u = UnitIntervalOrder::from_next(next);
  } catch (const MalformedNext&) {
    throw Error("uio_recognize: free poset did not sort into a staircase");
  }
  if (u.poset() != sorted) throw Error("uio_recognize: reconstructed order differs from input");
  return u;
}

Graph clan_graph(const Graph& g, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != g.size()) throw BadParameter("clan_graph: alpha has wrong length");
  std::vector<int> first(alpha.size() + 1, 0);
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    if (alpha[v] < 0) throw BadParameter("clan_graph: alpha must be nonnegative");
    first[v + 1] = first[v] + alpha[v];
  }
  Graph out(first.back());
  for (int v = 0; v < g.size(); ++v) {
    const auto vi = static_cast<std::size_t>(v);
    for (int a = first[vi]; a < first[vi + 1]; ++a)
      for (int b = a + 1; b < first[vi + 1]; ++b) out.add_edge(a, b);
    for (int u = v + 1; u < g.size(); ++u) {
      if (!g.adjacent(u, v)) continue;
      const auto ui = static_cast<std::size_t>(u);
      for (int a = first[vi]; a < first[vi + 1]; ++a)
        for (int b = first[ui]; b < first[ui + 1]; ++b) out.add_edge(a, b);
    }
  }
  return out;
}

BigInt catalan(int n) {
  BigInt c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace chroma
