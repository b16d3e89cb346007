#include "chroma/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

// Odometer over colorings with pruning: vertex v only gets colors that
// differ from its already-colored neighbours.
void color_dfs(const Graph& g, int v, std::vector<int>& color, std::vector<int>& counts,
               std::map<Partition, BigInt>& out) {
  const int n = g.size();
  if (v == n) {
    if (!std::is_sorted(counts.begin(), counts.end(), std::greater<>())) return;
    out[Partition::from_parts(counts)] += 1;
    return;
  }
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (color[static_cast<std::size_t>(u)] == c && g.adjacent(u, v)) ok = false;
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    ++counts[static_cast<std::size_t>(c)];
    color_dfs(g, v + 1, color, counts, out);
    --counts[static_cast<std::size_t>(c)];
  }
}

void stable_dfs(const Graph& g, VertexMask remaining, std::vector<int>& sizes, std::map<Partition, BigInt>& out) {
  if (remaining == 0) {
    out[Partition::from_parts(sizes)] += 1;
    return;
  }
  // The block containing the lowest remaining vertex.
  const int low = std::countr_zero(remaining);
  const VertexMask lowbit = VertexMask{1} << low;
  const VertexMask rest = remaining & ~lowbit;
  for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
    const VertexMask block = sub | lowbit;
    if (g.is_independent(block)) {
      sizes.push_back(std::popcount(block));
      stable_dfs(g, remaining & ~block, sizes, out);
      sizes.pop_back();
    }
    if (sub == 0) break;
  }
}

}  // namespace

SymFunc chromatic_symmetric(const Graph& g, const ChromaticOptions& opts) {
  if (opts.method == ChromaticMethod::stable_partitions) return chromatic_symmetric_stable(g);
  const int n = g.size();
  if (n > opts.max_brute_force_n)
    throw TooLarge("brute-force coloring limited to n <= " + std::to_string(opts.max_brute_force_n) + ", got " +
                   std::to_string(n));
  SymFunc out(Basis::m);
  if (n == 0) return SymFunc::constant(Basis::m, 1);
  std::map<Partition, BigInt> counts;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> per_color(static_cast<std::size_t>(n), 0);
  color_dfs(g, 0, color, per_color, counts);
  for (const auto& [lambda, c] : counts) out.add_term(lambda, Rational(c));
  return out;
}

SymFunc chromatic_symmetric_stable(const Graph& g) {
  const int n = g.size();
  if (n == 0) return SymFunc::constant(Basis::m, 1);
  std::map<Partition, BigInt> counts;
  std::vector<int> sizes;
  const VertexMask all = n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  stable_dfs(g, all, sizes, counts);
  SymFunc out(Basis::m);
  for (const auto& [lambda, c] : counts) {
    BigInt mult = c;
    for (int r : lambda.multiplicities()) mult *= factorial(r);
    out.add_term(lambda, Rational(mult));
  }
  return out;
}

std::map<Partition, BigInt> e_coefficients(const Graph& g, const ChromaticOptions& opts) {
  const SymFunc e = convert(chromatic_symmetric(g, opts), Basis::e);
  std::map<Partition, BigInt> out;
  for (const auto& [lambda, c] : e.coeffs()) out.emplace(lambda, to_integer(c));
  return out;
}

std::map<int, BigInt> acyclic_orientation_sinks(const Graph& g) {
  const int n = g.size();
  if (n > 20) throw TooLarge("acyclic_orientation_sinks limited to n <= 20");
  const std::size_t full = std::size_t{1} << n;
  auto nbhd = [&](VertexMask s) {
    VertexMask out = 0;
    for (VertexMask t = s; t; t &= t - 1) out |= g.neighbours(std::countr_zero(t));
    return out;
  };
  // h[W][T] = acyclic orientations of G[W] whose sinks all lie in T (T ⊆ W).
  // Peel off the set S of sinks: S is stable, nonempty, inside T, and every
  // vertex of W\S adjacent to S points into S; the remaining sinks of
  // G[W\S] must then be among N(S).
  std::vector<std::map<VertexMask, BigInt>> memo(full);
  auto h = [&](auto&& self, VertexMask w, VertexMask t) -> BigInt {
    if (w == 0) return 1;
    t &= w;
    if (t == 0) return 0;
    auto& slot = memo[w];
    if (auto it = slot.find(t); it != slot.end()) return it->second;
    BigInt total = 0;
    for (VertexMask s = t; s; s = (s - 1) & t) {
      if (!g.is_independent(s)) continue;
      const VertexMask rest = w & ~s;
      total += self(self, rest, nbhd(s) & rest);
    }
    slot.emplace(t, total);
    return total;
  };
  std::map<int, BigInt> out;
  const VertexMask all = static_cast<VertexMask>(full - 1);
  for (VertexMask s = all; s; s = (s - 1) & all) {
    if (!g.is_independent(s)) continue;
    const VertexMask rest = all & ~s;
    const BigInt c = h(h, rest, nbhd(s) & rest);
    if (c != 0) out[std::popcount(s)] += c;
  }
  return out;
}

std::map<int, BigInt> acyclic_orientation_sinks_brute(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.size();
  if (edges.size() > 24) throw TooLarge("orientation enumeration limited to 24 edges");
  std::map<int, BigInt> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << edges.size()); ++bits) {
    std::vector<VertexMask> outs(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if ((bits >> e) & 1u) std::swap(u, v);
      outs[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    }
    // Kahn-style: repeatedly strip sinks; acyclic iff everything goes.
    VertexMask alive = n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    bool progress = true;
    while (alive && progress) {
      progress = false;
      for (int v = 0; v < n; ++v)
        if ((alive >> v & 1u) && (outs[static_cast<std::size_t>(v)] & alive) == 0) {
          alive &= ~(VertexMask{1} << v);
          progress = true;
        }
    }
    if (alive) continue;
    int sinks = 0;
    for (int v = 0; v < n; ++v) sinks += outs[static_cast<std::size_t>(v)] == 0;
    out[sinks] += 1;
  }
  return out;
}

namespace {

bool sink_theorem_holds(const Graph& g, const std::map<Partition, BigInt>& c) {
  std::map<int, BigInt> by_length;
  for (const auto& [lambda, coeff] : c) by_length[lambda.length()] += coeff;
  const auto sinks = acyclic_orientation_sinks(g);
  for (int j = 1; j <= g.size(); ++j) {
    const BigInt lhs = sinks.count(j) ? sinks.at(j) : BigInt(0);
    const BigInt rhs = by_length.count(j) ? by_length.at(j) : BigInt(0);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

bool check_sink_theorem(const Graph& g, const ChromaticOptions& opts) {
  return sink_theorem_holds(g, e_coefficients(g, opts));
}

ChromaticExpansion positivity_report(const Graph& g, const ChromaticOptions& opts) {
  ChromaticExpansion x;
  x.graph = g.str();
  x.m = chromatic_symmetric(g, opts);
  x.e = convert(x.m, Basis::e);
  x.s = convert(x.m, Basis::s);
  if (!x.m.is_integral() || !x.e.is_integral() || !x.s.is_integral())
    throw std::domain_error("chromatic expansion is not integral for " + x.graph);
  x.e_positive = x.e.is_nonnegative();
  x.s_positive = x.s.is_nonnegative();
  std::map<Partition, BigInt> c;
  for (const auto& [lambda, coeff] : x.e.coeffs()) c.emplace(lambda, to_integer(coeff));
  x.sink_check = sink_theorem_holds(g, c);
  return x;
}

nlohmann::json coefficients_json(const SymFunc& f) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [lambda, c] : f.coeffs()) {
    if (is_integral(c)) {
      const BigInt z = to_integer(c);
      if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
        out[lambda.str()] = static_cast<std::int64_t>(z);
        continue;
      }
    }
    out[lambda.str()] = to_string(c);
  }
  return out;
}

nlohmann::json to_json(const ChromaticExpansion& x) {
  return {{"graph", x.graph},
          {"m", coefficients_json(x.m)},
          {"e", coefficients_json(x.e)},
          {"s", coefficients_json(x.s)},
          {"ePositive", x.e_positive},
          {"sPositive", x.s_positive},
          {"sinkCheck", x.sink_check}};
}

}  // namespace chroma
