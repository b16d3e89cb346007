#include "chroma/ghom.hpp"

#include <bit>
#include <numeric>

#include "chroma/chromatic.hpp"
#include "chroma/determinant.hpp"
#include "chroma/errors.hpp"

namespace chroma {

GAnalogueContext::GAnalogueContext(Graph g) : graph_(std::move(g)), zero_(graph_.size()) {
  const int n = graph_.size();
  if (n > 24) throw TooLarge("G-analogue context limited to 24 vertices");
  e_.assign(static_cast<std::size_t>(n + 1), Polynomial(n));
  e_[0] = Polynomial::constant(n, 1);
  const std::uint32_t full = std::uint32_t{1} << n;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (!graph_.is_independent(s)) continue;
    Monomial m(n);
    for (std::uint32_t t = s; t; t &= t - 1) m.set_exponent(std::countr_zero(t), 1);
    e_[static_cast<std::size_t>(std::popcount(s))].add_term(m, 1);
  }
}

const Polynomial& GAnalogueContext::elementary(int i) const {
  if (i < 0 || i >= static_cast<int>(e_.size())) return zero_;
  return e_[static_cast<std::size_t>(i)];
}

Polynomial GAnalogueContext::elementary(const Partition& lambda) const {
  Polynomial out = Polynomial::constant(variable_count(), 1);
  for (int part : lambda.parts()) {
    out *= elementary(part);
    if (out.is_zero()) break;
  }
  return out;
}

Polynomial elementary_g(const GAnalogueContext& ctx, int i) { return ctx.elementary(i); }

Polynomial apply_ghom(const SymFunc& f, const GAnalogueContext& ctx) {
  const SymFunc e = convert(f, Basis::e);
  Polynomial out(ctx.variable_count());
  for (const auto& [lambda, c] : e.coeffs()) out += ctx.elementary(lambda) * to_integer(c);
  return out;
}

namespace {

Polynomial det(const SquareMatrix<Polynomial>& m, int nvars) {
  return determinant(m, Polynomial(nvars), Polynomial::constant(nvars, 1),
                     [](const Polynomial& p) { return p.is_zero(); });
}

}  // namespace

Polynomial schur_g(const GAnalogueContext& ctx, const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const int k = conj.length();
  const int n = ctx.variable_count();
  SquareMatrix<Polynomial> m(static_cast<std::size_t>(k), std::vector<Polynomial>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ctx.elementary(conj[i] + j - i);
  return det(m, n);
}

Polynomial power_g(const GAnalogueContext& ctx, int k) {
  if (k < 1) throw BadParameter("power_g: k must be positive");
  const int n = ctx.variable_count();
  SquareMatrix<Polynomial> m(static_cast<std::size_t>(k), std::vector<Polynomial>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    m[static_cast<std::size_t>(i)][0] = ctx.elementary(i + 1) * BigInt(i + 1);
    for (int j = 1; j < k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ctx.elementary(i - j + 1);
  }
  return det(m, n);
}

Polynomial monomial_g(const GAnalogueContext& ctx, const Partition& lambda) {
  const int d = lambda.weight();
  if (d == 0) return Polynomial::constant(ctx.variable_count(), 1);
  const auto c = transition_matrix(Basis::m, Basis::e, d);
  const std::size_t col = c->position(lambda);
  Polynomial out(ctx.variable_count());
  for (std::size_t row = 0; row < c->index.size(); ++row) {
    const Rational& entry = c->entries[row][col];
    if (entry != 0) out += ctx.elementary(c->index[row]) * to_integer(entry);
  }
  return out;
}

std::map<Partition, Polynomial> truncated_T(const GAnalogueContext& ctx, int d) {
  if (d < 1) throw BadParameter("truncated_T: degree must be positive");
  std::map<Partition, Polynomial> out;
  for (const auto& lambda : partitions_of(d)) out.emplace(lambda, ctx.elementary(lambda));
  return out;
}

bool T_slice_consistent(const GAnalogueContext& ctx, int d) {
  const int n = ctx.variable_count();
  const int total = d + n;
  Polynomial lhs(total);
  Polynomial rhs(total);
  for (const auto& [lambda, eg] : truncated_T(ctx, d)) {
    lhs += expand_concrete(Basis::m, lambda, d).embed(total, 0) * eg.embed(total, d);
    rhs += expand_concrete(Basis::e, lambda, d).embed(total, 0) * monomial_g(ctx, lambda).embed(total, d);
  }
  return lhs == rhs;
}

SymFunc clan_coefficient(const GAnalogueContext& ctx, std::span<const int> alpha) {
  const int n = ctx.variable_count();
  if (static_cast<int>(alpha.size()) != n) throw BadParameter("alpha must have one entry per vertex");
  std::vector<int> exps(alpha.begin(), alpha.end());
  for (int a : exps)
    if (a < 0) throw BadParameter("alpha entries must be nonnegative");
  const Monomial target = Monomial::from_exponents(exps);
  const int d = std::accumulate(exps.begin(), exps.end(), 0);
  BigInt scale = 1;
  for (int a : exps) scale *= factorial(a);
  SymFunc out(Basis::m);
  if (d == 0) return SymFunc::constant(Basis::m, 1);
  for (const auto& [lambda, eg] : truncated_T(ctx, d)) out.add_term(lambda, Rational(eg.coeff(target) * scale));
  return out;
}

bool gnechrom_check(const GAnalogueContext& ctx, std::span<const int> alpha) {
  const SymFunc lhs = clan_coefficient(ctx, alpha);
  const Graph clan = clan_graph(ctx.graph(), alpha);
  if (clan.size() == 0) return lhs == SymFunc::constant(Basis::m, 1);
  return lhs == chromatic_symmetric(clan);
}

}  // namespace chroma
