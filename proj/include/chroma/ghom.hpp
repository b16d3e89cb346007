#pragma once

#include <map>
#include <span>
#include <vector>

#include "chroma/combinat.hpp"
#include "chroma/polyring.hpp"
#include "chroma/symfunc.hpp"

namespace chroma {

/// A graph together with its elementary G-analogues e_0^G..e_n^G, computed
/// once at construction. Variable v_i of the vertex ring is vertex i-1.
class GAnalogueContext {
 public:
  explicit GAnalogueContext(Graph g);
  explicit GAnalogueContext(const UnitIntervalOrder& u) : GAnalogueContext(inc_graph(u)) {}

  const Graph& graph() const { return graph_; }
  int variable_count() const { return graph_.size(); }
  /// e_i^G; 1 for i == 0 and 0 for i < 0 or i > n.
  const Polynomial& elementary(int i) const;
  /// prod_j e^G_{lambda_j}.
  Polynomial elementary(const Partition& lambda) const;

 private:
  Graph graph_;
  std::vector<Polynomial> e_;
  Polynomial zero_;
};

Polynomial elementary_g(const GAnalogueContext& ctx, int i);

/// phi_G(f): convert to the e-basis and substitute e_i -> e_i^G. Throws
/// std::domain_error if an e-coefficient is not integral.
Polynomial apply_ghom(const SymFunc& f, const GAnalogueContext& ctx);

/// det(e^G_{lambda*_i + j - i}).
Polynomial schur_g(const GAnalogueContext& ctx, const Partition& lambda);
/// The Newton determinant with first column i * e_i^G.
Polynomial power_g(const GAnalogueContext& ctx, int k);
/// sum_mu C[mu, lambda] e^G_mu with C the m -> e transition matrix.
Polynomial monomial_g(const GAnalogueContext& ctx, const Partition& lambda);

/// Degree-d slice of T(x, v) = sum_lambda m_lambda(x) e^G_lambda(v).
std::map<Partition, Polynomial> truncated_T(const GAnalogueContext& ctx, int d);

/// sum m_lambda(x) e^G_lambda(v) == sum e_lambda(x) m^G_lambda(v) as
/// polynomials in d x-variables and the n vertex variables.
bool T_slice_consistent(const GAnalogueContext& ctx, int d);

/// The symmetric function [v^alpha] T(x, v) * prod alpha(v)!, in the m-basis.
SymFunc clan_coefficient(const GAnalogueContext& ctx, std::span<const int> alpha);

/// [v^alpha] T * prod alpha! == X_{G^alpha}.
bool gnechrom_check(const GAnalogueContext& ctx, std::span<const int> alpha);

}  // namespace chroma
