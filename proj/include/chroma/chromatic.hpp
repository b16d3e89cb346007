#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "chroma/combinat.hpp"
#include "chroma/symfunc.hpp"

namespace chroma {

enum class ChromaticMethod { brute_force, stable_partitions };

struct ChromaticOptions {
  ChromaticMethod method = ChromaticMethod::brute_force;
  /// Largest n for which the n^n coloring enumeration is attempted.
  int max_brute_force_n = 8;
};

/// X_G in the m-basis. Brute force enumerates every coloring V -> {1..n} and
/// counts the proper ones whose color-count vector is weakly decreasing;
/// that count is the coefficient of m_lambda. Throws TooLarge past the bound.
SymFunc chromatic_symmetric(const Graph& g, const ChromaticOptions& opts = {});

/// Accelerator: coefficient of m_lambda is the number of partitions of V into
/// stable sets of sizes lambda, times prod_i r_i! over part multiplicities.
SymFunc chromatic_symmetric_stable(const Graph& g);

/// c_lambda in X_G = sum c_lambda e_lambda. Throws std::domain_error if a
/// coefficient is not integral.
std::map<Partition, BigInt> e_coefficients(const Graph& g, const ChromaticOptions& opts = {});

/// j -> number of acyclic orientations with exactly j sinks (j >= 1).
std::map<int, BigInt> acyclic_orientation_sinks(const Graph& g);
/// Same statistic by enumerating all 2^|E| orientations; for tests.
std::map<int, BigInt> acyclic_orientation_sinks_brute(const Graph& g);

bool check_sink_theorem(const Graph& g, const ChromaticOptions& opts = {});

struct ChromaticExpansion {
  std::string graph;
  SymFunc m{Basis::m};
  SymFunc e{Basis::e};
  SymFunc s{Basis::s};
  bool e_positive = false;
  bool s_positive = false;
  bool sink_check = false;
};

ChromaticExpansion positivity_report(const Graph& g, const ChromaticOptions& opts = {});

/// Coefficients as {"2,1": 3, ...}; integers as JSON numbers when they fit.
nlohmann::json coefficients_json(const SymFunc& f);
nlohmann::json to_json(const ChromaticExpansion& x);

}  // namespace chroma
