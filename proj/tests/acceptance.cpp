// Runs every acceptance criterion at its stated bounds and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "chroma/chromatic.hpp"
#include "chroma/combinat.hpp"
#include "chroma/suites.hpp"
#include "chroma/symfunc.hpp"
#include "helpers.hpp"

using namespace chroma;

namespace {

int workers() { return static_cast<int>(std::max(4u, std::thread::hardware_concurrency())); }

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome suite(const std::string& name, int max_n, std::optional<int> max_k, std::size_t expected_instances = 0) {
  SuiteConfig cfg;
  cfg.max_n = max_n;
  cfg.max_k = max_k;
  cfg.jobs = workers();
  const auto r = run_suite(name, cfg);
  const auto failures = r.failures();
  Outcome o;
  o.ok = failures.empty() && (expected_instances == 0 || r.instances == expected_instances);
  o.detail = std::to_string(r.instances) + " instances, " + std::to_string(r.checks.size()) + " checks, " +
             std::to_string(failures.size()) + " failures";
  if (!failures.empty()) o.detail += "; first: " + failures.front().instance + " " + failures.front().check;
  return o;
}

Outcome complete_graphs() {
  for (int n = 1; n <= 6; ++n) {
    const auto x = convert(chromatic_symmetric(Graph::complete(n)), Basis::e);
    if (x != SymFunc::element(Basis::e, {n}, Rational(factorial(n)))) return {false, "K_" + std::to_string(n)};
  }
  return {true, "K_1..K_6"};
}

Outcome scott_suppes() {
  std::size_t posets = 0, free = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_natural_posets(n)) {
      ++posets;
      const bool is_free = is_ab_free(p, 2, 2) && is_ab_free(p, 3, 1);
      const auto u = uio_recognize(p);
      if (u.has_value() != is_free) return {false, "mismatch at n=" + std::to_string(n)};
      if (u && !chroma::testing::isomorphic(u->poset(), p)) return {false, "recognized order is not isomorphic"};
      free += is_free;
    }
  return {true, std::to_string(posets) + " labelled posets, " + std::to_string(free) + " recognized"};
}

Outcome scanner() {
  ScanConfig cfg;
  cfg.max_n = 7;
  cfg.jobs = workers();
  const auto r = scan_epositivity(cfg);
  return {r.scanned == 625 && r.negatives == 0,
          std::to_string(r.scanned) + " UIOs, " + std::to_string(r.negatives) + " negatives"};
}

Outcome transitions() {
  std::size_t pairs = 0;
  for (int d = 1; d <= 6; ++d) {
    for (Basis a : kAllBases)
      for (Basis b : kAllBases) {
        ++pairs;
        if (!compose(*transition_matrix(a, b, d), *transition_matrix(b, a, d)).is_identity())
          return {false, std::string("compose ") + basis_tag(a) + basis_tag(b) + " d=" + std::to_string(d)};
      }
    for (const auto& lam : partitions_of(d))
      if (jacobi_trudi_e(lam) != convert(SymFunc::element(Basis::s, lam), Basis::e))
        return {false, "jacobi_trudi_e " + lam.str()};
    if (newton_p(d) != convert(SymFunc::element(Basis::p, {d}), Basis::e)) return {false, "newton_p " + std::to_string(d)};
  }
  return {true, std::to_string(pairs) + " basis pairs"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complete graphs", 5, complete_graphs},
      {2, "power sums via corrects", 120, [] { return suite("ppos", 6, 6, 196); }},
      {3, "c_n equals covering corrects", 120, [] { return suite("eposn", 6, std::nullopt, 196); }},
      {4, "Gasharov via LGV", 300, [] { return suite("gasharov", 5, 5); }},
      {5, "LGV determinant", 120, [] { return suite("lgv", 4, 4); }},
      {6, "sinks", 180, [] { return suite("sink", 5, std::nullopt); }},
      {7, "Cauchy identity", 30, [] { return suite("cauchy", 5, std::nullopt, 5); }},
      {8, "clan graphs", 180, [] { return suite("gnechrom", 4, 6, 22); }},
      {9, "involutions", 300, [] { return suite("involutions", 4, 4, 22); }},
      {10, "m_(l,1) triple identity", 120, [] { return suite("thn1", 6, 5, 196); }},
      {11, "Scott-Suppes", 120, scott_suppes},
      {12, "e-positivity scanner", 900, scanner},
      {13, "transition matrices", 30, transitions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs <= c.budget_seconds;
    if (!pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << " (" << o.detail << ", "
              << timing << ")" << std::endl;
  }
  return failed;
}
