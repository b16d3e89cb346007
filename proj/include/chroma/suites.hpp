#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chroma/chromatic.hpp"
#include "chroma/combinat.hpp"

namespace chroma {

struct SuiteConfig {
  std::optional<int> max_n;  // suite default when unset
  std::optional<int> max_k;
  /// Replay a single UIO (and, where relevant, a single partition).
  std::optional<UnitIntervalOrder> uio;
  std::optional<Partition> partition;
  int jobs = 1;
};

/// One (instance, check) outcome. Failures carry the replay payload.
struct CheckResult {
  std::string instance;
  std::string check;
  bool passed = true;
  nlohmann::json payload;
};

struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;  // wall time; not part of the serialized report

  std::vector<CheckResult> failures() const;
  bool ok() const { return failures().empty(); }
};

/// ppos, eposn, lgv, gasharov, sink, gnechrom, cauchy, involutions, thn1.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws BadParameter for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

nlohmann::json to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

/// Runs fn(0..count-1) on `jobs` threads and returns the results in index
/// order, so the output never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn);

struct ScanConfig {
  int max_n = 7;
  /// When set, scan P_{n,k} for n <= max_n and k = 1..family_max_k instead
  /// of every UIO.
  std::optional<int> family_max_k;
  int jobs = 1;
  ChromaticMethod method = ChromaticMethod::stable_partitions;
};

struct ScanResult {
  std::size_t scanned = 0;
  std::size_t negatives = 0;  // instances with some negative e-coefficient
  std::vector<std::size_t> per_n;  // scanned count for n = 1..max_n
  std::optional<ChromaticExpansion> first_counterexample;
  std::optional<std::string> first_counterexample_uio;
};

ScanResult scan_epositivity(const ScanConfig& config);
nlohmann::json to_json(const ScanResult& r);

}  // namespace chroma

#include "chroma/parallel.tpp"
