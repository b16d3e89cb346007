#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/chromatic.hpp"
#include "chroma/combinat.hpp"
#include "chroma/errors.hpp"
#include "chroma/suites.hpp"
#include "chroma/symfunc.hpp"

namespace {

using namespace chroma;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string action;
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::optional<std::string> uio;
  std::optional<std::string> partition;
  std::optional<std::string> basis;
  std::optional<std::string> instance;
  std::string format = "json";
  int jobs = 1;
  std::optional<std::string> cache_dir;
  int max_degree = 6;
  bool family = false;
  bool brute_force = false;
};

// {"2,1": 1, "3": 3}
std::string flat_json(const SymFunc& f) {
  const nlohmann::json obj = coefficients_json(f);
  std::string s = "{";
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it != obj.begin()) s += ", ";
    s += nlohmann::json(it.key()).dump() + ": " + it.value().dump();
  }
  return s + "}";
}

UnitIntervalOrder require_uio(const RunConfig& cfg) {
  if (!cfg.uio) throw UsageError("--uio is required");
  return UnitIntervalOrder::parse(*cfg.uio);
}

int cmd_csf(const RunConfig& cfg) {
  const UnitIntervalOrder u = require_uio(cfg);
  const Graph g = inc_graph(u);
  ChromaticOptions opts;
  if (u.size() > opts.max_brute_force_n && !cfg.brute_force) opts.method = ChromaticMethod::stable_partitions;
  if (cfg.basis) {
    const Basis b = parse_basis(*cfg.basis);
    const SymFunc f = convert(chromatic_symmetric(g, opts), b);
    if (cfg.format == "json") {
      std::cout << flat_json(f) << '\n';
    } else if (cfg.format == "csv") {
      std::cout << "partition,coeff\n";
      for (const auto& [lambda, c] : f.coeffs()) std::cout << '"' << lambda.str() << "\"," << to_string(c) << '\n';
    } else {
      std::cout << f.str() << '\n';
    }
    return kExitOk;
  }
  const ChromaticExpansion x = positivity_report(g, opts);
  if (cfg.format == "json") {
    nlohmann::json out = to_json(x);
    out["uio"] = u.str();
    std::cout << out.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "basis,partition,coeff\n";
    for (const SymFunc* f : {&x.m, &x.e, &x.s})
      for (const auto& [lambda, c] : f->coeffs())
        std::cout << basis_tag(f->basis()) << ",\"" << lambda.str() << "\"," << to_string(c) << '\n';
  } else {
    std::cout << "uio " << u.str() << "\n"
              << "m: " << x.m.str() << "\n"
              << "e: " << x.e.str() << "\n"
              << "s: " << x.s.str() << "\n"
              << "e-positive: " << (x.e_positive ? "yes" : "no") << "\n"
              << "s-positive: " << (x.s_positive ? "yes" : "no") << "\n"
              << "sink check: " << (x.sink_check ? "pass" : "fail") << '\n';
  }
  return x.sink_check ? kExitOk : kExitFailure;
}

void apply_instance(const std::string& text, SuiteConfig& sc) {
  nlohmann::json payload;
  if (!text.empty() && text.front() == '{') {
    try {
      payload = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw UsageError(std::string("--instance is not valid JSON: ") + ex.what());
    }
    if (payload.contains("payload")) payload = payload["payload"];
  } else {
    // uio=3,4,4 or uio=3,4,4;partition=2,1
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw UsageError("--instance expects key=value pairs");
      payload[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  if (payload.contains("uio")) sc.uio = UnitIntervalOrder::parse(payload["uio"].get<std::string>());
  if (payload.contains("partition")) sc.partition = Partition::parse(payload["partition"].get<std::string>());
  for (const char* key : {"k", "l", "d"})
    if (payload.contains(key)) {
      const auto& v = payload[key];
      sc.max_k = v.is_string() ? std::stoi(v.get<std::string>()) : v.get<int>();
    }
  if (payload.contains("alpha")) {
    int sum = 0;
    std::stringstream as(payload["alpha"].get<std::string>());
    std::string x;
    while (std::getline(as, x, ',')) sum += std::stoi(x);
    sc.max_k = sum;
  }
}

int cmd_verify(const RunConfig& cfg) {
  if (!is_suite(cfg.action)) {
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite '" + cfg.action + "' (expected one of " + names + ")");
  }
  SuiteConfig sc;
  sc.max_n = cfg.max_n;
  sc.max_k = cfg.max_k;
  sc.jobs = cfg.jobs;
  if (cfg.uio) sc.uio = UnitIntervalOrder::parse(*cfg.uio);
  if (cfg.partition) sc.partition = Partition::parse(*cfg.partition);
  if (cfg.instance) apply_instance(*cfg.instance, sc);
  const VerificationReport r = run_suite(cfg.action, sc);
  if (cfg.format == "json")
    std::cout << to_json(r).dump() << '\n';
  else if (cfg.format == "csv")
    std::cout << to_csv(r);
  else
    std::cout << to_text(r);
  std::cerr << "wall time: " << r.seconds << " s\n";
  return r.ok() ? kExitOk : kExitFailure;
}

int cmd_scan(const RunConfig& cfg) {
  ScanConfig sc;
  sc.max_n = cfg.max_n.value_or(7);
  sc.jobs = cfg.jobs;
  if (cfg.family) sc.family_max_k = cfg.max_k.value_or(3);
  if (cfg.brute_force) sc.method = ChromaticMethod::brute_force;
  const ScanResult r = scan_epositivity(sc);
  if (cfg.format == "json") {
    std::cout << to_json(r).dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "n,scanned\n";
    for (std::size_t i = 0; i < r.per_n.size(); ++i) std::cout << i + 1 << ',' << r.per_n[i] << '\n';
    std::cout << "total," << r.scanned << "\nnegatives," << r.negatives << '\n';
  } else {
    std::cout << "scanned " << r.scanned << " UIOs, " << r.negatives << " with a negative e-coefficient\n";
    if (r.first_counterexample)
      std::cout << "first counterexample: uio " << *r.first_counterexample_uio << "\n  e: " << r.first_counterexample->e.str()
                << '\n';
  }
  return r.negatives == 0 ? kExitOk : kExitFailure;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CHROMA_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(xdg) / "chroma";
  if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".cache" / "chroma";
  return ".chroma-cache";
}

int cmd_cache(const RunConfig& cfg) {
  auto& cache = TransitionCache::global();
  const std::filesystem::path dir = cfg.cache_dir ? std::filesystem::path(*cfg.cache_dir) : default_cache_dir();
  cache.set_directory(dir);
  if (cfg.action == "list") {
    const auto keys = cache.list_disk();
    if (cfg.format == "json") {
      std::cout << nlohmann::json{{"directory", dir.string()}, {"keys", keys}}.dump() << '\n';
    } else {
      for (const auto& k : keys) std::cout << k << '\n';
    }
  } else if (cfg.action == "rebuild") {
    if (cfg.max_degree < 1) throw UsageError("--max-degree must be positive");
    const int count = cache.rebuild(cfg.max_degree);
    if (cfg.format == "json")
      std::cout << nlohmann::json{{"directory", dir.string()}, {"matrices", count}, {"maxDegree", cfg.max_degree}}.dump() << '\n';
    else
      std::cout << "materialized " << count << " matrices in " << dir.string() << '\n';
  } else if (cfg.action == "clear") {
    const int removed = cache.clear_disk();
    if (cfg.format == "json")
      std::cout << nlohmann::json{{"directory", dir.string()}, {"removed", removed}}.dump() << '\n';
    else
      std::cout << "removed " << removed << " files from " << dir.string() << '\n';
  } else {
    throw UsageError("cache action must be list, rebuild or clear");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions of unit interval orders"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--max-n", cfg.max_n, "Largest number of elements")->check(CLI::PositiveNumber);
  app.add_option("--max-k", cfg.max_k, "Largest sequence length, partition weight or alpha sum")->check(CLI::PositiveNumber);
  app.add_option("--uio", cfg.uio, "Unit interval order as next values, e.g. 3,4,4");
  app.add_option("--partition", cfg.partition, "Partition, e.g. 4,4,3,2");
  app.add_option("--basis", cfg.basis, "Output basis")->check(CLI::IsMember({"e", "m", "p", "s"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Transition matrix cache directory");

  auto* csf = app.add_subcommand("csf", "Chromatic symmetric function of inc(U)");
  csf->add_flag("--brute-force", cfg.brute_force, "Always enumerate colorings");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.action, "ppos, eposn, lgv, gasharov, sink, gnechrom, cauchy, involutions, thn1")->required();
  verify->add_option("--instance", cfg.instance, "Replay one instance (key=value;... or a failure payload)");
  auto* scan = app.add_subcommand("scan", "Search UIOs for a negative e-coefficient");
  scan->add_flag("--family", cfg.family, "Scan P_{n,k} = {i/(k+1)} for k <= max-k instead of every UIO");
  scan->add_flag("--brute-force", cfg.brute_force, "Use coloring enumeration instead of stable partitions");
  auto* cache = app.add_subcommand("cache", "Manage the transition matrix cache");
  cache->add_option("action", cfg.action, "list, rebuild or clear")->required();
  cache->add_option("--max-degree", cfg.max_degree, "Largest degree for rebuild");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cfg.cache_dir && !cache->parsed()) TransitionCache::global().set_directory(*cfg.cache_dir);
    if (csf->parsed()) return cmd_csf(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (cache->parsed()) return cmd_cache(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedNext& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
