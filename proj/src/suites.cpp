#include "chroma/suites.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "chroma/corrects.hpp"
#include "chroma/errors.hpp"
#include "chroma/ghom.hpp"
#include "chroma/lgvgrid.hpp"

namespace chroma {

std::vector<CheckResult> VerificationReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ppos", "eposn", "lgv", "gasharov", "sink",
                                                 "gnechrom", "cauchy", "involutions", "thn1"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

using Checks = std::vector<CheckResult>;

std::vector<UnitIntervalOrder> uios_for(const SuiteConfig& cfg, int default_max_n) {
  if (cfg.uio) return {*cfg.uio};
  std::vector<UnitIntervalOrder> out;
  for (int n = 1; n <= cfg.max_n.value_or(default_max_n); ++n) {
    auto level = enumerate_uios(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> partitions_for(const SuiteConfig& cfg, int max_weight) {
  if (cfg.partition) return {*cfg.partition};
  std::vector<Partition> out;
  for (int d = 1; d <= max_weight; ++d) {
    auto level = partitions_of(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void add(Checks& out, const std::string& instance, const std::string& check, bool passed, nlohmann::json payload = {}) {
  out.push_back({instance, check, passed, passed ? nlohmann::json() : std::move(payload)});
}

// Any exception inside an instance becomes a failed check instead of
// aborting the whole suite.
template <class Fn>
Checks guarded(const std::string& instance, const nlohmann::json& replay, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    nlohmann::json payload = replay;
    payload["error"] = ex.what();
    return {CheckResult{instance, "exception", false, payload}};
  }
}

std::string uio_instance(const UnitIntervalOrder& u) { return "uio=" + u.str(); }

// ---------------------------------------------------------------------------

Checks suite_ppos(const UnitIntervalOrder& u, int max_k) {
  Checks out;
  const GAnalogueContext ctx(u);
  for (int k = 1; k <= max_k; ++k) {
    const Polynomial lhs = power_via_corrects(u, k);
    const Polynomial rhs = power_g(ctx, k);
    add(out, uio_instance(u), "k=" + std::to_string(k), lhs == rhs,
        {{"uio", u.str()}, {"k", k}, {"corrects", to_json(lhs)}, {"powerG", to_json(rhs)}});
  }
  return out;
}

Checks suite_eposn(const UnitIntervalOrder& u) {
  Checks out;
  const auto c = e_coefficients(inc_graph(u));
  const Partition top{u.size()};
  const BigInt cn = c.count(top) ? c.at(top) : BigInt(0);
  const BigInt covering = covering_corrects_count(u);
  const nlohmann::json payload = {{"uio", u.str()}, {"cn", cn.str()}, {"coveringCorrects", covering.str()}};
  add(out, uio_instance(u), "cn=covering", cn == covering, payload);
  add(out, uio_instance(u), "cn>=0", cn >= 0, payload);
  return out;
}

Checks suite_lgv(const UnitIntervalOrder& u, const std::vector<Partition>& lambdas) {
  Checks out;
  const GAnalogueContext ctx(u);
  for (const auto& lambda : lambdas) {
    const GridSpec g = build_grid(u, lambda.length(), lambda);
    const std::string check = "lambda=" + lambda.str();
    const nlohmann::json replay = {{"uio", u.str()}, {"partition", lambda.str()}};
    const LgvResult res = lgv_report(g);
    add(out, uio_instance(u), check + ":det=nonintersecting", res.determinant_matches, replay);
    add(out, uio_instance(u), check + ":det=all", res.all_signed_sum_matches, replay);
    add(out, uio_instance(u), check + ":sigma=id", res.identity_permutations, replay);
    bool transpose = true;
    for (int i = 0; i < g.k; ++i)
      for (int j = 0; j < g.k; ++j)
        transpose = transpose && path_sum(g, g.sources[static_cast<std::size_t>(i)], g.destinations[static_cast<std::size_t>(j)]) ==
                                     ctx.elementary(lambda[j] + i - j);
    add(out, uio_instance(u), check + ":entries", transpose, replay);
    add(out, uio_instance(u), check + ":planar", grid_is_planar_dag(g), replay);
  }
  return out;
}

Checks suite_gasharov(const UnitIntervalOrder& u, const std::vector<Partition>& lambdas) {
  Checks out;
  const GAnalogueContext ctx(u);
  const int n = u.size();
  const GridSpec g = build_grid(u, 1, Partition{n});
  bool sums = true;
  for (int j = 0; j <= n; ++j) sums = sums && path_sum(g, {1, 1}, {1 + j, n + 1}) == ctx.elementary(j);
  add(out, uio_instance(u), "pathsum=e^G", sums, {{"uio", u.str()}});
  for (const auto& lambda : lambdas) {
    const Polynomial s = schur_g(ctx, lambda);
    const nlohmann::json replay = {{"uio", u.str()}, {"partition", lambda.str()}};
    add(out, uio_instance(u), "lambda=" + lambda.str() + ":positive", is_monomial_positive(s),
        {{"uio", u.str()}, {"partition", lambda.str()}, {"schurG", to_json(s)}});
    const Polynomial via = schur_via_lgv(u, lambda.conjugate());
    add(out, uio_instance(u), "lambda=" + lambda.str() + ":lgv", via == s,
        {{"uio", u.str()}, {"partition", lambda.str()}, {"schurG", to_json(s)}, {"lgv", to_json(via)}});
  }
  return out;
}

Checks suite_sink(const Graph& g, const std::string& instance) {
  Checks out;
  const auto dp = acyclic_orientation_sinks(g);
  const auto brute = acyclic_orientation_sinks_brute(g);
  nlohmann::json sinks = nlohmann::json::object();
  for (const auto& [j, c] : dp) sinks[std::to_string(j)] = c.str();
  add(out, instance, "dp=orientations", dp == brute, {{"graph", g.str()}, {"sinks", sinks}});
  add(out, instance, "sink=sum c", check_sink_theorem(g), {{"graph", g.str()}, {"sinks", sinks}});
  return out;
}

std::vector<std::vector<int>> alphas(int n, int max_entry, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    if (std::accumulate(a.begin(), a.end(), 0) <= max_sum) out.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == max_entry) a[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string alpha_str(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

Checks suite_gnechrom(const UnitIntervalOrder& u, int max_sum) {
  Checks out;
  const GAnalogueContext ctx(u);
  const int n = u.size();
  for (int d = 1; d <= std::min(n, 4); ++d)
    add(out, uio_instance(u), "T-slice d=" + std::to_string(d), T_slice_consistent(ctx, d), {{"uio", u.str()}, {"d", d}});
  for (const auto& alpha : alphas(n, 2, max_sum)) {
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (d == 0) continue;
    const std::string a = "alpha=" + alpha_str(alpha);
    const SymFunc lhs = clan_coefficient(ctx, alpha);
    const SymFunc x = chromatic_symmetric(clan_graph(ctx.graph(), alpha));
    add(out, uio_instance(u), a, lhs == x,
        {{"uio", u.str()}, {"alpha", alpha_str(alpha)}, {"lhs", to_json(lhs)}, {"X", to_json(x)}});
    // Monomial coefficients of m^G_lambda, scaled by prod alpha!, are the
    // e-coefficients of X_{G^alpha}.
    const SymFunc xe = convert(x, Basis::e);
    const Monomial target = Monomial::from_exponents(alpha);
    BigInt scale = 1;
    for (int ai : alpha) scale *= factorial(ai);
    bool coeff_ok = true;
    bool s_forward = true;
    bool all_s_positive = true;
    for (const auto& lambda : partitions_of(d)) {
      coeff_ok = coeff_ok && Rational(monomial_g(ctx, lambda).coeff(target) * scale) == xe.coeff(lambda);
      all_s_positive = all_s_positive && is_monomial_positive(schur_g(ctx, lambda));
    }
    if (all_s_positive) s_forward = convert(x, Basis::s).is_nonnegative();
    add(out, uio_instance(u), a + ":m^G=c", coeff_ok, {{"uio", u.str()}, {"alpha", alpha_str(alpha)}, {"e", to_json(xe)}});
    add(out, uio_instance(u), a + ":s-forward", s_forward, {{"uio", u.str()}, {"alpha", alpha_str(alpha)}});
  }
  return out;
}

Checks suite_involutions(const UnitIntervalOrder& u, int max_k) {
  Checks out;
  for (int k = 1; k <= max_k; ++k) {
    const auto canc = verify_cancellations(u, k);
    nlohmann::json payload = to_json(canc);
    payload["problems"] = canc.problems;
    add(out, uio_instance(u), "k=" + std::to_string(k) + ":cancellations", canc.ok(), payload);
    const auto cp = chi_psi_check(u, k);
    nlohmann::json cpp = to_json(cp);
    cpp["problems"] = cp.problems;
    add(out, uio_instance(u), "k=" + std::to_string(k) + ":chi-psi", cp.ok(), cpp);
  }
  return out;
}

Checks suite_thn1(const UnitIntervalOrder& u, int max_l) {
  Checks out;
  const GAnalogueContext ctx(u);
  const int n = u.size();
  const Polynomial p1 = power_g(ctx, 1);
  for (int l = 2; l <= max_l; ++l) {
    const Polynomial via = m_l1_via_corrects(u, l);
    const Polynomial diff = power_g(ctx, l) * p1 - power_g(ctx, l + 1);
    const Polynomial mg = monomial_g(ctx, Partition{l, 1});
    add(out, uio_instance(u), "l=" + std::to_string(l), via == diff && diff == mg,
        {{"uio", u.str()}, {"l", l}, {"corrects", to_json(via)}, {"pp-p", to_json(diff)}, {"mG", to_json(mg)}});
  }
  if (n >= 3) {
    const Polynomial top = monomial_g(ctx, Partition{n - 1, 1});
    add(out, uio_instance(u), "m^G_(n-1,1)>=0", is_monomial_positive(top), {{"uio", u.str()}, {"mG", to_json(top)}});
  }
  return out;
}

template <class Item>
VerificationReport run_items(const std::string& name, const std::vector<Item>& items, int jobs,
                             const std::function<Checks(const Item&)>& fn) {
  VerificationReport r;
  r.suite = name;
  r.instances = items.size();
  const auto per = parallel_map<Checks>(items.size(), jobs, [&](std::size_t i) { return fn(items[i]); });
  for (const auto& c : per) r.checks.insert(r.checks.end(), c.begin(), c.end());
  return r;
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  using U = UnitIntervalOrder;
  auto per_uio = [&](int default_n, const std::function<Checks(const U&)>& fn) {
    return run_items<U>(name, uios_for(cfg, default_n), cfg.jobs, [&](const U& u) {
      return guarded(uio_instance(u), {{"uio", u.str()}}, [&] { return fn(u); });
    });
  };
  if (name == "ppos") {
    const int k = cfg.max_k.value_or(6);
    r = per_uio(6, [&](const U& u) { return suite_ppos(u, k); });
  } else if (name == "eposn") {
    r = per_uio(6, [&](const U& u) { return suite_eposn(u); });
  } else if (name == "lgv") {
    const auto lambdas = partitions_for(cfg, cfg.max_k.value_or(4));
    r = per_uio(4, [&](const U& u) { return suite_lgv(u, lambdas); });
  } else if (name == "gasharov") {
    const auto lambdas = partitions_for(cfg, cfg.max_k.value_or(5));
    r = per_uio(5, [&](const U& u) { return suite_gasharov(u, lambdas); });
  } else if (name == "sink") {
    std::vector<std::pair<std::string, Graph>> items;
    if (cfg.uio) {
      items.emplace_back(uio_instance(*cfg.uio), inc_graph(*cfg.uio));
    } else {
      const int max_n = cfg.max_n.value_or(5);
      for (int n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) items.emplace_back("graph=" + g.str(), g);
      for (const auto& u : uios_for(SuiteConfig{max_n + 1, {}, {}, {}, 1}, max_n + 1))
        items.emplace_back(uio_instance(u), inc_graph(u));
    }
    using Item = std::pair<std::string, Graph>;
    r = run_items<Item>(name, items, cfg.jobs, [&](const Item& it) {
      return guarded(it.first, {{"graph", it.second.str()}}, [&] { return suite_sink(it.second, it.first); });
    });
  } else if (name == "gnechrom") {
    const int max_sum = cfg.max_k.value_or(6);
    r = per_uio(4, [&](const U& u) { return suite_gnechrom(u, max_sum); });
  } else if (name == "cauchy") {
    std::vector<int> degrees(static_cast<std::size_t>(cfg.max_k.value_or(5)));
    std::iota(degrees.begin(), degrees.end(), 1);
    r = run_items<int>(name, degrees, cfg.jobs, [&](const int& d) {
      const std::string inst = "d=" + std::to_string(d);
      return guarded(inst, {{"d", d}}, [&] {
        Checks out;
        add(out, inst, "three-way", cauchy_check(d, d), {{"d", d}, {"N", d}});
        return out;
      });
    });
  } else if (name == "involutions") {
    const int k = cfg.max_k.value_or(4);
    r = per_uio(4, [&](const U& u) { return suite_involutions(u, k); });
  } else if (name == "thn1") {
    const int l = cfg.max_k.value_or(5);
    r = per_uio(6, [&](const U& u) { return suite_thn1(u, l); });
  } else {
    throw BadParameter("unknown suite '" + name + "'");
  }
  r.suite = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures())
    failures.push_back({{"instance", f.instance}, {"check", f.check}, {"payload", f.payload}});
  return {{"suite", r.suite},
          {"instances", r.instances},
          {"checks", r.checks.size()},
          {"failures", failures},
          {"ok", r.ok()}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite,instance,check,status\n";
  for (const auto& c : r.checks)
    os << csv_field(r.suite) << ',' << csv_field(c.instance) << ',' << csv_field(c.check) << ','
       << (c.passed ? "pass" : "fail") << '\n';
  return os.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  const auto failures = r.failures();
  os << "suite " << r.suite << ": " << r.instances << " instances, " << r.checks.size() << " checks, "
     << failures.size() << " failures\n";
  for (const auto& f : failures) os << "FAIL " << f.instance << " [" << f.check << "] " << f.payload.dump() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Scanner

ScanResult scan_epositivity(const ScanConfig& config) {
  if (config.max_n < 1 || config.max_n > 10) throw BadParameter("scan: max-n must lie in 1..10");
  std::vector<UnitIntervalOrder> items;
  ScanResult r;
  r.per_n.assign(static_cast<std::size_t>(config.max_n), 0);
  for (int n = 1; n <= config.max_n; ++n) {
    if (config.family_max_k) {
      for (int k = 1; k <= *config.family_max_k; ++k) items.push_back(uio_family(n, k));
      r.per_n[static_cast<std::size_t>(n - 1)] = static_cast<std::size_t>(*config.family_max_k);
    } else {
      auto level = enumerate_uios(n);
      r.per_n[static_cast<std::size_t>(n - 1)] = level.size();
      items.insert(items.end(), level.begin(), level.end());
    }
  }
  ChromaticOptions opts;
  opts.method = config.method;
  opts.max_brute_force_n = std::max(opts.max_brute_force_n, config.max_n);
  struct Outcome {
    bool negative = false;
    std::optional<ChromaticExpansion> report;
  };
  const auto outcomes = parallel_map<Outcome>(items.size(), config.jobs, [&](std::size_t i) {
    const Graph g = inc_graph(items[i]);
    const SymFunc e = convert(chromatic_symmetric(g, opts), Basis::e);
    Outcome o;
    o.negative = !e.is_nonnegative();
    if (o.negative) o.report = positivity_report(g, opts);
    return o;
  });
  r.scanned = items.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].negative) continue;
    ++r.negatives;
    if (!r.first_counterexample) {
      r.first_counterexample = outcomes[i].report;
      r.first_counterexample_uio = items[i].str();
    }
  }
  return r;
}

nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json per_n = nlohmann::json::object();
  for (std::size_t i = 0; i < r.per_n.size(); ++i) per_n[std::to_string(i + 1)] = r.per_n[i];
  nlohmann::json out = {{"scanned", r.scanned}, {"perN", per_n}, {"negatives", r.negatives}};
  if (r.first_counterexample) {
    out["counterexample"] = to_json(*r.first_counterexample);
    out["counterexample"]["uio"] = *r.first_counterexample_uio;
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace chroma
