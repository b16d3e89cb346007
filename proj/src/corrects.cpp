#include "chroma/corrects.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/ghom.hpp"

namespace chroma {

bool is_correct(const UnitIntervalOrder& u, std::span<const int> seq) {
  if (seq.empty()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (u.precedes(seq[i + 1], seq[i])) return false;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < j && !found; ++i) found = !u.precedes(seq[i], seq[j]);
    if (!found) return false;
  }
  return true;
}

bool is_prefix_connected(const UnitIntervalOrder& u, std::span<const int> seq) {
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    std::vector<int> verts(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<bool> seen(verts.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (!seen[b] && u.incomparable(verts[a], verts[b])) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
    }
    if (reached != verts.size()) return false;
  }
  return true;
}

namespace {

// Extending a correct prefix by x keeps it correct iff the last entry is not
// above x and some entry is not below x.
bool extends(const UnitIntervalOrder& u, const ElementSequence& prefix, int x) {
  if (prefix.empty()) return true;
  if (u.precedes(x, prefix.back())) return false;
  return std::any_of(prefix.begin(), prefix.end(), [&](int w) { return !u.precedes(w, x); });
}

template <class Visit>
void corrects_dfs(const UnitIntervalOrder& u, int k, ElementSequence& prefix, std::uint64_t used_mask, bool distinct,
                  Visit&& visit) {
  if (static_cast<int>(prefix.size()) == k) {
    visit(prefix);
    return;
  }
  for (int x = 0; x < u.size(); ++x) {
    if (distinct && ((used_mask >> x) & 1u)) continue;
    if (!extends(u, prefix, x)) continue;
    prefix.push_back(x);
    corrects_dfs(u, k, prefix, used_mask | (std::uint64_t{1} << x), distinct, visit);
    prefix.pop_back();
  }
}

void guard(const UnitIntervalOrder& u, int k, std::uint64_t budget) {
  if (k < 1) throw BadParameter("correct sequences need length k >= 1");
  double total = 1;
  for (int i = 0; i < k; ++i) total *= u.size();
  if (total > static_cast<double>(budget))
    throw TooLarge("n^k = " + std::to_string(static_cast<long double>(total)) + " exceeds the correct-sequence budget");
}

}  // namespace

std::vector<ElementSequence> enumerate_corrects(const UnitIntervalOrder& u, int k, std::uint64_t budget) {
  guard(u, k, budget);
  std::vector<ElementSequence> out;
  ElementSequence prefix;
  corrects_dfs(u, k, prefix, 0, false, [&](const ElementSequence& s) { out.push_back(s); });
  return out;
}

Polynomial power_via_corrects(const UnitIntervalOrder& u, int k) {
  guard(u, k, 10'000'000);
  const int n = u.size();
  std::map<std::vector<int>, BigInt> counts;  // exponent vectors
  ElementSequence prefix;
  corrects_dfs(u, k, prefix, 0, false, [&](const ElementSequence& s) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int w : s) ++exps[static_cast<std::size_t>(w)];
    counts[exps] += 1;
  });
  Polynomial out(n);
  for (const auto& [exps, c] : counts) out.add_term(Monomial::from_exponents(exps), c);
  return out;
}

BigInt covering_corrects_count(const UnitIntervalOrder& u) {
  if (u.size() > 12) throw TooLarge("covering corrects limited to n <= 12");
  BigInt count = 0;
  ElementSequence prefix;
  corrects_dfs(u, u.size(), prefix, 0, true, [&](const ElementSequence&) { count += 1; });
  return count;
}

Polynomial m_l1_via_corrects(const UnitIntervalOrder& u, int l) {
  if (l < 2) throw BadParameter("m_{l,1} via corrects needs l >= 2 (l = 1 double-counts)");
  const int n = u.size();
  Polynomial out(n);
  for (const auto& w : enumerate_corrects(u, l)) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int x : w) ++exps[static_cast<std::size_t>(x)];
    for (int z = 0; z < n; ++z) {
      const bool above_all = std::all_of(w.begin(), w.end(), [&](int x) { return u.precedes(x, z); });
      if (!above_all && !u.precedes(z, w.back())) continue;
      auto e = exps;
      ++e[static_cast<std::size_t>(z)];
      out.add_term(Monomial::from_exponents(e), 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intersections and the switch

GridVertex leftmost_lowest_intersection(const Multipath& mp) {
  std::map<GridVertex, int> hits;
  for (const auto& p : mp.paths)
    for (const auto& v : std::set<GridVertex>(p.vertices.begin(), p.vertices.end())) ++hits[v];
  std::optional<GridVertex> best;
  for (const auto& [v, c] : hits) {
    if (c < 2) continue;
    if (!best || v.col < best->col || (v.col == best->col && v.row > best->row)) best = v;
  }
  if (!best) throw NotIntersecting("multipath has no shared vertex");
  if (hits[*best] > 2)
    throw TriplePoint("three or more paths meet at (" + std::to_string(best->col) + "," + std::to_string(best->row) + ")");
  return *best;
}

Multipath delta_switch(const Multipath& mp) {
  const GridVertex z = leftmost_lowest_intersection(mp);
  std::vector<std::size_t> through;
  for (std::size_t i = 0; i < mp.paths.size(); ++i)
    if (mp.paths[i].contains(z)) through.push_back(i);
  const std::size_t a = through[0];
  const std::size_t b = through[1];
  auto split = [&](const GridPath& p) {
    const auto it = std::find(p.vertices.begin(), p.vertices.end(), z);
    return static_cast<std::size_t>(it - p.vertices.begin());
  };
  auto picks_before = [&](const GridPath& p, std::size_t pos) {
    // Picks made on edges leaving vertices before position pos.
    std::vector<int> head;
    std::size_t t = 0;
    for (std::size_t i = 0; i + 1 <= pos && i + 1 < p.vertices.size(); ++i)
      if (p.vertices[i + 1].col != p.vertices[i].col) head.push_back(p.picked[t++]);
    return head;
  };
  const GridPath& pa = mp.paths[a];
  const GridPath& pb = mp.paths[b];
  const std::size_t sa = split(pa);
  const std::size_t sb = split(pb);
  auto join = [&](const GridPath& head, std::size_t hs, const GridPath& tail, std::size_t ts) {
    GridPath out;
    out.vertices.assign(head.vertices.begin(), head.vertices.begin() + static_cast<std::ptrdiff_t>(hs));
    out.vertices.insert(out.vertices.end(), tail.vertices.begin() + static_cast<std::ptrdiff_t>(ts), tail.vertices.end());
    out.picked = picks_before(head, hs);
    const auto tail_head = picks_before(tail, ts);
    out.picked.insert(out.picked.end(), tail.picked.begin() + static_cast<std::ptrdiff_t>(tail_head.size()), tail.picked.end());
    return out;
  };
  Multipath out = mp;
  out.paths[a] = join(pa, sa, pb, sb);
  out.paths[b] = join(pb, sb, pa, sa);
  std::swap(out.sigma[a], out.sigma[b]);
  return out;
}

std::string tag_name(MultipathTag t) {
  switch (t) {
    case MultipathTag::P: return "P";
    case MultipathTag::I: return "I";
    case MultipathTag::J: return "J";
    case MultipathTag::L: return "L";
    case MultipathTag::other: return "other";
  }
  return "?";
}

namespace {

void require_ones(const GridSpec& g) {
  for (int part : g.lambda)
    if (part != 1) throw WrongShape("classification needs the grid of lambda = 1^k");
}

ElementSequence single_picks(const Multipath& mp) {
  ElementSequence out;
  for (const auto& p : mp.paths) {
    if (p.picked.size() != 1) return {};
    out.push_back(p.picked[0] - 1);
  }
  return out;
}

}  // namespace

MultipathClass classify_multipath(const GridSpec& g, const Multipath& mp) {
  require_ones(g);
  MultipathClass out;
  if (mp.non_intersecting()) {
    const ElementSequence w = single_picks(mp);
    out.tag = !w.empty() && is_correct(g.uio, w) ? MultipathTag::P : MultipathTag::L;
    return out;
  }
  const GridVertex z = leftmost_lowest_intersection(mp);
  out.z = z;
  bool hits_b1 = false;
  for (std::size_t i = 0; i < mp.paths.size(); ++i)
    if (mp.paths[i].contains(z) && mp.sigma[i] == 0) hits_b1 = true;
  if (!hits_b1) {
    out.tag = MultipathTag::I;
    return out;
  }
  const Multipath partner = delta_switch(mp);
  out.tag = mp.multiplier() > partner.multiplier() ? MultipathTag::J : MultipathTag::other;
  return out;
}

// ---------------------------------------------------------------------------
// Chain forms, A/B, chi/psi

std::optional<ChainForm> chain_form(const GridSpec& g, const Multipath& mp) {
  require_ones(g);
  const int l = mp.multiplier();
  if (l < 1) return std::nullopt;
  ChainForm f;
  f.l = l;
  for (int i = 1; i <= mp.size(); ++i) {
    const auto& picks = mp.paths[static_cast<std::size_t>(i - 1)].picked;
    const std::size_t want = i < l ? 0 : (i == l ? static_cast<std::size_t>(l) : 1);
    if (picks.size() != want) return std::nullopt;
    for (int r : picks) f.seq.push_back(r - 1);
  }
  return f;
}

Multipath multipath_from_chain_form(const GridSpec& g, const ChainForm& f) {
  require_ones(g);
  if (f.l < 1 || f.l > g.k || static_cast<int>(f.seq.size()) != g.k) throw BadParameter("chain form does not fit the grid");
  std::vector<GridPath> paths;
  for (int i = 1; i <= g.k; ++i) {
    std::vector<int> rows;
    if (i == f.l)
      for (int q = 0; q < f.l; ++q) rows.push_back(f.seq[static_cast<std::size_t>(q)] + 1);
    else if (i > f.l)
      rows.push_back(f.seq[static_cast<std::size_t>(i - 1)] + 1);
    paths.push_back(make_path(g, g.sources[static_cast<std::size_t>(i - 1)], rows));
  }
  return make_multipath(g, std::move(paths));
}

bool satisfies_jl_conditions(const UnitIntervalOrder& u, const ChainForm& f) {
  const auto& w = f.seq;
  const auto k = w.size();
  const auto l = static_cast<std::size_t>(f.l);
  if (l == 1) {
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (u.precedes(w[i + 1], w[i])) return false;
    return in_B(u, f);
  }
  for (std::size_t j = 0; j + 1 < l; ++j)
    if (!u.precedes(w[j], w[j + 1])) return false;
  if (l < k && u.precedes(w[l], w[0])) return false;
  for (std::size_t j = l; j + 1 < k; ++j)
    if (u.precedes(w[j + 1], w[j])) return false;
  return true;
}

std::string to_string(const ChainForm& f) {
  std::string s = std::to_string(f.l) + ";";
  for (std::size_t i = 0; i < f.seq.size(); ++i) s += (i ? "," : "") + std::to_string(f.seq[i] + 1);
  return s;
}

namespace {

// 0-based positions m >= l whose entry lies above every earlier entry.
std::vector<std::size_t> dominating_positions(const UnitIntervalOrder& u, const ChainForm& f) {
  std::vector<std::size_t> out;
  int top = -1;
  for (std::size_t m = 0; m < f.seq.size(); ++m) {
    if (m >= static_cast<std::size_t>(f.l) && top >= 0 && u.precedes(top, f.seq[m])) out.push_back(m);
    top = std::max(top, f.seq[m]);
  }
  return out;
}

}  // namespace

bool in_B(const UnitIntervalOrder& u, const ChainForm& f) { return !dominating_positions(u, f).empty(); }

bool in_A(const UnitIntervalOrder& u, const ChainForm& f) { return f.l > 1 && !in_B(u, f); }

ChainForm chi(const UnitIntervalOrder& u, const ChainForm& f) {
  const auto dom = dominating_positions(u, f);
  if (dom.empty()) throw BadParameter("chi is defined on B only: " + to_string(f));
  const std::size_t m = dom.back();
  ChainForm out;
  out.l = f.l + 1;
  const auto l = static_cast<std::size_t>(f.l);
  out.seq.assign(f.seq.begin(), f.seq.begin() + static_cast<std::ptrdiff_t>(l));
  out.seq.push_back(f.seq[m]);
  for (std::size_t i = l; i < f.seq.size(); ++i)
    if (i != m) out.seq.push_back(f.seq[i]);
  return out;
}

ChainForm psi(const UnitIntervalOrder& u, const ChainForm& f) {
  if (!in_A(u, f)) throw BadParameter("psi is defined on A only: " + to_string(f));
  const auto l = static_cast<std::size_t>(f.l);
  const int top = f.seq[l - 1];
  ElementSequence rest(f.seq.begin(), f.seq.begin() + static_cast<std::ptrdiff_t>(l - 1));
  rest.insert(rest.end(), f.seq.begin() + static_cast<std::ptrdiff_t>(l), f.seq.end());
  std::size_t p = l - 1;
  while (p < rest.size() && u.precedes(rest[p], top)) ++p;
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(p), top);
  return {f.l - 1, rest};
}

std::optional<std::vector<Monomial>> chi_truncated(const UnitIntervalOrder& u, const ChainForm& f) {
  const int n = u.size();
  std::optional<std::size_t> m;
  for (std::size_t j = 1; j < f.seq.size(); ++j) {
    bool above = true;
    for (std::size_t i = 0; i < j && above; ++i) above = u.precedes(f.seq[i], f.seq[j]);
    if (above) m = j;
  }
  if (!m) return std::nullopt;
  const auto l = static_cast<std::size_t>(f.l);
  std::vector<Monomial> out(l - 1, Monomial(n));
  Monomial chain(n);
  for (std::size_t i = 0; i < l; ++i) chain = chain * Monomial::variable(n, f.seq[i]);
  out.push_back(chain * Monomial::variable(n, f.seq[*m]));
  for (std::size_t i = l; i < f.seq.size(); ++i)
    if (i != *m) out.push_back(Monomial::variable(n, f.seq[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

Polynomial chain_weight(int n, const ChainForm& f) {
  Monomial m(n);
  for (int w : f.seq) m = m * Monomial::variable(n, w);
  return Polynomial::term(m, f.l % 2 == 1 ? 1 : -1);
}

std::string weight_key(const Multipath& mp) {
  std::string key;
  for (const auto& p : mp.paths) {
    for (int r : p.picked) key += std::to_string(r) + ".";
    key += "|";
  }
  return key;
}

}  // namespace

bool CancellationReport::ok() const {
  return sum_i.is_zero() && sum_jl.is_zero() && sum_jl == sum_jl_reduced && total == sum_p && sum_p == pk &&
         involution_ok && partner_ok && j_shape_ok && weights_injective;
}

CancellationReport verify_cancellations(const UnitIntervalOrder& u, int k) {
  const int n = u.size();
  const GridSpec g = build_grid(u, k, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  CancellationReport r;
  r.uio = u.str();
  r.k = k;
  r.sum_i = r.sum_jl = r.sum_jl_reduced = r.sum_p = r.total = Polynomial(n);
  r.pk = power_g(GAnalogueContext(u), k);
  const auto all = enumerate_multipaths(g);
  r.omega = all.size();
  std::set<std::string> weights;
  for (const auto& mp : all) {
    if (!weights.insert(weight_key(mp)).second) r.weights_injective = false;
    const MultipathClass cls = classify_multipath(g, mp);
    const Polynomial w = mp.weight(n);
    const Polynomial signed_w = w * BigInt(mp.sign() * mp.multiplier());
    r.total += signed_w;
    switch (cls.tag) {
      case MultipathTag::P: ++r.count_p; r.sum_p += w; break;
      case MultipathTag::I: ++r.count_i; r.sum_i += signed_w; break;
      case MultipathTag::J: ++r.count_j; r.sum_jl += signed_w; break;
      case MultipathTag::L: ++r.count_l; r.sum_jl += signed_w; break;
      case MultipathTag::other: ++r.count_other; r.sum_jl += signed_w; break;
    }
    if (cls.tag == MultipathTag::J || cls.tag == MultipathTag::L) {
      const auto f = chain_form(g, mp);
      if (!f) {
        r.j_shape_ok = false;
        r.problems.push_back("no chain form: " + to_json(mp).dump());
      } else {
        r.sum_jl_reduced += chain_weight(n, *f);
      }
    }
    if (cls.tag == MultipathTag::I) {
      const Multipath d = delta_switch(mp);
      const bool good = classify_multipath(g, d).tag == MultipathTag::I && delta_switch(d) == mp &&
                        d.sign() == -mp.sign() && d.multiplier() == mp.multiplier() && d.weight(n) == w;
      if (!good) {
        r.involution_ok = false;
        r.problems.push_back("delta_z fails on I: " + to_json(mp).dump());
      }
    }
    if (cls.tag == MultipathTag::J || cls.tag == MultipathTag::other) {
      const Multipath d = delta_switch(mp);
      const MultipathTag want = cls.tag == MultipathTag::J ? MultipathTag::other : MultipathTag::J;
      const bool good = classify_multipath(g, d).tag == want && std::abs(d.multiplier() - mp.multiplier()) == 1 &&
                        d.sign() == -mp.sign() && d.weight(n) == w && delta_switch(d) == mp;
      if (!good) {
        r.partner_ok = false;
        r.problems.push_back("partner mismatch: " + to_json(mp).dump());
      }
    }
  }
  return r;
}

nlohmann::json to_json(const CancellationReport& r) {
  return {{"uio", r.uio},
          {"k", r.k},
          {"sumI", r.sum_i.str()},
          {"sumJL", r.sum_jl.str()},
          {"total", to_json(r.total)},
          {"pk", to_json(r.pk)},
          {"classes", {{"omega", r.omega}, {"P", r.count_p}, {"I", r.count_i}, {"J", r.count_j}, {"L", r.count_l}, {"other", r.count_other}}},
          {"involution", r.involution_ok && r.partner_ok},
          {"ok", r.ok()}};
}

bool ChiPsiReport::ok() const {
  return split_ok && jl_conditions_ok && chi_maps_into_a && psi_maps_into_b && mutually_inverse && weight_preserving && sign_reversing &&
         signed_sum_zero;
}

ChiPsiReport chi_psi_check(const UnitIntervalOrder& u, int k) {
  const int n = u.size();
  const GridSpec g = build_grid(u, k, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  ChiPsiReport r;
  r.uio = u.str();
  r.k = k;
  std::set<ChainForm> a_set;
  std::set<ChainForm> b_set;
  for (const auto& mp : enumerate_multipaths(g)) {
    const MultipathTag tag = classify_multipath(g, mp).tag;
    if (tag != MultipathTag::J && tag != MultipathTag::L) continue;
    const auto f = chain_form(g, mp);
    if (!f) {
      r.split_ok = false;
      r.problems.push_back("J/L multipath without chain form: " + to_json(mp).dump());
      continue;
    }
    if (!satisfies_jl_conditions(u, *f)) {
      r.jl_conditions_ok = false;
      r.problems.push_back("J/L membership conditions fail for " + to_string(*f));
    }
    const bool a = in_A(u, *f);
    const bool b = in_B(u, *f);
    if (a == b) {
      r.split_ok = false;
      r.problems.push_back("form in neither or both of A, B: " + to_string(*f));
    }
    (a ? a_set : b_set).insert(*f);
  }
  r.size_a = a_set.size();
  r.size_b = b_set.size();
  auto sorted = [](ElementSequence s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  for (const auto& b : b_set) {
    const ChainForm a = chi(u, b);
    if (!a_set.count(a)) {
      r.chi_maps_into_a = false;
      r.problems.push_back("chi(" + to_string(b) + ") = " + to_string(a) + " not in A");
    } else if (psi(u, a) != b) {
      r.mutually_inverse = false;
      r.problems.push_back("psi(chi(" + to_string(b) + ")) differs");
    }
    if (sorted(a.seq) != sorted(b.seq)) r.weight_preserving = false;
    if ((a.l - b.l) % 2 == 0) r.sign_reversing = false;
  }
  for (const auto& a : a_set) {
    const ChainForm b = psi(u, a);
    if (!b_set.count(b)) {
      r.psi_maps_into_b = false;
      r.problems.push_back("psi(" + to_string(a) + ") = " + to_string(b) + " not in B");
    } else if (chi(u, b) != a) {
      r.mutually_inverse = false;
      r.problems.push_back("chi(psi(" + to_string(a) + ")) differs");
    }
  }
  Polynomial sum(n);
  for (const auto& f : a_set) sum += chain_weight(n, f);
  for (const auto& f : b_set) sum += chain_weight(n, f);
  r.signed_sum_zero = sum.is_zero();
  return r;
}

nlohmann::json to_json(const ChiPsiReport& r) {
  return {{"uio", r.uio},
          {"k", r.k},
          {"A", r.size_a},
          {"B", r.size_b},
          {"chiIntoA", r.chi_maps_into_a},
          {"psiIntoB", r.psi_maps_into_b},
          {"mutuallyInverse", r.mutually_inverse},
          {"weightPreserving", r.weight_preserving},
          {"signReversing", r.sign_reversing},
          {"signedSumZero", r.signed_sum_zero},
          {"jlConditions", r.jl_conditions_ok},
          {"ok", r.ok()}};
}

}  // namespace chroma
