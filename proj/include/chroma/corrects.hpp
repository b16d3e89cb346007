#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chroma/combinat.hpp"
#include "chroma/lgvgrid.hpp"
#include "chroma/polyring.hpp"

namespace chroma {

/// Elements are 0-based indices into the UIO.
using ElementSequence = std::vector<int>;

/// w_i not > w_{i+1}, and every w_j (j >= 2) has an earlier w_i not < w_j.
bool is_correct(const UnitIntervalOrder& u, std::span<const int> seq);
/// Each prefix {w_1..w_j} is connected in the incomparability graph
/// (equal elements count as adjacent).
bool is_prefix_connected(const UnitIntervalOrder& u, std::span<const int> seq);

/// All correct sequences of length k in lexicographic order. Throws TooLarge
/// when n^k exceeds `budget`.
std::vector<ElementSequence> enumerate_corrects(const UnitIntervalOrder& u, int k,
                                                std::uint64_t budget = 10'000'000);

/// Sum over corrects of length k of w_1 ... w_k.
Polynomial power_via_corrects(const UnitIntervalOrder& u, int k);

/// Number of corrects of length n that use every element exactly once.
BigInt covering_corrects_count(const UnitIntervalOrder& u);

/// Sum over (w, z), w correct of length l, with z above every w_i or z below
/// w_l, of w_1 ... w_l z. Throws BadParameter for l < 2.
Polynomial m_l1_via_corrects(const UnitIntervalOrder& u, int l);

/// Shared vertex with the smallest column, ties broken by the largest row.
/// Throws NotIntersecting, or TriplePoint if three or more paths meet there.
GridVertex leftmost_lowest_intersection(const Multipath& mp);

/// Swap the tails of the two paths meeting at the leftmost lowest
/// intersection point. Throws NotIntersecting.
Multipath delta_switch(const Multipath& mp);

enum class MultipathTag { P, I, J, L, other };
std::string tag_name(MultipathTag t);

struct MultipathClass {
  MultipathTag tag = MultipathTag::other;
  std::optional<GridVertex> z;
};

/// For the lambda = 1^k grid (WrongShape otherwise):
///   P: non-intersecting and the weight vector is a correct sequence;
///   L: non-intersecting and not P;
///   I: intersecting, neither path through z ends at b_1;
///   J: intersecting, a path through z ends at b_1, and the multiplier is
///      larger than that of the switched multipath;
///   other: the smaller-multiplier partner of a J multipath.
MultipathClass classify_multipath(const GridSpec& g, const Multipath& mp);

/// A J or L multipath written as (l; w_1..w_k): paths 1..l-1 carry no
/// weight, path l carries the chain w_1 < ... < w_l and ends at b_1, and
/// paths l+1..k carry the single elements w_{l+1}..w_k.
struct ChainForm {
  int l = 1;
  ElementSequence seq;
  friend auto operator<=>(const ChainForm&, const ChainForm&) = default;
};

std::optional<ChainForm> chain_form(const GridSpec& g, const Multipath& mp);
/// Inverse of chain_form on the 1^k grid.
Multipath multipath_from_chain_form(const GridSpec& g, const ChainForm& f);
/// Closed-form membership test for J_k (l >= 2) and L_k (l == 1).
bool satisfies_jl_conditions(const UnitIntervalOrder& u, const ChainForm& f);
std::string to_string(const ChainForm& f);

/// B: some singleton position m > l has w_m above every earlier entry.
bool in_B(const UnitIntervalOrder& u, const ChainForm& f);
/// A: l > 1 and no such position.
bool in_A(const UnitIntervalOrder& u, const ChainForm& f);

/// B -> A: absorb the last dominating singleton into the chain.
ChainForm chi(const UnitIntervalOrder& u, const ChainForm& f);
/// A -> B: pop the chain top and reinsert it before the first later entry it
/// does not dominate (at the end if it dominates all of them).
ChainForm psi(const UnitIntervalOrder& u, const ChainForm& f);

/// Weight-vector variant of chi: m is the largest position whose
/// entry is above every earlier entry, w_m joins the chain product and is
/// removed, giving k-1 entries. Experimental; returns nullopt when no such
/// position exists.
std::optional<std::vector<Monomial>> chi_truncated(const UnitIntervalOrder& u, const ChainForm& f);

struct CancellationReport {
  std::string uio;
  int k = 0;
  std::size_t omega = 0, count_p = 0, count_i = 0, count_j = 0, count_l = 0, count_other = 0;
  Polynomial sum_i;        // signed, with multiplier, over I
  Polynomial sum_jl;       // signed, with multiplier, over (Omega \ I) \ P
  Polynomial sum_jl_reduced;  // signed, without multiplier, over J and L
  Polynomial sum_p;        // over P
  Polynomial total;        // signed, with multiplier, over Omega
  Polynomial pk;           // power_g(k)
  bool involution_ok = true;    // delta_z is an involution on I, sign-reversing, multiplier- and weight-preserving
  bool partner_ok = true;       // intersecting (Omega\I)\P: partner in the same set, multipliers differ by 1
  bool j_shape_ok = true;       // every J and L multipath has a chain form
  bool weights_injective = true;
  std::vector<std::string> problems;

  bool ok() const;
};

CancellationReport verify_cancellations(const UnitIntervalOrder& u, int k);
nlohmann::json to_json(const CancellationReport& r);

struct ChiPsiReport {
  std::string uio;
  int k = 0;
  std::size_t size_a = 0, size_b = 0;
  bool split_ok = true;          // every J/L form lies in exactly one of A, B
  bool jl_conditions_ok = true;
  bool chi_maps_into_a = true;
  bool psi_maps_into_b = true;
  bool mutually_inverse = true;
  bool weight_preserving = true;
  bool sign_reversing = true;
  bool signed_sum_zero = true;
  std::vector<std::string> problems;

  bool ok() const;
};

ChiPsiReport chi_psi_check(const UnitIntervalOrder& u, int k);
nlohmann::json to_json(const ChiPsiReport& r);

}  // namespace chroma
