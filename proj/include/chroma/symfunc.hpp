#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chroma/combinat.hpp"
#include "chroma/numeric.hpp"
#include "chroma/polyring.hpp"

namespace chroma {

/// Elementary, monomial, power-sum and Schur bases.
enum class Basis { e, m, p, s };

inline constexpr Basis kAllBases[] = {Basis::e, Basis::m, Basis::p, Basis::s};

char basis_tag(Basis b);
Basis parse_basis(std::string_view tag);

/// Finite linear combination of basis elements of one basis with exact
/// rational coefficients. Zero coefficients are never stored.
class SymFunc {
 public:
  using CoeffMap = std::map<Partition, Rational>;

  explicit SymFunc(Basis basis = Basis::e) : basis_(basis) {}

  static SymFunc element(Basis basis, const Partition& lambda, const Rational& c = 1);
  static SymFunc constant(Basis basis, const Rational& c);

  Basis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  std::set<int> degrees() const;
  SymFunc homogeneous_component(int degree) const;
  bool is_nonnegative() const;
  bool is_integral() const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  /// Ring product. Multiplicative bases (e, p) multiply directly; otherwise
  /// the product is formed in the e-basis and converted back to a's basis.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc operator-() const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  std::string str() const;

 private:
  void require_same_basis(const SymFunc& other) const;

  Basis basis_;
  CoeffMap coeffs_;
};

inline bool is_zero(const SymFunc& f) { return f.is_zero(); }

/// {"basis": "e", "coeffs": {"2,1": "3", ...}} with rationals as "num/den".
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

/// from_lambda = sum over mu of entry(lambda, mu) * to_mu, all partitions of
/// `degree`, rows and columns in partitions_of order.
struct TransitionMatrix {
  int degree = 0;
  Basis from = Basis::e;
  Basis to = Basis::e;
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> entries;

  Rational at(const Partition& row, const Partition& col) const;
  std::size_t position(const Partition& lambda) const;
  bool is_integral() const;
  bool is_identity() const;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

/// Matrix product for chaining conversions: (a: X->Y) then (b: Y->Z) gives X->Z.
TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b);

nlohmann::json to_json(const TransitionMatrix& t);
TransitionMatrix transition_from_json(const nlohmann::json& j);
std::string checksum(const nlohmann::json& payload);

/// Process-wide store of transition matrices. Each (from, to, degree) key is
/// computed at most once and then published read-only. An optional directory
/// mirrors the store on disk, one JSON file per key with a checksum; files
/// that fail the checksum are recomputed and rewritten.
class TransitionCache {
 public:
  static TransitionCache& global();

  std::shared_ptr<const TransitionMatrix> get(Basis from, Basis to, int degree);

  void set_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> directory() const;

  /// Forget in-memory entries (disk files are kept).
  void clear_memory();
  /// Remove cache files from the directory; returns the number removed.
  int clear_disk();
  /// Keys present on disk as "from>to:degree", sorted.
  std::vector<std::string> list_disk() const;
  /// Materialise every ordered basis pair for degrees 1..max_degree.
  int rebuild(int max_degree);

  static std::string file_name(Basis from, Basis to, int degree);

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const TransitionMatrix> value;
  };
  std::shared_ptr<Slot> slot(Basis from, Basis to, int degree);
  std::shared_ptr<const TransitionMatrix> load_or_compute(Basis from, Basis to, int degree) const;

  mutable std::mutex mutex_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<Slot>> slots_;
  std::optional<std::filesystem::path> dir_;
};

/// Truncation of the defining sum of the basis element to x_1..x_N.
Polynomial expand_concrete(Basis basis, const Partition& lambda, int variables);
/// Throws std::domain_error if the truncation is not integral.
Polynomial expand_concrete(const SymFunc& f, int variables);

/// Coefficients of x^mu (mu padded with zeros) for mu in partitions_of(d).
/// These are the m-basis coordinates of a degree-d symmetric polynomial in
/// at least d variables.
std::vector<Rational> monomial_coordinates(const Polynomial& concrete, int degree);

/// Direct computation: concrete expansion of both bases in `degree`
/// variables and an exact linear solve. Uncached.
TransitionMatrix compute_transition_matrix(Basis from, Basis to, int degree);
/// Cached version of the above via TransitionCache::global().
std::shared_ptr<const TransitionMatrix> transition_matrix(Basis from, Basis to, int degree);

SymFunc convert(const SymFunc& f, Basis to);

/// s_lambda = det(e_{lambda*_i + j - i}) expanded in the e-basis.
SymFunc jacobi_trudi_e(const Partition& lambda);
/// p_k as the k x k determinant with first column i*e_i, expanded in e.
SymFunc newton_p(int k);

/// Sum m_l(x) e_l(y) = sum s_l(x) s_{l*}(y) = sum e_l(x) m_l(y) over l |- d,
/// compared as polynomials in x_1..x_N, y_1..y_N.
bool cauchy_check(int degree, int variables);

/// Exact inverse via Gauss-Jordan; throws SingularSystem.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a);

}  // namespace chroma
