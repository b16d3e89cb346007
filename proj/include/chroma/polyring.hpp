#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chroma/numeric.hpp"

namespace chroma {

/// Exponent vector over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int variable_count) : exps_(static_cast<std::size_t>(variable_count), 0) {}
  Monomial(int variable_count, std::initializer_list<std::pair<int, int>> support);

  static Monomial from_exponents(std::vector<int> exponents);
  static Monomial variable(int variable_count, int index);

  int variable_count() const { return static_cast<int>(exps_.size()); }
  int exponent(int index) const { return exps_[static_cast<std::size_t>(index)]; }
  void set_exponent(int index, int e);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  /// Nonzero (index, exponent) pairs in increasing index order.
  std::vector<std::pair<int, int>> support() const;

  Monomial operator*(const Monomial& other) const;
  /// This monomial placed at variables offset..offset+count-1 of a larger ring.
  Monomial embed(int variable_count, int offset) const;

  std::string str(const std::string& var = "v") const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: higher total degree first, then larger exponent of
  /// the earliest variable first.
  friend bool grlex_greater(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint8_t> exps_;
};

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// Sparse polynomial with arbitrary-precision integer coefficients in a fixed
/// number of variables. Zero coefficients are never stored; iteration is in
/// graded lexicographic order, leading term first.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(int variable_count) : nvars_(variable_count) {}

  static Polynomial constant(int variable_count, const BigInt& c);
  static Polynomial variable(int variable_count, int index);
  static Polynomial term(const Monomial& m, const BigInt& c);

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  int degree() const;

  BigInt coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const BigInt& c);

  Polynomial embed(int variable_count, int offset) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const BigInt& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string str(const std::string& var = "v") const;

 private:
  void require_same_ring(const Polynomial& other) const;

  int nvars_ = 0;
  TermMap terms_;
};

using VertexPolynomial = Polynomial;

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
BigInt coeff_of(const Polynomial& p, const Monomial& m);
/// Every stored coefficient is positive; the zero polynomial qualifies.
bool is_monomial_positive(const Polynomial& p);
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// [{"exps": [[index, exp], ...], "coeff": c}, ...] in canonical order.
/// Coefficients outside the int64 range are written as decimal strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, int variable_count);

}  // namespace chroma
