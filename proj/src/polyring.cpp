#include "chroma/polyring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int variable_count, std::initializer_list<std::pair<int, int>> support)
    : Monomial(variable_count) {
  for (auto [index, e] : support) set_exponent(index, exponent(index) + e);
}

Monomial Monomial::from_exponents(std::vector<int> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set_exponent(static_cast<int>(i), exponents[i]);
  return m;
}

Monomial Monomial::variable(int variable_count, int index) {
  Monomial m(variable_count);
  m.set_exponent(index, 1);
  return m;
}

void Monomial::set_exponent(int index, int e) {
  if (index < 0 || index >= variable_count()) throw VariableMismatch("variable index out of range");
  if (e < 0 || e > 255) throw BadParameter("exponent out of range");
  exps_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

std::vector<std::pair<int, int>> Monomial::support() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) out.emplace_back(static_cast<int>(i), exps_[i]);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw VariableMismatch("monomials live in different rings");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255) throw BadParameter("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::embed(int variable_count, int offset) const {
  if (offset < 0 || offset + this->variable_count() > variable_count)
    throw VariableMismatch("embedding does not fit the target ring");
  Monomial r(variable_count);
  std::copy(exps_.begin(), exps_.end(), r.exps_.begin() + offset);
  return r;
}

std::string Monomial::str(const std::string& var) const {
  std::string s;
  for (auto [i, e] : support()) {
    if (!s.empty()) s += '*';
    s += var + std::to_string(i + 1);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return a.exps_ > b.exps_;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int variable_count, const BigInt& c) {
  Polynomial p(variable_count);
  p.add_term(Monomial(variable_count), c);
  return p;
}

Polynomial Polynomial::variable(int variable_count, int index) {
  Polynomial p(variable_count);
  p.add_term(Monomial::variable(variable_count, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const BigInt& c) {
  Polynomial p(m.variable_count());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

BigInt Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (m.variable_count() != nvars_) throw VariableMismatch("monomial does not belong to this ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::embed(int variable_count, int offset) const {
  Polynomial r(variable_count);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.embed(variable_count, offset), c);
  return r;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw VariableMismatch("polynomials in " + std::to_string(nvars_) + " and " +
                           std::to_string(other.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string Polynomial::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << m.str(var);
    }
    first = false;
  }
  return os.str();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
BigInt coeff_of(const Polynomial& p, const Monomial& m) { return p.coeff(m); }

bool is_monomial_positive(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
}

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    auto exps = nlohmann::json::array();
    for (auto [i, e] : m.support()) exps.push_back({i, e});
    nlohmann::json coeff;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeff = static_cast<std::int64_t>(c);
    else
      coeff = c.str();
    out.push_back({{"exps", exps}, {"coeff", coeff}});
  }
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, int variable_count) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  Polynomial p(variable_count);
  for (const auto& t : j) {
    Monomial m(variable_count);
    for (const auto& pair : t.at("exps")) m.set_exponent(pair.at(0).get<int>(), pair.at(1).get<int>());
    const auto& c = t.at("coeff");
    p.add_term(m, c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()));
  }
  return p;
}

}  // namespace chroma
