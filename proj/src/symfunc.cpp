#include "chroma/symfunc.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "chroma/determinant.hpp"
#include "chroma/errors.hpp"

namespace chroma {

char basis_tag(Basis b) {
  switch (b) {
    case Basis::e: return 'e';
    case Basis::m: return 'm';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view tag) {
  if (tag == "e") return Basis::e;
  if (tag == "m") return Basis::m;
  if (tag == "p") return Basis::p;
  if (tag == "s") return Basis::s;
  throw ParseError("unknown basis '" + std::string(tag) + "' (expected e, m, p or s)");
}

// ---------------------------------------------------------------------------
// SymFunc

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Rational& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::constant(Basis basis, const Rational& c) { return element(basis, Partition{}, c); }

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::set<int> SymFunc::degrees() const {
  std::set<int> out;
  for (const auto& [lambda, c] : coeffs_) out.insert(lambda.weight());
  return out;
}

SymFunc SymFunc::homogeneous_component(int degree) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.weight() == degree) out.coeffs_.emplace(lambda, c);
  return out;
}

bool SymFunc::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.second >= 0; });
}

bool SymFunc::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return chroma::is_integral(t.second); });
}

void SymFunc::require_same_basis(const SymFunc& other) const {
  if (basis_ != other.basis_)
    throw BadParameter(std::string("symmetric functions in bases ") + basis_tag(basis_) + " and " +
                       basis_tag(other.basis_) + "; convert first");
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_same_basis(other);
  for (const auto& [lambda, c] : other.coeffs_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  require_same_basis(other);
  for (const auto& [lambda, c] : other.coeffs_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : coeffs_) coeff *= c;
  return *this;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, c] : r.coeffs_) c = -c;
  return r;
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_parts(std::move(parts));
}

SymFunc multiply_multiplicative(const SymFunc& a, const SymFunc& b) {
  SymFunc out(a.basis());
  for (const auto& [la, ca] : a.coeffs())
    for (const auto& [lb, cb] : b.coeffs()) out.add_term(merge(la, lb), ca * cb);
  return out;
}

}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_ && (a.basis_ == Basis::e || a.basis_ == Basis::p)) return multiply_multiplicative(a, b);
  const SymFunc product = multiply_multiplicative(convert(a, Basis::e), convert(b, Basis::e));
  return convert(product, a.basis_);
}

std::string SymFunc::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : coeffs_) {
    Rational mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    if (mag != 1 || lambda.empty()) os << to_string(mag);
    if (!lambda.empty()) {
      if (mag != 1) os << '*';
      os << basis_tag(basis_) << '(' << lambda.str() << ')';
    }
    first = false;
  }
  return os.str();
}

nlohmann::json to_json(const SymFunc& f) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [lambda, c] : f.coeffs()) coeffs[lambda.str()] = to_string(c);
  return {{"basis", std::string(1, basis_tag(f.basis()))}, {"coeffs", coeffs}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const Rational c = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<std::int64_t>());
    f.add_term(Partition::parse(key), c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Transition matrices

Rational TransitionMatrix::at(const Partition& row, const Partition& col) const {
  return entries[position(row)][position(col)];
}

std::size_t TransitionMatrix::position(const Partition& lambda) const {
  auto it = std::lower_bound(index.begin(), index.end(), lambda);
  if (it == index.end() || *it != lambda) throw BadParameter("partition " + lambda.str() + " not in matrix index");
  return static_cast<std::size_t>(it - index.begin());
}

bool TransitionMatrix::is_integral() const {
  for (const auto& row : entries)
    for (const auto& x : row)
      if (!chroma::is_integral(x)) return false;
  return true;
}

bool TransitionMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.degree != b.degree || a.to != b.from) throw BadParameter("compose: incompatible transition matrices");
  TransitionMatrix out{a.degree, a.from, b.to, a.index, {}};
  const std::size_t n = a.index.size();
  out.entries.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return out;
}

std::string checksum(const nlohmann::json& payload) {
  // FNV-1a over the canonical dump.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json to_json(const TransitionMatrix& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& lambda : t.index) rows.push_back(lambda.str());
  nlohmann::json matrix = nlohmann::json::object();
  for (std::size_t i = 0; i < t.index.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (std::size_t j = 0; j < t.index.size(); ++j)
      if (t.entries[i][j] != 0) row[t.index[j].str()] = to_string(t.entries[i][j]);
    matrix[t.index[i].str()] = row;
  }
  nlohmann::json body = {{"from", std::string(1, basis_tag(t.from))},
                         {"to", std::string(1, basis_tag(t.to))},
                         {"degree", t.degree},
                         {"rows", rows},
                         {"matrix", matrix}};
  body["checksum"] = checksum(body);
  return body;
}

TransitionMatrix transition_from_json(const nlohmann::json& j) {
  nlohmann::json body = j;
  const std::string stored = body.at("checksum").get<std::string>();
  body.erase("checksum");
  if (checksum(body) != stored) throw ParseError("transition matrix checksum mismatch");
  TransitionMatrix t;
  t.degree = body.at("degree").get<int>();
  t.from = parse_basis(body.at("from").get<std::string>());
  t.to = parse_basis(body.at("to").get<std::string>());
  t.index = partitions_of(t.degree);
  std::sort(t.index.begin(), t.index.end());
  if (body.at("rows").size() != t.index.size()) throw ParseError("transition matrix has wrong row count");
  t.entries.assign(t.index.size(), std::vector<Rational>(t.index.size()));
  for (const auto& [rkey, row] : body.at("matrix").items()) {
    const std::size_t i = t.position(Partition::parse(rkey));
    for (const auto& [ckey, value] : row.items())
      t.entries[i][t.position(Partition::parse(ckey))] = parse_rational(value.get<std::string>());
  }
  return t;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular matrix in exact solve");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Concrete expansions

namespace {

Polynomial elementary_poly(int i, int nvars) {
  Polynomial out(nvars);
  if (i < 0 || i > nvars) return out;
  std::vector<int> pick(static_cast<std::size_t>(nvars), 0);
  std::fill(pick.end() - i, pick.end(), 1);
  do {
    out.add_term(Monomial::from_exponents(pick), 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

Polynomial power_poly(int i, int nvars) {
  Polynomial out(nvars);
  for (int v = 0; v < nvars; ++v) {
    Monomial m(nvars);
    m.set_exponent(v, i);
    out.add_term(m, 1);
  }
  return out;
}

Polynomial monomial_poly(const Partition& lambda, int nvars) {
  Polynomial out(nvars);
  if (lambda.length() > nvars) return out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  do {
    out.add_term(Monomial::from_exponents(exps), 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

}  // namespace

Polynomial expand_concrete(Basis basis, const Partition& lambda, int variables) {
  if (variables < 0) throw BadParameter("expand_concrete: negative variable count");
  Polynomial one = Polynomial::constant(variables, 1);
  switch (basis) {
    case Basis::e: {
      Polynomial out = one;
      for (int part : lambda.parts()) out *= elementary_poly(part, variables);
      return out;
    }
    case Basis::p: {
      Polynomial out = one;
      for (int part : lambda.parts()) out *= power_poly(part, variables);
      return out;
    }
    case Basis::m:
      return monomial_poly(lambda, variables);
    case Basis::s:
      return expand_concrete(jacobi_trudi_e(lambda), variables);
  }
  return Polynomial(variables);
}

Polynomial expand_concrete(const SymFunc& f, int variables) {
  BigInt denom = 1;
  for (const auto& [lambda, c] : f.coeffs()) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(c));
  Polynomial acc(variables);
  for (const auto& [lambda, c] : f.coeffs()) {
    const BigInt scaled = to_integer(c * denom);
    acc += expand_concrete(f.basis(), lambda, variables) * scaled;
  }
  if (denom == 1) return acc;
  Polynomial out(variables);
  for (const auto& [m, c] : acc.terms()) {
    if (c % denom != 0) throw std::domain_error("expand_concrete: non-integral truncation");
    out.add_term(m, c / denom);
  }
  return out;
}

std::vector<Rational> monomial_coordinates(const Polynomial& concrete, int degree) {
  std::vector<Partition> index = partitions_of(degree);
  std::sort(index.begin(), index.end());
  std::vector<Rational> out;
  out.reserve(index.size());
  for (const auto& mu : index) {
    if (mu.length() > concrete.variable_count()) {
      out.emplace_back(0);
      continue;
    }
    Monomial m(concrete.variable_count());
    for (int i = 0; i < mu.length(); ++i) m.set_exponent(i, mu[i]);
    out.emplace_back(concrete.coeff(m));
  }
  return out;
}

TransitionMatrix compute_transition_matrix(Basis from, Basis to, int degree) {
  if (degree < 0) throw BadParameter("transition_matrix: negative degree");
  TransitionMatrix t;
  t.degree = degree;
  t.from = from;
  t.to = to;
  t.index = partitions_of(degree);
  std::sort(t.index.begin(), t.index.end());
  const int nvars = std::max(degree, 1);
  std::vector<std::vector<Rational>> f;
  std::vector<std::vector<Rational>> g;
  for (const auto& lambda : t.index) {
    f.push_back(monomial_coordinates(expand_concrete(from, lambda, nvars), degree));
    g.push_back(monomial_coordinates(expand_concrete(to, lambda, nvars), degree));
  }
  // F = M * G, so M = F * G^{-1}.
  const auto ginv = invert(g);
  const std::size_t n = t.index.size();
  t.entries.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) t.entries[i][j] += f[i][k] * ginv[k][j];
    }
  return t;
}

// ---------------------------------------------------------------------------
// Cache

TransitionCache& TransitionCache::global() {
  static TransitionCache cache;
  return cache;
}

std::string TransitionCache::file_name(Basis from, Basis to, int degree) {
  return std::string(1, basis_tag(from)) + "_to_" + basis_tag(to) + "_d" + std::to_string(degree) + ".json";
}

void TransitionCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mutex_);
  dir_ = std::move(dir);
  slots_.clear();
}

std::optional<std::filesystem::path> TransitionCache::directory() const {
  std::lock_guard lock(mutex_);
  return dir_;
}

void TransitionCache::clear_memory() {
  std::lock_guard lock(mutex_);
  slots_.clear();
}

std::shared_ptr<TransitionCache::Slot> TransitionCache::slot(Basis from, Basis to, int degree) {
  std::lock_guard lock(mutex_);
  auto& s = slots_[{static_cast<int>(from), static_cast<int>(to), degree}];
  if (!s) s = std::make_shared<Slot>();
  return s;
}

std::shared_ptr<const TransitionMatrix> TransitionCache::load_or_compute(Basis from, Basis to, int degree) const {
  const auto dir = directory();
  if (dir) {
    const auto path = *dir / file_name(from, to, degree);
    std::ifstream in(path);
    if (in) {
      try {
        auto t = transition_from_json(nlohmann::json::parse(in));
        if (t.from == from && t.to == to && t.degree == degree) return std::make_shared<const TransitionMatrix>(std::move(t));
      } catch (const std::exception&) {
        // Corrupt or stale file: fall through and rebuild it.
      }
    }
  }
  auto t = std::make_shared<const TransitionMatrix>(compute_transition_matrix(from, to, degree));
  if (dir) {
    std::filesystem::create_directories(*dir);
    const auto path = *dir / file_name(from, to, degree);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id();
    const auto tmp = path.string() + suffix.str();
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write cache file " + tmp);
      out << to_json(*t).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
  }
  return t;
}

std::shared_ptr<const TransitionMatrix> TransitionCache::get(Basis from, Basis to, int degree) {
  auto s = slot(from, to, degree);
  std::call_once(s->once, [&] { s->value = load_or_compute(from, to, degree); });
  return s->value;
}

int TransitionCache::clear_disk() {
  const auto dir = directory();
  if (!dir || !std::filesystem::exists(*dir)) return 0;
  int removed = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*dir)) {
    const auto name = entry.path().filename().string();
    if (name.find("_to_") != std::string::npos && entry.path().extension() == ".json") {
      std::filesystem::remove(entry.path());
      ++removed;
    }
  }
  clear_memory();
  return removed;
}

std::vector<std::string> TransitionCache::list_disk() const {
  std::vector<std::string> out;
  const auto dir = directory();
  if (!dir || !std::filesystem::exists(*dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(*dir)) {
    const auto name = entry.path().filename().string();
    // e_to_m_d3.json
    if (name.size() < 12 || name.substr(1, 4) != "_to_" || entry.path().extension() != ".json") continue;
    const auto stem = entry.path().stem().string();
    out.push_back(std::string(1, stem[0]) + ">" + stem[5] + ":" + stem.substr(8));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int TransitionCache::rebuild(int max_degree) {
  int count = 0;
  for (int d = 1; d <= max_degree; ++d)
    for (Basis from : kAllBases)
      for (Basis to : kAllBases) {
        get(from, to, d);
        ++count;
      }
  return count;
}

std::shared_ptr<const TransitionMatrix> transition_matrix(Basis from, Basis to, int degree) {
  return TransitionCache::global().get(from, to, degree);
}

SymFunc convert(const SymFunc& f, Basis to) {
  if (f.basis() == to) return f;
  SymFunc out(to);
  for (int d : f.degrees()) {
    if (d == 0) {
      out.add_term(Partition{}, f.coeff(Partition{}));
      continue;
    }
    const auto t = transition_matrix(f.basis(), to, d);
    for (const auto& [lambda, c] : f.coeffs()) {
      if (lambda.weight() != d) continue;
      const auto& row = t->entries[t->position(lambda)];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) out.add_term(t->index[j], c * row[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinant identities

namespace {

SymFunc e_entry(int i) {
  if (i < 0) return SymFunc(Basis::e);
  if (i == 0) return SymFunc::constant(Basis::e, 1);
  return SymFunc::element(Basis::e, Partition{i});
}

}  // namespace

SymFunc jacobi_trudi_e(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const int k = conj.length();
  SquareMatrix<SymFunc> m(static_cast<std::size_t>(k), std::vector<SymFunc>(static_cast<std::size_t>(k), SymFunc(Basis::e)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e_entry(conj[i] + j - i);
  return determinant(m, SymFunc(Basis::e), SymFunc::constant(Basis::e, 1), [](const SymFunc& f) { return f.is_zero(); });
}

SymFunc newton_p(int k) {
  if (k < 1) throw BadParameter("newton_p: k must be positive");
  SquareMatrix<SymFunc> m(static_cast<std::size_t>(k), std::vector<SymFunc>(static_cast<std::size_t>(k), SymFunc(Basis::e)));
  for (int i = 0; i < k; ++i) {
    m[static_cast<std::size_t>(i)][0] = e_entry(i + 1) * Rational(i + 1);
    for (int j = 1; j < k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e_entry(i - j + 1);
  }
  return determinant(m, SymFunc(Basis::e), SymFunc::constant(Basis::e, 1), [](const SymFunc& f) { return f.is_zero(); });
}

bool cauchy_check(int degree, int variables) {
  if (degree < 0 || variables < 1) throw BadParameter("cauchy_check: need degree >= 0 and N >= 1");
  const int total = 2 * variables;
  auto x = [&](Basis b, const Partition& l) { return expand_concrete(b, l, variables).embed(total, 0); };
  auto y = [&](Basis b, const Partition& l) { return expand_concrete(b, l, variables).embed(total, variables); };
  Polynomial me(total);
  Polynomial ss(total);
  Polynomial em(total);
  for (const auto& lambda : partitions_of(degree)) {
    me += x(Basis::m, lambda) * y(Basis::e, lambda);
    ss += x(Basis::s, lambda) * y(Basis::s, lambda.conjugate());
    em += x(Basis::e, lambda) * y(Basis::m, lambda);
  }
  return me == ss && ss == em;
}

}  // namespace chroma
