#include "vecinv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vecinv {

// ---------------------------------------------------------------- Rational

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(var, exponent);
  return m;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) m.factors_.emplace_back(static_cast<std::uint32_t>(i), exponents[i]);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto j = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (j != other.factors_.end() && j->first < v) ++j;
    if (j == other.factors_.end() || j->first != v || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  auto j = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (j != divisor.factors_.end() && j->first < v) ++j;
    std::uint32_t sub = (j != divisor.factors_.end() && j->first == v) ? j->second : 0;
    if (e > sub) r.factors_.emplace_back(v, e - sub);
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::without_one(std::uint32_t var) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), Factor{var, 0});
  if (it == r.factors_.end() || it->first != var)
    throw std::invalid_argument("variable does not divide monomial");
  if (--it->second == 0) r.factors_.erase(it);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v) << 20) ^ e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    } else {
      // The monomial owning the smaller variable index has a positive
      // exponent where the other has zero.
      return fa[i].first > fb[j].first;
    }
  }
  return i == fa.size() && j < fb.size();
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(UniversePtr universe, const Rational& c) {
  Polynomial p(std::move(universe));
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(UniversePtr universe, std::size_t var) {
  if (var >= universe->size()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(universe));
  p.add_term(Monomial::variable(static_cast<std::uint32_t>(var)), 1);
  return p;
}

Polynomial Polynomial::term(UniversePtr universe, const Monomial& mono, const Rational& c) {
  Polynomial p(std::move(universe));
  p.add_term(mono, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) {
    // Callers may hand in an unreduced mpq built from (num, den).
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_universe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_universe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_universe(a, b);
  Polynomial r(a.universe_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::multiply_monomial(const Monomial& mono, const Rational& c) const {
  Polynomial r(universe_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(universe_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_universe(universe_, o.universe_) && terms_ == o.terms_;
}

Multidegree multidegree_of(const Monomial& mono, const VariableUniverse& u) {
  Multidegree d(static_cast<std::size_t>(u.m()), 0);
  for (const auto& [v, e] : mono.factors()) {
    const auto& w = u.weight(v);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += w[i] * static_cast<int>(e);
  }
  return d;
}

int graded_degree_of(const Monomial& mono, const VariableUniverse& u) {
  int d = 0;
  for (const auto& [v, e] : mono.factors()) d += u.degree(v) * static_cast<int>(e);
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = graded_degree_of(m, *universe_);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::optional<Multidegree> Polynomial::multidegree() const {
  std::optional<Multidegree> deg;
  for (const auto& [m, c] : terms_) {
    auto d = multidegree_of(m, *universe_);
    if (deg && *deg != d) return std::nullopt;
    deg = std::move(d);
  }
  return deg;
}

std::map<Multidegree, Polynomial> Polynomial::multihomogeneous_components() const {
  std::map<Multidegree, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto d = multidegree_of(m, *universe_);
    auto it = out.try_emplace(d, universe_).first;
    it->second.terms_.emplace(m, c);
  }
  return out;
}

std::string monomial_to_string(const Monomial& mono, const VariableUniverse& u) {
  if (mono.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : mono.factors()) {
    if (!s.empty()) s += '*';
    s += u.name(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational shown = c;
    if (!first) {
      s += (c < 0) ? " - " : " + ";
      shown = abs(c);
    }
    s += to_fraction_string(shown);
    if (!m.is_one()) s += '*' + monomial_to_string(m, *universe_);
    first = false;
  }
  return s;
}

namespace {

bool starts_coefficient(const std::string& f) {
  return !f.empty() && (std::isdigit(static_cast<unsigned char>(f[0])) != 0);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const UniversePtr& universe) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  Polynomial p(universe);
  if (compact.empty()) throw std::invalid_argument("empty polynomial text");
  if (compact == "0") return p;

  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= compact.size(); ++i) {
    if (i == compact.size() || compact[i] == '+' || compact[i] == '-') {
      // A sign directly after '*' or '^' is not a term separator.
      if (i < compact.size() && (compact[i - 1] == '*' || compact[i - 1] == '^' ||
                                 compact[i - 1] == '+' || compact[i - 1] == '-'))
        continue;
      terms.push_back(compact.substr(start, i - start));
      start = i;
    }
  }
  for (auto t : terms) {
    Rational sign = 1;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      if (t[0] == '-') sign = -sign;
      t.erase(0, 1);
    }
    if (t.empty()) throw std::invalid_argument("dangling sign in polynomial text");
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    std::size_t pos = 0;
    bool first_factor = true;
    while (pos <= t.size()) {
      std::size_t star = t.find('*', pos);
      if (star == std::string::npos) star = t.size();
      std::string f = t.substr(pos, star - pos);
      if (f.empty()) throw std::invalid_argument("empty factor in '" + t + "'");
      if (first_factor && starts_coefficient(f)) {
        coeff = parse_rational(f);
      } else {
        std::uint32_t e = 1;
        auto caret = f.find('^');
        std::string name = f.substr(0, caret);
        if (caret != std::string::npos) e = static_cast<std::uint32_t>(std::stoul(f.substr(caret + 1)));
        auto idx = universe->find(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "' in " + universe->description());
        factors.emplace_back(static_cast<std::uint32_t>(*idx), e);
      }
      first_factor = false;
      pos = star + 1;
      if (star == t.size()) break;
    }
    p.add_term(Monomial::from_factors(std::move(factors)), sign * coeff);
  }
  return p;
}

}  // namespace vecinv
