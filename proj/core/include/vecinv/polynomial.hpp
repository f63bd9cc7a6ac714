#pragma once

#include "vecinv/monomial.hpp"
#include "vecinv/rational.hpp"
#include "vecinv/universe.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vecinv {

class UniverseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in decreasing graded-lex order, so iteration starts at the leading
// grlex term and the text form is canonical.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrLexGreater>;

  explicit Polynomial(UniversePtr universe) : universe_(std::move(universe)) {}

  static Polynomial constant(UniversePtr universe, const Rational& c);
  static Polynomial variable(UniversePtr universe, std::size_t var);
  static Polynomial term(UniversePtr universe, const Monomial& mono, const Rational& c);

  const UniversePtr& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial multiply_monomial(const Monomial& mono, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const;

  // Degree with every variable weighted by the universe's variable degree.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  // Common multidegree of all terms, if any.
  std::optional<Multidegree> multidegree() const;
  // Splits into multihomogeneous components.
  std::map<Multidegree, Polynomial> multihomogeneous_components() const;

  std::string to_string() const;

 private:
  UniversePtr universe_;
  TermMap terms_;
};

// Multidegree of a monomial in the given universe.
Multidegree multidegree_of(const Monomial& mono, const VariableUniverse& u);
int graded_degree_of(const Monomial& mono, const VariableUniverse& u);

std::string monomial_to_string(const Monomial& mono, const VariableUniverse& u);

// Inverse of Polynomial::to_string. Accepts the canonical form and also
// integers without "/1"; terms may appear in any order.
Polynomial parse_polynomial(const std::string& text, const UniversePtr& universe);

inline void require_same_universe(const Polynomial& a, const Polynomial& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch("polynomials belong to different variable universes");
  }
}

}  // namespace vecinv
