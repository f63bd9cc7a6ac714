#pragma once

#include "vecinv/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace vecinv {

// A monomial order. Lex compares exponents along an explicit priority list
// (most significant variable first; unlisted variables follow by index).
// GradedLex is the grlex order used for canonical term storage.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedLex };

  static MonomialOrder lex(std::vector<std::uint32_t> priority);
  static MonomialOrder graded_lex();

  Kind kind() const { return kind_; }
  bool less(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_ = Kind::GradedLex;
  std::vector<std::uint32_t> priority_;
};

struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

LeadingTerm leading_term(const Polynomial& f, const MonomialOrder& order);

// Remainder of multivariate division of f by `basis` (full reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Reduced, monic Groebner basis sorted by increasing leading monomial.
// Naive Buchberger; meant for a handful of variables and low degrees.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Monomials of degree <= max_degree (in universe variables) divisible by
// none of `leading`. Sorted by grlex, ascending.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                         unsigned max_degree);

}  // namespace vecinv
