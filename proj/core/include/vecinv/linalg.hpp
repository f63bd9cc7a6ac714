#pragma once

#include "vecinv/polynomial.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace vecinv {

using RationalVector = std::vector<Rational>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// Fraction-free (Bareiss) row echelon form, in place. Pivots are taken as
// the first nonzero entry, scanning columns left to right and rows top to
// bottom. Returns the pivot columns; rows past the rank are zero.
std::vector<std::size_t> bareiss_echelon(IntegerMatrix& a);

// Basis of {x : A x = 0} for a dense rational matrix given by rows. One
// vector per non-pivot column c, normalized so that x_c = 1 and the other
// non-pivot coordinates vanish.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols);

std::size_t matrix_rank(const std::vector<RationalVector>& rows, std::size_t cols);

// Basis of {c : sum_i c_i polys[i] = 0}. Empty iff the inputs are linearly
// independent. Throws UniverseMismatch on mixed universes.
std::vector<RationalVector> linear_relations(std::span<const Polynomial> polys);

// Rank of the coefficient matrix of `polys`.
std::size_t span_dimension(std::span<const Polynomial> polys);

// sum_i coeffs[i] * polys[i].
Polynomial recombine(std::span<const Polynomial> polys, std::span<const Rational> coeffs);

// Incrementally maintained echelon basis of a space of polynomials, with
// rows stored as primitive integer vectors keyed by their leading grlex
// monomial. Used for rank tracking when vectors arrive one at a time.
class SparseEchelon {
 public:
  using Row = std::map<Monomial, Integer, GrLexGreater>;

  SparseEchelon() = default;

  // Adds p to the spanning set; returns true iff the rank increased.
  bool insert(const Polynomial& p);
  // True iff p lies in the current span.
  bool contains(const Polynomial& p) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Row reduce(Row v) const;

  UniversePtr universe_;
  std::map<Monomial, Row, GrLexGreater> rows_;
};

}  // namespace vecinv
