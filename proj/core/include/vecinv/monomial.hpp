#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vecinv {

// Sparse power product: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exponent = 1);
  static Monomial from_dense(std::span<const std::uint32_t> exponents);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint32_t degree() const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Monomial with exponent of `var` lowered by one; requires exponent >= 1.
  Monomial without_one(std::uint32_t var) const;

  bool operator==(const Monomial&) const = default;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order on exponent vectors: total degree first, then
// the first variable (lowest index) with differing exponent decides.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace vecinv
