#pragma once

#include "vecinv/dihedral.hpp"
#include "vecinv/polynomial.hpp"

#include <optional>
#include <vector>

namespace vecinv {

// An element of F(n,m) = C[rho_a, pi_b | |a| = 2, |b| = n], graded by
// deg rho = 2, deg pi = n and multigraded by the sum of index vectors.
class FreeElement {
 public:
  explicit FreeElement(const DihedralParams& params);
  FreeElement(const DihedralParams& params, Polynomial poly);

  static FreeElement one(const DihedralParams& params);
  static FreeElement rho(const DihedralParams& params, const Multidegree& a);
  static FreeElement pi(const DihedralParams& params, const Multidegree& b);

  const DihedralParams& params() const { return params_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  std::optional<Multidegree> weight() const { return poly_.multidegree(); }
  std::optional<int> degree() const { return poly_.homogeneous_degree(); }

  FreeElement operator-() const { return {params_, -poly_}; }
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Rational& c, const FreeElement& a) { return {a.params_, a.poly_ * c}; }
  FreeElement pow(unsigned k) const { return {params_, poly_.pow(k)}; }

  bool operator==(const FreeElement& o) const { return params_ == o.params_ && poly_ == o.poly_; }

  std::string to_string() const { return poly_.to_string(); }

 private:
  DihedralParams params_;
  Polynomial poly_;
};

// phi(n,m): rho_a -> q_a, pi_b -> p_b, extended multiplicatively.
Polynomial phi(const FreeElement& e);

// Image of a single F-monomial; shared by kernel computations.
Polynomial phi_monomial(const DihedralParams& params, const Monomial& mono);

// A matrix unit E_{u,v} of gl_m, 1-based. u == v gives the diagonal
// elements; u != v the raising (u < v) and lowering (u > v) operators.
struct MatrixUnit {
  int u;
  int v;
};

// E_{u,v} acting as a derivation: on a variable, E_{u,v}.pi_b =
// b_v pi_{b + e_u - e_v} (zero if an index would go negative), likewise
// for rho.
FreeElement gl_act(const MatrixUnit& e, const FreeElement& x);

// The weight of x if x is multihomogeneous and E_{i,i+1}.x = 0 for all i.
// Throws on x = 0.
std::optional<Weight> is_highest_weight(const FreeElement& x);

// Basis of the smallest gl_m-stable subspace containing x, in first-found
// order of a breadth-first saturation under all E_{u,v}.
std::vector<FreeElement> submodule_basis(const FreeElement& x);

// det of the symmetric 3x3 matrix of rho variables on the first three
// vectors; requires m >= 3.
FreeElement make_R222(int n, int m);

// pi_{n,0} rho_{0,2} - 2 pi_{n-1,1} rho_{1,1} + pi_{n-2,2} rho_{2,0};
// requires m >= 2.
FreeElement make_R_n2(int n, int m);

// (-1)^k (1/2) C(2k,k) pi_{n-k,k}^2
//   + sum_{j<k} (-1)^j C(2k,j) pi_{n-j,j} pi_{n-2k+j,2k-j}
//   - 4^k rho_{2,0}^{n-2k} (rho_{1,1}^2 - rho_{2,0} rho_{0,2})^k,
// for 1 <= k <= n/2 and m >= 2.
FreeElement make_R_2n2k(int n, int k, int m);

// R(n)_{n,2}^{n-j,2+j} for j = 0..n-2, produced by the lowering recursion
// X_{j+1} = E_{2,1}.X_j / (n-2-j).
std::vector<FreeElement> lowering_chain_R_n2(int n, int m);

// S_m acting on F(n,m) by permuting the vector slots of every index.
FreeElement permute_vectors(const FreeElement& x, const std::vector<int>& perm);

// All F(n,m) monomials of multidegree alpha, in lexicographic order of
// their dense exponent vectors (largest first).
std::vector<Monomial> free_monomials(const DihedralParams& params, const Multidegree& alpha);

// Number of F(n,m) monomials of multidegree alpha, without materializing.
std::size_t count_free_monomials(const DihedralParams& params, const Multidegree& alpha);

}  // namespace vecinv
