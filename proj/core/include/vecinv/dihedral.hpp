#pragma once

#include "vecinv/multidegree.hpp"
#include "vecinv/polynomial.hpp"

#include <map>
#include <vector>

namespace vecinv {

// The dihedral group D_2n acting diagonally on V^m, V = C^2.
struct DihedralParams {
  int n;
  int m;

  DihedralParams(int n_, int m_);
  bool operator==(const DihedralParams&) const = default;
};

// Dihedral: the full group. Cyclic: its index-2 rotation subgroup H.
enum class GroupKind { Dihedral, Cyclic };

// q = xy and p = x^n + y^n in XY(1).
Polynomial q_invariant();
Polynomial p_invariant(int n);

// Polarizations g_alpha of a homogeneous g in XY(1): the multihomogeneous
// components of g(x_1+..+x_m, y_1+..+y_m) divided by the multinomial
// coefficient. Every alpha with |alpha| = deg g appears, including zeros.
std::map<Multidegree, Polynomial> polarize(const Polynomial& g, int m);

// Closed forms of the polarizations of q and p; m = alpha.size().
Polynomial q_pol(const Multidegree& alpha);
Polynomial p_pol(const Multidegree& beta, int n);

// Rotation invariance via the exponent-weight criterion
// (sum x-exponents - sum y-exponents = 0 mod n) and, for Dihedral, symmetry
// under the simultaneous swap x_i <-> y_i.
bool is_invariant(const Polynomial& f, const DihedralParams& params,
                  GroupKind group = GroupKind::Dihedral);

Polynomial swap_xy(const Polynomial& f);

// Monomials of XY(m) of multidegree alpha, decreasing lex on the dense
// exponent vector (x1, y1, x2, y2, ...).
std::vector<Monomial> xy_monomials(const Multidegree& alpha);

// A basis of the multidegree-alpha component of C[V^m]^G built by the
// monomial Reynolds operator: invariant monomials (Cyclic) or their swap
// orbit sums (Dihedral).
std::vector<Polynomial> invariant_basis(const DihedralParams& params, const Multidegree& alpha,
                                        GroupKind group = GroupKind::Dihedral);

// Counting form of invariant_basis: (#rotation-invariant + #swap-fixed) / 2
// for Dihedral.
std::size_t invariant_dimension(const DihedralParams& params, const Multidegree& alpha,
                                GroupKind group = GroupKind::Dihedral);

// x_2 -> 0 on XY(2).
Polynomial specialize_x2_zero(const Polynomial& f);

// S_m acting by permutation matrices: vector j moves to slot perm[j]
// (0-based), so the multidegree alpha becomes (alpha_{perm^-1(0)}, ...).
Polynomial permute_vectors(const Polynomial& f, const std::vector<int>& perm);
Multidegree permute_multidegree(const Multidegree& alpha, const std::vector<int>& perm);

// The gl_m action on C[V^m]: E_{u,v} acts as x_u d/dx_v + y_u d/dy_v
// (1-based u, v).
Polynomial gl_act_xy(int u, int v, const Polynomial& f);

}  // namespace vecinv
