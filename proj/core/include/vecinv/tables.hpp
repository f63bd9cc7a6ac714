#pragma once

#include "vecinv/freealgebra.hpp"
#include "vecinv/kernelcalc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vecinv {

// p_{n e_j} and q_{2 e_j} for j = 1..m, in that order.
std::vector<Polynomial> standard_primaries(int n, int m);

// The same, as variables of F(n,m).
std::vector<FreeElement> primary_variables(int n, int m);

// m = 2: secondaries q_{1,1}^j (j = 0..n) and p_{n-i,i} (i = 1..n-1).
std::vector<Polynomial> m2_secondaries(int n);

// m2_secondaries compressed to S-generators (decreasing multidegrees).
HironakaSpec m2_hironaka(int n);

// n = 4, m = 3: the 13-row S-generator table of C[V^3]^{D_8}.
HironakaSpec d8_m3_hironaka();

// n = 4, m = 3: the 15-row monomial S-generator table of C[V^3]^H for the
// rotation subgroup H.
HironakaSpec cyclic_m3_hironaka();

// The D_8 table read in F(4,3) (q -> rho, p -> pi), closed under S_3.
std::vector<FreeElement> d8_m3_lifts();

// Named relations valid for (n, m), labelled as "R_{2,2,2}", "R(4)_{4,2}",
// "R(4)_{6,2}", ...: R_{2,2,2} when m >= 3, then R(n)_{n,2} and
// R(n)_{2n-2k,2k} for k = 1..n/2 when m >= 2.
std::vector<std::pair<std::string, FreeElement>> named_relations(int n, int m);

// The elements of named_relations, without labels.
std::vector<FreeElement> relation_generators(int n, int m);

}  // namespace vecinv
