#pragma once

#include <string>
#include <vector>

namespace vecinv {

// A vector of m non-negative integers: the multidegree of an element of
// C[V^m] or F(n,m), equivalently a GL_m weight.
using Multidegree = std::vector<int>;
using Weight = Multidegree;

inline int total(const Multidegree& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

std::string to_string(const Multidegree& a);

// All a in N_0^m with sum d, in decreasing lexicographic order
// ((d,0,..,0) first).
std::vector<Multidegree> compositions(int d, int m);

// All a in N_0^m with sum <= d, grouped by total degree ascending, each
// group in decreasing lexicographic order.
std::vector<Multidegree> compositions_up_to(int d, int m);

bool is_decreasing(const Multidegree& a);

// Component-wise a - b; empty optional semantics are expressed by
// `fits_inside`.
bool fits_inside(const Multidegree& inner, const Multidegree& outer);
Multidegree difference(const Multidegree& outer, const Multidegree& inner);

// Multinomial coefficient d! / (a_1! ... a_m!).
long multinomial(const Multidegree& a);

}  // namespace vecinv
