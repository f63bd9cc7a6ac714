#pragma once

#include "vecinv/multidegree.hpp"

#include <map>
#include <string>
#include <vector>

namespace vecinv {

// A partition with trailing zeros stripped; the empty partition labels the
// trivial module.
class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros; throws on negative or increasing entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // 0 beyond the height.
  int part(int i) const { return i < height() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition doubled() const;

  bool operator==(const Partition&) const = default;
  // By size, then larger parts first, so (4,2) precedes (3,3).
  bool operator<(const Partition& o) const;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// Partitions of d with at most max_parts parts, reverse lexicographic.
std::vector<Partition> partitions(int d, int max_parts);

// A polynomial GL_m-module up to isomorphism: multiplicities of S^lambda(C^m).
class Decomposition {
 public:
  explicit Decomposition(int m) : m_(m) {}

  int m() const { return m_; }
  const std::map<Partition, long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Shapes of height > m are dropped; zero multiplicities are erased.
  void add(const Partition& p, long multiplicity = 1);
  long multiplicity(const Partition& p) const;

  Decomposition& operator+=(const Decomposition& o);
  // Throws std::logic_error if any multiplicity would become negative.
  Decomposition& operator-=(const Decomposition& o);

  long dimension() const;
  long weight_space_dimension(const Multidegree& alpha) const;

  bool operator==(const Decomposition& o) const { return m_ == o.m_ && entries_ == o.entries_; }

  // "S(4,2)+2S(6,2)"; "0" when empty.
  std::string to_string() const;

 private:
  int m_;
  std::map<Partition, long> entries_;
};

using GradedDecomposition = std::map<int, Decomposition>;

// Semistandard tableaux of shape lambda and content alpha.
long kostka(const Partition& lambda, const Multidegree& alpha);

long schur_dim(const Partition& lambda, int m);

// S^lambda (x) S^(k), by horizontal strips.
Decomposition pieri_row(const Partition& lambda, int k, int m);

// S^d(S^2(C^m)) = sum over lambda of d of S^(2 lambda).
Decomposition symd_of_sym2(int d, int m);

// S^2(S^n(C^m)) = sum_j S^(2n-2j, 2j).
Decomposition sym2_of_symn(int n, int m);

// The quotient of S(S^2) by its height-3 part, even degrees up to D.
GradedDecomposition dbar_truncated(int m, int D);

// Coefficients of 1/((1-t^2)(1-t^n)).
long hilbert_h(int n, int d);
std::vector<long> hilbert_series(int n, int max_degree);

// Multiplicity of S^lambda in C[V^m]^{D_2n}.
long invariant_multiplicity(const Partition& lambda, int n);

GradedDecomposition invariants_truncated(int n, int m, int D);

// D-bar (x) E(n,m) in degrees <= D; requires D <= 2n+2.
GradedDecomposition ambient_truncated(int n, int m, int D);

// ambient - invariants, degree by degree; the kernel of the map from
// D-bar (x) E(n,m).
GradedDecomposition kernel_decomposition(int n, int m, int D);

// kernel_decomposition plus the height >= 3 part of S(S^2) (x) E(n,m), so
// that dimensions match the kernel of phi on F(n,m) itself.
GradedDecomposition presentation_kernel_decomposition(int n, int m, int D);

}  // namespace vecinv
