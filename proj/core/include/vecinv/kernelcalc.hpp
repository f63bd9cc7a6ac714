#pragma once

#include "vecinv/dihedral.hpp"
#include "vecinv/freealgebra.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vecinv {

// A component whose monomial basis exceeds the configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultResourceCap = 20000;

struct KernelConfig {
  std::size_t resource_cap = kDefaultResourceCap;
  // Enumerate F-monomials in reverse order; results must not change.
  bool reversed_enumeration = false;
};

// The default truncation degree 2n+2.
inline int default_degree_cap(int n) { return 2 * n + 2; }

struct KernelComponent {
  std::size_t dimension = 0;
  std::vector<FreeElement> basis;
};

// ker phi(n,m) in one multidegree, from the nullspace of phi on the
// monomial basis of F(n,m)_alpha.
KernelComponent kernel_component(const DihedralParams& params, const Multidegree& alpha,
                                 const KernelConfig& config = {});
// Same, over all multidegrees of total degree d (ascending composition
// order reversed: (d,0,..) first).
KernelComponent kernel_component(const DihedralParams& params, int d, const KernelConfig& config = {});

struct KernelDegreeEntry {
  std::size_t dimension = 0;
  std::vector<FreeElement> basis;
  std::size_t new_generators = 0;
};

struct KernelReport {
  DihedralParams params;
  std::map<int, KernelDegreeEntry> per_degree;
};

// Per degree d <= D: dim ker_d and the number of minimal ideal generators
// dim ker_d - dim (F_+ ker)_d, computed multidegree by multidegree.
KernelReport kernel_report(const DihedralParams& params, int D, const KernelConfig& config = {});

std::map<int, std::size_t> minimal_generators_by_degree(const DihedralParams& params, int D,
                                                         const KernelConfig& config = {});

// The ideal of F(n,m) generated by multihomogeneous elements, known only in
// total degrees <= degree_cap.
class TruncatedIdeal {
 public:
  TruncatedIdeal(const DihedralParams& params, std::vector<FreeElement> generators, int degree_cap);

  const DihedralParams& params() const { return params_; }
  int degree_cap() const { return degree_cap_; }
  const std::vector<FreeElement>& generators() const { return generators_; }

  // {g * mu : g a generator, mu an F-monomial, weight alpha}.
  std::vector<Polynomial> spanning_set(const Multidegree& alpha) const;
  std::size_t dimension(const Multidegree& alpha) const;

 private:
  DihedralParams params_;
  std::vector<FreeElement> generators_;
  std::vector<Multidegree> weights_;
  int degree_cap_;
};

// Componentwise span test; throws std::invalid_argument above the cap.
bool truncated_membership(const TruncatedIdeal& ideal, const FreeElement& e);

// Left coset representatives of Stab(alpha) in S_m: the lexicographically
// smallest permutation of each coset, sorted. Permutations use the
// permute_vectors convention.
std::vector<std::vector<int>> coset_representatives(const Multidegree& alpha);

// A candidate Hironaka decomposition of C[V^m]^G: primary invariants and a
// system of secondary S-generators, one block per decreasing multidegree.
struct HironakaSpec {
  DihedralParams params;
  GroupKind group = GroupKind::Dihedral;
  std::vector<Polynomial> primaries;
  std::vector<std::pair<Multidegree, std::vector<Polynomial>>> secondaries_s;
};

struct HironakaReport {
  bool invariance = true;
  bool independence = true;
  bool hilbert_match = true;
  std::size_t expanded_count = 0;  // |L*|
  // Coefficients through D of both sides of the Hilbert identity.
  std::vector<long> predicted_series;
  std::vector<long> invariant_series;
  std::vector<std::string> failures;

  bool passed() const { return invariance && independence && hilbert_match; }
};

// L*, the S_m-expansion of the S-generators.
std::vector<Polynomial> expand_secondaries(const HironakaSpec& spec);

HironakaReport verify_hironaka(const HironakaSpec& spec, int D);

// Is F(n,m)_alpha = span T_alpha + H_alpha + K_alpha for every |alpha| <= d?
bool furnish_check(const std::vector<FreeElement>& T, const std::vector<FreeElement>& H_gens,
                   const std::vector<FreeElement>& K_gens, const DihedralParams& params, int d);

struct GenerationReport {
  bool containment = true;
  bool equal = true;
  // degree -> (ideal dim, kernel dim)
  std::map<int, std::pair<std::size_t, std::size_t>> dims;
  std::vector<std::string> failures;

  bool passed() const { return containment && equal; }
};

// Does the ideal generated by the GL-submodules of the given highest weight
// vectors coincide with ker phi(n,m) in all degrees <= D?
GenerationReport verify_gl_generation(const DihedralParams& params, const std::vector<FreeElement>& hwvs, int D,
                                      const KernelConfig& config = {});

}  // namespace vecinv
