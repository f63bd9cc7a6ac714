#include "vecinv/kernelcalc.hpp"

#include "vecinv/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace vecinv {

namespace {

std::vector<Monomial> component_monomials(const DihedralParams& params, const Multidegree& alpha,
                                          const KernelConfig& config) {
  std::size_t count = count_free_monomials(params, alpha);
  if (count > config.resource_cap)
    throw ResourceError("component " + to_string(alpha) + " of F(" + std::to_string(params.n) + "," +
                        std::to_string(params.m) + ") has " + std::to_string(count) +
                        " monomials, above the resource cap " + std::to_string(config.resource_cap));
  auto mons = free_monomials(params, alpha);
  if (config.reversed_enumeration) std::reverse(mons.begin(), mons.end());
  return mons;
}

}  // namespace

KernelComponent kernel_component(const DihedralParams& params, const Multidegree& alpha,
                                 const KernelConfig& config) {
  if (static_cast<int>(alpha.size()) != params.m) throw std::invalid_argument("multidegree length must equal m");
  KernelComponent out;
  auto mons = component_monomials(params, alpha, config);
  if (mons.empty()) return out;
  std::vector<Polynomial> images;
  images.reserve(mons.size());
  for (const auto& mono : mons) images.push_back(phi_monomial(params, mono));
  auto u = VariableUniverse::rho_pi(params.n, params.m);
  for (const auto& rel : linear_relations(images)) {
    Polynomial p(u);
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (sgn(rel[i]) != 0) p.add_term(mons[i], rel[i]);
    out.basis.emplace_back(params, std::move(p));
  }
  out.dimension = out.basis.size();
  return out;
}

KernelComponent kernel_component(const DihedralParams& params, int d, const KernelConfig& config) {
  KernelComponent out;
  for (const auto& alpha : compositions(d, params.m)) {
    auto c = kernel_component(params, alpha, config);
    out.dimension += c.dimension;
    for (auto& b : c.basis) out.basis.push_back(std::move(b));
  }
  return out;
}

KernelReport kernel_report(const DihedralParams& params, int D, const KernelConfig& config) {
  KernelReport report{params, {}};
  auto uni = VariableUniverse::rho_pi(params.n, params.m);
  std::map<Multidegree, KernelComponent> kernels;
  for (int d = 0; d <= D; ++d) report.per_degree[d];
  for (const auto& alpha : compositions_up_to(D, params.m)) {
    auto comp = kernel_component(params, alpha, config);
    // (F_+ ker)_alpha is spanned by variable multiples of lower kernels.
    SparseEchelon products;
    for (std::size_t v = 0; v < uni->size(); ++v) {
      const auto& w = uni->weight(v);
      if (!fits_inside(w, alpha)) continue;
      auto it = kernels.find(difference(alpha, w));
      if (it == kernels.end()) continue;
      Monomial var = Monomial::variable(static_cast<std::uint32_t>(v));
      for (const auto& b : it->second.basis) products.insert(b.poly().multiply_monomial(var, 1));
    }
    auto& entry = report.per_degree[total(alpha)];
    entry.dimension += comp.dimension;
    entry.new_generators += comp.dimension - products.rank();
    entry.basis.insert(entry.basis.end(), comp.basis.begin(), comp.basis.end());
    kernels.emplace(alpha, std::move(comp));
  }
  return report;
}

std::map<int, std::size_t> minimal_generators_by_degree(const DihedralParams& params, int D,
                                                         const KernelConfig& config) {
  std::map<int, std::size_t> out;
  const KernelReport report = kernel_report(params, D, config);
  for (const auto& [d, entry] : report.per_degree) out[d] = entry.new_generators;
  return out;
}

TruncatedIdeal::TruncatedIdeal(const DihedralParams& params, std::vector<FreeElement> generators, int degree_cap)
    : params_(params), generators_(std::move(generators)), degree_cap_(degree_cap) {
  for (const auto& g : generators_) {
    if (g.is_zero()) continue;
    auto w = g.weight();
    if (!w) throw std::invalid_argument("ideal generators must be multihomogeneous: " + g.to_string());
    weights_.push_back(*w);
  }
  std::erase_if(generators_, [](const FreeElement& g) { return g.is_zero(); });
}

std::vector<Polynomial> TruncatedIdeal::spanning_set(const Multidegree& alpha) const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!fits_inside(weights_[i], alpha)) continue;
    for (const auto& mu : free_monomials(params_, difference(alpha, weights_[i])))
      out.push_back(generators_[i].poly().multiply_monomial(mu, 1));
  }
  return out;
}

std::size_t TruncatedIdeal::dimension(const Multidegree& alpha) const {
  SparseEchelon e;
  for (const auto& p : spanning_set(alpha)) e.insert(p);
  return e.rank();
}

bool truncated_membership(const TruncatedIdeal& ideal, const FreeElement& e) {
  if (e.is_zero()) return true;
  for (const auto& [alpha, comp] : e.poly().multihomogeneous_components()) {
    if (total(alpha) > ideal.degree_cap())
      throw std::invalid_argument("element of degree " + std::to_string(total(alpha)) + " exceeds ideal cap " +
                                  std::to_string(ideal.degree_cap()));
    SparseEchelon span;
    for (const auto& p : ideal.spanning_set(alpha)) span.insert(p);
    if (!span.contains(comp)) return false;
  }
  return true;
}

std::vector<std::vector<int>> coset_representatives(const Multidegree& alpha) {
  std::vector<int> perm(alpha.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Multidegree, std::vector<int>> seen;
  do {
    seen.try_emplace(permute_multidegree(alpha, perm), perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> out;
  for (auto& [img, p] : seen) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polynomial> expand_secondaries(const HironakaSpec& spec) {
  std::vector<Polynomial> out;
  for (const auto& [alpha, polys] : spec.secondaries_s)
    for (const auto& perm : coset_representatives(alpha))
      for (const auto& f : polys) out.push_back(permute_vectors(f, perm));
  return out;
}

namespace {

std::vector<long> divide_by_primaries(std::vector<long> series, const std::vector<int>& degrees) {
  for (int k : degrees)
    for (std::size_t i = static_cast<std::size_t>(k); k > 0 && i < series.size(); ++i)
      series[i] += series[i - static_cast<std::size_t>(k)];
  return series;
}

}  // namespace

HironakaReport verify_hironaka(const HironakaSpec& spec, int D) {
  HironakaReport report;
  const auto& params = spec.params;

  for (std::size_t i = 0; i < spec.secondaries_s.size(); ++i) {
    const auto& alpha = spec.secondaries_s[i].first;
    if (!is_decreasing(alpha)) report.failures.push_back("multidegree " + to_string(alpha) + " is not decreasing");
    if (i > 0 && spec.secondaries_s[i - 1].first == alpha)
      report.failures.push_back("multidegree " + to_string(alpha) + " listed twice");
    for (const auto& f : spec.secondaries_s[i].second) {
      auto w = f.multidegree();
      if (!w || *w != alpha) report.failures.push_back("secondary " + f.to_string() + " is not of weight " + to_string(alpha));
    }
  }
  if (!report.failures.empty()) report.invariance = false;

  std::vector<int> primary_degrees;
  std::vector<Multidegree> primary_weights;
  for (const auto& p : spec.primaries) {
    auto w = p.multidegree();
    if (!w || !is_invariant(p, params, spec.group)) {
      report.invariance = false;
      report.failures.push_back("primary " + p.to_string() + " is not a multihomogeneous invariant");
      continue;
    }
    primary_weights.push_back(*w);
    primary_degrees.push_back(total(*w));
  }

  auto expanded = expand_secondaries(spec);
  report.expanded_count = expanded.size();
  std::map<Multidegree, std::vector<const Polynomial*>> by_weight;
  std::vector<long> numerator(static_cast<std::size_t>(D) + 1, 0);
  for (const auto& s : expanded) {
    if (!is_invariant(s, params, spec.group)) {
      report.invariance = false;
      report.failures.push_back("secondary " + s.to_string() + " is not invariant");
    }
    auto w = s.multidegree();
    if (!w) continue;
    by_weight[*w].push_back(&s);
    if (total(*w) <= D) ++numerator[static_cast<std::size_t>(total(*w))];
  }

  // (a) independence modulo the ideal (P_+) of the invariant ring.
  for (const auto& [alpha, secs] : by_weight) {
    if (total(alpha) > D) continue;
    SparseEchelon span;
    for (std::size_t i = 0; i < primary_weights.size(); ++i) {
      if (!fits_inside(primary_weights[i], alpha)) continue;
      for (const auto& b : invariant_basis(params, difference(alpha, primary_weights[i]), spec.group))
        span.insert(spec.primaries[i] * b);
    }
    for (const Polynomial* s : secs)
      if (!span.insert(*s)) {
        report.independence = false;
        report.failures.push_back("dependent modulo primaries in multidegree " + to_string(alpha));
        break;
      }
  }

  // (b) the Hilbert identity.
  report.predicted_series = divide_by_primaries(numerator, primary_degrees);
  for (int d = 0; d <= D; ++d) {
    long dim = 0;
    for (const auto& alpha : compositions(d, params.m))
      dim += static_cast<long>(invariant_dimension(params, alpha, spec.group));
    report.invariant_series.push_back(dim);
    if (dim != report.predicted_series[static_cast<std::size_t>(d)] && report.hilbert_match) {
      report.hilbert_match = false;
      report.failures.push_back("Hilbert mismatch at degree " + std::to_string(d) + ": predicted " +
                                std::to_string(report.predicted_series[static_cast<std::size_t>(d)]) +
                                ", actual " + std::to_string(dim));
    }
  }
  return report;
}

bool furnish_check(const std::vector<FreeElement>& T, const std::vector<FreeElement>& H_gens,
                   const std::vector<FreeElement>& K_gens, const DihedralParams& params, int d) {
  TruncatedIdeal H(params, H_gens, d);
  TruncatedIdeal K(params, K_gens, d);
  std::map<Multidegree, std::vector<const FreeElement*>> t_by_weight;
  for (const auto& t : T) {
    auto w = t.weight();
    if (!w) throw std::invalid_argument("T elements must be multihomogeneous: " + t.to_string());
    t_by_weight[*w].push_back(&t);
  }
  for (const auto& alpha : compositions_up_to(d, params.m)) {
    std::size_t full = count_free_monomials(params, alpha);
    SparseEchelon span;
    for (const FreeElement* t : t_by_weight[alpha]) span.insert(t->poly());
    for (const auto& p : H.spanning_set(alpha)) {
      if (span.rank() == full) break;
      span.insert(p);
    }
    for (const auto& p : K.spanning_set(alpha)) {
      if (span.rank() == full) break;
      span.insert(p);
    }
    if (span.rank() != full) return false;
  }
  return true;
}

GenerationReport verify_gl_generation(const DihedralParams& params, const std::vector<FreeElement>& hwvs, int D,
                                      const KernelConfig& config) {
  GenerationReport report;
  std::vector<FreeElement> gens;
  for (const auto& h : hwvs) {
    if (!phi(h).is_zero()) {
      report.containment = false;
      report.failures.push_back("generator not in the kernel: " + h.to_string());
    }
    for (auto& b : submodule_basis(h)) {
      if (!phi(b).is_zero()) {
        report.containment = false;
        report.failures.push_back("submodule element not in the kernel");
      }
      gens.push_back(std::move(b));
    }
  }
  TruncatedIdeal ideal(params, std::move(gens), D);
  for (int d = 0; d <= D; ++d) report.dims[d] = {0, 0};
  for (const auto& alpha : compositions_up_to(D, params.m)) {
    std::size_t ker = kernel_component(params, alpha, config).dimension;
    std::size_t id = ideal.dimension(alpha);
    auto& slot = report.dims[total(alpha)];
    slot.first += id;
    slot.second += ker;
    if (id != ker) {
      report.equal = false;
      report.failures.push_back("multidegree " + to_string(alpha) + ": ideal " + std::to_string(id) + ", kernel " +
                                std::to_string(ker));
    }
  }
  return report;
}

}  // namespace vecinv
