#include "vecinv/dihedral.hpp"

#include <algorithm>
#include <stdexcept>

namespace vecinv {

DihedralParams::DihedralParams(int n_, int m_) : n(n_), m(m_) {
  if (n < 3) throw std::invalid_argument("dihedral parameter n must be >= 3 (got " + std::to_string(n) + ")");
  if (m < 1) throw std::invalid_argument("vector count m must be >= 1 (got " + std::to_string(m) + ")");
}

Polynomial q_invariant() {
  auto u = VariableUniverse::xy(1);
  return Polynomial::term(u, Monomial::from_factors({{0, 1}, {1, 1}}), 1);
}

Polynomial p_invariant(int n) {
  auto u = VariableUniverse::xy(1);
  Polynomial p(u);
  p.add_term(Monomial::variable(0, static_cast<std::uint32_t>(n)), 1);
  p.add_term(Monomial::variable(1, static_cast<std::uint32_t>(n)), 1);
  return p;
}

std::map<Multidegree, Polynomial> polarize(const Polynomial& g, int m) {
  const auto& gu = *g.universe();
  if (gu.kind() != UniverseKind::XY || gu.m() != 1)
    throw std::invalid_argument("polarize expects a polynomial in x, y");
  auto deg = g.homogeneous_degree();
  if (!g.is_zero() && !deg) throw std::invalid_argument("polarize expects a homogeneous polynomial");
  int d = deg.value_or(0);

  auto u = VariableUniverse::xy(m);
  Polynomial xs(u);
  Polynomial ys(u);
  for (int i = 0; i < m; ++i) {
    xs += Polynomial::variable(u, u->x_index(i));
    ys += Polynomial::variable(u, u->y_index(i));
  }
  Polynomial expanded(u);
  for (const auto& [mono, c] : g.terms()) {
    expanded += (xs.pow(mono.exponent(0)) * ys.pow(mono.exponent(1))) * c;
  }
  std::map<Multidegree, Polynomial> out;
  for (auto& alpha : compositions(d, m)) out.emplace(alpha, Polynomial(u));
  for (auto& [alpha, part] : expanded.multihomogeneous_components()) {
    out.at(alpha) = part * Rational(1, multinomial(alpha));
  }
  return out;
}

Polynomial q_pol(const Multidegree& alpha) {
  if (alpha.empty() || total(alpha) != 2 ||
      std::any_of(alpha.begin(), alpha.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("q_pol needs a multidegree of total 2, got " + to_string(alpha));
  int m = static_cast<int>(alpha.size());
  auto u = VariableUniverse::xy(m);
  std::vector<int> slots;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < alpha[static_cast<std::size_t>(i)]; ++k) slots.push_back(i);
  auto x = [&](int i) { return static_cast<std::uint32_t>(u->x_index(i)); };
  auto y = [&](int i) { return static_cast<std::uint32_t>(u->y_index(i)); };
  Polynomial q(u);
  if (slots[0] == slots[1]) {
    q.add_term(Monomial::from_factors({{x(slots[0]), 1}, {y(slots[0]), 1}}), 1);
  } else {
    q.add_term(Monomial::from_factors({{x(slots[0]), 1}, {y(slots[1]), 1}}), Rational(1, 2));
    q.add_term(Monomial::from_factors({{x(slots[1]), 1}, {y(slots[0]), 1}}), Rational(1, 2));
  }
  return q;
}

Polynomial p_pol(const Multidegree& beta, int n) {
  if (beta.empty() || total(beta) != n ||
      std::any_of(beta.begin(), beta.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("p_pol needs a multidegree of total " + std::to_string(n) + ", got " +
                                to_string(beta));
  int m = static_cast<int>(beta.size());
  auto u = VariableUniverse::xy(m);
  std::vector<Monomial::Factor> xf;
  std::vector<Monomial::Factor> yf;
  for (int i = 0; i < m; ++i) {
    auto e = static_cast<std::uint32_t>(beta[static_cast<std::size_t>(i)]);
    xf.emplace_back(static_cast<std::uint32_t>(u->x_index(i)), e);
    yf.emplace_back(static_cast<std::uint32_t>(u->y_index(i)), e);
  }
  Polynomial p(u);
  p.add_term(Monomial::from_factors(xf), 1);
  p.add_term(Monomial::from_factors(yf), 1);
  return p;
}

namespace {

void require_xy(const Polynomial& f) {
  if (f.universe()->kind() != UniverseKind::XY)
    throw std::invalid_argument("expected a polynomial in the x, y variables");
}

// sum x-exponents - sum y-exponents
long rotation_weight(const Monomial& mono) {
  long w = 0;
  for (const auto& [v, e] : mono.factors()) w += (v % 2 == 0) ? static_cast<long>(e) : -static_cast<long>(e);
  return w;
}

bool rotation_fixed(const Monomial& mono, int n) { return rotation_weight(mono) % n == 0; }

Monomial swap_monomial(const Monomial& mono) {
  std::vector<Monomial::Factor> f;
  f.reserve(mono.factors().size());
  for (const auto& [v, e] : mono.factors()) f.emplace_back(v ^ 1u, e);
  return Monomial::from_factors(std::move(f));
}

void xy_rec(const Multidegree& alpha, std::size_t i, std::vector<std::uint32_t>& exps,
            std::vector<Monomial>& out) {
  if (i == alpha.size()) {
    out.push_back(Monomial::from_dense(exps));
    return;
  }
  for (int a = alpha[i]; a >= 0; --a) {
    exps[2 * i] = static_cast<std::uint32_t>(a);
    exps[2 * i + 1] = static_cast<std::uint32_t>(alpha[i] - a);
    xy_rec(alpha, i + 1, exps, out);
  }
}

}  // namespace

Polynomial swap_xy(const Polynomial& f) {
  require_xy(f);
  Polynomial r(f.universe());
  for (const auto& [mono, c] : f.terms()) r.add_term(swap_monomial(mono), c);
  return r;
}

bool is_invariant(const Polynomial& f, const DihedralParams& params, GroupKind group) {
  require_xy(f);
  for (const auto& [mono, c] : f.terms())
    if (!rotation_fixed(mono, params.n)) return false;
  if (group == GroupKind::Cyclic) return true;
  return swap_xy(f) == f;
}

std::vector<Monomial> xy_monomials(const Multidegree& alpha) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(2 * alpha.size(), 0);
  xy_rec(alpha, 0, exps, out);
  return out;
}

std::vector<Polynomial> invariant_basis(const DihedralParams& params, const Multidegree& alpha,
                                        GroupKind group) {
  auto u = VariableUniverse::xy(static_cast<int>(alpha.size()));
  std::vector<Polynomial> basis;
  std::vector<Monomial> seen;
  for (const auto& mono : xy_monomials(alpha)) {
    if (!rotation_fixed(mono, params.n)) continue;
    if (group == GroupKind::Cyclic) {
      basis.push_back(Polynomial::term(u, mono, 1));
      continue;
    }
    Monomial partner = swap_monomial(mono);
    if (std::find(seen.begin(), seen.end(), mono) != seen.end()) continue;
    seen.push_back(partner);
    Polynomial orbit_sum = Polynomial::term(u, mono, 1);
    if (partner != mono) orbit_sum.add_term(partner, 1);
    basis.push_back(std::move(orbit_sum));
  }
  return basis;
}

std::size_t invariant_dimension(const DihedralParams& params, const Multidegree& alpha, GroupKind group) {
  std::size_t rotation_fixed_count = 0;
  std::size_t swap_fixed_count = 0;
  for (const auto& mono : xy_monomials(alpha)) {
    if (!rotation_fixed(mono, params.n)) continue;
    ++rotation_fixed_count;
    if (swap_monomial(mono) == mono) ++swap_fixed_count;
  }
  if (group == GroupKind::Cyclic) return rotation_fixed_count;
  return (rotation_fixed_count + swap_fixed_count) / 2;
}

Polynomial specialize_x2_zero(const Polynomial& f) {
  require_xy(f);
  if (f.universe()->m() != 2) throw std::invalid_argument("specialize_x2_zero expects m = 2");
  auto x2 = static_cast<std::uint32_t>(f.universe()->x_index(1));
  Polynomial r(f.universe());
  for (const auto& [mono, c] : f.terms())
    if (mono.exponent(x2) == 0) r.add_term(mono, c);
  return r;
}

Multidegree permute_multidegree(const Multidegree& alpha, const std::vector<int>& perm) {
  Multidegree r(alpha.size(), 0);
  for (std::size_t j = 0; j < alpha.size(); ++j) r[static_cast<std::size_t>(perm[j])] = alpha[j];
  return r;
}

Polynomial permute_vectors(const Polynomial& f, const std::vector<int>& perm) {
  require_xy(f);
  if (static_cast<int>(perm.size()) != f.universe()->m())
    throw std::invalid_argument("permutation size does not match m");
  Polynomial r(f.universe());
  for (const auto& [mono, c] : f.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : mono.factors()) {
      auto slot = static_cast<std::uint32_t>(perm[v / 2]);
      fs.emplace_back(2 * slot + (v % 2), e);
    }
    r.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return r;
}

Polynomial gl_act_xy(int u, int v, const Polynomial& f) {
  require_xy(f);
  int m = f.universe()->m();
  if (u < 1 || v < 1 || u > m || v > m) throw std::out_of_range("matrix unit index out of range");
  Polynomial r(f.universe());
  for (const auto& [mono, c] : f.terms()) {
    for (std::uint32_t coord = 0; coord < 2; ++coord) {
      auto from = static_cast<std::uint32_t>(2 * (v - 1)) + coord;
      auto to = static_cast<std::uint32_t>(2 * (u - 1)) + coord;
      auto e = mono.exponent(from);
      if (e == 0) continue;
      r.add_term(mono.without_one(from) * Monomial::variable(to), c * e);
    }
  }
  return r;
}

}  // namespace vecinv
