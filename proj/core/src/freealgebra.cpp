#include "vecinv/freealgebra.hpp"

#include "vecinv/linalg.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vecinv {

FreeElement::FreeElement(const DihedralParams& params)
    : params_(params), poly_(VariableUniverse::rho_pi(params.n, params.m)) {}

FreeElement::FreeElement(const DihedralParams& params, Polynomial poly)
    : params_(params), poly_(std::move(poly)) {
  const auto& u = *poly_.universe();
  if (u.kind() != UniverseKind::RhoPi || u.n() != params.n || u.m() != params.m)
    throw UniverseMismatch("free algebra element must live in RHOPI(" + std::to_string(params.n) + "," +
                           std::to_string(params.m) + ")");
}

FreeElement FreeElement::one(const DihedralParams& params) {
  return {params, Polynomial::constant(VariableUniverse::rho_pi(params.n, params.m), 1)};
}

FreeElement FreeElement::rho(const DihedralParams& params, const Multidegree& a) {
  auto u = VariableUniverse::rho_pi(params.n, params.m);
  return {params, Polynomial::variable(u, u->rho_index(a))};
}

FreeElement FreeElement::pi(const DihedralParams& params, const Multidegree& b) {
  auto u = VariableUniverse::rho_pi(params.n, params.m);
  return {params, Polynomial::variable(u, u->pi_index(b))};
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  poly_ += o.poly_;
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  poly_ -= o.poly_;
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) { return {a.params_, a.poly_ * b.poly_}; }

namespace {

Polynomial variable_image(const VariableUniverse& u, std::size_t var) {
  const auto& idx = u.weight(var);
  return u.is_rho(var) ? q_pol(idx) : p_pol(idx, u.n());
}

// Images of the variables of F(n,m); computed once per universe.
const std::vector<Polynomial>& variable_images(const DihedralParams& params) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Polynomial>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{params.n, params.m}];
  if (slot.empty()) {
    auto u = VariableUniverse::rho_pi(params.n, params.m);
    for (std::size_t v = 0; v < u->size(); ++v) slot.push_back(variable_image(*u, v));
  }
  return slot;
}

}  // namespace

Polynomial phi_monomial(const DihedralParams& params, const Monomial& mono) {
  const auto& images = variable_images(params);
  auto u = VariableUniverse::xy(params.m);
  Polynomial r = Polynomial::constant(u, 1);
  for (const auto& [v, e] : mono.factors()) r = r * images.at(v).pow(e);
  return r;
}

Polynomial phi(const FreeElement& e) {
  auto u = VariableUniverse::xy(e.params().m);
  Polynomial r(u);
  for (const auto& [mono, c] : e.poly().terms()) r += phi_monomial(e.params(), mono) * c;
  return r;
}

namespace {

// E_{u,v} on one variable: (coefficient, image variable) or nothing.
std::optional<std::pair<int, std::size_t>> act_on_variable(const VariableUniverse& uni, const MatrixUnit& e,
                                                           std::size_t var) {
  Multidegree idx = uni.weight(var);
  auto ui = static_cast<std::size_t>(e.u - 1);
  auto vi = static_cast<std::size_t>(e.v - 1);
  int coeff = idx[vi];
  if (coeff == 0) return std::nullopt;
  if (ui == vi) return std::make_pair(coeff, var);
  idx[vi] -= 1;
  idx[ui] += 1;
  std::size_t target = uni.is_rho(var) ? uni.rho_index(idx) : uni.pi_index(idx);
  return std::make_pair(coeff, target);
}

}  // namespace

FreeElement gl_act(const MatrixUnit& e, const FreeElement& x) {
  const int m = x.params().m;
  if (e.u < 1 || e.v < 1 || e.u > m || e.v > m) throw std::out_of_range("matrix unit index out of range");
  const auto& uni = *x.poly().universe();
  Polynomial r(x.poly().universe());
  for (const auto& [mono, c] : x.poly().terms()) {
    for (const auto& [var, exp] : mono.factors()) {
      auto img = act_on_variable(uni, e, var);
      if (!img) continue;
      Monomial rest = mono.without_one(var) * Monomial::variable(static_cast<std::uint32_t>(img->second));
      r.add_term(rest, Rational(c * static_cast<long>(exp) * img->first));
    }
  }
  return {x.params(), std::move(r)};
}

std::optional<Weight> is_highest_weight(const FreeElement& x) {
  if (x.is_zero()) throw std::invalid_argument("is_highest_weight: zero element");
  auto w = x.weight();
  if (!w) return std::nullopt;
  for (int i = 1; i < x.params().m; ++i)
    if (!gl_act({i, i + 1}, x).is_zero()) return std::nullopt;
  return w;
}

std::vector<FreeElement> submodule_basis(const FreeElement& x) {
  std::vector<FreeElement> basis;
  if (x.is_zero()) return basis;
  SparseEchelon echelon;
  std::deque<std::size_t> queue;
  auto offer = [&](FreeElement y) {
    if (y.is_zero()) return;
    if (echelon.insert(y.poly())) {
      basis.push_back(std::move(y));
      queue.push_back(basis.size() - 1);
    }
  };
  offer(x);
  const int m = x.params().m;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (int u = 1; u <= m; ++u)
      for (int v = 1; v <= m; ++v) offer(gl_act({u, v}, basis[i]));
  }
  return basis;
}

namespace {

Multidegree pad(std::initializer_list<int> head, int m) {
  Multidegree a(head);
  if (static_cast<int>(a.size()) > m) throw std::invalid_argument("index longer than m");
  a.resize(static_cast<std::size_t>(m), 0);
  return a;
}

}  // namespace

FreeElement make_R222(int n, int m) {
  if (m < 3) throw std::invalid_argument("R_{2,2,2} needs m >= 3");
  DihedralParams params(n, m);
  auto r = [&](std::initializer_list<int> a) { return FreeElement::rho(params, pad(a, m)); };
  FreeElement a = r({2, 0, 0});
  FreeElement b = r({1, 1, 0});
  FreeElement c = r({1, 0, 1});
  FreeElement d = r({0, 2, 0});
  FreeElement e = r({0, 1, 1});
  FreeElement f = r({0, 0, 2});
  // | a b c |
  // | b d e |
  // | c e f |
  return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
}

FreeElement make_R_n2(int n, int m) {
  if (m < 2) throw std::invalid_argument("R(n)_{n,2} needs m >= 2");
  DihedralParams params(n, m);
  auto r = [&](std::initializer_list<int> a) { return FreeElement::rho(params, pad(a, m)); };
  auto p = [&](std::initializer_list<int> b) { return FreeElement::pi(params, pad(b, m)); };
  return p({n, 0}) * r({0, 2}) - Rational(2) * (p({n - 1, 1}) * r({1, 1})) + p({n - 2, 2}) * r({2, 0});
}

FreeElement make_R_2n2k(int n, int k, int m) {
  if (m < 2) throw std::invalid_argument("R(n)_{2n-2k,2k} needs m >= 2");
  if (k < 1 || 2 * k > n)
    throw std::invalid_argument("R(n)_{2n-2k,2k} needs 1 <= k <= n/2 (got k = " + std::to_string(k) + ")");
  DihedralParams params(n, m);
  auto r = [&](std::initializer_list<int> a) { return FreeElement::rho(params, pad(a, m)); };
  auto p = [&](int i, int j) { return FreeElement::pi(params, pad({i, j}, m)); };
  Rational sign_k = (k % 2 == 0) ? 1 : -1;
  FreeElement result = Rational(sign_k * Rational(binomial(2 * k, k)) / 2) * p(n - k, k).pow(2);
  for (int j = 0; j < k; ++j) {
    Rational sign_j = (j % 2 == 0) ? 1 : -1;
    result += Rational(sign_j * binomial(2 * k, j)) * (p(n - j, j) * p(n - 2 * k + j, 2 * k - j));
  }
  FreeElement disc = r({1, 1}).pow(2) - r({2, 0}) * r({0, 2});
  Integer four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  result -= Rational(four_k) * (r({2, 0}).pow(static_cast<unsigned>(n - 2 * k)) * disc.pow(static_cast<unsigned>(k)));
  return result;
}

std::vector<FreeElement> lowering_chain_R_n2(int n, int m) {
  std::vector<FreeElement> chain{make_R_n2(n, m)};
  for (int j = 0; j <= n - 3; ++j) {
    chain.push_back(Rational(Rational(1) / (n - 2 - j)) * gl_act({2, 1}, chain.back()));
  }
  return chain;
}

FreeElement permute_vectors(const FreeElement& x, const std::vector<int>& perm) {
  const auto& uni = *x.poly().universe();
  if (static_cast<int>(perm.size()) != uni.m()) throw std::invalid_argument("permutation size does not match m");
  std::vector<std::uint32_t> image(uni.size());
  for (std::size_t v = 0; v < uni.size(); ++v) {
    Multidegree idx = permute_multidegree(uni.weight(v), perm);
    image[v] = static_cast<std::uint32_t>(uni.is_rho(v) ? uni.rho_index(idx) : uni.pi_index(idx));
  }
  Polynomial r(x.poly().universe());
  for (const auto& [mono, c] : x.poly().terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : mono.factors()) fs.emplace_back(image[v], e);
    r.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return {x.params(), std::move(r)};
}

namespace {

template <typename Visit>
void free_monomials_rec(const VariableUniverse& uni, std::size_t var, Multidegree& remaining,
                        std::vector<std::uint32_t>& exps, Visit& visit) {
  bool done = true;
  for (int r : remaining)
    if (r != 0) {
      done = false;
      break;
    }
  if (done) {
    visit(exps);
    return;
  }
  if (var == uni.size()) return;
  const auto& w = uni.weight(var);
  // Largest admissible exponent of this variable.
  int max_e = 1 << 30;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) max_e = std::min(max_e, remaining[i] / w[i]);
  for (int e = max_e; e >= 0; --e) {
    for (std::size_t i = 0; i < w.size(); ++i) remaining[i] -= e * w[i];
    exps[var] = static_cast<std::uint32_t>(e);
    free_monomials_rec(uni, var + 1, remaining, exps, visit);
    for (std::size_t i = 0; i < w.size(); ++i) remaining[i] += e * w[i];
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> free_monomials(const DihedralParams& params, const Multidegree& alpha) {
  auto uni = VariableUniverse::rho_pi(params.n, params.m);
  if (static_cast<int>(alpha.size()) != params.m) throw std::invalid_argument("multidegree length must equal m");
  std::vector<Monomial> out;
  Multidegree remaining = alpha;
  std::vector<std::uint32_t> exps(uni->size(), 0);
  auto visit = [&](const std::vector<std::uint32_t>& e) { out.push_back(Monomial::from_dense(e)); };
  free_monomials_rec(*uni, 0, remaining, exps, visit);
  return out;
}

std::size_t count_free_monomials(const DihedralParams& params, const Multidegree& alpha) {
  auto uni = VariableUniverse::rho_pi(params.n, params.m);
  if (static_cast<int>(alpha.size()) != params.m) throw std::invalid_argument("multidegree length must equal m");
  std::size_t count = 0;
  Multidegree remaining = alpha;
  std::vector<std::uint32_t> exps(uni->size(), 0);
  auto visit = [&](const std::vector<std::uint32_t>&) { ++count; };
  free_monomials_rec(*uni, 0, remaining, exps, visit);
  return count;
}

}  // namespace vecinv
