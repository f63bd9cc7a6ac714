#include "vecinv/tables.hpp"

#include <stdexcept>

namespace vecinv {

namespace {

Multidegree unit(int j, int scale, int m) {
  Multidegree a(static_cast<std::size_t>(m), 0);
  a[static_cast<std::size_t>(j)] = scale;
  return a;
}

// A product of q's and p's written as ('q'|'p', index) factors.
using Factor = std::pair<char, Multidegree>;
using Product = std::vector<Factor>;

Polynomial evaluate(const Product& prod, int n, int m) {
  Polynomial r = Polynomial::constant(VariableUniverse::xy(m), 1);
  for (const auto& [kind, idx] : prod) r = r * (kind == 'q' ? q_pol(idx) : p_pol(idx, n));
  return r;
}

FreeElement lift(const Product& prod, int n, int m) {
  DihedralParams params(n, m);
  FreeElement r = FreeElement::one(params);
  for (const auto& [kind, idx] : prod) r = r * (kind == 'q' ? FreeElement::rho(params, idx) : FreeElement::pi(params, idx));
  return r;
}

Factor q(int a, int b, int c) { return {'q', {a, b, c}}; }
Factor p(int a, int b, int c) { return {'p', {a, b, c}}; }

const std::vector<std::pair<Multidegree, std::vector<Product>>>& d8_table() {
  static const std::vector<std::pair<Multidegree, std::vector<Product>>> table = {
      {{0, 0, 0}, {{}}},
      {{1, 1, 0}, {{q(1, 1, 0)}}},
      {{2, 1, 1}, {{p(2, 1, 1)}, {q(1, 1, 0), q(1, 0, 1)}}},
      {{2, 2, 0}, {{p(2, 2, 0)}, {q(1, 1, 0), q(1, 1, 0)}}},
      {{3, 1, 0}, {{p(3, 1, 0)}}},
      {{3, 2, 1}, {{p(3, 1, 0), q(0, 1, 1)}, {q(1, 1, 0), q(1, 1, 0), q(1, 0, 1)}}},
      {{3, 3, 0}, {{q(1, 1, 0), q(1, 1, 0), q(1, 1, 0)}}},
      {{4, 1, 1}, {{p(3, 1, 0), q(1, 0, 1)}}},
      {{3, 3, 2}, {{p(2, 1, 1), p(1, 2, 1)}, {p(3, 1, 0), q(0, 1, 1), q(0, 1, 1)}}},
      {{4, 2, 2}, {{p(3, 1, 0), q(1, 0, 1), q(0, 1, 1)}, {q(1, 1, 0), q(1, 1, 0), q(1, 0, 1), q(1, 0, 1)}}},
      {{4, 3, 1}, {{q(1, 1, 0), q(1, 1, 0), q(1, 1, 0), q(1, 0, 1)}}},
      {{4, 4, 0}, {{q(1, 1, 0), q(1, 1, 0), q(1, 1, 0), q(1, 1, 0)}}},
      {{4, 3, 3}, {{p(3, 1, 0), q(1, 0, 1), q(0, 1, 1), q(0, 1, 1)}}},
  };
  return table;
}

}  // namespace

std::vector<Polynomial> standard_primaries(int n, int m) {
  std::vector<Polynomial> out;
  for (int j = 0; j < m; ++j) out.push_back(p_pol(unit(j, n, m), n));
  for (int j = 0; j < m; ++j) out.push_back(q_pol(unit(j, 2, m)));
  return out;
}

std::vector<FreeElement> primary_variables(int n, int m) {
  DihedralParams params(n, m);
  std::vector<FreeElement> out;
  for (int j = 0; j < m; ++j) out.push_back(FreeElement::pi(params, unit(j, n, m)));
  for (int j = 0; j < m; ++j) out.push_back(FreeElement::rho(params, unit(j, 2, m)));
  return out;
}

std::vector<Polynomial> m2_secondaries(int n) {
  std::vector<Polynomial> out;
  Polynomial q11 = q_pol({1, 1});
  for (int j = 0; j <= n; ++j) out.push_back(q11.pow(static_cast<unsigned>(j)));
  for (int i = 1; i <= n - 1; ++i) out.push_back(p_pol({n - i, i}, n));
  return out;
}

HironakaSpec m2_hironaka(int n) {
  HironakaSpec spec{DihedralParams(n, 2), GroupKind::Dihedral, standard_primaries(n, 2), {}};
  std::map<Multidegree, std::vector<Polynomial>> blocks;
  for (auto& s : m2_secondaries(n)) {
    auto w = *s.multidegree();
    if (is_decreasing(w)) blocks[w].push_back(std::move(s));
  }
  for (auto& [w, polys] : blocks) spec.secondaries_s.emplace_back(w, std::move(polys));
  return spec;
}

HironakaSpec d8_m3_hironaka() {
  HironakaSpec spec{DihedralParams(4, 3), GroupKind::Dihedral, standard_primaries(4, 3), {}};
  for (const auto& [alpha, prods] : d8_table()) {
    std::vector<Polynomial> polys;
    for (const auto& prod : prods) polys.push_back(evaluate(prod, 4, 3));
    spec.secondaries_s.emplace_back(alpha, std::move(polys));
  }
  return spec;
}

HironakaSpec cyclic_m3_hironaka() {
  static const std::vector<std::pair<Multidegree, std::vector<std::string>>> table = {
      {{0, 0, 0}, {"1"}},
      {{1, 1, 0}, {"x1*y2", "y1*x2"}},
      {{2, 1, 1}, {"x1^2*x2*x3", "y1^2*y2*y3", "x1^2*y2*y3", "y1^2*x2*x3"}},
      {{2, 2, 0}, {"x1^2*x2^2", "y1^2*y2^2", "x1^2*y2^2", "y1^2*x2^2"}},
      {{3, 1, 0}, {"x1^3*x2", "y1^3*y2"}},
      {{4, 0, 0}, {"x1^4"}},
      {{3, 2, 1}, {"x1^3*y2^2*y3", "y1^3*x2^2*x3", "x1^3*x2^2*y3", "y1^3*y2^2*x3"}},
      {{3, 3, 0}, {"x1^3*y2^3", "y1^3*x2^3"}},
      {{4, 1, 1}, {"x1^4*x2*y3", "x1^4*y2*x3"}},
      {{3, 3, 2}, {"x1^3*x2^3*x3^2", "y1^3*y2^3*y3^2", "x1^3*x2^3*y3^2", "y1^3*y2^3*x3^2"}},
      {{4, 2, 2}, {"x1^4*x2^2*x3^2", "x1^4*y2^2*y3^2", "x1^4*x2^2*y3^2", "x1^4*y2^2*x3^2"}},
      {{4, 3, 1}, {"x1^4*x2^3*x3", "x1^4*y2^3*y3"}},
      {{4, 4, 0}, {"x1^4*x2^4"}},
      {{4, 3, 3}, {"x1^4*x2^3*y3^3", "x1^4*y2^3*x3^3"}},
      {{4, 4, 4}, {"x1^4*x2^4*x3^4"}},
  };
  HironakaSpec spec{DihedralParams(4, 3), GroupKind::Cyclic, standard_primaries(4, 3), {}};
  auto u = VariableUniverse::xy(3);
  for (const auto& [alpha, texts] : table) {
    std::vector<Polynomial> polys;
    for (const auto& t : texts) polys.push_back(parse_polynomial(t, u));
    spec.secondaries_s.emplace_back(alpha, std::move(polys));
  }
  return spec;
}

std::vector<FreeElement> d8_m3_lifts() {
  std::vector<FreeElement> out;
  for (const auto& [alpha, prods] : d8_table())
    for (const auto& perm : coset_representatives(alpha))
      for (const auto& prod : prods) out.push_back(permute_vectors(lift(prod, 4, 3), perm));
  return out;
}

std::vector<std::pair<std::string, FreeElement>> named_relations(int n, int m) {
  std::vector<std::pair<std::string, FreeElement>> out;
  if (m >= 3) out.emplace_back("R_{2,2,2}", make_R222(n, m));
  if (m >= 2) {
    auto label = [n](int a, int b) {
      return "R(" + std::to_string(n) + ")_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    };
    out.emplace_back(label(n, 2), make_R_n2(n, m));
    for (int k = 1; 2 * k <= n; ++k) out.emplace_back(label(2 * n - 2 * k, 2 * k), make_R_2n2k(n, k, m));
  }
  return out;
}

std::vector<FreeElement> relation_generators(int n, int m) {
  std::vector<FreeElement> out;
  for (auto& [name, r] : named_relations(n, m)) out.push_back(std::move(r));
  return out;
}

}  // namespace vecinv
