#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vecinv/dihedral.hpp"
#include "vecinv/gltheory.hpp"

using namespace vecinv;

namespace {

Polynomial xy_var(int m, char which, int i) {
  auto u = VariableUniverse::xy(m);
  return Polynomial::variable(u, which == 'x' ? u->x_index(i - 1) : u->y_index(i - 1));
}

// g(x_1 + t x_2 + ...), coefficient of t^alpha, by direct expansion.
Polynomial polarize_by_substitution(const Polynomial& g, const Multidegree& alpha) {
  const int m = static_cast<int>(alpha.size());
  auto u = VariableUniverse::xy(m);
  Polynomial sx(u), sy(u);
  for (int j = 1; j <= m; ++j) {
    sx += xy_var(m, 'x', j);
    sy += xy_var(m, 'y', j);
  }
  Polynomial full(u);
  for (const auto& [mono, c] : g.terms())
    full += sx.pow(mono.exponent(0)) * sy.pow(mono.exponent(1)) * c;
  Polynomial out(u);
  for (const auto& [mono, c] : full.terms())
    if (multidegree_of(mono, *u) == alpha) out.add_term(mono, c);
  return out * oracle::frac(1, multinomial(alpha));
}

}  // namespace

TEST_CASE("generating invariants") {
  CHECK(q_invariant().to_string() == "1/1*x1*y1");
  CHECK(p_invariant(4).to_string() == "1/1*x1^4 + 1/1*y1^4");
  CHECK_THROWS_AS(DihedralParams(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(DihedralParams(3, 0), std::invalid_argument);
}

TEST_CASE("closed polarization formulas match substitution") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      for (const auto& beta : compositions(n, m)) CHECK(p_pol(beta, n) == polarize_by_substitution(p_invariant(n), beta));
      for (const auto& a : compositions(2, m)) CHECK(q_pol(a) == polarize_by_substitution(q_invariant(), a));
      auto pol = polarize(p_invariant(n), m);
      CHECK(pol.size() == compositions(n, m).size());
      for (const auto& [beta, f] : pol) CHECK(f == p_pol(beta, n));
    }
  CHECK(q_pol({1, 1}) == (xy_var(2, 'x', 1) * xy_var(2, 'y', 2) + xy_var(2, 'y', 1) * xy_var(2, 'x', 2)) * oracle::frac(1, 2));
  CHECK_THROWS(polarize(p_invariant(4) + q_invariant(), 2));
}

TEST_CASE("polarization identity: sum over alpha of multinomial * g_alpha is g(sum of vectors)") {
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracle::uniform(3, 7), m = oracle::uniform(1, 3);
    const Polynomial g = trial % 2 ? p_invariant(n) : q_invariant();
    auto u = VariableUniverse::xy(m);
    Polynomial sum(u);
    for (const auto& [alpha, f] : polarize(g, m)) sum += f * Rational(multinomial(alpha));
    Polynomial sx(u), sy(u);
    for (int j = 1; j <= m; ++j) {
      sx += xy_var(m, 'x', j);
      sy += xy_var(m, 'y', j);
    }
    Polynomial direct(u);
    for (const auto& [mono, c] : g.terms()) direct += sx.pow(mono.exponent(0)) * sy.pow(mono.exponent(1)) * c;
    CHECK(sum == direct);
  }
}

TEST_CASE("invariance tests") {
  DihedralParams p(4, 2);
  CHECK(is_invariant(p_pol({3, 1}, 4), p));
  CHECK(is_invariant(q_pol({1, 1}), p));
  auto x1 = xy_var(2, 'x', 1), y2 = xy_var(2, 'y', 2);
  CHECK(is_invariant(x1 * y2, p, GroupKind::Cyclic));
  CHECK_FALSE(is_invariant(x1 * y2, p));
  CHECK_FALSE(is_invariant(x1, p, GroupKind::Cyclic));
  CHECK(swap_xy(x1 * y2) == xy_var(2, 'y', 1) * xy_var(2, 'x', 2));
}

TEST_CASE("invariant dimensions of small components") {
  CHECK(invariant_dimension(DihedralParams(4, 2), {1, 1}) == 1);
  CHECK(invariant_dimension(DihedralParams(4, 1), {4}) == 2);
  CHECK(invariant_dimension(DihedralParams(3, 1), {3}) == 1);
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& alpha : compositions_up_to(6, m)) {
        DihedralParams p(n, m);
        auto basis = invariant_basis(p, alpha);
        CHECK(basis.size() == invariant_dimension(p, alpha));
        CHECK(invariant_basis(p, alpha, GroupKind::Cyclic).size() == invariant_dimension(p, alpha, GroupKind::Cyclic));
        for (const auto& b : basis) CHECK(is_invariant(b, p));
      }
}

TEST_CASE("one vector: dimensions follow 1/((1-t^2)(1-t^n))") {
  for (int n = 3; n <= 8; ++n) {
    auto series = oracle::convolve(oracle::geometric(2, 31), oracle::geometric(n, 31));
    for (int d = 0; d <= 30; ++d)
      CHECK(static_cast<long>(invariant_dimension(DihedralParams(n, 1), {d})) == series[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("invariant dimensions match the Schur module multiplicities") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int d = 0; d <= 12; ++d) {
        long direct = 0;
        for (const auto& alpha : compositions(d, m)) direct += static_cast<long>(invariant_dimension(DihedralParams(n, m), alpha));
        long via_modules = 0;
        for (const auto& l : partitions(d, std::min(2, m))) via_modules += invariant_multiplicity(l, n) * schur_dim(l, m);
        CHECK_MESSAGE(direct == via_modules, "n=" << n << " m=" << m << " d=" << d);
      }
}

TEST_CASE("gl action on C[V^m] is a derivation") {
  auto f = p_pol({2, 1, 1}, 4), g = q_pol({0, 1, 1});
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) CHECK(gl_act_xy(u, v, f * g) == gl_act_xy(u, v, f) * g + f * gl_act_xy(u, v, g));
  // E_{u,v} p_beta = beta_v p_{beta + e_u - e_v}.
  CHECK(gl_act_xy(1, 2, p_pol({2, 1, 1}, 4)) == p_pol({3, 0, 1}, 4));
  CHECK(gl_act_xy(2, 1, p_pol({2, 1, 1}, 4)) == p_pol({1, 2, 1}, 4) * Rational(2));
}

TEST_CASE("specialization and permutations") {
  // sigma(p_{n-j,j}) = y1^{n-j} y2^j for j > 0.
  auto s = specialize_x2_zero(p_pol({3, 1}, 4));
  CHECK(s == xy_var(2, 'y', 1).pow(3) * xy_var(2, 'y', 2));
  CHECK(specialize_x2_zero(q_pol({0, 2})).is_zero());
  CHECK(specialize_x2_zero(q_pol({1, 1})) == xy_var(2, 'x', 1) * xy_var(2, 'y', 2) * oracle::frac(1, 2));
  std::vector<int> perm{1, 2, 0};
  CHECK(permute_multidegree({3, 2, 1}, perm) == Multidegree{1, 3, 2});
  CHECK(permute_vectors(p_pol({3, 2, 1}, 6), perm) == p_pol({1, 3, 2}, 6));
}
