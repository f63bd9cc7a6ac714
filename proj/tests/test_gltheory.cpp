#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vecinv/gltheory.hpp"

using namespace vecinv;

namespace {

bool dominated(const Multidegree& alpha, const Partition& lambda) {
  Multidegree a = alpha;
  std::sort(a.rbegin(), a.rend());
  int sa = 0, sl = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sl += lambda.part(static_cast<int>(i));
    if (sa > sl) return false;
  }
  return true;
}

Decomposition dec(int m, std::initializer_list<std::pair<Partition, long>> items) {
  Decomposition d(m);
  for (const auto& [p, k] : items) d.add(p, k);
  return d;
}

}  // namespace

TEST_CASE("partitions normalize and order") {
  CHECK(Partition({4, 2, 0, 0}).parts() == std::vector<int>{4, 2});
  CHECK(Partition({4, 2}).height() == 2);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({4, 2}) < Partition({3, 3}));
  CHECK(Partition({3, 3}) < Partition({7}));
  CHECK(partitions(4, 2).size() == 3);
  CHECK(partitions(0, 3).size() == 1);
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka({6, 2}, {6, 1, 1}) == 1);
  CHECK(kostka({4, 4}, {6, 1, 1}) == 0);
  CHECK(kostka({6, 2}, {4, 2, 2}) == 3);
  CHECK_THROWS_AS(kostka({2}, {1}), std::invalid_argument);
}

TEST_CASE("Kostka numbers agree with brute-force tableau fillings") {
  for (int d = 0; d <= 6; ++d)
    for (const auto& l : partitions(d, 3))
      for (const auto& alpha : compositions(d, 3)) CHECK(kostka(l, alpha) == oracle::brute_kostka(l.parts(), alpha));
}

TEST_CASE("Kostka positivity follows dominance; K(l,l) = 1; symmetric in content") {
  for (int d = 1; d <= 8; ++d)
    for (const auto& l : partitions(d, 4))
      for (const auto& alpha : compositions(d, 4)) {
        long k = kostka(l, alpha);
        CHECK((k > 0) == dominated(alpha, l));
        Multidegree sorted = alpha;
        std::sort(sorted.rbegin(), sorted.rend());
        CHECK(k == kostka(l, sorted));
      }
  for (int d = 1; d <= 6; ++d)
    for (const auto& l : partitions(d, d)) {
      Multidegree own = l.parts();
      CHECK(kostka(l, own) == 1);
    }
}

TEST_CASE("Schur dimensions: Kostka sum equals the Weyl formula") {
  CHECK(schur_dim({4, 2}, 3) == 27);
  CHECK(schur_dim({4, 4}, 3) == 15);
  CHECK(schur_dim({6, 2}, 3) == 60);
  CHECK(schur_dim({2, 2, 2}, 3) == 1);
  CHECK(schur_dim({2, 2, 2}, 2) == 0);
  for (int d = 0; d <= 8; ++d)
    for (int m = 1; m <= 4; ++m)
      for (const auto& l : partitions(d, 4)) CHECK(schur_dim(l, m) == oracle::weyl_dim(l.parts(), m));
}

TEST_CASE("Cauchy formula dimension count") {
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 8; ++d) {
      long s = 0;
      for (const auto& l : partitions(d, 2)) s += schur_dim(l, 2) * schur_dim(l, m);
      CHECK(s == binomial(2 * m + d - 1, d).get_si());
    }
}

TEST_CASE("S^d(S^2) totals") {
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 5; ++d) CHECK(symd_of_sym2(d, m).dimension() == binomial(m * (m + 1) / 2 + d - 1, d).get_si());
  CHECK(symd_of_sym2(2, 3) == dec(3, {{{4}, 1}, {{2, 2}, 1}}));
  CHECK(symd_of_sym2(1, 2) == dec(2, {{{2}, 1}}));
  CHECK(symd_of_sym2(3, 2) == dec(2, {{{6}, 1}, {{4, 2}, 1}}));
}

TEST_CASE("S^2(S^n)") {
  CHECK(sym2_of_symn(4, 3) == dec(3, {{{8}, 1}, {{6, 2}, 1}, {{4, 4}, 1}}));
  CHECK(sym2_of_symn(3, 2) == dec(2, {{{6}, 1}, {{4, 2}, 1}}));
  CHECK(sym2_of_symn(5, 1) == dec(1, {{{10}, 1}}));
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      long s = binomial(n + m - 1, n).get_si();
      CHECK(sym2_of_symn(n, m).dimension() == s * (s + 1) / 2);
    }
}

TEST_CASE("Pieri rule") {
  CHECK(pieri_row({2}, 2, 2) == dec(2, {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}));
  CHECK(pieri_row(Partition(), 3, 2) == dec(2, {{{3}, 1}}));
  CHECK(pieri_row({2, 2}, 1, 2) == dec(2, {{{3, 2}, 1}}));
  // Dimensions multiply.
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 5; ++d)
      for (const auto& l : partitions(d, m))
        for (int k = 0; k <= 3; ++k) CHECK(pieri_row(l, k, m).dimension() == schur_dim(l, m) * schur_dim({k}, m));
  // Third line of the ambient formula for n = 4.
  Decomposition third(3);
  const Decomposition e8 = sym2_of_symn(4, 3);
  for (const auto& [p, k] : e8.entries()) third += pieri_row(p, 2, 3);
  CHECK(third == dec(3, {{{10}, 1}, {{9, 1}, 1}, {{8, 2}, 2}, {{7, 3}, 1}, {{7, 2, 1}, 1}, {{6, 4}, 2},
                         {{6, 3, 1}, 1}, {{6, 2, 2}, 1}, {{5, 4, 1}, 1}, {{4, 4, 2}, 1}}));
}

TEST_CASE("D-bar components") {
  auto d = dbar_truncated(3, 10);
  CHECK(d.at(0) == dec(3, {{Partition(), 1}}));
  CHECK(d.at(4) == dec(3, {{{4}, 1}, {{2, 2}, 1}}));
  CHECK(d.at(6) == dec(3, {{{6}, 1}, {{4, 2}, 1}}));
  CHECK(d.count(5) == 0);
}

TEST_CASE("Hilbert series coefficients") {
  CHECK(hilbert_h(4, 0) == 1);
  CHECK(hilbert_h(4, 4) == 2);
  CHECK(hilbert_h(5, 1) == 0);
  CHECK(hilbert_h(4, -2) == 0);
  CHECK(hilbert_series(4, 8) == std::vector<long>{1, 0, 1, 0, 2, 0, 2, 0, 3});
  for (int n = 3; n <= 9; ++n) {
    auto s = oracle::convolve(oracle::geometric(2, 40), oracle::geometric(n, 40));
    CHECK(hilbert_series(n, 39) == s);
  }
}

TEST_CASE("multiplicities in the invariant ring") {
  CHECK(invariant_multiplicity({5, 1}, 4) == 1);
  CHECK(invariant_multiplicity({6, 2}, 4) == 2);
  CHECK(invariant_multiplicity({2, 2, 2}, 4) == 0);
  CHECK(invariant_multiplicity({3, 1}, 4) == 0);
}

TEST_CASE("ambient and kernel decompositions") {
  auto amb = ambient_truncated(4, 3, 10);
  CHECK(amb.at(10).multiplicity({8, 2}) == 5);
  auto ker = kernel_decomposition(4, 3, 10);
  CHECK(ker.at(10).multiplicity({6, 4}) == 4);
  for (int d : {0, 1, 2, 3, 4, 5}) CHECK(ker.at(d).empty());
  CHECK_THROWS_AS(ambient_truncated(4, 3, 11), std::invalid_argument);
  for (int n = 3; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m) CHECK_NOTHROW(kernel_decomposition(n, m, 2 * n + 2));
  Decomposition a = dec(2, {{{2}, 1}});
  CHECK_THROWS_AS(a -= dec(2, {{{2}, 2}}), std::logic_error);
}

TEST_CASE("ambient dimensions equal the dimension of F modulo the height-3 part") {
  // dim F(n,m)_d counted by monomials of rho/pi degrees.
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      long rho = m * (m + 1) / 2, pi = binomial(n + m - 1, n).get_si();
      auto amb = ambient_truncated(n, m, 2 * n + 2);
      auto full = presentation_kernel_decomposition(n, m, 2 * n + 2);
      auto inv = invariants_truncated(n, m, 2 * n + 2);
      for (int d = 0; d <= 2 * n + 2; ++d) {
        long f = 0;
        for (int b = 0; b * n <= d; ++b)
          if ((d - b * n) % 2 == 0)
            f += binomial(rho + (d - b * n) / 2 - 1, (d - b * n) / 2).get_si() * binomial(pi + b - 1, b).get_si();
        CHECK(full.at(d).dimension() + inv.at(d).dimension() == f);
        CHECK(amb.at(d).dimension() <= f);
      }
    }
}
