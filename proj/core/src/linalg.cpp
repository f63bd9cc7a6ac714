#include "vecinv/linalg.hpp"

#include <stdexcept>

namespace vecinv {

std::vector<std::size_t> bareiss_echelon(IntegerMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t prow = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < cols && prow < rows; ++k) {
    std::size_t sel = prow;
    while (sel < rows && a[sel][k] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != prow) std::swap(a[sel], a[prow]);
    const auto& pr = a[prow];
    for (std::size_t i = prow + 1; i < rows; ++i) {
      auto& row = a[i];
      if (row[k] == 0) {
        // (p * r_j - 0 * pr_j) / prev
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (row[j] == 0) continue;
          row[j] *= pr[k];
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        t = pr[k] * row[j];
        t -= row[k] * pr[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[k] = 0;
    }
    prev = pr[k];
    pivots.push_back(k);
    ++prow;
  }
  return pivots;
}

namespace {

// Scales every row by the lcm of its denominators.
IntegerMatrix integer_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  IntegerMatrix out(rows.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix");
    Integer l = 1;
    for (const auto& v : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      out[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
    }
  }
  return out;
}

}  // namespace

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols) {
  IntegerMatrix a = integer_rows(rows, cols);
  auto pivots = bareiss_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      std::size_t pc = pivots[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && a[r][j] != 0) s += Rational(a[r][j]) * x[j];
      }
      x[pc] = -s / Rational(a[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t matrix_rank(const std::vector<RationalVector>& rows, std::size_t cols) {
  IntegerMatrix a = integer_rows(rows, cols);
  return bareiss_echelon(a).size();
}

namespace {

// Coefficient matrix with one row per monomial and one column per polynomial.
std::vector<RationalVector> coefficient_matrix(std::span<const Polynomial> polys) {
  std::map<Monomial, std::size_t, GrLexGreater> index;
  for (const auto& p : polys) {
    require_same_universe(p, polys.front());
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, i] : index) i = next++;
  std::vector<RationalVector> rows(index.size(), RationalVector(polys.size(), Rational(0)));
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [m, c] : polys[j].terms()) rows[index.at(m)][j] = c;
  return rows;
}

}  // namespace

std::vector<RationalVector> linear_relations(std::span<const Polynomial> polys) {
  if (polys.empty()) return {};
  auto rows = coefficient_matrix(polys);
  return nullspace(rows, polys.size());
}

std::size_t span_dimension(std::span<const Polynomial> polys) {
  if (polys.empty()) return 0;
  auto rows = coefficient_matrix(polys);
  return matrix_rank(rows, polys.size());
}

Polynomial recombine(std::span<const Polynomial> polys, std::span<const Rational> coeffs) {
  if (polys.size() != coeffs.size()) throw std::invalid_argument("recombine: size mismatch");
  if (polys.empty()) throw std::invalid_argument("recombine: empty input");
  Polynomial r(polys.front().universe());
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (coeffs[i] != 0) r += polys[i] * coeffs[i];
  return r;
}

// ------------------------------------------------------------ SparseEchelon

namespace {

void make_primitive(SparseEchelon::Row& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [m, c] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (v.begin()->second < 0) g = -g;
  if (g != 1) {
    for (auto& [m, c] : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

SparseEchelon::Row to_row(const Polynomial& p) {
  SparseEchelon::Row v;
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) v.emplace_hint(v.end(), m, c.get_num() * (l / c.get_den()));
  make_primitive(v);
  return v;
}

}  // namespace

SparseEchelon::Row SparseEchelon::reduce(Row v) const {
  Integer g;
  while (!v.empty()) {
    auto it = rows_.find(v.begin()->first);
    if (it == rows_.end()) break;
    const Row& r = it->second;
    const Integer& a = r.begin()->second;
    Integer b = v.begin()->second;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer sa = a / g;
    Integer sb = b / g;
    // v <- sa * v - sb * r
    Row out;
    auto vi = v.begin();
    auto ri = r.begin();
    GrLexGreater before;
    while (vi != v.end() || ri != r.end()) {
      if (ri == r.end() || (vi != v.end() && before(vi->first, ri->first))) {
        out.emplace_hint(out.end(), vi->first, sa * vi->second);
        ++vi;
      } else if (vi == v.end() || before(ri->first, vi->first)) {
        out.emplace_hint(out.end(), ri->first, -sb * ri->second);
        ++ri;
      } else {
        Integer c = sa * vi->second - sb * ri->second;
        if (c != 0) out.emplace_hint(out.end(), vi->first, std::move(c));
        ++vi;
        ++ri;
      }
    }
    v = std::move(out);
    make_primitive(v);
  }
  return v;
}

bool SparseEchelon::insert(const Polynomial& p) {
  if (!universe_) {
    universe_ = p.universe();
  } else if (!same_universe(universe_, p.universe())) {
    throw UniverseMismatch("SparseEchelon: mixed universes");
  }
  Row v = reduce(to_row(p));
  if (v.empty()) return false;
  Monomial lead = v.begin()->first;
  rows_.emplace(std::move(lead), std::move(v));
  return true;
}

bool SparseEchelon::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  if (universe_ && !same_universe(universe_, p.universe()))
    throw UniverseMismatch("SparseEchelon: mixed universes");
  return reduce(to_row(p)).empty();
}

}  // namespace vecinv
