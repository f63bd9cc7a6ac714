#include "vecinv/gltheory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vecinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition entries must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::doubled() const {
  std::vector<int> p = parts_;
  for (int& v : p) v *= 2;
  return Partition(std::move(p));
}

bool Partition::operator<(const Partition& o) const {
  int a = size(), b = o.size();
  if (a != b) return a < b;
  return parts_ > o.parts_;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return parts_.empty() ? "(0)" : s + ")";
}

std::vector<Partition> partitions(int d, int max_parts) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

void Decomposition::add(const Partition& p, long multiplicity) {
  if (p.height() > m_ || multiplicity == 0) return;
  long& slot = entries_[p];
  slot += multiplicity;
  if (slot < 0) throw std::logic_error("negative multiplicity for S" + p.to_string());
  if (slot == 0) entries_.erase(p);
}

long Decomposition::multiplicity(const Partition& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

Decomposition& Decomposition::operator+=(const Decomposition& o) {
  for (const auto& [p, k] : o.entries_) add(p, k);
  return *this;
}

Decomposition& Decomposition::operator-=(const Decomposition& o) {
  for (const auto& [p, k] : o.entries_) add(p, -k);
  return *this;
}

long Decomposition::dimension() const {
  long d = 0;
  for (const auto& [p, k] : entries_) d += k * schur_dim(p, m_);
  return d;
}

long Decomposition::weight_space_dimension(const Multidegree& alpha) const {
  long d = 0;
  for (const auto& [p, k] : entries_)
    if (p.size() == total(alpha)) d += k * kostka(p, alpha);
  return d;
}

std::string Decomposition::to_string() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [p, k] : entries_) {
    if (!s.empty()) s += "+";
    if (k != 1) s += std::to_string(k);
    s += "S" + p.to_string();
  }
  return s;
}

namespace {

// Ways to fill letters idx.. into the skew shape lambda/mu, each letter a
// horizontal strip of the prescribed size.
long count_fillings(const std::vector<int>& lambda, std::vector<int>& mu, const Multidegree& alpha,
                    std::size_t idx) {
  if (idx == alpha.size()) return mu == lambda ? 1 : 0;
  const std::size_t rows = lambda.size();
  long count = 0;
  int need = alpha[idx];
  std::vector<int> grow(rows, 0);
  // Row r can grow up to min(lambda_r, mu_{r-1}) (old mu, so the strip is
  // horizontal).
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
    if (r == rows) {
      if (left != 0) return;
      for (std::size_t i = 0; i < rows; ++i) mu[i] += grow[i];
      count += count_fillings(lambda, mu, alpha, idx + 1);
      for (std::size_t i = 0; i < rows; ++i) mu[i] -= grow[i];
      return;
    }
    int cap = lambda[r] - mu[r];
    if (r > 0) cap = std::min(cap, mu[r - 1] - mu[r]);
    for (int g = std::min(cap, left); g >= 0; --g) {
      grow[r] = g;
      rec(r + 1, left - g);
    }
    grow[r] = 0;
  };
  rec(0, need);
  return count;
}

}  // namespace

long kostka(const Partition& lambda, const Multidegree& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("kostka: negative content");
  if (lambda.size() != total(alpha))
    throw std::invalid_argument("kostka: |lambda| = " + std::to_string(lambda.size()) +
                                " differs from content size " + std::to_string(total(alpha)));
  if (lambda.height() > static_cast<int>(alpha.size())) return 0;
  std::vector<int> mu(lambda.parts().size(), 0);
  return count_fillings(lambda.parts(), mu, alpha, 0);
}

long schur_dim(const Partition& lambda, int m) {
  if (lambda.height() > m) return 0;
  long d = 0;
  for (const auto& alpha : compositions(lambda.size(), m)) d += kostka(lambda, alpha);
  return d;
}

Decomposition pieri_row(const Partition& lambda, int k, int m) {
  Decomposition out(m);
  const int rows = lambda.height() + 1;
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> rec = [&](int r, int left) {
    if (r == rows) {
      if (left == 0) out.add(Partition(mu));
      return;
    }
    int lo = lambda.part(r);
    int hi = r == 0 ? lo + left : std::min(lambda.part(r - 1), lo + left);
    for (int v = hi; v >= lo; --v) {
      mu[static_cast<std::size_t>(r)] = v;
      rec(r + 1, left - (v - lo));
    }
  };
  rec(0, k);
  return out;
}

Decomposition symd_of_sym2(int d, int m) {
  Decomposition out(m);
  for (const auto& l : partitions(d, m)) out.add(l.doubled());
  return out;
}

Decomposition sym2_of_symn(int n, int m) {
  Decomposition out(m);
  for (int j = 0; 2 * j <= n; ++j) out.add(Partition({2 * n - 2 * j, 2 * j}));
  return out;
}

GradedDecomposition dbar_truncated(int m, int D) {
  GradedDecomposition out;
  for (int d = 0; 2 * d <= D; ++d) {
    Decomposition c(m);
    for (const auto& l : partitions(d, std::min(2, m))) c.add(l.doubled());
    out.emplace(2 * d, std::move(c));
  }
  return out;
}

long hilbert_h(int n, int d) {
  if (d < 0) return 0;
  long c = 0;
  for (int b = 0; b * n <= d; ++b)
    if ((d - b * n) % 2 == 0) ++c;
  return c;
}

std::vector<long> hilbert_series(int n, int max_degree) {
  std::vector<long> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(hilbert_h(n, d));
  return out;
}

long invariant_multiplicity(const Partition& lambda, int n) {
  if (lambda.height() > 2) return 0;
  int l1 = lambda.part(0), l2 = lambda.part(1);
  return l2 % 2 == 0 ? hilbert_h(n, l1 - l2) : hilbert_h(n, l1 - l2 - n);
}

GradedDecomposition invariants_truncated(int n, int m, int D) {
  GradedDecomposition out;
  for (int d = 0; d <= D; ++d) {
    Decomposition c(m);
    for (const auto& l : partitions(d, std::min(2, m))) c.add(l, invariant_multiplicity(l, n));
    out.emplace(d, std::move(c));
  }
  return out;
}

namespace {

void require_bound(int n, int D) {
  if (D > 2 * n + 2)
    throw std::invalid_argument("decomposition formula covers degrees <= 2n+2 = " + std::to_string(2 * n + 2) +
                                " (got " + std::to_string(D) + ")");
}

GradedDecomposition empty_graded(int m, int D) {
  GradedDecomposition out;
  for (int d = 0; d <= D; ++d) out.emplace(d, Decomposition(m));
  return out;
}

}  // namespace

GradedDecomposition ambient_truncated(int n, int m, int D) {
  require_bound(n, D);
  GradedDecomposition out = empty_graded(m, D);
  // E(n,m) lives in degrees 0, n, 2n below 2n+2.
  for (const auto& [deg, dbar] : dbar_truncated(m, D)) {
    out.at(deg) += dbar;
    if (deg + n <= D)
      for (const auto& [p, k] : dbar.entries()) {
        Decomposition t = pieri_row(p, n, m);
        for (const auto& [q, j] : t.entries()) out.at(deg + n).add(q, k * j);
      }
    if (deg + 2 * n <= D) {
      const Decomposition e2n = sym2_of_symn(n, m);
      for (const auto& [p, k] : dbar.entries())
        for (const auto& [s, j] : e2n.entries()) {
          if (deg == 0) {
            out.at(2 * n).add(s, k * j);
            continue;
          }
          // deg == 2: D-bar_2 = S^(2).
          Decomposition t = pieri_row(s, 2, m);
          for (const auto& [q, i] : t.entries()) out.at(deg + 2 * n).add(q, k * j * i);
        }
    }
  }
  return out;
}

GradedDecomposition kernel_decomposition(int n, int m, int D) {
  GradedDecomposition out = ambient_truncated(n, m, D);
  for (const auto& [d, inv] : invariants_truncated(n, m, D)) {
    try {
      out.at(d) -= inv;
    } catch (const std::logic_error& e) {
      throw std::logic_error("kernel decomposition in degree " + std::to_string(d) + ": " + e.what());
    }
  }
  return out;
}

GradedDecomposition presentation_kernel_decomposition(int n, int m, int D) {
  GradedDecomposition out = kernel_decomposition(n, m, D);
  // Height-3 shapes start in degree 6, so E(n,m)_2n never meets them below 2n+2.
  for (int d = 3; 2 * d <= D; ++d)
    for (const auto& l : partitions(d, m)) {
      if (l.height() < 3) continue;
      Partition s = l.doubled();
      out.at(2 * d).add(s);
      if (2 * d + n <= D) {
        const Decomposition t = pieri_row(s, n, m);
        for (const auto& [q, j] : t.entries()) out.at(2 * d + n).add(q, j);
      }
    }
  return out;
}

}  // namespace vecinv
