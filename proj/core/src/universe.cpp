#include "vecinv/universe.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace vecinv {

std::string to_string(const Multidegree& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

namespace {

void compositions_rec(int remaining, std::size_t pos, Multidegree& cur,
                      std::vector<Multidegree>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions_rec(remaining - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Multidegree> compositions(int d, int m) {
  std::vector<Multidegree> out;
  if (m <= 0 || d < 0) {
    if (m == 0 && d == 0) out.emplace_back();
    return out;
  }
  Multidegree cur(static_cast<std::size_t>(m), 0);
  compositions_rec(d, 0, cur, out);
  return out;
}

std::vector<Multidegree> compositions_up_to(int d, int m) {
  std::vector<Multidegree> out;
  for (int k = 0; k <= d; ++k) {
    auto part = compositions(k, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool is_decreasing(const Multidegree& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) return false;
  return true;
}

bool fits_inside(const Multidegree& inner, const Multidegree& outer) {
  if (inner.size() != outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Multidegree difference(const Multidegree& outer, const Multidegree& inner) {
  Multidegree r(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) r[i] = outer[i] - inner[i];
  return r;
}

long multinomial(const Multidegree& a) {
  // Product of binomials keeps intermediates exact and small.
  long result = 1;
  int acc = 0;
  for (int v : a) {
    for (int j = 1; j <= v; ++j) {
      result = result * (acc + j) / j;
    }
    acc += v;
  }
  return result;
}

VariableUniverse::VariableUniverse(UniverseKind kind, int n, int m) : kind_(kind), n_(n), m_(m) {
  if (m < 1) throw std::invalid_argument("variable universe needs m >= 1");
  if (kind == UniverseKind::XY) {
    for (int i = 0; i < m; ++i) {
      for (char c : {'x', 'y'}) {
        names_.push_back(std::string(1, c) + std::to_string(i + 1));
        degrees_.push_back(1);
        Multidegree w(static_cast<std::size_t>(m), 0);
        w[static_cast<std::size_t>(i)] = 1;
        weights_.push_back(w);
      }
    }
    return;
  }
  if (n < 1) throw std::invalid_argument("rho/pi universe needs n >= 1");
  auto emit = [&](const char* stem, int d) {
    for (auto& a : compositions(d, m)) {
      std::string s = std::string(stem) + "[";
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
      }
      s += ']';
      names_.push_back(s);
      degrees_.push_back(d);
      weights_.push_back(a);
    }
  };
  emit("rho", 2);
  rho_count_ = names_.size();
  emit("pi", n);
}

std::shared_ptr<const VariableUniverse> VariableUniverse::xy(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const VariableUniverse>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new VariableUniverse(UniverseKind::XY, 0, m));
  return slot;
}

std::shared_ptr<const VariableUniverse> VariableUniverse::rho_pi(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const VariableUniverse>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, m}];
  if (!slot) slot.reset(new VariableUniverse(UniverseKind::RhoPi, n, m));
  return slot;
}

std::optional<std::size_t> VariableUniverse::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

// Position of `a` among compositions(total(a), m) in decreasing lex order.
std::size_t composition_rank(const Multidegree& a) {
  std::size_t rank = 0;
  int remaining = total(a);
  std::size_t m = a.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    // Compositions of `remaining` into (m - i) parts whose first entry
    // exceeds a[i] come first.
    for (int v = remaining; v > a[i]; --v) {
      int rest = remaining - v;
      auto slots = static_cast<long>(m - i - 1);
      // C(rest + slots - 1, slots - 1)
      long c = 1;
      for (long j = 1; j <= slots - 1; ++j) c = c * (rest + j) / j;
      rank += static_cast<std::size_t>(c);
    }
    remaining -= a[i];
  }
  return rank;
}

}  // namespace

std::size_t VariableUniverse::rho_index(const Multidegree& a) const {
  if (kind_ != UniverseKind::RhoPi || static_cast<int>(a.size()) != m_ || total(a) != 2)
    throw std::invalid_argument("rho index " + vecinv::to_string(a) + " invalid for " + description());
  for (int v : a)
    if (v < 0) throw std::invalid_argument("negative rho index");
  return composition_rank(a);
}

std::size_t VariableUniverse::pi_index(const Multidegree& b) const {
  if (kind_ != UniverseKind::RhoPi || static_cast<int>(b.size()) != m_ || total(b) != n_)
    throw std::invalid_argument("pi index " + vecinv::to_string(b) + " invalid for " + description());
  for (int v : b)
    if (v < 0) throw std::invalid_argument("negative pi index");
  return rho_count_ + composition_rank(b);
}

std::string VariableUniverse::description() const {
  if (kind_ == UniverseKind::XY) return "XY(" + std::to_string(m_) + ")";
  return "RHOPI(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace vecinv
