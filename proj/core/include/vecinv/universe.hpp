#pragma once

#include "vecinv/multidegree.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vecinv {

enum class UniverseKind { XY, RhoPi };

// The variable set of a polynomial ring.
//
// XY(m): x_1, y_1, ..., x_m, y_m with index 2i -> x_{i+1}, 2i+1 -> y_{i+1}.
// RhoPi(n, m): all rho_a (|a| = 2) followed by all pi_b (|b| = n), each
// block in decreasing lexicographic order of the index vector.
class VariableUniverse {
 public:
  static std::shared_ptr<const VariableUniverse> xy(int m);
  static std::shared_ptr<const VariableUniverse> rho_pi(int n, int m);

  UniverseKind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return names_.size(); }

  const std::string& name(std::size_t var) const { return names_.at(var); }
  std::optional<std::size_t> find(const std::string& name) const;

  // Graded degree of a variable: 1 for x/y, 2 for rho, n for pi.
  int degree(std::size_t var) const { return degrees_.at(var); }
  // Contribution of a variable to the multidegree.
  const Multidegree& weight(std::size_t var) const { return weights_.at(var); }

  // RhoPi only.
  bool is_rho(std::size_t var) const { return var < rho_count_; }
  std::size_t rho_count() const { return rho_count_; }
  std::size_t rho_index(const Multidegree& a) const;
  std::size_t pi_index(const Multidegree& b) const;

  // XY only.
  std::size_t x_index(int i) const { return static_cast<std::size_t>(2 * i); }
  std::size_t y_index(int i) const { return static_cast<std::size_t>(2 * i + 1); }

  bool operator==(const VariableUniverse& o) const {
    return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_;
  }

  std::string description() const;

 private:
  VariableUniverse(UniverseKind kind, int n, int m);

  UniverseKind kind_;
  int n_ = 0;
  int m_ = 0;
  std::size_t rho_count_ = 0;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Multidegree> weights_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace vecinv
