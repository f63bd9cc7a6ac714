#include "vecinv/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace vecinv {

MonomialOrder MonomialOrder::lex(std::vector<std::uint32_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::graded_lex() { return MonomialOrder{}; }

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::GradedLex) return grlex_less(a, b);
  for (auto v : priority_) {
    auto ea = a.exponent(v);
    auto eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  // Remaining variables by index.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  auto listed = [this](std::uint32_t v) {
    return std::find(priority_.begin(), priority_.end(), v) != priority_.end();
  };
  while (true) {
    while (i < fa.size() && listed(fa[i].first)) ++i;
    while (j < fb.size() && listed(fb[j].first)) ++j;
    if (i == fa.size() || j == fb.size()) return i == fa.size() && j < fb.size();
    if (fa[i].first != fb[j].first) return fa[i].first > fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
    ++i;
    ++j;
  }
}

LeadingTerm leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  std::vector<LeadingTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_universe(f, g);
    leads.push_back(leading_term(g, order));
  }
  Polynomial p = f;
  Polynomial r(f.universe());
  while (!p.is_zero()) {
    auto lt = leading_term(p, order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (leads[i].monomial.divides(lt.monomial)) {
        p -= basis[i].multiply_monomial(lt.monomial / leads[i].monomial,
                                        lt.coefficient / leads[i].coefficient);
        divided = true;
        break;
      }
    }
    if (!divided) {
      r.add_term(lt.monomial, lt.coefficient);
      p.add_term(lt.monomial, -lt.coefficient);
    }
  }
  return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto lf = leading_term(f, order);
  auto lg = leading_term(g, order);
  Monomial l = lf.monomial.lcm(lg.monomial);
  return f.multiply_monomial(l / lf.monomial, 1 / lf.coefficient) -
         g.multiply_monomial(l / lg.monomial, 1 / lg.coefficient);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (p.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (!g.empty()) require_same_universe(g.front(), p);
    g.push_back(p);
  }
  if (g.empty()) return g;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto li = leading_term(g[i], order).monomial;
    auto lj = leading_term(g[j], order).monomial;
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (li.lcm(lj) == li * lj) continue;
    Polynomial h = normal_form(s_polynomial(g[i], g[j], order), g, order);
    if (h.is_zero()) continue;
    g.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto li = leading_term(g[i], order).monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      auto lj = leading_term(g[j], order).monomial;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce and normalize to monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto lt = leading_term(minimal[i], order);
    Polynomial tail = minimal[i];
    tail.add_term(lt.monomial, -lt.coefficient);
    Polynomial h = normal_form(tail, others, order);
    h.add_term(lt.monomial, lt.coefficient);
    reduced.push_back(h * (1 / lt.coefficient));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(a, order).monomial, leading_term(b, order).monomial);
  });
  return reduced;
}

namespace {

void enumerate(std::size_t var, std::size_t num_vars, unsigned remaining,
               std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  if (var == num_vars) {
    out.push_back(Monomial::from_dense(exps));
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[var] = e;
    enumerate(var + 1, num_vars, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                         unsigned max_degree) {
  std::vector<Monomial> all;
  std::vector<std::uint32_t> exps(num_vars, 0);
  enumerate(0, num_vars, max_degree, exps, all);
  std::vector<Monomial> out;
  for (auto& m : all) {
    bool hit = std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!hit) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

}  // namespace vecinv
