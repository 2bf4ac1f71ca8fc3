#pragma once

#include "dti/errors.hpp"
#include "dti/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dti {

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000;

namespace detail {

/// Comparator that sorts exponent keys descending under a monomial order,
/// so that map::begin() is the leading term.
struct OrderDescending {
  const MonomialOrder* order;
  bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
    return order->compare(a, b) > 0;
  }
};

using OrderedTerms = std::map<std::vector<Int>, std::int64_t, OrderDescending>;

/// Shared step/pair budget: every selected pair and every leading-term
/// cancellation spends one unit, so both pair explosions and degenerate
/// reduction cascades hit the cap.
struct Budget {
  std::uint64_t remaining;
  void spend(const char* what) {
    if (remaining == 0)
      throw ResourceLimitError(std::string("groebner budget exhausted during ") + what);
    --remaining;
  }
};

inline OrderedTerms to_ordered(const Polynomial& f, const MonomialOrder& order) {
  OrderedTerms t(OrderDescending{&order});
  for (const auto& [e, c] : f.terms()) t.emplace(e, c);
  return t;
}

inline Polynomial from_ordered(const OrderedTerms& t, std::int64_t p, int nvars) {
  Polynomial f(p, nvars);
  for (const auto& [e, c] : t) f.add_term(e, c);
  return f;
}

inline bool exp_divides(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// target += c * x^shift * g, all mod p.
inline void add_shifted(OrderedTerms& target, const OrderedTerms& g,
                        const std::vector<Int>& shift, std::int64_t c, std::int64_t p) {
  std::vector<Int> e(shift.size());
  for (const auto& [eg, cg] : g) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = eg[i] + shift[i];
    std::int64_t add = mul_mod(cg, c, p);
    auto [it, inserted] = target.emplace(e, add);
    if (!inserted) {
      it->second = (it->second + add) % p;
      if (it->second == 0) target.erase(it);
    }
  }
}

/// Full reduction of h by the basis: every term of the result is
/// irreducible. Basis polynomials are monic. The divisor tried first is
/// always the earliest in basis order, which keeps the result
/// deterministic.
inline OrderedTerms reduce_ordered(OrderedTerms h, const std::vector<OrderedTerms>& basis,
                                   std::int64_t p, const MonomialOrder& order,
                                   Budget* budget = nullptr) {
  OrderedTerms remainder(OrderDescending{&order});
  std::vector<Int> shift;
  while (!h.empty()) {
    auto lead = h.begin();
    bool reduced = false;
    for (const OrderedTerms& g : basis) {
      if (g.empty()) continue;
      const std::vector<Int>& glt = g.begin()->first;
      if (exp_divides(glt, lead->first)) {
        if (budget) budget->spend("reduction");
        shift.resize(glt.size());
        for (std::size_t i = 0; i < glt.size(); ++i) shift[i] = lead->first[i] - glt[i];
        add_shifted(h, g, shift, p - lead->second, p); // cancels the lead term
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.emplace(lead->first, lead->second);
      h.erase(lead);
    }
  }
  return remainder;
}

inline void make_monic(OrderedTerms& f, std::int64_t p) {
  if (f.empty()) return;
  std::int64_t lc = f.begin()->second;
  if (lc == 1) return;
  std::int64_t inv = inv_mod(lc, p);
  for (auto& [e, c] : f) c = mul_mod(c, inv, p);
}

} // namespace detail

/// Remainder of g on division by the given polynomials: no term of the
/// result is divisible by any of their leading terms, and the difference
/// g - result lies in the ideal they generate.
inline Polynomial normal_form(const Polynomial& g, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
  const std::int64_t p = g.characteristic();
  std::vector<detail::OrderedTerms> ordered;
  ordered.reserve(basis.size());
  for (const Polynomial& b : basis) {
    detail::check_compatible(g, b);
    if (b.is_zero()) throw Error("normal form requires nonzero divisors");
    auto t = detail::to_ordered(b, order);
    detail::make_monic(t, p);
    ordered.push_back(std::move(t));
  }
  auto r = detail::reduce_ordered(detail::to_ordered(g, order), ordered, p, order);
  return detail::from_ordered(r, p, g.nvars());
}

struct GroebnerBasis {
  std::vector<Polynomial> basis;
  MonomialOrder order;
};

/// Buchberger's algorithm with the normal pair-selection strategy (lowest
/// lcm degree first, ties by pair index) and the coprime-leading-term
/// criterion. Output is the reduced Groebner basis: monic, minimal,
/// tail-reduced, sorted by decreasing leading term. Throws
/// ResourceLimitError when the pair budget is exhausted.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                const MonomialOrder& order,
                                std::uint64_t pair_budget = kDefaultPairBudget) {
  if (gens.empty()) throw Error("buchberger requires at least one generator");
  const std::int64_t p = gens[0].characteristic();
  const int nvars = gens[0].nvars();
  for (const Polynomial& g : gens) {
    detail::check_compatible(gens[0], g);
    if (g.is_zero()) throw Error("buchberger requires nonzero generators");
  }

  detail::Budget budget{pair_budget};
  std::vector<detail::OrderedTerms> basis;
  using PairKey = std::tuple<Int, int, int>; // (lcm degree, i, j)
  std::set<PairKey> pairs;

  auto lcm_exp = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] >= b[i] ? a[i] : b[i];
    return r;
  };
  auto total = [](const std::vector<Int>& e) {
    Int s = 0;
    for (const Int& x : e) s += x;
    return s;
  };
  auto push_pairs = [&](int j) {
    const std::vector<Int>& ltj = basis[static_cast<std::size_t>(j)].begin()->first;
    for (int i = 0; i < j; ++i) {
      const std::vector<Int>& lti = basis[static_cast<std::size_t>(i)].begin()->first;
      pairs.emplace(total(lcm_exp(lti, ltj)), i, j);
    }
  };

  for (const Polynomial& g : gens) {
    auto t = detail::to_ordered(g, order);
    detail::make_monic(t, p);
    basis.push_back(std::move(t));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const auto& fi = basis[static_cast<std::size_t>(i)];
    const auto& fj = basis[static_cast<std::size_t>(j)];
    const std::vector<Int>& lti = fi.begin()->first;
    const std::vector<Int>& ltj = fj.begin()->first;
    std::vector<Int> l = lcm_exp(lti, ltj);

    // First criterion: coprime leading terms reduce to zero.
    bool coprime = true;
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (lti[k] > 0 && ltj[k] > 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) continue;

    budget.spend("pair selection");
    detail::OrderedTerms s(detail::OrderDescending{&order});
    std::vector<Int> shift(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) shift[k] = l[k] - lti[k];
    detail::add_shifted(s, fi, shift, 1, p);
    for (std::size_t k = 0; k < l.size(); ++k) shift[k] = l[k] - ltj[k];
    detail::add_shifted(s, fj, shift, p - 1, p);

    auto r = detail::reduce_ordered(std::move(s), basis, p, order, &budget);
    if (!r.empty()) {
      detail::make_monic(r, p);
      basis.push_back(std::move(r));
      push_pairs(static_cast<int>(basis.size()) - 1);
    }
  }

  // Minimal basis: drop elements whose leading term another leading term
  // divides; process in increasing leading-term order so divisors win.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = order.compare(basis[a].begin()->first, basis[b].begin()->first);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<detail::OrderedTerms> minimal;
  for (std::size_t k : idx) {
    const std::vector<Int>& lt = basis[k].begin()->first;
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (detail::exp_divides(kept.begin()->first, lt)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[k]);
  }

  // Tail reduction against the other members gives the reduced basis.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<detail::OrderedTerms> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    minimal[k] = detail::reduce_ordered(std::move(minimal[k]), others, p, order);
    detail::make_monic(minimal[k], p);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return order.compare(a.begin()->first, b.begin()->first) > 0;
  });

  GroebnerBasis gb;
  gb.order = order;
  gb.basis.reserve(minimal.size());
  for (const auto& t : minimal) gb.basis.push_back(detail::from_ordered(t, p, nvars));
  return gb;
}

/// Verifies the Groebner property directly: every S-polynomial of basis
/// pairs reduces to zero. Intended for tests.
inline bool is_groebner(const GroebnerBasis& gb) {
  if (gb.basis.empty()) return true;
  const std::int64_t p = gb.basis[0].characteristic();
  std::vector<detail::OrderedTerms> basis;
  for (const Polynomial& g : gb.basis) {
    auto t = detail::to_ordered(g, gb.order);
    detail::make_monic(t, p);
    basis.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const std::vector<Int>& lti = basis[i].begin()->first;
      const std::vector<Int>& ltj = basis[j].begin()->first;
      std::vector<Int> l(lti.size());
      for (std::size_t k = 0; k < l.size(); ++k) l[k] = lti[k] >= ltj[k] ? lti[k] : ltj[k];
      detail::OrderedTerms s(detail::OrderDescending{&gb.order});
      std::vector<Int> shift(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) shift[k] = l[k] - lti[k];
      detail::add_shifted(s, basis[i], shift, 1, p);
      for (std::size_t k = 0; k < l.size(); ++k) shift[k] = l[k] - ltj[k];
      detail::add_shifted(s, basis[j], shift, p - 1, p);
      if (!detail::reduce_ordered(std::move(s), basis, p, gb.order).empty()) return false;
    }
  }
  return true;
}

/// Normal form with a step cap; used where a caller needs runaway
/// reductions converted into a clean resource error.
inline Polynomial normal_form_budgeted(const Polynomial& g,
                                       const std::vector<Polynomial>& basis,
                                       const MonomialOrder& order,
                                       std::uint64_t step_budget) {
  const std::int64_t p = g.characteristic();
  std::vector<detail::OrderedTerms> ordered;
  ordered.reserve(basis.size());
  for (const Polynomial& b : basis) {
    detail::check_compatible(g, b);
    if (b.is_zero()) throw Error("normal form requires nonzero divisors");
    auto t = detail::to_ordered(b, order);
    detail::make_monic(t, p);
    ordered.push_back(std::move(t));
  }
  detail::Budget budget{step_budget};
  auto r = detail::reduce_ordered(detail::to_ordered(g, order), ordered, p, order, &budget);
  return detail::from_ordered(r, p, g.nvars());
}

/// Ideal membership through a Groebner basis: the normal form vanishes
/// exactly for members. The budget covers both the basis computation and
/// the final reduction.
inline bool gb_ideal_member(const Polynomial& g, const std::vector<Polynomial>& gens,
                            const MonomialOrder& order,
                            std::uint64_t pair_budget = kDefaultPairBudget) {
  GroebnerBasis gb = buchberger(gens, order, pair_budget);
  return normal_form_budgeted(g, gb.basis, order, pair_budget).is_zero();
}

} // namespace dti
