#pragma once

#include "dti/core.hpp"
#include "dti/errors.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dti {

/// Term order on exponent vectors: graded reverse lexicographic or
/// lexicographic, with a configurable variable priority (default
/// x1 > x2 > ... > xn).
class MonomialOrder {
public:
  enum class Kind { Grevlex, Lex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind, std::vector<int> priority = {})
      : kind_(kind), priority_(std::move(priority)) {}

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }

  Kind kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const std::vector<Int>& a, const std::vector<Int>& b) const {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    if (!priority_.empty() && priority_.size() != n)
      throw Error("order priority arity mismatch");
    auto var = [&](std::size_t k) {
      return priority_.empty() ? k : static_cast<std::size_t>(priority_[k]);
    };
    if (kind_ == Kind::Lex) {
      for (std::size_t k = 0; k < n; ++k) {
        const Int& x = a[var(k)];
        const Int& y = b[var(k)];
        if (x != y) return x > y ? 1 : -1;
      }
      return 0;
    }
    Int da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = n; k-- > 0;) {
      const Int& x = a[var(k)];
      const Int& y = b[var(k)];
      if (x != y) return x < y ? 1 : -1;
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  Kind kind_ = Kind::Grevlex;
  std::vector<int> priority_;
};

/// Sparse multivariate polynomial over F_p. Terms map exponent keys to
/// coefficients in [1, p-1]; no zero coefficient is ever stored.
class Polynomial {
public:
  using TermMap = std::map<std::vector<Int>, std::int64_t>;

  Polynomial() = default;
  Polynomial(std::int64_t p, int nvars) : p_(p), nvars_(nvars) {}

  static Polynomial zero(std::int64_t p, int nvars) { return Polynomial(p, nvars); }

  static Polynomial monomial(std::int64_t p, int nvars, const ExponentVector& e,
                             std::int64_t coeff = 1) {
    Polynomial f(p, nvars);
    f.add_term(e.entries(), coeff);
    return f;
  }

  std::int64_t characteristic() const { return p_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const std::vector<Int>& e, std::int64_t coeff) {
    if (e.size() != static_cast<std::size_t>(nvars_))
      throw std::invalid_argument("term arity does not match polynomial");
    coeff %= p_;
    if (coeff < 0) coeff += p_;
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
      it->second = (it->second + coeff) % p_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Leading exponent under the given order. Polynomial must be nonzero.
  const std::vector<Int>& leading_exponent(const MonomialOrder& order) const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.compare(it->first, best->first) > 0) best = it;
    return best->first;
  }

  std::int64_t coeff(const std::vector<Int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  std::int64_t p_ = 2;
  int nvars_ = 0;
  TermMap terms_;
};

namespace detail {

inline void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.characteristic() != b.characteristic())
    throw std::invalid_argument("polynomial characteristic mismatch");
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial arity mismatch");
}

} // namespace detail

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  detail::check_compatible(a, b);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

inline Polynomial poly_scale(const Polynomial& a, std::int64_t c) {
  Polynomial r(a.characteristic(), a.nvars());
  for (const auto& [e, coeff] : a.terms()) r.add_term(e, mul_mod(coeff, ((c % a.characteristic()) + a.characteristic()) % a.characteristic(), a.characteristic()));
  return r;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_scale(b, b.characteristic() - 1));
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  detail::check_compatible(a, b);
  Polynomial r(a.characteristic(), a.nvars());
  std::vector<Int> e(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, mul_mod(ca, cb, a.characteristic()));
    }
  }
  return r;
}

/// x1^d + ... + xn^d over F_p.
inline Polynomial defining_polynomial(const RingSpec& spec) {
  Polynomial f(spec.p, static_cast<int>(spec.n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.n); ++i)
    f.add_term(ExponentVector::axis(static_cast<std::size_t>(spec.n), i, Int(spec.d)).entries(), 1);
  return f;
}

} // namespace dti
