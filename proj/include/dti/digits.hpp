#pragma once

#include "dti/errors.hpp"
#include "dti/intmath.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dti {

/// Base-p digits, least significant first. Canonical form has no trailing
/// zeros, so zero is the empty digit list.
struct DigitVector {
  std::vector<int> digits;
  std::int64_t base = 0;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

inline DigitVector base_p_digits(Int m, std::int64_t p) {
  if (m < 0) throw Error("base_p_digits requires a nonnegative argument");
  if (p < 2) throw Error("base_p_digits requires base >= 2");
  DigitVector d;
  d.base = p;
  while (m > 0) {
    d.digits.push_back(static_cast<int>(m % p));
    m /= p;
  }
  return d;
}

namespace detail {

/// total! / prod(parts_i!) mod p for a single digit position: all inputs
/// are < p, so plain factorials mod p suffice.
inline std::int64_t digit_multinomial_mod_p(int total, const std::vector<int>& parts,
                                            std::int64_t p) {
  std::int64_t num = 1;
  for (int k = 2; k <= total; ++k) num = mul_mod(num, k, p);
  std::int64_t den = 1;
  for (int part : parts)
    for (int k = 2; k <= part; ++k) den = mul_mod(den, k, p);
  return mul_mod(num, inv_mod(den, p), p);
}

} // namespace detail

/// Multinomial coefficient total! / prod(parts_i!) mod p, via the digit
/// criterion: the coefficient is nonzero mod p exactly when the base-p
/// digits of the parts add positionwise to the digits of total without
/// carrying, and in that case it is the product over positions of the
/// digit multinomials.
inline std::int64_t multinomial_mod_p(const Int& total, const std::vector<Int>& parts,
                                      std::int64_t p) {
  Int sum = 0;
  for (const Int& x : parts) {
    if (x < 0) throw PartsSumMismatchError("negative part in multinomial");
    sum += x;
  }
  if (sum != total)
    throw PartsSumMismatchError("parts do not sum to total in multinomial");

  DigitVector td = base_p_digits(total, p);
  std::vector<DigitVector> pd;
  pd.reserve(parts.size());
  for (const Int& x : parts) pd.push_back(base_p_digits(x, p));

  std::int64_t result = 1;
  for (std::size_t pos = 0; pos < td.digits.size(); ++pos) {
    std::vector<int> col(parts.size(), 0);
    int colsum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      col[i] = pos < pd[i].digits.size() ? pd[i].digits[pos] : 0;
      colsum += col[i];
    }
    if (colsum != td.digits[pos]) return 0; // a carry occurs
    result = mul_mod(result, detail::digit_multinomial_mod_p(td.digits[pos], col, p), p);
  }
  return result;
}

namespace detail {

/// Digit-level search state for the bounded carry-free composition
/// problem. Positions are processed most significant first; the state is
/// the set of coordinates whose digits so far equal the bound's prefix
/// exactly (still "tight"). A coordinate that has gone strictly below its
/// bound prefix is free at every later position.
class CarryFreeSearch {
public:
  CarryFreeSearch(std::vector<int> total_digits, std::vector<std::vector<int>> bound_digits,
                  std::int64_t p)
      : t_(std::move(total_digits)), b_(std::move(bound_digits)), p_(p),
        k_(b_.size()) {}

  std::optional<std::vector<Int>> run() {
    if (k_ == 0) {
      if (t_.empty()) return std::vector<Int>{};
      return std::nullopt;
    }
    choice_.assign(t_.size(), std::vector<int>(k_, 0));
    unsigned all_tight = (k_ >= 64) ? 0 : ((1u << k_) - 1u);
    if (!search(static_cast<int>(t_.size()) - 1, all_tight)) return std::nullopt;
    std::vector<Int> kappa(k_, 0);
    for (int pos = static_cast<int>(t_.size()) - 1; pos >= 0; --pos)
      for (std::size_t i = 0; i < k_; ++i)
        kappa[i] = kappa[i] * p_ + choice_[pos][i];
    return kappa;
  }

private:
  bool search(int pos, unsigned tight) {
    if (pos < 0) return true;
    auto memo_key = std::make_pair(pos, tight);
    auto it = failed_.find(memo_key);
    if (it != failed_.end()) return false;
    if (assign(pos, 0, t_[pos], tight, tight)) return true;
    failed_.emplace(memo_key, true);
    return false;
  }

  // Distributes `remaining` of position `pos`'s digit over coordinates
  // i..k-1, trying larger shares for earlier coordinates first. This makes
  // the witness deterministic and front-loaded.
  bool assign(int pos, std::size_t i, int remaining, unsigned tight, unsigned next_tight) {
    if (i == k_) {
      if (remaining != 0) return false;
      return search(pos - 1, next_tight);
    }
    int cap = p_ > remaining ? remaining : static_cast<int>(p_ - 1);
    bool is_tight = (tight >> i) & 1u;
    int bound_digit = b_[i][pos];
    if (is_tight && bound_digit < cap) cap = bound_digit;
    for (int c = cap; c >= 0; --c) {
      unsigned nt = next_tight;
      if (is_tight && c < bound_digit) nt &= ~(1u << i);
      choice_[pos][i] = c;
      if (assign(pos, i + 1, remaining - c, tight, nt)) return true;
    }
    choice_[pos][i] = 0;
    return false;
  }

  std::vector<int> t_;
  std::vector<std::vector<int>> b_;
  std::int64_t p_;
  std::size_t k_;
  std::vector<std::vector<int>> choice_;
  std::map<std::pair<int, unsigned>, bool> failed_;
};

} // namespace detail

/// Searches for a composition kappa of `total` with 0 <= kappa_i <=
/// bounds_i whose multinomial coefficient is nonzero mod p, i.e. whose
/// base-p digits add up to the digits of `total` position by position
/// with no carries. Returns the first such kappa in the canonical search
/// order, or nullopt when none exists.
///
/// A negative bound makes the instance infeasible (the coordinate cannot
/// even take the value 0), so nullopt is returned immediately.
inline std::optional<std::vector<Int>> exists_bounded_carryfree_composition(
    const Int& total, const std::vector<Int>& bounds, std::int64_t p) {
  if (total < 0) throw Error("composition total must be nonnegative");
  if (bounds.empty()) throw Error("bounds list must be nonempty");
  if (bounds.size() > 11)
    throw Error("carry-free composition search supports at most 11 parts");
  for (const Int& b : bounds)
    if (b < 0) return std::nullopt;

  DigitVector td = base_p_digits(total, p);
  std::size_t npos = td.digits.size();
  std::vector<std::vector<int>> bd(bounds.size(), std::vector<int>(npos, 0));
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    // Bounds are clipped to total: kappa_i <= total always holds, so any
    // digit of the bound above total's digit length is irrelevant.
    Int b = bounds[i] < total ? bounds[i] : total;
    DigitVector digits = base_p_digits(b, p);
    for (std::size_t pos = 0; pos < digits.digits.size(); ++pos)
      bd[i][pos] = digits.digits[pos];
  }

  detail::CarryFreeSearch search(td.digits, std::move(bd), p);
  auto kappa = search.run();

#ifndef NDEBUG
  if (kappa) {
    Int sum = 0;
    for (std::size_t i = 0; i < kappa->size(); ++i) {
      assert((*kappa)[i] >= 0 && (*kappa)[i] <= bounds[i]);
      sum += (*kappa)[i];
    }
    assert(sum == total);
    assert(multinomial_mod_p(total, *kappa, p) != 0);
  }
#endif
  return kappa;
}

} // namespace dti
