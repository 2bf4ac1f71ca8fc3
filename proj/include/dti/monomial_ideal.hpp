#pragma once

#include "dti/core.hpp"
#include "dti/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace dti {

/// Monomial ideal in S = F_p[x1..xn], held as its unique minimal
/// generating set: an antichain under componentwise divisibility, sorted
/// lexicographically with x1 major (descending on exponent vectors). The
/// zero ideal has no generators; the unit ideal is generated by the
/// constant monomial.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int nvars) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    return I;
  }

  static MonomialIdeal unit(int nvars) {
    return make(nvars, {ExponentVector::zeros(static_cast<std::size_t>(nvars))});
  }

  /// Builds the ideal generated by `raw`, minimalizing and sorting.
  static MonomialIdeal make(int nvars, std::vector<ExponentVector> raw) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    for (const ExponentVector& g : raw)
      if (g.size() != static_cast<std::size_t>(nvars))
        throw Error("generator arity does not match nvars");

    std::sort(raw.begin(), raw.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                Int da = a.total_degree(), db = b.total_degree();
                if (da != db) return da < db;
                return a < b;
              });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const ExponentVector& g : raw) {
      bool redundant = false;
      for (const ExponentVector& kept : I.gens_) {
        if (kept.divides(g)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) I.gens_.push_back(g);
    }
    std::sort(I.gens_.begin(), I.gens_.end(),
              [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
    return I;
  }

  int nvars() const { return nvars_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

inline MonomialIdeal minimalize(int nvars, std::vector<ExponentVector> raw) {
  return MonomialIdeal::make(nvars, std::move(raw));
}

inline bool contains_monomial(const MonomialIdeal& I, const ExponentVector& B) {
  if (B.size() != static_cast<std::size_t>(I.nvars()))
    throw Error("monomial arity does not match ideal");
  for (const ExponentVector& g : I.gens())
    if (g.divides(B)) return true;
  return false;
}

/// I contained in J: every generator of I is a member of J.
inline bool contains_ideal(const MonomialIdeal& J, const MonomialIdeal& I) {
  for (const ExponentVector& g : I.gens())
    if (!contains_monomial(J, g)) return false;
  return true;
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw Error("ideal arity mismatch in sum");
  std::vector<ExponentVector> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

/// Frobenius bracket power I^[q]: generators raised to the q-th power.
inline MonomialIdeal bracket_power(const MonomialIdeal& I, const Int& q) {
  if (q < 1) throw Error("bracket power exponent must be positive");
  std::vector<ExponentVector> gens;
  gens.reserve(I.gens().size());
  for (const ExponentVector& g : I.gens()) gens.push_back(g.scaled(q));
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

/// (x1, ..., xn)^k: all monomials of total degree k. k <= 0 gives the
/// unit ideal.
inline MonomialIdeal power_of_maximal(int n, std::int64_t k) {
  if (k <= 0) return MonomialIdeal::unit(n);
  std::vector<ExponentVector> gens;
  std::vector<Int> cur(static_cast<std::size_t>(n), Int(0));
  // Odometer over compositions of k into n parts.
  auto emit = [&](auto&& self, int i, std::int64_t remaining) -> void {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = remaining;
      gens.push_back(ExponentVector(cur));
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  emit(emit, 0, k);
  return MonomialIdeal::make(n, std::move(gens));
}

/// I : x^B  =  (x^{max(g-B, 0)} : g a generator of I).
inline MonomialIdeal colon_monomial(const MonomialIdeal& I, const ExponentVector& B) {
  if (B.size() != static_cast<std::size_t>(I.nvars()))
    throw Error("monomial arity does not match ideal");
  std::vector<ExponentVector> gens;
  gens.reserve(I.gens().size());
  for (const ExponentVector& g : I.gens()) {
    std::vector<Int> e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      e[i] = g[i] > B[i] ? g[i] - B[i] : Int(0);
    gens.push_back(ExponentVector(std::move(e)));
  }
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

/// Intersection via pairwise lcm of generators.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw Error("ideal arity mismatch in intersect");
  std::vector<ExponentVector> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const ExponentVector& a : I.gens())
    for (const ExponentVector& b : J.gens()) gens.push_back(lcm(a, b));
  return MonomialIdeal::make(I.nvars(), std::move(gens));
}

/// A : B = intersection over generators b of B of A : b. The colon by the
/// zero ideal is the unit ideal.
inline MonomialIdeal colon_ideal(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.nvars() != B.nvars()) throw Error("ideal arity mismatch in colon");
  MonomialIdeal result = MonomialIdeal::unit(A.nvars());
  for (const ExponentVector& b : B.gens())
    result = intersect(result, colon_monomial(A, b));
  return result;
}

namespace detail {

/// Dense membership table of K over the box [0, d]^n, computed by upward
/// closure from the generators. Generators of any ideal containing
/// (x1^d, ..., xn^d) have entries <= d, so the box is exhaustive.
class BoxMembership {
public:
  BoxMembership(const MonomialIdeal& K, std::int64_t d)
      : n_(K.nvars()), radix_(d + 1) {
    std::size_t size = 1;
    for (int i = 0; i < n_; ++i) {
      if (size > kMaxCells / static_cast<std::size_t>(radix_))
        throw ResourceLimitError("socle box exceeds the supported size");
      size *= static_cast<std::size_t>(radix_);
    }
    member_.assign(size, 0);
    strides_.resize(static_cast<std::size_t>(n_));
    std::size_t s = 1;
    for (int i = 0; i < n_; ++i) {
      strides_[static_cast<std::size_t>(i)] = s;
      s *= static_cast<std::size_t>(radix_);
    }
    for (const ExponentVector& g : K.gens()) {
      std::size_t idx = 0;
      bool in_box = true;
      for (int i = 0; i < n_; ++i) {
        if (g[static_cast<std::size_t>(i)] > d) {
          in_box = false;
          break;
        }
        idx += static_cast<std::size_t>(g[static_cast<std::size_t>(i)].convert_to<std::int64_t>()) *
               strides_[static_cast<std::size_t>(i)];
      }
      if (in_box) member_[idx] = 1;
    }
    for (std::size_t idx = 0; idx < member_.size(); ++idx) {
      if (member_[idx]) continue;
      std::size_t rest = idx;
      for (int i = 0; i < n_; ++i) {
        std::size_t digit = rest % static_cast<std::size_t>(radix_);
        rest /= static_cast<std::size_t>(radix_);
        if (digit > 0 && member_[idx - strides_[static_cast<std::size_t>(i)]]) {
          member_[idx] = 1;
          break;
        }
      }
    }
  }

  bool member(std::size_t idx) const { return member_[idx] != 0; }
  std::size_t cells() const { return member_.size(); }
  int nvars() const { return n_; }
  std::int64_t radix() const { return radix_; }
  std::size_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }

private:
  static constexpr std::size_t kMaxCells = std::size_t(1) << 25;

  int n_;
  std::int64_t radix_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> member_;
};

} // namespace detail

/// Socle generators of the Artinian quotient by K: the monomials u not in
/// K with x_i * u in K for every i. Requires every pure power x_i^d to be
/// in K. All results have entries <= d-1.
inline std::vector<ExponentVector> socle_generators(const MonomialIdeal& K,
                                                    const RingSpec& spec) {
  const std::int64_t d = spec.d;
  const int n = static_cast<int>(spec.n);
  if (K.nvars() != n) throw Error("ideal arity does not match ring");
  for (int i = 0; i < n; ++i) {
    ExponentVector pure = ExponentVector::axis(static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(i), Int(d));
    if (!contains_monomial(K, pure))
      throw NotArtinianError("x" + std::to_string(i + 1) + "^" + std::to_string(d) +
                             " is not in the ideal; quotient is not Artinian");
  }

  std::vector<ExponentVector> socle;
  try {
    detail::BoxMembership box(K, d);
    std::vector<std::int64_t> u(static_cast<std::size_t>(n), 0);
    const std::size_t cells = box.cells();
    for (std::size_t idx = 0; idx < cells; ++idx) {
      bool candidate = !box.member(idx);
      if (candidate) {
        std::size_t rest = idx;
        for (int i = 0; i < n; ++i) {
          std::size_t digit = rest % static_cast<std::size_t>(box.radix());
          rest /= static_cast<std::size_t>(box.radix());
          u[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(digit);
          if (digit == static_cast<std::size_t>(d)) {
            candidate = false; // in the box rim; already a member or irrelevant
            break;
          }
        }
        if (candidate) {
          for (int i = 0; i < n && candidate; ++i)
            candidate = box.member(idx + box.stride(i));
        }
        if (candidate) {
          std::vector<Int> e(u.begin(), u.end());
          socle.push_back(ExponentVector(std::move(e)));
        }
      }
    }
  } catch (const ResourceLimitError&) {
    // Box too large: fall back to the colon characterization.
    MonomialIdeal m = power_of_maximal(n, 1);
    MonomialIdeal quotient = colon_ideal(K, m);
    for (const ExponentVector& g : quotient.gens())
      if (!contains_monomial(K, g)) socle.push_back(g);
  }
  std::sort(socle.begin(), socle.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
  return socle;
}

} // namespace dti
