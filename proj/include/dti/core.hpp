#pragma once

#include "dti/errors.hpp"
#include "dti/intmath.hpp"

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dti {

/// The triple (p, d, n) defining R = F_p[x1..xn] / (x1^d + ... + xn^d).
///
/// p must be prime and must not divide d; n >= 3 and d >= 2. Construct
/// through validate_ring so the constraints are enforced in one place.
struct RingSpec {
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t n = 0;

  std::int64_t dim() const { return n - 1; }

  /// Degree threshold at which a homogeneous element is automatically in
  /// the tight closure of the parameter ideal (x1^d, ..., x_{n-1}^d):
  /// the sum of the parameter degrees, (n-1)*d.
  std::int64_t hara_threshold() const { return (n - 1) * d; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

inline RingSpec validate_ring(std::int64_t p, std::int64_t d, std::int64_t n) {
  if (!is_prime(p))
    throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (d < 2)
    throw DegreeTooSmallError("d = " + std::to_string(d) + " must be at least 2");
  if (n < 3)
    throw TooFewVariablesError("n = " + std::to_string(n) + " must be at least 3");
  if (d % p == 0)
    throw DividesDegreeError("p = " + std::to_string(p) + " divides d = " +
                             std::to_string(d));
  return RingSpec{p, d, n};
}

/// A prime power q = p^e, kept together with its factorization.
struct PrimePower {
  std::int64_t base = 0;
  int exponent = 0;
  Int value = 1;

  static PrimePower from_exponent(std::int64_t p, int e) {
    if (e < 0) throw Error("prime-power exponent must be nonnegative");
    PrimePower q;
    q.base = p;
    q.exponent = e;
    q.value = int_pow(p, e);
    return q;
  }

  /// Parses an explicit value, verifying it is a power of p.
  static PrimePower from_value(std::int64_t p, const Int& value) {
    if (value < 1) throw Error("prime power must be positive");
    PrimePower q;
    q.base = p;
    q.exponent = 0;
    Int v = value;
    while (v > 1) {
      if (v % p != 0)
        throw Error("q is not a power of p = " + std::to_string(p));
      v /= p;
      ++q.exponent;
    }
    q.value = value;
    return q;
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exponent vector (B_1, ..., B_n) of a monomial x^B. Entries are
/// nonnegative exact integers.
class ExponentVector {
public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<Int> entries) : e_(std::move(entries)) {
    for (const Int& x : e_)
      if (x < 0) throw Error("exponent vector entries must be nonnegative");
  }

  static ExponentVector zeros(std::size_t n) {
    ExponentVector v;
    v.e_.assign(n, Int(0));
    return v;
  }

  /// value * e_i, i.e. the monomial x_{i+1}^value (i is 0-based).
  static ExponentVector axis(std::size_t n, std::size_t i, Int value) {
    ExponentVector v = zeros(n);
    v.e_[i] = std::move(value);
    return v;
  }

  std::size_t size() const { return e_.size(); }
  const Int& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }

  Int total_degree() const {
    Int s = 0;
    for (const Int& x : e_) s += x;
    return s;
  }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }

  /// Componentwise <=, i.e. x^this divides x^m.
  bool divides(const ExponentVector& m) const {
    assert(size() == m.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  ExponentVector plus(const ExponentVector& o) const {
    assert(size() == o.size());
    std::vector<Int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return ExponentVector(std::move(r));
  }

  ExponentVector scaled(const Int& q) const {
    std::vector<Int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * q;
    return ExponentVector(std::move(r));
  }

  ExponentVector with_entry(std::size_t i, Int value) const {
    ExponentVector v = *this;
    v.e_[i] = std::move(value);
    return v;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// Lexicographic order on entries; the canonical sort order everywhere.
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    }
    return false;
  }

private:
  std::vector<Int> e_;
};

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  assert(a.size() == b.size());
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] >= b[i] ? a[i] : b[i];
  return ExponentVector(std::move(r));
}

/// The unique decomposition B = r + d*a with 0 <= r_i < d. The residue r
/// is the multidegree class of x^B in the Z_d^n grading; a collects the
/// exponents in the subring generated by the d-th powers.
struct ResidueSplit {
  ExponentVector r;
  ExponentVector a;
};

inline ResidueSplit split_residue(const ExponentVector& B, std::int64_t d) {
  if (d < 1) throw Error("split_residue requires d >= 1");
  std::vector<Int> r(B.size()), a(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) {
    r[i] = B[i] % d;
    a[i] = B[i] / d;
  }
  return ResidueSplit{ExponentVector(std::move(r)), ExponentVector(std::move(a))};
}

} // namespace dti
