#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace dti {

/// Exact arbitrary-precision integer. Frobenius powers q = p^e grow past
/// any fixed width long before the search bounds are reached, so every
/// exponent-carrying quantity uses this type.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used by the Newton-polyhedron feasibility solver.
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(std::int64_t base, int exponent) {
  Int r = 1;
  Int b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace detail {

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::pow_mod_u64(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n) - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = detail::mul_mod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n) - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Modular inverse for prime modulus.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::uint64_t up = static_cast<std::uint64_t>(p);
  std::uint64_t ua = static_cast<std::uint64_t>(((a % p) + p) % p);
  return static_cast<std::int64_t>(detail::pow_mod_u64(ua, up - 2, up));
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      detail::mul_mod_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                          static_cast<std::uint64_t>(p)));
}

} // namespace dti
