#pragma once

#include "dti/core.hpp"
#include "dti/errors.hpp"
#include "dti/monomial_ideal.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace dti {

/// A point of Q^n with exact coordinates.
struct RationalPoint {
  std::vector<Rational> coordinates;
};

namespace detail {

/// Phase-I simplex feasibility for { x >= 0 : A x = b }, b >= 0, with
/// Bland's rule throughout, so the pivoting cannot cycle. Exact rational
/// arithmetic. Returns a feasible basic solution or nullopt.
inline std::optional<std::vector<Rational>> lp_feasible_point(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t m = A.size();
  if (m == 0) return std::vector<Rational>{};
  const std::size_t nreal = A[0].size();
  const std::size_t ncols = nreal + m; // real variables then artificials

  // Tableau rows: [A | I | b]; objective row drives sum of artificials to 0.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    assert(b[i] >= 0);
    for (std::size_t j = 0; j < nreal; ++j) T[i][j] = A[i][j];
    T[i][nreal + i] = 1;
    T[i][ncols] = b[i];
  }
  // Reduced costs c_j - z_j for the phase-I objective (sum of
  // artificials): real columns carry -sum_i A_ij, basic artificial
  // columns carry 1 - 1 = 0.
  std::vector<Rational> obj(ncols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= T[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[nreal + i] += 1;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = nreal + i;

  for (;;) {
    // Bland: entering column is the lowest index with negative reduced cost.
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;

    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        Rational ratio = T[i][ncols] / T[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) break; // unbounded direction; cannot happen in phase I

    Rational pivot = T[leave][enter];
    for (std::size_t j = 0; j <= ncols; ++j) T[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational factor = T[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= factor * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rational factor = obj[enter];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = -obj[ncols];
  if (objective != 0) return std::nullopt;
  std::vector<Rational> x(nreal, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nreal) x[basis[i]] = T[i][ncols];
  return x;
}

} // namespace detail

/// Whether w lies in the Newton polyhedron of I, i.e. whether there are
/// rationals lambda_j >= 0 summing to 1 with sum lambda_j v_j <= w
/// componentwise over the generators v_j. Decided by exact rational LP
/// feasibility; x^w is integral over I exactly when this holds.
inline bool newton_member(const ExponentVector& w, const MonomialIdeal& I) {
  if (w.size() != static_cast<std::size_t>(I.nvars()))
    throw Error("monomial arity does not match ideal");
  const auto& gens = I.gens();
  if (gens.empty()) return false;
  if (contains_monomial(I, w)) return true;

  // Any convex combination of generators has total degree at least the
  // least generator degree.
  Int min_deg = gens[0].total_degree();
  for (const ExponentVector& g : gens) {
    Int deg = g.total_degree();
    if (deg < min_deg) min_deg = deg;
  }
  if (w.total_degree() < min_deg) return false;

  const std::size_t n = w.size();
  const std::size_t g = gens.size();
  // Variables: lambda_1..lambda_g, slack_1..slack_n.
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(g + n, Rational(0)));
  std::vector<Rational> b(n + 1, Rational(0));
  for (std::size_t j = 0; j < g; ++j) A[0][j] = 1;
  b[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g; ++j) A[i + 1][j] = Rational(gens[j][i]);
    A[i + 1][g + i] = 1;
    b[i + 1] = Rational(w[i]);
  }
  auto x = detail::lp_feasible_point(std::move(A), std::move(b));
#ifndef NDEBUG
  if (x) {
    RationalPoint combo;
    combo.coordinates.assign(n, Rational(0));
    Rational total = 0;
    for (std::size_t j = 0; j < g; ++j) {
      assert((*x)[j] >= 0);
      total += (*x)[j];
      for (std::size_t i = 0; i < n; ++i)
        combo.coordinates[i] += (*x)[j] * Rational(gens[j][i]);
    }
    assert(total == 1);
    for (std::size_t i = 0; i < n; ++i) assert(combo.coordinates[i] <= Rational(w[i]));
  }
#endif
  return x.has_value();
}

/// Integral closure of a nonzero monomial ideal: the monomials in the
/// Newton polyhedron, minimalized. Minimal generators of the closure lie
/// in the box bounded coordinatewise by the generator maxima: above the
/// box any point stays in the polyhedron after dropping a unit in the
/// oversized coordinate, so it cannot be a minimal generator.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) throw Error("integral closure requires a nonzero ideal");
  const std::size_t n = static_cast<std::size_t>(I.nvars());
  std::vector<std::int64_t> M(n, 0);
  for (const ExponentVector& g : I.gens())
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t v = g[i].convert_to<std::int64_t>();
      if (v > M[i]) M[i] = v;
    }

  std::size_t cells = 1;
  std::vector<std::size_t> strides(n);
  for (std::size_t i = 0; i < n; ++i) {
    strides[i] = cells;
    std::size_t dim = static_cast<std::size_t>(M[i]) + 1;
    if (cells > (std::size_t(1) << 23) / dim)
      throw ResourceLimitError("integral closure box exceeds the supported size");
    cells *= dim;
  }

  // Membership in the polyhedron is upward closed, so inherit positive
  // verdicts from below and only run the LP on the lower boundary.
  std::vector<std::uint8_t> member(cells, 0);
  std::vector<ExponentVector> closure_monomials;
  std::vector<std::int64_t> u(n, 0);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    std::size_t rest = idx;
    bool inherited = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t digit = rest % (static_cast<std::size_t>(M[i]) + 1);
      rest /= static_cast<std::size_t>(M[i]) + 1;
      u[i] = static_cast<std::int64_t>(digit);
      if (!inherited && digit > 0 && member[idx - strides[i]]) inherited = true;
    }
    bool in_np = inherited;
    if (!in_np) {
      std::vector<Int> e(u.begin(), u.end());
      in_np = newton_member(ExponentVector(std::move(e)), I);
    }
    if (in_np) {
      member[idx] = 1;
      std::vector<Int> e(u.begin(), u.end());
      closure_monomials.push_back(ExponentVector(std::move(e)));
    }
  }

  MonomialIdeal closure = MonomialIdeal::make(I.nvars(), std::move(closure_monomials));
  assert(contains_ideal(closure, I));
  return closure;
}

inline bool is_integrally_closed(const MonomialIdeal& I) {
  return integral_closure(I) == I;
}

} // namespace dti
