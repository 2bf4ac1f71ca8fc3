// Standalone property suites: Frobenius monotonicity, elimination
// invariance, brute-force agreement for colon and socle, integral-closure
// idempotence, permutation symmetry of the test ideal, and in/out
// exclusivity, each over the shipped reference rings.

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace dti;
using test_support::ev;

namespace {

const std::vector<std::array<std::int64_t, 3>>& shipped_rings() {
  static const std::vector<std::array<std::int64_t, 3>> rings = {
      {2, 5, 5}, {3, 7, 4}, {7, 4, 5}, {2, 3, 3}, {5, 2, 3}, {2, 5, 3}, {3, 5, 4}};
  return rings;
}

} // namespace

TEST_CASE("property: frobenius monotonicity", "[properties]") {
  std::mt19937 rng(1111);
  for (const auto& [p, d, n] : shipped_rings()) {
    RingSpec spec = validate_ring(p, d, n);
    std::uniform_int_distribution<std::int64_t> entry(0, d);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::int64_t> b(static_cast<std::size_t>(n));
      for (auto& x : b) x = entry(rng);
      ExponentVector u = ev(b);
      for (int e = 1; e <= 3; ++e) {
        PrimePower q = PrimePower::from_exponent(p, e);
        PrimePower pq = PrimePower::from_exponent(p, e + 1);
        if (monomial_in_frobenius_bracket(MembershipQuery{spec, u.scaled(q.value), q})) {
          INFO("(p,d,n)=(" << p << "," << d << "," << n << ") u=" << to_string(u)
                           << " q=" << q.value);
          CHECK(monomial_in_frobenius_bracket(
              MembershipQuery{spec, u.scaled(pq.value), pq}));
        }
      }
    }
  }
}

TEST_CASE("property: eliminated-coordinate invariance", "[properties]") {
  std::mt19937 rng(2222);
  for (const auto& [p, d, n] : shipped_rings()) {
    RingSpec spec = validate_ring(p, d, n);
    std::uniform_int_distribution<std::int64_t> entry(0, 3 * d);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::int64_t> b(static_cast<std::size_t>(n));
      for (auto& x : b) x = entry(rng);
      ExponentVector B = ev(b);
      PrimePower q = PrimePower::from_exponent(p, 1 + trial % 3);
      bool first = monomial_in_frobenius_bracket(MembershipQuery{spec, B, q}, 0);
      for (int j = 1; j < n; ++j)
        CHECK(monomial_in_frobenius_bracket(MembershipQuery{spec, B, q}, j) == first);
    }
  }
}

TEST_CASE("property: colon agrees with brute force at n <= 4", "[properties]") {
  std::mt19937 rng(3333);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      MonomialIdeal A = test_support::random_ideal(rng, n, 6, 4);
      MonomialIdeal B = test_support::random_ideal(rng, n, 6, 3);
      if (B.is_zero()) continue;
      MonomialIdeal Q = colon_ideal(A, B);
      for (const ExponentVector& w : test_support::box_points(n, 6)) {
        bool direct = true;
        for (const ExponentVector& b : B.gens())
          direct = direct && contains_monomial(A, w.plus(b));
        CHECK(direct == contains_monomial(Q, w));
      }
    }
  }
}

TEST_CASE("property: socle agrees with brute force at n <= 4", "[properties]") {
  std::mt19937 rng(4444);
  for (std::int64_t n = 3; n <= 4; ++n) {
    RingSpec spec = validate_ring(5, 4, n);
    for (int trial = 0; trial < 12; ++trial) {
      MonomialIdeal K = sum(reference::pure_powers(static_cast<int>(n), 4),
                            test_support::random_ideal(rng, static_cast<int>(n), 3, 4));
      auto socle = socle_generators(K, spec);
      std::vector<ExponentVector> direct;
      for (const ExponentVector& u : test_support::box_points(static_cast<int>(n), 3)) {
        if (contains_monomial(K, u)) continue;
        bool all_in = true;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
          all_in = all_in &&
                   contains_monomial(K, u.plus(ExponentVector::axis(
                                            static_cast<std::size_t>(n), i, Int(1))));
        if (all_in) direct.push_back(u);
      }
      std::sort(direct.begin(), direct.end(), [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
      CHECK(socle == direct);
    }
  }
}

TEST_CASE("property: integral closure is idempotent and increasing", "[properties]") {
  std::mt19937 rng(5555);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 4;
    MonomialIdeal I = test_support::random_ideal(rng, n, 7, 4);
    if (I.is_zero()) continue;
    MonomialIdeal c1 = integral_closure(I);
    CHECK(contains_ideal(c1, I));
    CHECK(integral_closure(c1) == c1);
  }
  for (int k : {1, 2, 5}) {
    MonomialIdeal mk = power_of_maximal(4, k);
    CHECK(integral_closure(mk) == mk);
  }
}

TEST_CASE("property: test ideal is permutation symmetric", "[properties]") {
  for (const auto& [p, d, n] : shipped_rings()) {
    RingSpec spec = validate_ring(p, d, n);
    ClosureConfig cfg = ClosureConfig::defaults(spec);
    TestIdealReport r = compute_test_ideal(spec, cfg);
    if (!r.exact) continue;
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937 rng(6666);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<ExponentVector> gens;
      for (const ExponentVector& g : r.tau_lower.gens()) {
        std::vector<Int> e(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) e[perm[i]] = g[i];
        gens.push_back(ExponentVector(std::move(e)));
      }
      CHECK(MonomialIdeal::make(static_cast<int>(n), std::move(gens)) == r.tau_lower);
    }
  }
}

TEST_CASE("property: no in/out double certificate on shipped rings", "[properties]") {
  for (const auto& [p, d, n] : shipped_rings()) {
    RingSpec spec = validate_ring(p, d, n);
    ExponentVector c = ClosureConfig::defaults(spec).test_element;
    std::int64_t box = std::min<std::int64_t>(d - 1, 2);
    for (const ExponentVector& u : test_support::box_points(static_cast<int>(n), box)) {
      bool ever_in = false, ever_out = false;
      for (int e = 1; e <= 5; ++e) {
        PrimePower q = PrimePower::from_exponent(p, e);
        if (monomial_in_frobenius_bracket(MembershipQuery{spec, u.scaled(q.value), q}))
          ever_in = true;
        if (!monomial_in_frobenius_bracket(
                MembershipQuery{spec, c.plus(u.scaled(q.value)), q}))
          ever_out = true;
      }
      CHECK_FALSE((ever_in && ever_out));
    }
  }
}
