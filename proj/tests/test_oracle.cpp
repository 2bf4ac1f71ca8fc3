#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dti;
using test_support::ev;

static bool fast_member(RingSpec spec, ExponentVector B, int e,
                        std::optional<int> eliminate = std::nullopt) {
  return monomial_in_frobenius_bracket(
      MembershipQuery{spec, std::move(B), PrimePower::from_exponent(spec.p, e)}, eliminate);
}

TEST_CASE("membership reference values") {
  RingSpec r255 = validate_ring(2, 5, 5);
  CHECK(fast_member(r255, ev({12, 12, 12, 12, 12}), 2));
  CHECK_FALSE(fast_member(r255, ev({36, 128, 128, 128, 128}), 5));

  RingSpec r475 = validate_ring(7, 4, 5);
  CHECK(fast_member(r475, ev({21, 21, 21, 21, 21}), 1));
  CHECK_FALSE(fast_member(r475, ev({17, 21, 21, 21, 21}), 1));
}

TEST_CASE("adjudicated membership at q=9 and exclusion at q=27 for (3,7,4)") {
  RingSpec spec = validate_ring(3, 7, 4);

  // c*u^9 with c = x1^6, u = x1^2*x2^6*x3^6*x4^6.
  CHECK(fast_member(spec, ev({24, 54, 54, 54}), 2));

  // The same product at q=27 escapes.
  CHECK_FALSE(fast_member(spec, ev({60, 162, 162, 162}), 3));

  // Groebner confirmation of both verdicts, straight from the definition.
  MembershipOracle gb(spec, OracleEngine::Groebner);
  CHECK(gb.query(ev({24, 54, 54, 54}), PrimePower::from_exponent(3, 2)));
  CHECK_FALSE(gb.query(ev({60, 162, 162, 162}), PrimePower::from_exponent(3, 3)));

  // Brute-force composition enumeration of the reduction's witness search
  // (exact factorials, no digit tricks): membership means no witness.
  // q=9: B=(24,54,54,54) gives a=(3,7,7,7); eliminating x1 leaves
  // total 3 against bounds 9-1-7 = 1.
  CHECK_FALSE(test_support::bruteforce_composition_exists(3, {1, 1, 1}, 3));
  // q=27: a=(8,23,23,23); total 8 against bounds 27-1-23 = 3.
  CHECK(test_support::bruteforce_composition_exists(8, {3, 3, 3}, 3));
}

TEST_CASE("verdict does not depend on the eliminated coordinate") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::int64_t> entry(0, 60);
  for (auto [p, d, n] : {std::array<std::int64_t, 3>{2, 5, 4},
                         std::array<std::int64_t, 3>{3, 7, 4},
                         std::array<std::int64_t, 3>{7, 4, 5}}) {
    RingSpec spec = validate_ring(p, d, n);
    for (int e = 1; e <= 2; ++e) {
      for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::int64_t> b(static_cast<std::size_t>(n));
        for (auto& x : b) x = entry(rng);
        ExponentVector B = ev(b);
        bool first = fast_member(spec, B, e, 0);
        for (int j = 1; j < n; ++j) {
          INFO("B=" << to_string(B) << " e=" << e << " j=" << j);
          CHECK(fast_member(spec, B, e, j) == first);
        }
        CHECK(fast_member(spec, B, e) == first);
      }
    }
  }
}

TEST_CASE("Frobenius monotonicity on pure powers") {
  std::mt19937 rng(16180);
  std::uniform_int_distribution<std::int64_t> entry(0, 8);
  for (auto [p, d, n] : {std::array<std::int64_t, 3>{2, 5, 5},
                         std::array<std::int64_t, 3>{3, 7, 4},
                         std::array<std::int64_t, 3>{5, 3, 4}}) {
    RingSpec spec = validate_ring(p, d, n);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<std::int64_t> b(static_cast<std::size_t>(n));
      for (auto& x : b) x = entry(rng);
      ExponentVector u = ev(b);
      for (int e = 1; e <= 3; ++e) {
        Int q = int_pow(p, e);
        if (fast_member(spec, u.scaled(q), e)) {
          Int pq = q * p;
          INFO("u=" << to_string(u) << " q=" << q);
          CHECK(fast_member(spec, u.scaled(pq), e + 1));
        }
      }
    }
  }
}

TEST_CASE("membership is upward closed") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<std::int64_t> entry(0, 40);
  std::uniform_int_distribution<std::int64_t> bump(0, 10);
  RingSpec spec = validate_ring(3, 4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<std::int64_t> b(4), c(4);
    for (std::size_t i = 0; i < 4; ++i) {
      b[i] = entry(rng);
      c[i] = b[i] + bump(rng);
    }
    if (fast_member(spec, ev(b), 2)) {
      INFO("B=" << to_string(ev(b)) << " B'=" << to_string(ev(c)));
      CHECK(fast_member(spec, ev(c), 2));
    }
  }
}

TEST_CASE("a coordinate at or past Q forces membership") {
  RingSpec spec = validate_ring(5, 3, 4);
  // a_2 = 5 = Q: x2^{15} alone clears the bracket power x2^{15}.
  CHECK(fast_member(spec, ev({1, 15, 0, 2}), 1));
  CHECK(fast_member(spec, ev({0, 0, 18, 0}), 1));
}

TEST_CASE("q = 1 degenerates to plain ideal membership") {
  RingSpec spec = validate_ring(5, 3, 4);
  CHECK(fast_member(spec, ev({3, 0, 0, 0}), 0));
  CHECK(fast_member(spec, ev({0, 0, 0, 3}), 0));
  CHECK_FALSE(fast_member(spec, ev({2, 2, 2, 2}), 0));
}

TEST_CASE("equivalence harness agrees on the small reference grids") {
  struct Grid {
    std::int64_t p, d, n, box;
    int e;
  };
  for (Grid g : {Grid{2, 3, 3, 8, 1}, Grid{3, 2, 3, 8, 1}, Grid{5, 2, 3, 6, 1}}) {
    RingSpec spec = validate_ring(g.p, g.d, g.n);
    EquivalenceReport rep =
        equivalence_harness(spec, g.box, PrimePower::from_exponent(g.p, g.e));
    INFO("(p,d,n)=(" << g.p << "," << g.d << "," << g.n << ")");
    CHECK(rep.points_checked == static_cast<std::uint64_t>(
                                    int_pow(g.box + 1, static_cast<int>(g.n))));
    CHECK(rep.disagreements.empty());
  }
}

TEST_CASE("equivalence harness subsamples deterministically over the cap") {
  RingSpec spec = validate_ring(2, 3, 3);
  EquivalenceReport a = equivalence_harness(spec, 8, PrimePower::from_exponent(2, 1), 100);
  EquivalenceReport b = equivalence_harness(spec, 8, PrimePower::from_exponent(2, 1), 100);
  CHECK(a.points_checked <= 100);
  CHECK(a.points_checked == b.points_checked);
  CHECK(a.disagreements.empty());
}

TEST_CASE("oracle validates its inputs") {
  RingSpec spec = validate_ring(2, 5, 5);
  CHECK_THROWS_AS(fast_member(spec, ev({1, 2, 3}), 1), Error);
  MembershipQuery bad{spec, ev({0, 0, 0, 0, 0}), PrimePower::from_exponent(3, 1)};
  CHECK_THROWS_AS(monomial_in_frobenius_bracket(bad), Error);
}

TEST_CASE("engine 'both' cross-checks and agrees") {
  RingSpec spec = validate_ring(2, 3, 3);
  MembershipOracle oracle(spec, OracleEngine::Both);
  for (const ExponentVector& B : test_support::box_points(3, 7)) {
    CHECK_NOTHROW(oracle.query(B, PrimePower::from_exponent(2, 2)));
  }
  CHECK(oracle.queries() == 512);
}
