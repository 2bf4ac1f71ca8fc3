#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dti;
using test_support::ev;

TEST_CASE("newton membership reference values") {
  MonomialIdeal tau = reference::expected_tau_d5_p2_n5();
  // Average of (2,1,0,0,0)-type generators.
  CHECK(newton_member(ev({1, 1, 1, 0, 0}), tau));
  for (const ExponentVector& g : tau.gens()) CHECK(newton_member(g, tau));
  // Every generator has degree 3; nothing of degree 1 can be dominated.
  CHECK_FALSE(newton_member(ev({1, 0, 0, 0, 0}), tau));
  CHECK_FALSE(newton_member(ev({0, 0, 0, 0, 0}), tau));
}

TEST_CASE("newton membership on the zero and unit ideals") {
  CHECK_FALSE(newton_member(ev({3, 3}), MonomialIdeal::zero(2)));
  CHECK(newton_member(ev({0, 0}), MonomialIdeal::unit(2)));
}

TEST_CASE("integral closure of the reference test ideals") {
  CHECK(integral_closure(reference::expected_tau_d5_p2_n5()) == power_of_maximal(5, 3));
  CHECK(integral_closure(reference::expected_tau_d7_p3_n4()) == power_of_maximal(4, 4));
}

TEST_CASE("powers of the maximal ideal are integrally closed") {
  for (int n : {3, 4, 5}) {
    for (int k : {1, 2, 3, 8}) {
      if (n == 5 && k == 8) continue; // covered below at the box limit
      MonomialIdeal mk = power_of_maximal(n, k);
      CHECK(integral_closure(mk) == mk);
      CHECK(is_integrally_closed(mk));
    }
  }
  MonomialIdeal big = power_of_maximal(5, 8);
  CHECK(is_integrally_closed(big));
}

TEST_CASE("integral closure is idempotent and increasing") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    MonomialIdeal I = test_support::random_ideal(rng, n, 8, 4);
    if (I.is_zero()) continue;
    MonomialIdeal closure = integral_closure(I);
    CHECK(contains_ideal(closure, I));
    CHECK(integral_closure(closure) == closure);
  }
}

TEST_CASE("is_integrally_closed reference verdicts") {
  CHECK_FALSE(is_integrally_closed(reference::expected_tau_d5_p2_n5()));
  CHECK(is_integrally_closed(power_of_maximal(5, 3)));
  CHECK(is_integrally_closed(MonomialIdeal::unit(3)));
  CHECK_THROWS_AS(integral_closure(MonomialIdeal::zero(3)), Error);
}

TEST_CASE("closure membership matches the lattice points of simple polyhedra") {
  // For (x^a, y^b) the closure holds exactly the points on or above the
  // segment between (a,0) and (0,b): b*x + a*y >= a*b.
  for (std::int64_t a : {2, 3, 5}) {
    for (std::int64_t b : {2, 4}) {
      MonomialIdeal I = MonomialIdeal::make(2, {ev({a, 0}), ev({0, b})});
      MonomialIdeal closure = integral_closure(I);
      for (const ExponentVector& w : test_support::box_points(2, 6)) {
        bool expected = b * w[0] + a * w[1] >= a * b;
        INFO("a=" << a << " b=" << b << " w=" << to_string(w));
        CHECK(contains_monomial(closure, w) == expected);
      }
    }
  }

  // For (x^a, y^b, z^c) the polyhedron is the half-space
  // x/a + y/b + z/c >= 1 inside the orthant.
  for (auto [a, b, c] : {std::array<std::int64_t, 3>{2, 3, 4},
                         std::array<std::int64_t, 3>{3, 3, 5}}) {
    MonomialIdeal I = MonomialIdeal::make(3, {ev({a, 0, 0}), ev({0, b, 0}), ev({0, 0, c})});
    for (const ExponentVector& w : test_support::box_points(3, 5)) {
      bool expected = Rational(w[0]) / a + Rational(w[1]) / b + Rational(w[2]) / c >=
                      Rational(1);
      INFO("(a,b,c)=(" << a << "," << b << "," << c << ") w=" << to_string(w));
      CHECK(newton_member(w, I) == expected);
    }
  }
}
