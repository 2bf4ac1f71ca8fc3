#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace dti;
using test_support::ev;

TEST_CASE("reference classifications for (2,5,5)") {
  RingSpec spec = validate_ring(2, 5, 5);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  REQUIRE(cfg.test_element == ev({4, 0, 0, 0, 0}));

  Verdict diag = classify_element(spec, ev({3, 3, 3, 3, 3}), cfg);
  CHECK(diag.is_in());
  CHECK(diag.certificate == InCertificate::Frobenius);
  CHECK(diag.q == 2);
  // The q=2 membership certificate holds up against the Groebner oracle.
  MembershipOracle gb(spec, OracleEngine::Groebner);
  CHECK(gb.query(ev({6, 6, 6, 6, 6}), PrimePower::from_exponent(2, 1)));

  Verdict u1 = classify_element(spec, ev({1, 4, 4, 4, 4}), cfg);
  CHECK(u1.is_out());
  CHECK(u1.q == 32);

  Verdict top = classify_element(spec, ev({4, 4, 4, 4, 4}), cfg);
  CHECK(top.is_in());
  CHECK(top.certificate == InCertificate::HaraDegree);

  Verdict u6 = classify_element(spec, ev({2, 3, 4, 4, 4}), cfg);
  CHECK(u6.is_out());
  CHECK(u6.q == 16);
}

TEST_CASE("reference classification for (7,4,5)") {
  RingSpec spec = validate_ring(7, 4, 5);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  REQUIRE(cfg.test_element == ev({3, 0, 0, 0, 0}));
  Verdict v = classify_element(spec, ev({2, 3, 3, 3, 3}), cfg);
  CHECK(v.is_out());
  CHECK(v.q == 7);

  Verdict diag = classify_element(spec, ev({3, 3, 3, 3, 3}), cfg);
  CHECK(diag.is_in());
  CHECK(diag.q == 7);
}

TEST_CASE("elements already inside the pure-power ideal are in at q=1") {
  RingSpec spec = validate_ring(2, 5, 5);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  Verdict v = classify_element(spec, ev({5, 0, 0, 1, 0}), cfg);
  CHECK(v.is_in());
  CHECK(v.q == 1);
}

TEST_CASE("frobenius certificates persist at the next power") {
  for (auto [p, d, n] : {std::array<std::int64_t, 3>{2, 5, 5},
                         std::array<std::int64_t, 3>{3, 7, 4},
                         std::array<std::int64_t, 3>{7, 4, 5}}) {
    RingSpec spec = validate_ring(p, d, n);
    ClosureConfig cfg = ClosureConfig::defaults(spec);
    MonomialIdeal D = reference::pure_powers(static_cast<int>(n), d);
    for (const ExponentVector& u : socle_generators(D, spec)) {
      Verdict v = classify_element(spec, u, cfg);
      if (v.is_in() && v.certificate == InCertificate::Frobenius) {
        Int pq = v.q * p;
        CHECK(monomial_in_frobenius_bracket(MembershipQuery{
            spec, u.scaled(pq), PrimePower::from_value(p, pq)}));
      }
    }
  }
}

TEST_CASE("no element is certified both in and out across probed powers") {
  // Exhaustive double-scan, independent of the classifier's scheduling.
  for (auto [p, d, n] : {std::array<std::int64_t, 3>{2, 5, 5},
                         std::array<std::int64_t, 3>{3, 7, 4},
                         std::array<std::int64_t, 3>{7, 4, 5},
                         std::array<std::int64_t, 3>{2, 3, 3},
                         std::array<std::int64_t, 3>{5, 2, 3}}) {
    RingSpec spec = validate_ring(p, d, n);
    ExponentVector c = ClosureConfig::defaults(spec).test_element;
    for (const ExponentVector& u :
         test_support::box_points(static_cast<int>(n), std::min<std::int64_t>(d - 1, 3))) {
      bool ever_in = false, ever_out = false;
      for (int e = 1; e <= 6; ++e) {
        PrimePower q = PrimePower::from_exponent(p, e);
        if (monomial_in_frobenius_bracket(MembershipQuery{spec, u.scaled(q.value), q}))
          ever_in = true;
        if (!monomial_in_frobenius_bracket(
                MembershipQuery{spec, c.plus(u.scaled(q.value)), q}))
          ever_out = true;
      }
      INFO("(p,d,n)=(" << p << "," << d << "," << n << ") u=" << to_string(u));
      CHECK_FALSE((ever_in && ever_out));
    }
  }
}

TEST_CASE("verdicts follow coordinate permutations of element and test element") {
  RingSpec spec = validate_ring(2, 5, 5);
  std::vector<std::size_t> perm = {2, 0, 4, 1, 3};
  auto permute = [&](const ExponentVector& v) {
    std::vector<Int> e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e[perm[i]] = v[i];
    return ExponentVector(std::move(e));
  };
  for (const ExponentVector& u :
       {ev({1, 4, 4, 4, 4}), ev({2, 3, 4, 4, 4}), ev({3, 3, 3, 3, 3}), ev({2, 4, 4, 4, 4})}) {
    ClosureConfig cfg = ClosureConfig::defaults(spec);
    Verdict base = classify_element(spec, u, cfg);
    ClosureConfig permuted_cfg = cfg;
    permuted_cfg.test_element = permute(cfg.test_element);
    Verdict moved = classify_element(spec, permute(u), permuted_cfg);
    INFO("u=" << to_string(u));
    CHECK(base.kind == moved.kind);
    CHECK(base.q == moved.q);
  }
}

TEST_CASE("out verdicts are stable and in verdicts ignore larger qmax") {
  RingSpec spec = validate_ring(2, 5, 5);
  ClosureConfig small = ClosureConfig::defaults(spec);
  small.qmax_exponent = 5;
  ClosureConfig large = ClosureConfig::defaults(spec);
  large.qmax_exponent = 12;
  for (const ExponentVector& u :
       {ev({1, 4, 4, 4, 4}), ev({2, 3, 4, 4, 4}), ev({3, 3, 3, 3, 3})}) {
    Verdict a = classify_element(spec, u, small);
    Verdict b = classify_element(spec, u, large);
    CHECK(a.kind == b.kind);
    CHECK(a.q == b.q);
  }
}

TEST_CASE("starved search reports undecided with the largest power tried") {
  RingSpec spec = validate_ring(2, 5, 5);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  cfg.qmax_exponent = 1;
  Verdict v = classify_element(spec, ev({1, 4, 4, 4, 4}), cfg);
  CHECK(v.is_undecided());
  CHECK(v.q == 2);
}

TEST_CASE("test elements outside the safe family are rejected") {
  RingSpec spec = validate_ring(2, 5, 5);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  cfg.test_element = ev({1, 1, 0, 0, 0});
  CHECK_THROWS_AS(classify_element(spec, ev({3, 3, 3, 3, 3}), cfg),
                  InvalidTestElementError);
  cfg.test_element = ev({2, 0, 0, 0, 0});
  CHECK_THROWS_AS(classify_element(spec, ev({3, 3, 3, 3, 3}), cfg),
                  InvalidTestElementError);
  // x_i^d is allowed.
  cfg.test_element = ev({0, 5, 0, 0, 0});
  CHECK_NOTHROW(classify_element(spec, ev({3, 3, 3, 3, 3}), cfg));
  // Bad qmax exponents are rejected.
  cfg = ClosureConfig::defaults(spec);
  cfg.qmax_exponent = 0;
  CHECK_THROWS_AS(classify_element(spec, ev({3, 3, 3, 3, 3}), cfg), Error);
  cfg.qmax_exponent = 41;
  CHECK_THROWS_AS(classify_element(spec, ev({3, 3, 3, 3, 3}), cfg), Error);
}

TEST_CASE("groebner and both engines reproduce the fast verdicts at small scale") {
  for (auto [p, d, n] : {std::array<std::int64_t, 3>{2, 3, 3},
                         std::array<std::int64_t, 3>{5, 2, 3}}) {
    RingSpec spec = validate_ring(p, d, n);
    MonomialIdeal D = reference::pure_powers(static_cast<int>(n), d);
    for (const ExponentVector& u : socle_generators(D, spec)) {
      ClosureConfig fast_cfg = ClosureConfig::defaults(spec);
      fast_cfg.qmax_exponent = 4;
      ClosureConfig gb_cfg = fast_cfg;
      gb_cfg.engine = OracleEngine::Groebner;
      ClosureConfig both_cfg = fast_cfg;
      both_cfg.engine = OracleEngine::Both;

      Verdict f = classify_element(spec, u, fast_cfg);
      Verdict g = classify_element(spec, u, gb_cfg);
      Verdict b = classify_element(spec, u, both_cfg);
      INFO("(p,d,n)=(" << p << "," << d << "," << n << ") u=" << to_string(u));
      CHECK(f.kind == g.kind);
      CHECK(f.q == g.q);
      CHECK(f.kind == b.kind);
      CHECK(f.q == b.q);
    }
  }
}
