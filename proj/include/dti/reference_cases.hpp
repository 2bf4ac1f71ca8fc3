#pragma once

#include "dti/closure.hpp"
#include "dti/core.hpp"
#include "dti/monomial_ideal.hpp"
#include "dti/newton.hpp"
#include "dti/oracle.hpp"
#include "dti/test_ideal.hpp"
#include "dti/text.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dti::reference {

/// All distinct permutations of the given exponent pattern.
inline std::vector<ExponentVector> permutations_of(std::vector<std::int64_t> pattern) {
  std::sort(pattern.begin(), pattern.end());
  std::vector<ExponentVector> result;
  do {
    std::vector<Int> e(pattern.begin(), pattern.end());
    result.push_back(ExponentVector(std::move(e)));
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return result;
}

inline ExponentVector exponents(std::vector<std::int64_t> v) {
  std::vector<Int> e(v.begin(), v.end());
  return ExponentVector(std::move(e));
}

/// { x_i^2 x_j : 1 <= i, j <= n }, the shape of the test ideal for the
/// (p, d, n) = (2, 5, 5) and (3, 7, 4) style results when the exponent
/// pair is (2, 1) or (2, 2).
inline MonomialIdeal pair_power_ideal(int n, std::int64_t a, std::int64_t b) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Int> e(static_cast<std::size_t>(n), Int(0));
      e[static_cast<std::size_t>(i)] += a;
      e[static_cast<std::size_t>(j)] += b;
      gens.push_back(ExponentVector(std::move(e)));
    }
  }
  return MonomialIdeal::make(n, std::move(gens));
}

inline MonomialIdeal pure_powers(int n, std::int64_t d) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(ExponentVector::axis(static_cast<std::size_t>(n),
                                        static_cast<std::size_t>(i), Int(d)));
  return MonomialIdeal::make(n, std::move(gens));
}

inline MonomialIdeal expected_jstar_d5_p2_n5() {
  std::vector<ExponentVector> gens = pure_powers(5, 5).gens();
  gens.push_back(exponents({3, 3, 3, 3, 3}));
  for (const ExponentVector& g : permutations_of({2, 4, 4, 4, 4})) gens.push_back(g);
  return MonomialIdeal::make(5, std::move(gens));
}

inline MonomialIdeal expected_tau_d5_p2_n5() { return pair_power_ideal(5, 2, 1); }

inline MonomialIdeal expected_jstar_d7_p3_n4() {
  std::vector<ExponentVector> gens = pure_powers(4, 7).gens();
  for (const ExponentVector& g : permutations_of({3, 5, 5, 5})) gens.push_back(g);
  return MonomialIdeal::make(4, std::move(gens));
}

inline MonomialIdeal expected_tau_d7_p3_n4() { return pair_power_ideal(4, 2, 2); }

inline MonomialIdeal expected_jstar_d4_p7_n5() {
  std::vector<ExponentVector> gens = pure_powers(5, 4).gens();
  gens.push_back(exponents({3, 3, 3, 3, 3}));
  return MonomialIdeal::make(5, std::move(gens));
}

struct CheckResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string title;
  bool pass = true;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  void add(const std::string& label, bool ok, const std::string& detail = "") {
    checks.push_back(CheckResult{label, ok, detail});
    pass = pass && ok;
  }
};

inline const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {"4.1", "4.2", "4.3", "5.1", "5.2",
                                               "p=d-1", "f-regular", "r4.5"};
  return ids;
}

namespace detail {

inline std::map<ExponentVector, Verdict> verdict_map(const TestIdealReport& report) {
  std::map<ExponentVector, Verdict> m;
  for (const Verdict& v : report.verdicts) m.emplace(v.u, v);
  return m;
}

inline bool is_m_primary(const MonomialIdeal& I) {
  if (I.is_unit()) return false;
  for (int i = 0; i < I.nvars(); ++i) {
    bool has_pure_power = false;
    for (const ExponentVector& g : I.gens()) {
      bool pure = g[static_cast<std::size_t>(i)] > 0;
      for (std::size_t k = 0; pure && k < g.size(); ++k)
        if (k != static_cast<std::size_t>(i) && g[k] != 0) pure = false;
      if (pure) {
        has_pure_power = true;
        break;
      }
    }
    if (!has_pure_power) return false;
  }
  return true;
}

inline TestIdealReport run_case(std::int64_t p, std::int64_t d, std::int64_t n,
                                int qmax_exponent) {
  RingSpec spec = validate_ring(p, d, n);
  ClosureConfig cfg = ClosureConfig::defaults(spec);
  cfg.qmax_exponent = qmax_exponent;
  return compute_test_ideal(spec, cfg);
}

} // namespace detail

/// Runs one reference case and reports per-check pass/fail. Unknown ids
/// throw.
inline CaseResult run_reference_case(const std::string& id, int qmax_exponent = 12) {
  CaseResult r;
  r.id = id;
  auto t0 = std::chrono::steady_clock::now();

  if (id == "4.1") {
    r.title = "(p,d,n) = (2,5,5): full test ideal";
    TestIdealReport report = detail::run_case(2, 5, 5, qmax_exponent);
    r.add("exact", report.exact);
    r.add("jstar generators", report.jstar_lower == expected_jstar_d5_p2_n5(),
          to_string(report.jstar_lower));
    r.add("tau generators", report.tau_lower == expected_tau_d5_p2_n5(),
          to_string(report.tau_lower));
    r.add("final socle count = 25",
          !report.trace.empty() && report.trace.back().verdicts.size() == 25);
    auto verdicts = detail::verdict_map(report);
    bool all_out = true;
    std::vector<ExponentVector> final_socle = permutations_of({1, 4, 4, 4, 4});
    for (const ExponentVector& u : permutations_of({2, 3, 4, 4, 4})) final_socle.push_back(u);
    for (const ExponentVector& u : final_socle) {
      auto it = verdicts.find(u);
      all_out = all_out && it != verdicts.end() && it->second.is_out();
    }
    r.add("every final socle monomial is excluded", all_out);
    // Witnesses for the elements whose small exponents align with the
    // test element variable x1; other orbit members exclude earlier.
    auto u1 = verdicts.find(exponents({1, 4, 4, 4, 4}));
    r.add("exclusion witness q=32 for x1*x2^4*x3^4*x4^4*x5^4",
          u1 != verdicts.end() && u1->second.is_out() && u1->second.q == 32);
    auto u6 = verdicts.find(exponents({2, 3, 4, 4, 4}));
    r.add("exclusion witness q=16 for x1^2*x2^3*x3^4*x4^4*x5^4",
          u6 != verdicts.end() && u6->second.is_out() && u6->second.q == 16);
    auto top = verdicts.find(exponents({4, 4, 4, 4, 4}));
    r.add("degree certificate for (4,4,4,4,4)",
          top != verdicts.end() && top->second.is_in() &&
              top->second.certificate == InCertificate::HaraDegree);
    auto diag = verdicts.find(exponents({3, 3, 3, 3, 3}));
    r.add("membership certificate for (3,3,3,3,3) at q=2",
          diag != verdicts.end() && diag->second.is_in() &&
              diag->second.certificate == InCertificate::Frobenius && diag->second.q == 2);
  } else if (id == "4.2") {
    r.title = "(p,d,n) = (3,7,4): full test ideal";
    TestIdealReport report = detail::run_case(3, 7, 4, qmax_exponent);
    r.add("exact", report.exact);
    r.add("jstar generators", report.jstar_lower == expected_jstar_d7_p3_n4(),
          to_string(report.jstar_lower));
    r.add("tau generators", report.tau_lower == expected_tau_d7_p3_n4(),
          to_string(report.tau_lower));
    r.add("final socle count = 10",
          !report.trace.empty() && report.trace.back().verdicts.size() == 10);
    auto verdicts = detail::verdict_map(report);
    bool all_out = true;
    std::vector<ExponentVector> outs = permutations_of({2, 6, 6, 6});
    for (const ExponentVector& u : permutations_of({4, 4, 6, 6})) outs.push_back(u);
    for (const ExponentVector& u : outs) {
      auto it = verdicts.find(u);
      all_out = all_out && it != verdicts.end() && it->second.is_out();
    }
    r.add("every final socle monomial is excluded", all_out);
    // For the two socle monomials whose small exponents sit on the test
    // element variable, q = 9 excludes nothing: c*u^9 is still a member,
    // and the first usable witnesses appear at q = 27.
    RingSpec spec = validate_ring(3, 7, 4);
    ExponentVector c = ClosureConfig::defaults(spec).test_element;
    PrimePower q9 = PrimePower::from_exponent(3, 2);
    for (const ExponentVector& u :
         {exponents({2, 6, 6, 6}), exponents({4, 4, 6, 6})}) {
      bool member9 = monomial_in_frobenius_bracket(
          MembershipQuery{spec, c.plus(u.scaled(q9.value)), q9});
      auto it = verdicts.find(u);
      bool out27 = it != verdicts.end() && it->second.is_out() && it->second.q == 27;
      r.add("c*u^9 is a member for u = " + to_string(u), member9);
      r.add("exclusion witness q=27 for u = " + to_string(u), out27);
    }
    r.notes.push_back(
        "for u = x1^2*x2^6*x3^6*x4^6 and u = x1^4*x2^4*x3^6*x4^6 the product c*u^9 "
        "lies in the bracket ideal, so no q=9 witness exists; the first exclusions "
        "for these two monomials appear at q=27");
  } else if (id == "4.3") {
    r.title = "(p,d,n) = (7,4,5): full test ideal";
    TestIdealReport report = detail::run_case(7, 4, 5, qmax_exponent);
    r.add("exact", report.exact);
    r.add("jstar generators", report.jstar_lower == expected_jstar_d4_p7_n5(),
          to_string(report.jstar_lower));
    r.add("tau = maximal ideal", report.tau_lower == power_of_maximal(5, 1),
          to_string(report.tau_lower));
    r.add("final socle count = 5",
          !report.trace.empty() && report.trace.back().verdicts.size() == 5);
    auto verdicts = detail::verdict_map(report);
    auto diag = verdicts.find(exponents({3, 3, 3, 3, 3}));
    r.add("membership certificate for (3,3,3,3,3) at q=7",
          diag != verdicts.end() && diag->second.is_in() &&
              diag->second.certificate == InCertificate::Frobenius && diag->second.q == 7);
    bool out7 = true;
    for (const ExponentVector& u : permutations_of({2, 3, 3, 3, 3})) {
      auto it = verdicts.find(u);
      out7 = out7 && it != verdicts.end() && it->second.is_out() && it->second.q == 7;
    }
    r.add("exclusion witnesses q=7 on the (2,3,3,3,3) orbit", out7);
  } else if (id == "5.1") {
    r.title = "integral closure of tau for (2,5,5)";
    TestIdealReport report = detail::run_case(2, 5, 5, qmax_exponent);
    IntegralClosureResult icl = integral_closure_check(report);
    r.add("tau is not integrally closed", !icl.is_closed);
    r.add("closure = (x1,...,x5)^3", icl.closure == power_of_maximal(5, 3),
          to_string(icl.closure));
    ExponentVector w = exponents({1, 1, 1, 0, 0});
    r.add("x1*x2*x3 lies in the closure but not in tau",
          contains_monomial(icl.closure, w) && !contains_monomial(report.tau_lower, w));
    r.add("reported witness is valid",
          icl.witness && contains_monomial(icl.closure, *icl.witness) &&
              !contains_monomial(report.tau_lower, *icl.witness));
  } else if (id == "5.2") {
    r.title = "integral closure of tau for (3,7,4)";
    TestIdealReport report = detail::run_case(3, 7, 4, qmax_exponent);
    IntegralClosureResult icl = integral_closure_check(report);
    r.add("tau is not integrally closed", !icl.is_closed);
    r.add("closure = (x1,...,x4)^4", icl.closure == power_of_maximal(4, 4),
          to_string(icl.closure));
    ExponentVector w = exponents({1, 3, 0, 0});
    r.add("x1*x2^3 lies in the closure but not in tau",
          contains_monomial(icl.closure, w) && !contains_monomial(report.tau_lower, w));
    r.add("reported witness is valid",
          icl.witness && contains_monomial(icl.closure, *icl.witness) &&
              !contains_monomial(report.tau_lower, *icl.witness));
  } else if (id == "p=d-1") {
    r.title = "(p,d,n) = (2,3,3): tau = (x1,...,xn)^{p-1}";
    TestIdealReport report = detail::run_case(2, 3, 3, qmax_exponent);
    r.add("exact", report.exact);
    r.add("tau = maximal ideal", report.tau_lower == power_of_maximal(3, 1),
          to_string(report.tau_lower));
    bool matched = false;
    for (const ExpectationCheck& c : expectation_checks(report))
      if (c.name == "p = d-1 equality") matched = c.status == ExpectationStatus::Match;
    r.add("closed-form equality check matches", matched);
  } else if (id == "f-regular") {
    r.title = "(p,d,n) = (5,2,3): unit test ideal";
    TestIdealReport report = detail::run_case(5, 2, 3, qmax_exponent);
    r.add("exact", report.exact);
    r.add("tau = (1)", report.tau_lower.is_unit(), to_string(report.tau_lower));
    bool matched = false;
    for (const ExpectationCheck& c : expectation_checks(report))
      if (c.name == "bound p > n(d-1)-d") matched = c.status == ExpectationStatus::Match;
    r.add("F-regularity bound check matches", matched);
  } else if (id == "r4.5") {
    r.title = "desk-scale sweep rows complete and exact";
    const std::vector<std::array<std::int64_t, 3>> rows = {
        {5, 2, 3}, {5, 3, 3}, {7, 2, 3}, {7, 3, 4}, {5, 2, 4}, {5, 3, 4}};
    for (const auto& [d, p, n] : rows) {
      TestIdealReport report = detail::run_case(p, d, n, qmax_exponent);
      std::string label = "(p,d,n) = (" + std::to_string(p) + "," + std::to_string(d) +
                          "," + std::to_string(n) + ")";
      bool shape = report.tau_lower.is_unit() || detail::is_m_primary(report.tau_lower);
      bool contained = true;
      if (report.spec.p < report.spec.d)
        contained = contains_ideal(
            power_of_maximal(static_cast<int>(n), report.spec.p - 1), report.tau_lower);
      r.add(label + " exact", report.exact);
      r.add(label + " tau m-primary or unit", shape, to_string(report.tau_lower));
      r.add(label + " small-p containment", contained);
    }
  } else {
    throw Error("unknown reference case id '" + id + "'");
  }

  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

} // namespace dti::reference
