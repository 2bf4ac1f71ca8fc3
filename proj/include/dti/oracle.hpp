#pragma once

#include "dti/core.hpp"
#include "dti/digits.hpp"
#include "dti/errors.hpp"
#include "dti/groebner.hpp"
#include "dti/monomial_ideal.hpp"
#include "dti/poly.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace dti {

/// One membership question: is x^B in (x1^{dQ}, ..., x_{n-1}^{dQ}, f) as
/// an ideal of S = F_p[x1..xn], where f = x1^d + ... + xn^d and Q = p^e?
struct MembershipQuery {
  RingSpec spec;
  ExponentVector B;
  PrimePower Q;
};

/// Exact decision procedure for MembershipQuery, by reduction to a
/// bounded carry-free composition search.
///
/// Why the reduction is valid. Write M = (x1^{dQ}, ..., x_{n-1}^{dQ}, f).
/// Since f^Q = x1^{dQ} + ... + xn^{dQ} in characteristic p, the missing
/// power xn^{dQ} is already in M, so M is generated by all n bracketed
/// powers together with f, and every generator is homogeneous of class 0
/// in the Z_d^n grading that reads exponents mod d in each variable.
/// Splitting B = r + d*a, the class-r slice of S is x^r * k[t1..tn] with
/// t_i = x_i^d, and the class-r slice of M is x^r * ((t1^Q,...,tn^Q) +
/// sigma * k[t]) with sigma = t1 + ... + tn. So x^B is in M exactly when
/// t^a is in (t1^Q,...,tn^Q, sigma) in k[t]; the residue r is irrelevant.
/// Eliminating t_j through sigma maps t^a to (+/-) t'^{a'} * (sum of the
/// other t_i)^{a_j}, and maps the ideal onto the monomial ideal N =
/// (t_i^Q : i != j), because (sum t_i)^Q = sum t_i^Q again. The expansion
/// of the power is multinomial: the surviving terms are indexed by the
/// carry-free compositions kappa of a_j, each appearing exactly once. A
/// polynomial lies in a monomial ideal only termwise, so x^B is NOT in M
/// exactly when some carry-free kappa keeps every coordinate below the
/// bracket: kappa_i <= Q - 1 - a_i for all i != j.
///
/// The verdict does not depend on the eliminated coordinate; `eliminate`
/// forces the choice for the invariance tests.
inline bool monomial_in_frobenius_bracket(const MembershipQuery& query,
                                          std::optional<int> eliminate = std::nullopt) {
  const RingSpec& spec = query.spec;
  if (query.B.size() != static_cast<std::size_t>(spec.n))
    throw Error("query monomial arity does not match ring");
  if (query.Q.base != spec.p) throw Error("query power base does not match ring");
  if (spec.n > 12) throw Error("membership oracle supports n <= 12");

  ResidueSplit split = split_residue(query.B, spec.d);
  const ExponentVector& a = split.a;
  const std::size_t n = a.size();

  std::size_t j;
  if (eliminate) {
    j = static_cast<std::size_t>(*eliminate);
    if (j >= n) throw Error("eliminated coordinate out of range");
  } else {
    j = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (a[i] < a[j]) j = i;
  }

  std::vector<Int> bounds;
  bounds.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) bounds.push_back(query.Q.value - 1 - a[i]);

  return !exists_bounded_carryfree_composition(a[j], bounds, spec.p).has_value();
}

enum class OracleEngine { Fast, Groebner, Both };

/// Engine-dispatching oracle. The Groebner route phrases the same
/// membership as a normal-form computation against a basis of
/// (x1^{dQ}, ..., x_{n-1}^{dQ}, f), cached per Q. `Both` runs the two and
/// insists they agree.
class MembershipOracle {
public:
  explicit MembershipOracle(const RingSpec& spec, OracleEngine engine = OracleEngine::Fast,
                            std::uint64_t gb_pair_budget = kDefaultPairBudget)
      : spec_(spec), engine_(engine), gb_budget_(gb_pair_budget) {}

  const RingSpec& spec() const { return spec_; }
  OracleEngine engine() const { return engine_; }
  std::uint64_t queries() const { return queries_; }

  bool query(const ExponentVector& B, const PrimePower& Q) {
    ++queries_;
    switch (engine_) {
      case OracleEngine::Fast:
        return monomial_in_frobenius_bracket(MembershipQuery{spec_, B, Q});
      case OracleEngine::Groebner:
        return groebner_query(B, Q);
      case OracleEngine::Both: {
        bool fast = monomial_in_frobenius_bracket(MembershipQuery{spec_, B, Q});
        bool slow = groebner_query(B, Q);
        if (fast != slow)
          throw InternalInconsistencyError(
              "membership oracles disagree at Q = " + Q.value.str());
        return fast;
      }
    }
    throw Error("unreachable oracle engine");
  }

private:
  bool groebner_query(const ExponentVector& B, const PrimePower& Q) {
    auto it = gb_cache_.find(Q.value);
    if (it == gb_cache_.end()) {
      std::vector<Polynomial> gens;
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(spec_.n); ++i)
        gens.push_back(Polynomial::monomial(
            spec_.p, static_cast<int>(spec_.n),
            ExponentVector::axis(static_cast<std::size_t>(spec_.n), i, Int(spec_.d) * Q.value)));
      gens.push_back(defining_polynomial(spec_));
      it = gb_cache_.emplace(Q.value, buchberger(gens, order_, gb_budget_)).first;
    }
    Polynomial g = Polynomial::monomial(spec_.p, static_cast<int>(spec_.n), B);
    return normal_form_budgeted(g, it->second.basis, order_, gb_budget_).is_zero();
  }

  RingSpec spec_;
  OracleEngine engine_;
  std::uint64_t gb_budget_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::map<Int, GroebnerBasis> gb_cache_;
  std::uint64_t queries_ = 0;
};

struct EquivalenceReport {
  RingSpec spec;
  std::int64_t box_limit = 0;
  PrimePower Q;
  std::uint64_t points_checked = 0;
  std::vector<ExponentVector> disagreements; // sorted; must be empty
  double fast_seconds = 0;
  double gb_seconds = 0;
};

/// Runs the fast oracle and the Groebner oracle over every B in
/// [0, box_limit]^n (deterministically strided down to `cap` points when
/// the box is larger) and reports the disagreements, which must be none.
inline EquivalenceReport equivalence_harness(const RingSpec& spec, std::int64_t box_limit,
                                             const PrimePower& Q, std::uint64_t cap = 100000,
                                             std::uint64_t gb_pair_budget = kDefaultPairBudget) {
  using clock = std::chrono::steady_clock;
  EquivalenceReport report;
  report.spec = spec;
  report.box_limit = box_limit;
  report.Q = Q;

  const std::size_t n = static_cast<std::size_t>(spec.n);
  Int total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= box_limit + 1;
  Int stride = 1;
  if (cap > 0 && total > cap) stride = (total + cap - 1) / cap;

  MembershipOracle fast(spec, OracleEngine::Fast);
  MembershipOracle slow(spec, OracleEngine::Groebner, gb_pair_budget);

  // Lexicographic enumeration of the box by odometer, strided by rank.
  std::vector<std::int64_t> u(n, 0);
  for (Int rank = 0; rank < total; rank += stride) {
    Int rest = rank;
    for (std::size_t i = n; i-- > 0;) {
      u[i] = static_cast<std::int64_t>(rest % (box_limit + 1));
      rest /= box_limit + 1;
    }
    std::vector<Int> e(u.begin(), u.end());
    ExponentVector B(std::move(e));

    auto t0 = clock::now();
    bool fast_verdict = fast.query(B, Q);
    auto t1 = clock::now();
    bool slow_verdict = slow.query(B, Q);
    auto t2 = clock::now();
    report.fast_seconds += std::chrono::duration<double>(t1 - t0).count();
    report.gb_seconds += std::chrono::duration<double>(t2 - t1).count();
    ++report.points_checked;
    if (fast_verdict != slow_verdict) report.disagreements.push_back(B);
  }
  return report;
}

} // namespace dti
