#pragma once

#include "dti/closure.hpp"
#include "dti/core.hpp"
#include "dti/monomial_ideal.hpp"
#include "dti/test_ideal.hpp"
#include "dti/text.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dti {

using Json = nlohmann::ordered_json;

/// Exact integers serialize as JSON numbers while they fit in 64 bits
/// and as decimal strings beyond that.
inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

inline Json to_json(const ExponentVector& e) {
  Json a = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) a.push_back(int_to_json(e[i]));
  return a;
}

inline ExponentVector exponent_vector_from_json(const Json& j) {
  std::vector<Int> e;
  e.reserve(j.size());
  for (const Json& x : j) e.push_back(int_from_json(x));
  return ExponentVector(std::move(e));
}

inline Json to_json(const MonomialIdeal& I) {
  Json j;
  j["nvars"] = I.nvars();
  Json gens = Json::array();
  for (const ExponentVector& g : I.gens()) gens.push_back(to_json(g));
  j["gens"] = gens;
  return j;
}

inline MonomialIdeal monomial_ideal_from_json(const Json& j) {
  std::vector<ExponentVector> gens;
  for (const Json& g : j.at("gens")) gens.push_back(exponent_vector_from_json(g));
  return MonomialIdeal::make(j.at("nvars").get<int>(), std::move(gens));
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["u"] = to_json(v.u);
  switch (v.kind) {
    case VerdictKind::In:
      j["verdict"] = "in";
      j["certificate"] =
          v.certificate == InCertificate::Frobenius ? "frobenius" : "hara";
      if (v.certificate == InCertificate::Frobenius) j["q"] = int_to_json(v.q);
      break;
    case VerdictKind::Out:
      j["verdict"] = "out";
      j["q"] = int_to_json(v.q);
      break;
    case VerdictKind::Undecided:
      j["verdict"] = "undecided";
      j["q"] = int_to_json(v.q);
      break;
  }
  return j;
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.u = exponent_vector_from_json(j.at("u"));
  std::string kind = j.at("verdict").get<std::string>();
  if (kind == "in") {
    v.kind = VerdictKind::In;
    v.certificate = j.at("certificate").get<std::string>() == "hara"
                        ? InCertificate::HaraDegree
                        : InCertificate::Frobenius;
    v.q = j.contains("q") ? int_from_json(j.at("q")) : Int(0);
  } else if (kind == "out") {
    v.kind = VerdictKind::Out;
    v.q = int_from_json(j.at("q"));
  } else {
    v.kind = VerdictKind::Undecided;
    v.q = int_from_json(j.at("q"));
  }
  return v;
}

inline Json to_json(const TestIdealReport& report) {
  Json j;
  j["p"] = report.spec.p;
  j["d"] = report.spec.d;
  j["n"] = report.spec.n;
  j["qmax_exp"] = report.cfg.qmax_exponent;
  j["test_element"] = to_string(report.cfg.test_element);
  j["exact"] = report.exact;
  j["jstar"] = to_json(report.jstar_lower);
  j["tau"] = to_json(report.tau_lower);
  if (!report.exact) {
    j["jstar_upper"] = to_json(report.jstar_upper);
    j["tau_upper"] = to_json(report.tau_upper);
  }
  Json verdicts = Json::array();
  for (const Verdict& v : report.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  j["iterations"] = report.iterations;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

inline TestIdealReport test_ideal_report_from_json(const Json& j) {
  TestIdealReport report;
  report.spec = validate_ring(j.at("p").get<std::int64_t>(), j.at("d").get<std::int64_t>(),
                              j.at("n").get<std::int64_t>());
  report.cfg = ClosureConfig::defaults(report.spec);
  report.cfg.qmax_exponent = j.at("qmax_exp").get<int>();
  if (j.contains("test_element"))
    report.cfg.test_element =
        parse_monomial(j.at("test_element").get<std::string>(), static_cast<int>(report.spec.n));
  report.exact = j.at("exact").get<bool>();
  report.jstar_lower = monomial_ideal_from_json(j.at("jstar"));
  report.tau_lower = monomial_ideal_from_json(j.at("tau"));
  report.jstar_upper =
      j.contains("jstar_upper") ? monomial_ideal_from_json(j.at("jstar_upper")) : report.jstar_lower;
  report.tau_upper =
      j.contains("tau_upper") ? monomial_ideal_from_json(j.at("tau_upper")) : report.tau_lower;
  for (const Json& v : j.at("verdicts")) report.verdicts.push_back(verdict_from_json(v));
  report.iterations = j.at("iterations").get<int>();
  report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return report;
}

} // namespace dti
