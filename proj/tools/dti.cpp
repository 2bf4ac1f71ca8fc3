// Command-line front end: test-ideal computation, direct oracle queries,
// socle-element classification, integral closure, the built-in reference
// suite, and cached parameter sweeps.

#include "dti/dti.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kEngineVersion = "dti 0.1.0";

dti::OracleEngine parse_engine(const std::string& name) {
  if (name == "fast") return dti::OracleEngine::Fast;
  if (name == "groebner") return dti::OracleEngine::Groebner;
  if (name == "both") return dti::OracleEngine::Both;
  throw dti::Error("unknown engine '" + name + "' (expected fast|groebner|both)");
}

void validate_caps(std::int64_t n, int qmax_exp) {
  if (n > 12) throw dti::Error("n is capped at 12 (composition search state width)");
  if (qmax_exp > 40) throw dti::Error("qmax exponent is capped at 40");
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string cache_file_name(std::int64_t p, std::int64_t d, std::int64_t n, int qmax_exp) {
  std::ostringstream os;
  os << "tau_p" << p << "_d" << d << "_n" << n << "_e" << qmax_exp << ".json";
  return os.str();
}

dti::Json cache_key(const dti::RingSpec& spec, const dti::ClosureConfig& cfg) {
  dti::Json key;
  key["p"] = spec.p;
  key["d"] = spec.d;
  key["n"] = spec.n;
  key["qmax_exp"] = cfg.qmax_exponent;
  key["test_element"] = dti::to_string(cfg.test_element);
  return key;
}

/// Loads a cached report when the key matches; recomputes and writes the
/// entry otherwise. Writes go through a temporary file and an atomic
/// rename so concurrent sweep jobs never interleave.
dti::TestIdealReport cached_test_ideal(const dti::RingSpec& spec,
                                       const dti::ClosureConfig& cfg,
                                       const std::string& cache_dir) {
  if (cache_dir.empty()) return dti::compute_test_ideal(spec, cfg);

  namespace fs = std::filesystem;
  fs::path dir(cache_dir);
  fs::path file = dir / cache_file_name(spec.p, spec.d, spec.n, cfg.qmax_exponent);
  dti::Json key = cache_key(spec, cfg);

  if (fs::exists(file)) {
    std::ifstream in(file);
    dti::Json entry = dti::Json::parse(in);
    if (entry.contains("key") && entry["key"] == key)
      return dti::test_ideal_report_from_json(entry.at("report"));
  }

  dti::TestIdealReport report = dti::compute_test_ideal(spec, cfg);
  fs::create_directories(dir);
  dti::Json entry;
  entry["key"] = key;
  entry["engine_version"] = kEngineVersion;
  entry["timestamp"] = iso_timestamp();
  entry["report"] = dti::to_json(report);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << entry.dump(2) << "\n";
  }
  fs::rename(tmp, file);
  return report;
}

std::string describe_tau_shape(const dti::MonomialIdeal& I) {
  if (I.is_unit()) return "unit ideal";
  // Recognize powers of the maximal ideal for friendlier output.
  if (!I.gens().empty()) {
    dti::Int k = I.gens().front().total_degree();
    if (k <= 64 && I == dti::power_of_maximal(I.nvars(), k.convert_to<std::int64_t>()))
      return "(x1,...,x" + std::to_string(I.nvars()) + ")^" + k.str();
  }
  return std::to_string(I.gens().size()) + " generators";
}

void print_report_text(const dti::TestIdealReport& report) {
  std::cout << "ring: p=" << report.spec.p << " d=" << report.spec.d
            << " n=" << report.spec.n << "\n";
  std::cout << "qmax: " << report.spec.p << "^" << report.cfg.qmax_exponent << "\n";
  std::cout << "test element: " << dti::to_string(report.cfg.test_element) << "\n";
  std::cout << "iterations: " << report.iterations << "\n";
  std::cout << "exact: " << (report.exact ? "yes" : "no (bracket only)") << "\n";
  if (report.exact) {
    std::cout << "J*: " << dti::to_string(report.jstar_lower) << "\n";
    std::cout << "tau (" << describe_tau_shape(report.tau_lower)
              << "): " << dti::to_string(report.tau_lower) << "\n";
  } else {
    std::cout << "J* lower: " << dti::to_string(report.jstar_lower) << "\n";
    std::cout << "J* upper: " << dti::to_string(report.jstar_upper) << "\n";
    std::cout << "tau lower: " << dti::to_string(report.tau_lower) << "\n";
    std::cout << "tau upper: " << dti::to_string(report.tau_upper) << "\n";
  }
  for (const dti::ExpectationCheck& c : dti::expectation_checks(report)) {
    const char* status = c.status == dti::ExpectationStatus::Match ? "match"
                         : c.status == dti::ExpectationStatus::Mismatch ? "mismatch"
                                                                        : "n/a";
    std::cout << "check [" << status << "] " << c.name;
    if (!c.note.empty()) std::cout << " -- " << c.note;
    std::cout << "\n";
  }
}

int cmd_tau(std::int64_t p, std::int64_t d, std::int64_t n, int qmax_exp,
            const std::string& test_element, const std::string& engine, bool json,
            const std::string& cache_dir) {
  validate_caps(n, qmax_exp);
  dti::RingSpec spec = dti::validate_ring(p, d, n);
  dti::ClosureConfig cfg = dti::ClosureConfig::defaults(spec);
  cfg.qmax_exponent = qmax_exp;
  cfg.engine = parse_engine(engine);
  if (!test_element.empty())
    cfg.test_element = dti::parse_monomial(test_element, static_cast<int>(n));
  dti::validate_config(spec, cfg);

  dti::TestIdealReport report = cached_test_ideal(spec, cfg, cache_dir);
  if (json)
    std::cout << dti::to_json(report).dump(2) << "\n";
  else
    print_report_text(report);
  return report.exact ? 0 : 2;
}

int cmd_member(std::int64_t p, std::int64_t d, std::int64_t n, const std::string& monomial,
               const std::string& q_text, const std::string& engine) {
  validate_caps(n, 1);
  dti::RingSpec spec = dti::validate_ring(p, d, n);
  dti::ExponentVector B = dti::parse_monomial(monomial, static_cast<int>(n));
  dti::PrimePower Q = dti::PrimePower::from_value(p, dti::Int(q_text));
  dti::MembershipOracle oracle(spec, parse_engine(engine));
  bool member = oracle.query(B, Q);
  std::cout << (member ? "member" : "non-member") << "\n";
  return 0;
}

int cmd_closure(std::int64_t p, std::int64_t d, std::int64_t n, const std::string& monomial,
                int qmax_exp, const std::string& test_element, const std::string& engine) {
  validate_caps(n, qmax_exp);
  dti::RingSpec spec = dti::validate_ring(p, d, n);
  dti::ClosureConfig cfg = dti::ClosureConfig::defaults(spec);
  cfg.qmax_exponent = qmax_exp;
  cfg.engine = parse_engine(engine);
  if (!test_element.empty())
    cfg.test_element = dti::parse_monomial(test_element, static_cast<int>(n));
  dti::ExponentVector u = dti::parse_monomial(monomial, static_cast<int>(n));

  dti::Verdict v = dti::classify_element(spec, u, cfg);
  std::cout << "element: " << dti::to_string(u) << "\n";
  switch (v.kind) {
    case dti::VerdictKind::In:
      if (v.certificate == dti::InCertificate::HaraDegree)
        std::cout << "verdict: in (degree certificate, deg >= " << spec.hara_threshold()
                  << ")\n";
      else
        std::cout << "verdict: in (frobenius certificate at q=" << v.q << ")\n";
      break;
    case dti::VerdictKind::Out:
      std::cout << "verdict: out (test element " << dti::to_string(cfg.test_element)
                << " excludes at q=" << v.q << ")\n";
      break;
    case dti::VerdictKind::Undecided:
      std::cout << "verdict: undecided (tried up to q=" << v.q << ")\n";
      break;
  }
  return 0;
}

int cmd_icl(std::int64_t p, std::int64_t d, std::int64_t n, const std::string& ideal_text,
            int nvars, int qmax_exp) {
  dti::MonomialIdeal ideal;
  std::string label;
  if (!ideal_text.empty()) {
    std::vector<dti::ExponentVector> gens = dti::parse_monomial_list(ideal_text, nvars);
    int arity = nvars > 0 ? nvars : (gens.empty() ? 0 : static_cast<int>(gens[0].size()));
    ideal = dti::MonomialIdeal::make(arity, std::move(gens));
    label = "ideal";
  } else {
    validate_caps(n, qmax_exp);
    dti::RingSpec spec = dti::validate_ring(p, d, n);
    dti::ClosureConfig cfg = dti::ClosureConfig::defaults(spec);
    cfg.qmax_exponent = qmax_exp;
    dti::TestIdealReport report = dti::compute_test_ideal(spec, cfg);
    if (!report.exact) {
      std::cerr << "test ideal is not exact at qmax 2^" << qmax_exp
                << "; integral closure not computed\n";
      return 2;
    }
    ideal = report.tau_lower;
    label = "tau";
  }

  dti::MonomialIdeal closure = dti::integral_closure(ideal);
  bool closed = closure == ideal;
  std::cout << label << ": " << dti::to_string(ideal) << "\n";
  std::cout << "integrally closed: " << (closed ? "yes" : "no") << "\n";
  if (!closed) {
    std::cout << "closure (" << describe_tau_shape(closure)
              << "): " << dti::to_string(closure) << "\n";
    for (const dti::ExponentVector& g : closure.gens()) {
      if (!dti::contains_monomial(ideal, g)) {
        std::cout << "witness: " << dti::to_string(g)
                  << " (in the closure, not in the ideal)\n";
        break;
      }
    }
  }
  return 0;
}

int cmd_reproduce(const std::string& only, bool json) {
  std::vector<dti::reference::CaseResult> results;
  for (const std::string& id : dti::reference::case_ids()) {
    if (!only.empty() && id != only) continue;
    results.push_back(dti::reference::run_reference_case(id));
  }
  if (results.empty()) {
    std::cerr << "no reference case matches '" << only << "'\n";
    return 1;
  }

  bool all_pass = true;
  if (json) {
    dti::Json out = dti::Json::array();
    for (const auto& r : results) {
      dti::Json j;
      j["id"] = r.id;
      j["title"] = r.title;
      j["pass"] = r.pass;
      j["elapsed_ms"] = r.elapsed_ms;
      dti::Json checks = dti::Json::array();
      for (const auto& c : r.checks) {
        dti::Json cj;
        cj["label"] = c.label;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
      }
      j["checks"] = checks;
      dti::Json notes = dti::Json::array();
      for (const auto& note : r.notes) notes.push_back(note);
      j["notes"] = notes;
      out.push_back(j);
      all_pass = all_pass && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << "  ("
                << r.elapsed_ms << " ms)\n";
      for (const auto& c : r.checks)
        if (!c.pass)
          std::cout << "   failed: " << c.label
                    << (c.detail.empty() ? "" : "  got: " + c.detail) << "\n";
      for (const auto& note : r.notes) std::cout << "   note: " << note << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_sweep(std::int64_t p, std::int64_t d, const std::string& n_range, int qmax_exp,
              const std::string& cache_dir, bool json) {
  auto sep = n_range.find("..");
  if (sep == std::string::npos)
    throw dti::Error("--n-range expects the form a..b");
  std::int64_t n_lo = std::stoll(n_range.substr(0, sep));
  std::int64_t n_hi = std::stoll(n_range.substr(sep + 2));
  if (n_lo < 3 || n_hi < n_lo) throw dti::Error("invalid n range");
  validate_caps(n_hi, qmax_exp);

  std::vector<std::future<dti::TestIdealReport>> jobs;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    jobs.push_back(std::async(std::launch::async, [=]() {
      dti::RingSpec spec = dti::validate_ring(p, d, n);
      dti::ClosureConfig cfg = dti::ClosureConfig::defaults(spec);
      cfg.qmax_exponent = qmax_exp;
      return cached_test_ideal(spec, cfg, cache_dir);
    }));
  }
  std::vector<dti::TestIdealReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());

  if (json) {
    dti::Json out = dti::Json::array();
    for (const auto& r : reports) out.push_back(dti::to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "d | p | n | exact | tau\n";
    for (const auto& r : reports) {
      std::cout << r.spec.d << " | " << r.spec.p << " | " << r.spec.n << " | "
                << (r.exact ? "yes" : "no") << " | " << describe_tau_shape(r.tau_lower)
                << "\n";
    }
  }
  for (const auto& r : reports)
    if (!r.exact) return 2;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tight closure and test ideals of diagonal hypersurfaces over F_p"};
  app.require_subcommand(1);

  std::int64_t p = 0, d = 0, n = 0;
  int qmax_exp = 12;
  int nvars = 0;
  std::string test_element, monomial, q_text, ideal_text, only, n_range;
  std::string engine = "fast";
  bool json = false;
  const char* env_cache = std::getenv("DTI_CACHE_DIR");
  std::string cache_dir = env_cache ? env_cache : "";

  auto* tau = app.add_subcommand("tau", "compute the test ideal and J*");
  tau->add_option("--p", p, "characteristic")->required();
  tau->add_option("--d", d, "degree of the diagonal form")->required();
  tau->add_option("--n", n, "number of variables")->required();
  tau->add_option("--qmax-exp", qmax_exp, "largest exponent e probed (q = p^e)");
  tau->add_option("--test-element", test_element, "test element monomial (default x1^(d-1))");
  tau->add_option("--engine", engine, "membership engine: fast|groebner|both");
  tau->add_flag("--json", json, "emit the report as JSON");
  tau->add_option("--cache-dir", cache_dir, "cache directory (default $DTI_CACHE_DIR)");

  auto* member = app.add_subcommand("member", "bracket-ideal membership of one monomial");
  member->add_option("--p", p)->required();
  member->add_option("--d", d)->required();
  member->add_option("--n", n)->required();
  member->add_option("--monomial", monomial, "monomial, e.g. x1^3*x2")->required();
  member->add_option("--q", q_text, "Frobenius power q = p^e")->required();
  member->add_option("--engine", engine, "membership engine: fast|groebner|both");

  auto* closure = app.add_subcommand("closure", "classify one socle element");
  closure->add_option("--p", p)->required();
  closure->add_option("--d", d)->required();
  closure->add_option("--n", n)->required();
  closure->add_option("--monomial", monomial)->required();
  closure->add_option("--qmax-exp", qmax_exp);
  closure->add_option("--test-element", test_element);
  closure->add_option("--engine", engine);

  auto* icl = app.add_subcommand("icl", "integral closure of tau or a given monomial ideal");
  icl->add_option("--p", p);
  icl->add_option("--d", d);
  icl->add_option("--n", n);
  icl->add_option("--qmax-exp", qmax_exp);
  icl->add_option("--ideal", ideal_text, "comma-separated monomials");
  icl->add_option("--nvars", nvars, "arity for --ideal (default: inferred)");

  auto* reproduce = app.add_subcommand("reproduce", "run the built-in reference suite");
  reproduce->add_option("--only", only, "run a single case id");
  reproduce->add_flag("--json", json);

  auto* sweep = app.add_subcommand("sweep", "compute tau over a range of n with caching");
  sweep->add_option("--p", p)->required();
  sweep->add_option("--d", d)->required();
  sweep->add_option("--n-range", n_range, "range a..b")->required();
  sweep->add_option("--qmax-exp", qmax_exp);
  sweep->add_option("--cache-dir", cache_dir);
  sweep->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tau->parsed())
      return cmd_tau(p, d, n, qmax_exp, test_element, engine, json, cache_dir);
    if (member->parsed()) return cmd_member(p, d, n, monomial, q_text, engine);
    if (closure->parsed())
      return cmd_closure(p, d, n, monomial, qmax_exp, test_element, engine);
    if (icl->parsed()) {
      if (ideal_text.empty() && (p == 0 || d == 0 || n == 0))
        throw dti::Error("icl needs either --ideal or all of --p --d --n");
      return cmd_icl(p, d, n, ideal_text, nvars, qmax_exp);
    }
    if (reproduce->parsed()) return cmd_reproduce(only, json);
    if (sweep->parsed()) return cmd_sweep(p, d, n_range, qmax_exp, cache_dir, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
