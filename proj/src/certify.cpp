#include "tenscert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "tenscert/bridge.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/ideals.hpp"
#include "tenscert/io.hpp"
#include "tenscert/kernels.hpp"

namespace tenscert::certify {

using json = nlohmann::json;

namespace {

const std::vector<std::string> kSuites = {"gen-set", "knutson", "squeeze", "tensoriality",
                                          "oracle-equiv", "all"};

std::vector<Signature> sweep(const SuiteConfig& cfg) {
  if (!cfg.signatures.empty()) return cfg.signatures;
  std::vector<Signature> out;
  for (int n = 1; n <= cfg.n_max; ++n)
    for (auto& s : Signature::sweep(n)) out.push_back(std::move(s));
  return out;
}

groebner::BuchbergerOptions options(const SuiteConfig& cfg) {
  groebner::BuchbergerOptions o;
  if (cfg.step_budget > 0) o.step_budget = cfg.step_budget;
  return o;
}

CaseRecord make_case(const std::string& suite, const std::string& id_tail, const Signature& eps,
                     std::string claim, std::string order) {
  CaseRecord c;
  c.suite = suite;
  c.signature = eps.to_string();
  c.n = eps.size();
  c.case_id = suite + "/" + id_tail;
  c.claim = std::move(claim);
  c.order = std::move(order);
  return c;
}

void absorb(CaseRecord& c, const Verdict& v) {
  c.checks.insert(c.checks.end(), v.checks.begin(), v.checks.end());
  c.notes.insert(c.notes.end(), v.notes.begin(), v.notes.end());
  c.status = v.ok() ? Status::Pass : Status::Fail;
  if (const Check* f = v.first_failure()) c.witnesses = f->witnesses;
}

using Job = std::function<CaseRecord()>;

/// Wraps a job so budget exhaustion becomes a Budget record and timing is
/// filled in.
Job timed(CaseRecord proto, std::function<void(CaseRecord&)> body) {
  return [proto = std::move(proto), body = std::move(body)]() {
    CaseRecord c = proto;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const BudgetExhausted& ex) {
      c.status = Status::Budget;
      c.checks.clear();
      c.witnesses.clear();
      c.notes.push_back(ex.what());
    }
    c.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
  };
}

std::string sig_tail(const Signature& eps) {
  return "N=" + std::to_string(eps.size()) + "/" + eps.to_string();
}

void add_gen_set(std::vector<Job>& jobs, const SuiteConfig& cfg) {
  for (const auto& eps : sweep(cfg)) {
    auto opts = options(cfg);
    jobs.push_back(timed(make_case("gen-set", sig_tail(eps), eps,
                                   "tensorial-ideal-generated-by-cubic-and-quadratic-generators",
                                   "lt"),
                         [eps, opts](CaseRecord& c) {
                           ideals::GeneratingSetOptions go;
                           go.buchberger = opts;
                           const auto res = ideals::verify_generating_theorem(eps, go);
                           absorb(c, res.verdict);
                           c.steps = res.stats.steps;
                           for (const auto& e : res.i_basis.elements())
                             c.basis.push_back(io::render_polynomial(e, res.i_basis.order()));
                         }));
  }
}

void add_knutson(std::vector<Job>& jobs, const SuiteConfig& cfg) {
  for (const auto& eps : sweep(cfg)) {
    auto opts = options(cfg);
    jobs.push_back(timed(make_case("knutson", sig_tail(eps), eps,
                                   "axis-products-equal-intersections-with-squarefree-initial-ideals",
                                   "lt-shifted"),
                         [eps, opts](CaseRecord& c) {
                           absorb(c, ideals::verify_knutson_product(eps, opts));
                         }));
  }
}

void add_squeeze(std::vector<Job>& jobs, const SuiteConfig& cfg) {
  std::vector<int> sizes;
  if (cfg.signatures.empty()) {
    for (int n = 1; n <= cfg.n_max; ++n) sizes.push_back(n);
  } else {
    for (const auto& s : cfg.signatures) sizes.push_back(s.size());
  }
  for (int n : sizes) {
    const Signature eps = Signature::constant(n, 1);
    auto opts = options(cfg);
    jobs.push_back(timed(make_case("squeeze", sig_tail(eps), eps,
                                   "letter-major-initial-ideal-squeeze", "prec"),
                         [n, opts](CaseRecord& c) {
                           absorb(c, ideals::verify_squeeze_appendix(n, opts));
                         }));
  }
}

void add_oracle(std::vector<Job>& jobs, const SuiteConfig& cfg) {
  std::uint64_t k = 0;
  for (const auto& eps : sweep(cfg)) {
    auto opts = options(cfg);
    const int samples = cfg.samples;
    const std::uint64_t seed = cfg.seed + k++;
    jobs.push_back(timed(make_case("oracle-equiv", sig_tail(eps), eps,
                                   "linear-variety-membership-oracles-agree", "lt"),
                         [eps, opts, samples, seed](CaseRecord& c) {
                           ideals::GeneratingSetOptions go;
                           go.buchberger = opts;
                           const auto res = ideals::verify_generating_theorem(eps, go);
                           const auto tally = ideals::oracle_equivalence(eps, res.i_basis, samples, seed);
                           Verdict v;
                           v.add("oracles-agree", tally.disagreements == 0,
                                 std::to_string(tally.samples) + " samples, " +
                                     std::to_string(tally.members) + " members, " +
                                     std::to_string(tally.disagreements) + " disagreements",
                                 tally.first_disagreement
                                     ? std::vector<std::string>{io::render_polynomial(
                                           *tally.first_disagreement)}
                                     : std::vector<std::string>{});
                           absorb(c, v);
                         }));
  }
}

void add_tensoriality(std::vector<Job>& jobs, const SuiteConfig& cfg) {
  auto fleet = std::make_shared<std::vector<courant::FleetEntry>>(courant::builtin_fleet());
  std::uint64_t k = 0;
  for (std::size_t f = 0; f < fleet->size(); ++f) {
    const auto& e = (*fleet)[f];
    const Signature& eps = e.family.signature();
    if (eps.size() > cfg.n_max) continue;
    if (!cfg.signatures.empty() &&
        std::find(cfg.signatures.begin(), cfg.signatures.end(), eps) == cfg.signatures.end())
      continue;
    const int samples = cfg.bridge_samples;
    const std::uint64_t seed = cfg.seed + k++;
    jobs.push_back(timed(make_case("tensoriality", e.name, eps,
                                   "pairings-match-polynomial-action-and-generators-tensorial",
                                   "none"),
                         [fleet, f, samples, seed](CaseRecord& c) {
                           absorb(c, bridge::verify_family((*fleet)[f], samples, seed));
                         }));
  }
  if (!cfg.signatures.empty()) return;
  for (int n = 1; n <= std::min(cfg.n_max, 3); ++n) {
    const int samples = 2 * cfg.bridge_samples;
    const std::uint64_t seed = cfg.seed + 1000 + static_cast<std::uint64_t>(n);
    CaseRecord proto = make_case("tensoriality", "axioms/R" + std::to_string(n), Signature(),
                                 "courant-algebroid-identities", "none");
    proto.n = n;
    jobs.push_back(timed(proto, [n, samples, seed](CaseRecord& c) {
      absorb(c, bridge::verify_courant_axioms(courant::Chart(n), samples, seed));
    }));
  }
  const int samples = cfg.bridge_samples;
  const std::uint64_t seed = cfg.seed + 2000;
  jobs.push_back(timed(make_case("tensoriality", "alternating", Signature::parse("-"),
                                 "symmetrized-torsion-form-alternating", "none"),
                       [fleet, samples, seed](CaseRecord& c) {
                         absorb(c, bridge::verify_alternating(*fleet, samples, seed));
                       }));
}

}  // namespace

SuiteConfig SuiteConfig::extended_profile() {
  SuiteConfig cfg;
  cfg.suite = "gen-set";
  cfg.n_max = 6;
  cfg.signatures = {Signature::constant(6, 1), Signature::constant(6, -1)};
  return cfg;
}

void validate(const SuiteConfig& cfg) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.n_max < 1) throw ConfigError("n must be at least 1");
  // t + 3N variables must fit the 32-variable layout.
  if (cfg.n_max > 10) throw ConfigError("n must be at most 10");
  for (const auto& s : cfg.signatures) {
    if (s.size() < 1 || s.size() > cfg.n_max)
      throw ConfigError("signature " + s.to_string() + " longer than n");
  }
  if ((cfg.suite == "squeeze" || cfg.suite == "all") && !cfg.signatures.empty())
    for (const auto& s : cfg.signatures)
      if (!s.all_symmetric())
        throw ConfigError("the squeeze suite only runs the all-plus signature");
  if (cfg.workers < 0) throw ConfigError("workers must be non-negative");
  if (cfg.samples < 0 || cfg.bridge_samples < 0) throw ConfigError("samples must be non-negative");
  if (cfg.format != "json" && cfg.format != "text") throw ConfigError("format must be json or text");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Budget: return "budget";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "budget") return Status::Budget;
  throw ConfigError("unknown status '" + s + "'");
}

Summary CertReport::summary() const {
  Summary s;
  for (const auto& c : cases) {
    ++s.total;
    switch (c.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Budget: ++s.budget; break;
    }
  }
  return s;
}

CertReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<Job> jobs;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "gen-set") add_gen_set(jobs, cfg);
  if (all || cfg.suite == "knutson") add_knutson(jobs, cfg);
  if (all || cfg.suite == "squeeze") add_squeeze(jobs, cfg);
  if (all || cfg.suite == "oracle-equiv") add_oracle(jobs, cfg);
  if (all || cfg.suite == "tensoriality") add_tensoriality(jobs, cfg);

  CertReport r;
  r.suite = cfg.suite;
  r.n_max = cfg.n_max;
  r.cases.resize(jobs.size());
  kernels::parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) { r.cases[i] = jobs[i](); });
  return r;
}

int exit_code(const CertReport& r) {
  const Summary s = r.summary();
  if (s.fail > 0) return 1;
  if (s.budget > 0) return 2;
  return 0;
}

namespace {

json check_json(const Check& c) {
  return {{"claim", c.claim}, {"ok", c.ok}, {"detail", c.detail}, {"witnesses", c.witnesses}};
}

json case_json(const CaseRecord& c) {
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back(check_json(k));
  return {{"case_id", c.case_id},     {"suite", c.suite},
          {"signature", c.signature}, {"N", c.n},
          {"claim", c.claim},         {"status", to_string(c.status)},
          {"order", c.order},         {"witnesses", c.witnesses},
          {"checks", checks},         {"notes", c.notes},
          {"basis", c.basis},         {"steps", c.steps},
          {"wall_time_ms", c.wall_time_ms}};
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string emit_report(const CertReport& r, const std::string& format) {
  const Summary s = r.summary();
  if (format == "json") {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(case_json(c));
    json j = {{"tool", r.tool},
              {"version", r.version},
              {"suite", r.suite},
              {"n_max", r.n_max},
              {"cases", cases},
              {"summary",
               {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"budget", s.budget}}}};
    return j.dump(2) + "\n";
  }
  if (format != "text") throw ConfigError("format must be json or text");
  std::ostringstream os;
  os << r.tool << " " << r.version << "  suite " << r.suite << "  n " << r.n_max << "\n";
  for (const auto& c : r.cases) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%10.1f ms", c.wall_time_ms);
    os << pad(to_string(c.status), 7) << pad(c.case_id, 44) << ms << "\n";
    if (c.status == Status::Fail)
      for (const auto& k : c.checks)
        if (!k.ok) {
          os << "       failed " << k.claim << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
          for (const auto& w : k.witnesses) os << "         witness " << w << "\n";
        }
  }
  os << s.total << " cases: " << s.pass << " pass, " << s.fail << " fail, " << s.budget
     << " budget\n";
  return os.str();
}

CertReport parse_report(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    CertReport r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    r.n_max = j.at("n_max").get<int>();
    for (const auto& c : j.at("cases")) {
      CaseRecord rec;
      rec.case_id = c.at("case_id").get<std::string>();
      rec.suite = c.at("suite").get<std::string>();
      rec.signature = c.at("signature").get<std::string>();
      rec.n = c.at("N").get<int>();
      rec.claim = c.at("claim").get<std::string>();
      rec.status = status_from_string(c.at("status").get<std::string>());
      rec.order = c.at("order").get<std::string>();
      rec.witnesses = c.at("witnesses").get<std::vector<std::string>>();
      for (const auto& k : c.at("checks"))
        rec.checks.push_back({k.at("claim").get<std::string>(), k.at("ok").get<bool>(),
                              k.at("detail").get<std::string>(),
                              k.at("witnesses").get<std::vector<std::string>>()});
      rec.notes = c.at("notes").get<std::vector<std::string>>();
      rec.basis = c.at("basis").get<std::vector<std::string>>();
      rec.steps = c.at("steps").get<std::uint64_t>();
      rec.wall_time_ms = c.at("wall_time_ms").get<double>();
      r.cases.push_back(std::move(rec));
    }
    return r;
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed report: ") + ex.what());
  }
}

bool equal_modulo_timing(const CertReport& a, const CertReport& b) {
  if (a.tool != b.tool || a.version != b.version || a.suite != b.suite || a.n_max != b.n_max ||
      a.cases.size() != b.cases.size())
    return false;
  auto same_check = [](const Check& x, const Check& y) {
    return x.claim == y.claim && x.ok == y.ok && x.detail == y.detail && x.witnesses == y.witnesses;
  };
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    const CaseRecord& x = a.cases[i];
    const CaseRecord& y = b.cases[i];
    if (x.case_id != y.case_id || x.suite != y.suite || x.signature != y.signature || x.n != y.n ||
        x.claim != y.claim || x.status != y.status || x.order != y.order ||
        x.witnesses != y.witnesses || x.notes != y.notes || x.basis != y.basis ||
        x.steps != y.steps || x.checks.size() != y.checks.size())
      return false;
    for (std::size_t k = 0; k < x.checks.size(); ++k)
      if (!same_check(x.checks[k], y.checks[k])) return false;
  }
  return true;
}

}  // namespace tenscert::certify
