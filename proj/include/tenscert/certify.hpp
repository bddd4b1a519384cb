#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tenscert/signature.hpp"
#include "tenscert/verdict.hpp"

namespace tenscert::certify {

using algebra::Signature;

inline constexpr const char* kToolVersion = "1.0.0";

/// gen-set, knutson, squeeze, tensoriality, oracle-equiv or all.
struct SuiteConfig {
  std::string suite = "gen-set";
  int n_max = 3;
  /// Empty means every signature of every length 1..n_max.
  std::vector<Signature> signatures;
  std::uint64_t step_budget = 0;  // 0: default budget (CERTIFY_BUDGET aware)
  int workers = 1;
  std::string output_path;
  std::string format = "json";
  /// Random samples per case for oracle-equiv and tensoriality.
  int samples = 500;
  int bridge_samples = 100;
  std::uint64_t seed = 20240101;

  /// Long-running profile: gen-set at N = 6 for (+...+) and (-...-).
  static SuiteConfig extended_profile();
};

/// ConfigError on anything run_suite would reject.
void validate(const SuiteConfig& cfg);

enum class Status { Pass, Fail, Budget };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CaseRecord {
  std::string case_id;
  std::string suite;
  std::string signature;
  int n = 0;
  std::string claim;
  Status status = Status::Pass;
  std::string order;
  /// Parseable polynomial strings; non-empty whenever status is Fail.
  std::vector<std::string> witnesses;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  /// Reduced basis of the computed ideal where one is produced.
  std::vector<std::string> basis;
  std::uint64_t steps = 0;
  double wall_time_ms = 0;
};

struct Summary {
  int total = 0;
  int pass = 0;
  int fail = 0;
  int budget = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct CertReport {
  std::string tool = "certify";
  std::string version = kToolVersion;
  std::string suite;
  int n_max = 0;
  std::vector<CaseRecord> cases;

  Summary summary() const;
};

/// Cases run on cfg.workers threads; case order is fixed by the sweep
/// (N ascending, signatures lexicographic with + before -).
CertReport run_suite(const SuiteConfig& cfg);

/// 0 all pass, 1 any fail, 2 budget exhausted somewhere without fails.
int exit_code(const CertReport& r);
inline constexpr int kExitConfig = 3;

std::string emit_report(const CertReport& r, const std::string& format);
/// Inverse of the JSON form; ConfigError on malformed input.
CertReport parse_report(const std::string& json_text);
/// Equality ignoring wall_time_ms.
bool equal_modulo_timing(const CertReport& a, const CertReport& b);

}  // namespace tenscert::certify
