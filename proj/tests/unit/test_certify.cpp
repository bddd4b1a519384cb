#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

#include "helpers.hpp"
#include "tenscert/certify.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/io.hpp"

using namespace tenscert;
using namespace tenscert::certify;

namespace {

SuiteConfig config(const std::string& suite, int n) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.n_max = n;
  cfg.samples = 60;
  cfg.bridge_samples = 4;
  return cfg;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("tenscert_cli_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd = std::string(TENSCERT_CERTIFY_BIN) + " " + args + " > " + tmp.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(raw);
}

}  // namespace

TEST(Report, EmptyReportIsValidJson) {
  CertReport r;
  r.suite = "gen-set";
  const std::string doc = emit_report(r, "json");
  const auto j = nlohmann::json::parse(doc);
  EXPECT_EQ(j.at("cases").size(), 0u);
  EXPECT_EQ(j.at("summary").at("total"), 0);
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_TRUE(equal_modulo_timing(parse_report(doc), r));
}

TEST(Report, RoundTripIgnoresTiming) {
  const CertReport r = run_suite(config("gen-set", 2));
  CertReport back = parse_report(emit_report(r, "json"));
  EXPECT_TRUE(equal_modulo_timing(back, r));
  for (auto& c : back.cases) c.wall_time_ms += 1000;
  EXPECT_TRUE(equal_modulo_timing(back, r));
  back.cases[0].basis.push_back("x1");
  EXPECT_FALSE(equal_modulo_timing(back, r));
  EXPECT_THROW(parse_report("{\"cases\": 3}"), ConfigError);
}

TEST(Report, FailingCaseWitnessSurvivesSerialization) {
  CertReport r;
  r.suite = "gen-set";
  r.n_max = 1;
  CaseRecord c;
  c.case_id = "gen-set/N=1/+";
  c.suite = "gen-set";
  c.signature = "+";
  c.n = 1;
  c.claim = "tensorial-ideal-generated-by-cubic-and-quadratic-generators";
  c.status = Status::Fail;
  c.witnesses = {"x1^2*y1 - 1/2*z1"};
  c.checks.push_back({"candidate-generators-in-ideal", false, "not a member", c.witnesses});
  r.cases.push_back(c);
  EXPECT_EQ(exit_code(r), 1);
  const CertReport back = parse_report(emit_report(r, "json"));
  ASSERT_EQ(back.cases.size(), 1u);
  EXPECT_EQ(back.cases[0].status, Status::Fail);
  EXPECT_NO_THROW(io::parse_polynomial(back.cases[0].witnesses.at(0), algebra::VarSet::tensorial(1)));
  EXPECT_NE(emit_report(r, "text").find("x1^2*y1 - 1/2*z1"), std::string::npos);
}

TEST(Suite, GenSetCountsAndOrder) {
  const CertReport r = run_suite(config("gen-set", 3));
  ASSERT_EQ(r.cases.size(), 14u);
  EXPECT_EQ(r.summary().pass, 14);
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_EQ(r.cases[0].case_id, "gen-set/N=1/+");
  EXPECT_EQ(r.cases[1].case_id, "gen-set/N=1/-");
  EXPECT_EQ(r.cases[2].signature, "++");
  EXPECT_EQ(r.cases[5].signature, "--");
  EXPECT_EQ(r.cases[13].signature, "---");
  for (const auto& c : r.cases) {
    EXPECT_FALSE(c.basis.empty());
    EXPECT_EQ(c.order, "lt");
  }
}

TEST(Suite, SingleSkewSignatureBasis) {
  SuiteConfig cfg = config("gen-set", 1);
  cfg.signatures = {Signature::parse("-")};
  const CertReport r = run_suite(cfg);
  ASSERT_EQ(r.cases.size(), 1u);
  const auto vs = algebra::VarSet::tensorial(1);
  ASSERT_EQ(r.cases[0].basis.size(), 1u);
  EXPECT_EQ(io::parse_polynomial(r.cases[0].basis[0], vs),
            testing_helpers::P("(x1+y1)*(y1+z1)*(z1+x1)", vs));
}

TEST(Suite, SqueezeProductsAndOraclesPass) {
  EXPECT_EQ(exit_code(run_suite(config("squeeze", 3))), 0);
  EXPECT_EQ(exit_code(run_suite(config("knutson", 2))), 0);
  EXPECT_EQ(exit_code(run_suite(config("oracle-equiv", 2))), 0);
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
  SuiteConfig a = config("gen-set", 3);
  SuiteConfig b = a;
  b.workers = 4;
  EXPECT_TRUE(equal_modulo_timing(run_suite(a), run_suite(b)));
  SuiteConfig t = config("tensoriality", 2);
  SuiteConfig t2 = t;
  t2.workers = 3;
  EXPECT_TRUE(equal_modulo_timing(run_suite(t), run_suite(t2)));
}

TEST(Suite, BudgetIsNeitherPassNorFail) {
  SuiteConfig cfg = config("gen-set", 2);
  cfg.step_budget = 3;
  const CertReport r = run_suite(cfg);
  EXPECT_GT(r.summary().budget, 0);
  EXPECT_EQ(r.summary().fail, 0);
  EXPECT_EQ(exit_code(r), 2);
}

TEST(Suite, ConfigErrors) {
  EXPECT_THROW(validate(config("nope", 2)), ConfigError);
  EXPECT_THROW(validate(config("gen-set", 0)), ConfigError);
  EXPECT_THROW(validate(config("gen-set", 11)), ConfigError);
  SuiteConfig longer = config("gen-set", 1);
  longer.signatures = {Signature::parse("++")};
  EXPECT_THROW(validate(longer), ConfigError);
  SuiteConfig squeeze = config("squeeze", 2);
  squeeze.signatures = {Signature::parse("+-")};
  EXPECT_THROW(validate(squeeze), ConfigError);
  SuiteConfig fmt = config("gen-set", 1);
  fmt.format = "yaml";
  EXPECT_THROW(validate(fmt), ConfigError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("certify --suite gen-set --n 2"), 0);
  EXPECT_EQ(run_cli("certify --suite gen-set --n 2 --budget 3"), 2);
  EXPECT_EQ(run_cli("certify --suite bogus --n 2"), 3);
  EXPECT_EQ(run_cli("certify --suite gen-set --n 1 --sig +-"), 3);
  EXPECT_EQ(run_cli("--no-such-flag"), 3);
  std::string out;
  EXPECT_EQ(run_cli("certify --suite gen-set --n 1 --format text", &out), 0);
  EXPECT_NE(out.find("pass"), std::string::npos);
}

TEST(Cli, GensAndGroebner) {
  std::string out;
  ASSERT_EQ(run_cli("gens --n 1 --sig -", &out), 0);
  const auto vs = algebra::VarSet::tensorial(1);
  EXPECT_EQ(io::parse_polynomial(out.substr(0, out.find('\n')), vs),
            testing_helpers::P("(x1+y1)*(y1+z1)*(z1+x1)", vs));

  const auto dir = std::filesystem::temp_directory_path() / ("tenscert_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "tenscert_a.txt") << "# line ideal\nx1 - y1\nx1 - z1\n";
    std::ofstream(dir / "tenscert_b.txt") << "y1\n";
    std::ofstream(dir / "tenscert_bad.txt") << "x1 +\n";
  }
  ASSERT_EQ(run_cli("gb --ideal " + (dir / "tenscert_a.txt").string() + " --order x1,y1,z1", &out), 0);
  EXPECT_NE(out.find("y1 - z1"), std::string::npos) << out;
  EXPECT_NE(out.find("x1 - z1"), std::string::npos) << out;
  ASSERT_EQ(run_cli("intersect --a " + (dir / "tenscert_a.txt").string() + " --b " +
                        (dir / "tenscert_b.txt").string(),
                    &out),
            0);
  EXPECT_EQ(run_cli("gb --ideal " + (dir / "tenscert_bad.txt").string(), &out), 3);
  EXPECT_NE(out.find("1:5"), std::string::npos) << out;
  EXPECT_EQ(run_cli("fleet --check " + std::string(TENSCERT_FIXTURE_DIR) + "/fleet.json"), 0);
}
