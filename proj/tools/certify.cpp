#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tenscert/certify.hpp"
#include "tenscert/courant.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/ideals.hpp"
#include "tenscert/io.hpp"

using namespace tenscert;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_basis(const groebner::GroebnerBasis& gb) {
  for (const auto& e : gb.elements()) std::cout << io::render_polynomial(e, gb.order()) << "\n";
}

int run_certify(certify::SuiteConfig cfg, const std::vector<std::string>& sigs,
                const std::string& profile) {
  if (profile == "n6") {
    auto ext = certify::SuiteConfig::extended_profile();
    ext.step_budget = cfg.step_budget;
    ext.workers = cfg.workers;
    ext.output_path = cfg.output_path;
    ext.format = cfg.format;
    cfg = ext;
  } else if (!profile.empty()) {
    throw ConfigError("unknown profile '" + profile + "'");
  }
  for (const auto& s : sigs) cfg.signatures.push_back(algebra::Signature::parse(s));
  const certify::CertReport r = certify::run_suite(cfg);
  const std::string doc = certify::emit_report(r, cfg.format);
  if (cfg.output_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(cfg.output_path);
    if (!out) throw ConfigError("cannot write " + cfg.output_path);
    out << doc;
    const auto s = r.summary();
    std::cerr << s.total << " cases: " << s.pass << " pass, " << s.fail << " fail, " << s.budget
              << " budget\n";
  }
  return certify::exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifies generating sets of universally tensorial ideals"};
  app.require_subcommand(1);

  certify::SuiteConfig cfg;
  std::vector<std::string> sigs;
  std::string profile;
  std::uint64_t budget = 0;
  auto* cert = app.add_subcommand("certify", "Run a verification suite");
  cert->add_option("--suite", cfg.suite, "gen-set|knutson|squeeze|tensoriality|oracle-equiv|all");
  cert->add_option("--n", cfg.n_max, "Largest number of indices");
  cert->add_option("--sig", sigs, "Explicit signatures such as +-+ (repeatable)");
  cert->add_option("--budget", budget, "Reduction step budget per Groebner computation");
  cert->add_option("--workers", cfg.workers, "Case-level worker threads (0 = OpenMP default)");
  cert->add_option("--out", cfg.output_path, "Report path (stdout if omitted)");
  cert->add_option("--format", cfg.format, "json|text");
  cert->add_option("--samples", cfg.samples, "Random polynomials per oracle-equiv case");
  cert->add_option("--bridge-samples", cfg.bridge_samples, "Random section triples per family");
  cert->add_option("--seed", cfg.seed, "Base random seed");
  cert->add_option("--profile", profile, "n6: gen-set at N = 6 for the two constant signatures");

  int gens_n = 1;
  std::string gens_sig;
  auto* gens = app.add_subcommand("gens", "Print the candidate generators");
  gens->add_option("--n", gens_n, "Number of indices");
  gens->add_option("--sig", gens_sig, "Signature such as +-")->required();

  std::string ideal_path, order_spec = "lt";
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("--ideal", ideal_path, "One polynomial per line")->required();
  gb->add_option("--order", order_spec, "lt, prec, or an explicit ranking t,x1,...");
  gb->add_option("--budget", budget, "Reduction step budget");

  std::string a_path, b_path, inter_order = "lt";
  auto* inter = app.add_subcommand("intersect", "Intersection of two ideal files");
  inter->add_option("--a", a_path, "First ideal")->required();
  inter->add_option("--b", b_path, "Second ideal")->required();
  inter->add_option("--order", inter_order, "Elimination order over the ring with t");
  inter->add_option("--budget", budget, "Reduction step budget");

  std::string fleet_check;
  auto* fleet = app.add_subcommand("fleet", "Dump the built-in fleet or validate a fixture file");
  fleet->add_option("--check", fleet_check, "Fixture file to load and validate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : certify::kExitConfig;
  }

  try {
    groebner::BuchbergerOptions opts;
    if (budget > 0) opts.step_budget = budget;

    if (*cert) {
      cfg.step_budget = budget;
      return run_certify(cfg, sigs, profile);
    }
    if (*gens) {
      const auto eps = algebra::Signature::parse(gens_sig);
      if (eps.size() != gens_n) throw ConfigError("signature length differs from --n");
      const auto cand = ideals::candidate_basis(eps);
      const auto ord = algebra::MonomialOrder::index_descending(algebra::VarSet::tensorial(gens_n));
      for (const auto& g : cand.all()) std::cout << io::render_polynomial(g, ord) << "\n";
      return 0;
    }
    if (*gb) {
      const std::string text = slurp(ideal_path);
      const algebra::VarSet vs = io::infer_varset({text});
      const auto polys = io::parse_ideal(text, vs);
      const auto ord = algebra::MonomialOrder::parse(order_spec, vs);
      groebner::BuchbergerStats stats;
      const auto basis =
          groebner::reduced_groebner_basis(groebner::IdealPresentation(vs, polys, ord), opts, &stats);
      print_basis(basis);
      std::cerr << basis.size() << " elements, " << stats.pairs << " pairs, " << stats.steps
                << " steps\n";
      return 0;
    }
    if (*inter) {
      const std::string ta = slurp(a_path);
      const std::string tb = slurp(b_path);
      const algebra::VarSet vs = io::infer_varset({ta, tb}).with_t(false);
      const auto ord = algebra::MonomialOrder::parse(inter_order, vs.with_t(true));
      const auto res = ideals::intersect_pair(io::parse_ideal(ta, vs), io::parse_ideal(tb, vs), ord, opts);
      print_basis(res.intersection);
      return 0;
    }
    if (*fleet) {
      if (fleet_check.empty()) {
        std::cout << courant::dump_fleet(courant::builtin_fleet()) << "\n";
      } else {
        const auto loaded = courant::load_fleet(slurp(fleet_check));
        std::cout << loaded.size() << " families valid\n";
      }
      return 0;
    }
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return certify::kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return certify::kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return certify::kExitConfig;
  }
  return certify::kExitConfig;
}
