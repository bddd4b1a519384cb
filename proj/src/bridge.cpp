#include "tenscert/bridge.hpp"

#include <string>

#include "tenscert/actions.hpp"
#include "tenscert/ideals.hpp"
#include "tenscert/io.hpp"

namespace tenscert::bridge {

using namespace courant;
using algebra::Polynomial;
using algebra::VarSet;

namespace {

std::string render(const Polynomial& f) { return io::render_polynomial(f); }

/// First nonzero component, rendered; "0" for the zero section.
std::string render(const Section& s) {
  for (const auto& c : s.vec)
    if (!c.is_zero()) return render(c);
  for (const auto& c : s.form)
    if (!c.is_zero()) return render(c);
  return "0";
}

std::string indices(std::initializer_list<int> ids) {
  std::string s;
  for (int i : ids) s += std::to_string(i);
  return s;
}

}  // namespace

Verdict verify_family(const FleetEntry& entry, int samples, std::uint64_t seed) {
  Verdict v;
  const CommutingFamily& phi = entry.family;
  const Chart& chart = phi.chart();
  const Signature& eps = phi.signature();
  const int n = phi.size();
  const VarSet vs = VarSet::tensorial(n);
  std::mt19937_64 rng(seed);
  const TrilinearForm tau = courant_element();

  {
    std::vector<std::array<int, 3>> triples;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) triples.push_back({i, j, k});
    std::vector<TrilinearForm> forms;
    for (const auto& [i, j, k] : triples)
      forms.push_back(polynomial_action(ideals::generator_T(i, j, k, eps, vs), phi, tau));
    bool ok = true;
    std::string detail;
    std::vector<std::string> w;
    for (int s = 0; s < samples && ok; ++s) {
      const std::size_t t = static_cast<std::size_t>(s) % triples.size();
      const auto [i, j, k] = triples[t];
      const Section a = random_section(rng, chart), b = random_section(rng, chart),
                    c = random_section(rng, chart);
      const Scalar diff = inner_product(torsion_T(i, j, k, phi, a, b), c) - forms[t](a, b, c);
      if (!diff.is_zero()) {
        ok = false;
        detail = "indices " + indices({i, j, k});
        w.push_back(render(diff));
      }
    }
    v.add("torsion-pairing-matches-action", ok,
          ok ? std::to_string(samples) + " triples" : detail, w);
  }

  {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && eps[i] == 1 && eps[j] == 1) pairs.emplace_back(i, j);
    if (pairs.empty()) {
      v.notes.push_back(entry.name + ": fewer than two symmetric members, no P-tensor to check");
    } else {
      std::vector<TrilinearForm> forms;
      for (const auto& [i, j] : pairs)
        forms.push_back(polynomial_action(ideals::generator_P(i, j, eps, vs), phi, tau));
      bool ok = true;
      std::string detail;
      std::vector<std::string> w;
      for (int s = 0; s < samples && ok; ++s) {
        const std::size_t t = static_cast<std::size_t>(s) % pairs.size();
        const auto [i, j] = pairs[t];
        const Section a = random_section(rng, chart), b = random_section(rng, chart),
                      c = random_section(rng, chart);
        const Scalar diff = inner_product(tensor_P(i, j, phi, a, b), c) - forms[t](a, b, c);
        if (!diff.is_zero()) {
          ok = false;
          detail = "indices " + indices({i, j});
          w.push_back(render(diff));
        }
      }
      v.add("p-tensor-pairing-matches-action", ok,
            ok ? std::to_string(samples) + " triples" : detail, w);
    }
  }

  {
    const ideals::CandidateBasis cand = ideals::candidate_basis(eps);
    bool ok = true;
    std::string detail;
    std::vector<std::string> w;
    for (const auto& g : cand.all())
      if (auto d = tensoriality_defect(g, phi)) {
        ok = false;
        detail = render(g) + " fails in slot " + std::to_string(d->slot) + " with f = u" +
                 std::to_string(d->coordinate);
        w = {render(g), render(d->value)};
        break;
      }
    v.add("candidate-generators-tensorial", ok,
          ok ? std::to_string(cand.all().size()) + " generators" : detail, w);
  }

  {
    const Polynomial one = Polynomial::constant(vs, 1);
    const auto d = tensoriality_defect(one, phi);
    v.add("unit-polynomial-not-tensorial", d.has_value(),
          d ? "defect " + render(d->value) : "no defect found", {render(one)});
  }
  return v;
}

Verdict verify_courant_axioms(const Chart& chart, int samples, std::uint64_t seed) {
  Verdict v;
  std::mt19937_64 rng(seed);
  bool axiom = true, right = true, left = true;
  std::vector<std::string> wa, wr, wl;
  for (int s = 0; s < samples; ++s) {
    const Section a = random_section(rng, chart), b = random_section(rng, chart),
                  c = random_section(rng, chart);
    const Scalar f = random_scalar(rng, chart, 3, 2);
    const Scalar lhs = anchor(a, inner_product(b, c));
    const Scalar d1 = lhs - inner_product(courant_bracket(a, b), c) -
                      inner_product(courant_bracket(a, c), b);
    const Scalar d2 = lhs - inner_product(courant_bracket(b, c), a) -
                      inner_product(courant_bracket(c, b), a);
    if (axiom && !(d1.is_zero() && d2.is_zero())) {
      axiom = false;
      wa.push_back(render(d1.is_zero() ? d2 : d1));
    }
    const Section r = courant_bracket(a, f * b) - f * courant_bracket(a, b) - anchor(a, f) * b;
    if (right && !r.is_zero()) {
      right = false;
      wr.push_back(render(r));
    }
    const Section l = courant_bracket(f * a, b) - f * courant_bracket(a, b) + anchor(b, f) * a -
                      (Rational(2) * inner_product(a, b)) * differential(f);
    if (left && !l.is_zero()) {
      left = false;
      wl.push_back(render(l));
    }
  }
  const std::string d = std::to_string(samples) + " instances on R^" + std::to_string(chart.dim());
  v.add("anchor-of-pairing-splits-over-bracket", axiom, d, wa);
  v.add("leibniz-rule-second-slot", right, d, wr);
  v.add("leibniz-rule-first-slot-with-differential-term", left, d, wl);
  return v;
}

Verdict verify_alternating(const std::vector<FleetEntry>& fleet, int samples, std::uint64_t seed) {
  Verdict v;
  const Signature eps = Signature::parse("-");
  const VarSet vs = VarSet::tensorial(1);
  const Polynomial t = ideals::generator_T(1, 1, 1, eps, vs);
  Polynomial sym(vs);
  for (const auto& sigma : algebra::LetterPerm::all()) sym += algebra::apply_s3(t, sigma);
  sym *= Rational(1, 6);
  v.notes.push_back("symmetrized generator " + render(sym));
  bool invariant = true;
  for (const auto& sigma : algebra::LetterPerm::all())
    if (algebra::apply_s3(sym, sigma) != sym) invariant = false;
  v.add("symmetrized-generator-letter-invariant", invariant, "", {render(sym)});
  v.add("symmetrized-generator-universally-tensorial", ideals::vanishes_on_variety(sym, eps), "",
        {render(sym)});

  std::mt19937_64 rng(seed);
  int families = 0;
  bool ok = true;
  std::string detail;
  std::vector<std::string> w;
  for (const auto& e : fleet) {
    if (e.family.signature() != eps) continue;
    ++families;
    const TrilinearForm omega = polynomial_action(sym, e.family, courant_element());
    const Chart& chart = e.family.chart();
    for (int s = 0; s < samples && ok; ++s) {
      const Section a = random_section(rng, chart), b = random_section(rng, chart),
                    c = random_section(rng, chart);
      const Scalar abc = omega(a, b, c);
      const Scalar d1 = abc + omega(b, a, c);
      const Scalar d2 = abc + omega(a, c, b);
      if (!d1.is_zero() || !d2.is_zero()) {
        ok = false;
        detail = e.name;
        w.push_back(render(d1.is_zero() ? d2 : d1));
      }
    }
  }
  v.add("symmetrized-torsion-form-alternating", ok && families > 0,
        ok ? std::to_string(families) + " families x " + std::to_string(samples) + " triples"
           : detail,
        w);
  return v;
}

}  // namespace tenscert::bridge
