#include "tenscert/groebner.hpp"

#include <algorithm>
#include <cstdlib>

#include "tenscert/detail/ranked.hpp"
#include "tenscert/errors.hpp"

namespace tenscert::groebner {

using detail::RankedPoly;
using detail::StepCounter;

IdealPresentation::IdealPresentation(VarSet vars, std::vector<Polynomial> generators,
                                     MonomialOrder order)
    : vars_(vars), gens_(std::move(generators)), order_(std::move(order)) {
  for (const auto& g : gens_) {
    if (!(g.vars() == vars_)) throw ConfigError("generator lives in a different ring");
    if (g.is_zero()) throw DomainError("zero generator in ideal presentation");
    for (const auto& t : g.terms()) (void)order_.to_ranked(t.mono);
  }
}

GroebnerBasis::GroebnerBasis(VarSet vars, MonomialOrder order, std::vector<Polynomial> elements,
                             bool reduced)
    : vars_(vars), order_(std::move(order)), reduced_(reduced) {
  for (const auto& e : elements) {
    if (!(e.vars() == vars_)) throw ConfigError("basis element lives in a different ring");
    if (e.is_zero()) continue;
    TermList r = order_.to_ranked(e);
    detail::make_monic(r);
    elems_.push_back(order_.from_ranked(vars_, r));
    ranked_.push_back(std::move(r));
  }
}

GroebnerBasis GroebnerBasis::from_ranked(VarSet vars, MonomialOrder order,
                                         std::vector<TermList> ranked, bool reduced) {
  GroebnerBasis gb;
  gb.vars_ = vars;
  gb.order_ = std::move(order);
  gb.reduced_ = reduced;
  for (auto& r : ranked) {
    if (r.empty()) continue;
    detail::make_monic(r);
    gb.elems_.push_back(gb.order_.from_ranked(vars, r));
    gb.ranked_.push_back(std::move(r));
  }
  return gb;
}

GroebnerBasis GroebnerBasis::without_t() const {
  GroebnerBasis out;
  out.vars_ = vars_;
  out.order_ = order_;
  out.reduced_ = reduced_;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k].uses(VarSet::t())) continue;
    out.elems_.push_back(elems_[k]);
    out.ranked_.push_back(ranked_[k]);
  }
  return out;
}

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("CERTIFY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

GroebnerBasis buchberger(const IdealPresentation& input, const BuchbergerOptions& opts,
                         BuchbergerStats* stats) {
  const MonomialOrder& ord = input.order();
  std::vector<RankedPoly> g;
  g.reserve(input.size() * 4);
  for (const auto& p : input.generators()) {
    TermList r = ord.to_ranked(p);
    detail::make_monic(r);
    g.emplace_back(std::move(r));
  }

  BuchbergerStats st;
  StepCounter counter(opts.step_budget);
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++st.pairs;
      const Monomial& li = g[i].lead();
      const Monomial& lj = g[j].lead();
      if (opts.coprime_criterion && (g[i].lead_mask & g[j].lead_mask) == 0) {
        ++st.skipped_coprime;
        continue;
      }
      if (opts.chain_criterion) {
        // Pair (a, b), a < b, is done once b < j, or b == j and a < i.
        const auto done = [&](std::size_t a, std::size_t b) {
          if (a > b) std::swap(a, b);
          return b < j || (b == j && a < i);
        };
        const Monomial l = li.lcm(lj);
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
          if (k == i || k == j) continue;
          if (g[k].lead().divides(l) && done(i, k) && done(j, k)) skip = true;
        }
        if (skip) {
          ++st.skipped_chain;
          continue;
        }
      }
      TermList r = detail::reduce_full(detail::s_poly(g[i], g[j]), g, counter);
      if (r.empty()) {
        ++st.zero_reductions;
        continue;
      }
      detail::make_monic(r);
      g.emplace_back(std::move(r));
    }
  }
  st.steps = counter.steps();
  st.final_size = g.size();
  if (stats) *stats = st;

  std::vector<TermList> out;
  out.reserve(g.size());
  for (auto& p : g) out.push_back(std::move(p.terms));
  return GroebnerBasis::from_ranked(input.vars(), ord, std::move(out), false);
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  std::vector<TermList> elems = gb.ranked();
  std::sort(elems.begin(), elems.end(),
            [](const TermList& a, const TermList& b) { return a.front().mono < b.front().mono; });

  // Minimal basis: drop any element whose leading monomial is divisible by
  // that of an element kept before it (smaller leads come first).
  std::vector<RankedPoly> minimal;
  for (auto& e : elems) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.lead().divides(e.front().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.emplace_back(std::move(e));
  }

  StepCounter counter(default_step_budget());
  std::vector<TermList> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<RankedPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(minimal[o]);
    // No other lead divides this lead, so the lead survives untouched.
    TermList r = detail::reduce_full(minimal[k].terms, others, counter);
    detail::make_monic(r);
    reduced.push_back(std::move(r));
  }
  return GroebnerBasis::from_ranked(gb.vars(), gb.order(), std::move(reduced), true);
}

GroebnerBasis reduced_groebner_basis(const IdealPresentation& input,
                                     const BuchbergerOptions& opts, BuchbergerStats* stats) {
  return reduce_basis(buchberger(input, opts, stats));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  const auto [lf, cf] = algebra::leading_term(f, ord);
  const auto [lg, cg] = algebra::leading_term(g, ord);
  const Monomial d = lf.gcd(lg);
  return f.mul_term(lg / d, cg) - g.mul_term(lf / d, cf);
}

StandardForm reduce_standard_form(const Polynomial& f, const IdealPresentation& divisors) {
  if (divisors.empty()) throw DomainError("division by an empty divisor list");
  if (!(f.vars() == divisors.vars())) throw ConfigError("dividend lives in a different ring");
  const MonomialOrder& ord = divisors.order();
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors.generators()) leads.push_back(algebra::leading_term(g, ord));

  StandardForm out;
  out.quotients.assign(divisors.size(), Polynomial(f.vars()));
  out.remainder = Polynomial(f.vars());
  Polynomial p = f;
  while (!p.is_zero()) {
    const auto [m, c] = algebra::leading_term(p, ord);
    std::size_t k = 0;
    while (k < leads.size() && !leads[k].first.divides(m)) ++k;
    if (k == leads.size()) {
      const Polynomial lt = Polynomial::term(f.vars(), m, c);
      out.remainder += lt;
      p -= lt;
      continue;
    }
    const Monomial q = m / leads[k].first;
    const Rational coef = c / leads[k].second;
    out.quotients[k] += Polynomial::term(f.vars(), q, coef);
    p -= divisors.generators()[k].mul_term(q, coef);
    ++out.steps;
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(f.vars() == gb.vars())) throw ConfigError("polynomial lives in a different ring");
  if (f.is_zero() || gb.size() == 0) return f;
  std::vector<RankedPoly> divisors;
  divisors.reserve(gb.size());
  for (const auto& r : gb.ranked()) divisors.emplace_back(r);
  StepCounter counter(default_step_budget());
  TermList rem = detail::reduce_full(gb.order().to_ranked(f), divisors, counter);
  return gb.order().from_ranked(gb.vars(), rem);
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

std::optional<Polynomial> first_non_member(const std::vector<Polynomial>& gens,
                                           const GroebnerBasis& gb) {
  for (const auto& g : gens)
    if (!membership(g, gb)) return g;
  return std::nullopt;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& r : gb.ranked()) leads.push_back(gb.order().from_ranked(r.front().mono));
  return MonomialIdeal(std::move(leads));
}

CriterionResult check_buchberger_criterion(const std::vector<Polynomial>& elems,
                                           const MonomialOrder& ord) {
  CriterionResult res;
  if (elems.empty()) return res;
  const IdealPresentation divisors(elems.front().vars(), elems, ord);
  for (std::size_t j = 1; j < elems.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++res.pairs_checked;
      const Polynomial s = s_polynomial(elems[i], elems[j], ord);
      if (s.is_zero()) continue;
      Polynomial r = reduce_standard_form(s, divisors).remainder;
      if (!r.is_zero()) {
        res.ok = false;
        res.pair = {i, j};
        res.witness = std::move(r);
        return res;
      }
    }
  return res;
}

}  // namespace tenscert::groebner
