#include "tenscert/ideals.hpp"

#include <set>

#include "tenscert/actions.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/io.hpp"

namespace tenscert::ideals {

using algebra::Letter;
using algebra::VarId;

namespace {

Polynomial var(const VarSet& vs, VarId id) { return Polynomial::variable(vs, id); }

/// a - e b
Polynomial linear(const VarSet& vs, VarId a, int e, VarId b) {
  return var(vs, a) - Polynomial::constant(vs, Rational(e)) * var(vs, b);
}

void check_index(int i, const Signature& eps) {
  if (i < 1 || i > eps.size())
    throw DomainError("index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(eps.size()));
}

std::string render(const Polynomial& f) { return io::render_polynomial(f); }

std::string render_mono(const VarSet& vs, const Monomial& m) {
  return io::render_polynomial(Polynomial::term(vs, m, Rational(1)));
}

std::string join_indices(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

/// Mutual membership between the ideal generated by gens and the ideal with
/// reduced basis gb, where gb_of_gens is a GB of gens.
void check_equal(Verdict& v, const std::string& claim, const std::vector<Polynomial>& gens,
                 const GroebnerBasis& gens_basis, const GroebnerBasis& other) {
  if (auto miss = groebner::first_non_member(gens, other)) {
    v.add(claim, false, "generator outside the other ideal", {render(*miss)});
    return;
  }
  if (auto miss = groebner::first_non_member(other.elements(), gens_basis)) {
    v.add(claim, false, "basis element outside the generated ideal", {render(*miss)});
    return;
  }
  v.add(claim, true);
}

}  // namespace

AxisIdealTriple build_axis_ideals(const Signature& eps) {
  const int n = eps.size();
  AxisIdealTriple t{eps, VarSet::tensorial(n), {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    t.x.push_back(linear(t.vars, t.vars.y(i), eps[i], t.vars.z(i)));
    t.y.push_back(linear(t.vars, t.vars.z(i), eps[i], t.vars.x(i)));
    t.z.push_back(linear(t.vars, t.vars.x(i), eps[i], t.vars.y(i)));
  }
  return t;
}

Polynomial generator_T(int i, int j, int k, const Signature& eps, const VarSet& vs) {
  check_index(i, eps);
  check_index(j, eps);
  check_index(k, eps);
  return linear(vs, vs.x(i), eps[i], vs.y(i)) * linear(vs, vs.y(j), eps[j], vs.z(j)) *
         linear(vs, vs.z(k), eps[k], vs.x(k));
}

Polynomial generator_P(int i, int j, const Signature& eps, const VarSet& vs) {
  check_index(i, eps);
  check_index(j, eps);
  if (eps[i] != 1 || eps[j] != 1)
    throw DomainError("quadratic generator needs symmetric indices");
  return linear(vs, vs.z(i), 1, vs.x(i)) * linear(vs, vs.x(j), 1, vs.y(j)) -
         linear(vs, vs.z(j), 1, vs.x(j)) * linear(vs, vs.x(i), 1, vs.y(i));
}

std::vector<Polynomial> CandidateBasis::all() const {
  std::vector<Polynomial> out = torsion;
  out.insert(out.end(), quadratic.begin(), quadratic.end());
  return out;
}

CandidateBasis candidate_basis(const Signature& eps) {
  const int n = eps.size();
  const VarSet vs = VarSet::tensorial(n);
  CandidateBasis b{eps, {}, {}, {}, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        b.torsion_indices.push_back({i, j, k});
        b.torsion.push_back(generator_T(i, j, k, eps, vs));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (eps[i] == 1 && eps[j] == 1) {
        b.quadratic_indices.emplace_back(i, j);
        b.quadratic.push_back(generator_P(i, j, eps, vs));
      }
  return b;
}

CoefficientTensor coefficient_tensor(const Polynomial& p) {
  if (p.uses(VarSet::t())) throw DomainError("coefficient tensor is undefined with t");
  const VarSet& vs = p.vars();
  const int n = vs.n_indices();
  CoefficientTensor out;
  for (const auto& t : p.terms()) {
    std::vector<int> I(n), J(n), K(n);
    for (int i = 1; i <= n; ++i) {
      I[i - 1] = t.mono[vs.x(i)];
      J[i - 1] = t.mono[vs.y(i)];
      K[i - 1] = t.mono[vs.z(i)];
    }
    out.emplace(ExponentTriple{std::move(I), std::move(J), std::move(K)}, t.coeff);
  }
  return out;
}

bool is_universally_tensorial_linear(const Polynomial& p, const Signature& eps) {
  if (p.vars().n_indices() != eps.size()) throw DomainError("signature length mismatch");
  const CoefficientTensor a = coefficient_tensor(p);
  const auto sign_of = [&](const std::vector<int>& e) {
    int s = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (eps.entries()[i] < 0 && (e[i] & 1)) s = -s;
    return s;
  };
  const auto sum = [](std::vector<int> u, const std::vector<int>& v) {
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
    return u;
  };
  // Family 1: Σ_J ε^J a_{I,J,T-J}; family 2: Σ_K ε^K a_{T-K,J,K};
  // family 3: Σ_I ε^I a_{I,T-I,K}.
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::array<std::map<Key, Rational>, 3> fam;
  for (const auto& [key, c] : a) {
    const auto& [I, J, K] = key;
    fam[0][{I, sum(J, K)}] += Rational(sign_of(J)) * c;
    fam[1][{sum(I, K), J}] += Rational(sign_of(K)) * c;
    fam[2][{sum(I, J), K}] += Rational(sign_of(I)) * c;
  }
  for (const auto& f : fam)
    for (const auto& [k, v] : f)
      if (!v.is_zero()) return false;
  return true;
}

bool vanishes_on_variety(const Polynomial& p, const Signature& eps) {
  const VarSet& vs = p.vars();
  if (p.uses(VarSet::t())) throw DomainError("variety test is undefined with t");
  if (vs.n_indices() != eps.size()) throw DomainError("signature length mismatch");
  const int n = vs.n_indices();
  const auto scaled = [&](VarId id, int e) {
    return Polynomial::constant(vs, Rational(e)) * var(vs, id);
  };
  std::array<std::map<VarId, Polynomial>, 3> subs;
  for (int i = 1; i <= n; ++i) {
    subs[0].emplace(vs.y(i), scaled(vs.z(i), eps[i]));
    subs[1].emplace(vs.z(i), scaled(vs.x(i), eps[i]));
    subs[2].emplace(vs.x(i), scaled(vs.y(i), eps[i]));
  }
  for (const auto& s : subs)
    if (!algebra::substitute(p, s, vs).is_zero()) return false;
  return true;
}

MonomialOrder drop_t(const MonomialOrder& ord) {
  std::vector<VarId> r;
  for (VarId id : ord.ranking())
    if (id != VarSet::t()) r.push_back(id);
  return MonomialOrder(std::move(r), ord.name());
}

IntersectionResult intersect_pair(const std::vector<Polynomial>& I,
                                  const std::vector<Polynomial>& J,
                                  const MonomialOrder& elim_order,
                                  const BuchbergerOptions& opts) {
  if (!elim_order.eliminates_t()) throw ConfigError("elimination order must rank t first");
  if (I.empty() || J.empty()) throw DomainError("intersection with the zero ideal");
  const VarSet base = I.front().vars();
  if (base.has_t()) throw ConfigError("intersection inputs must not involve t");
  const VarSet tring = base.with_t(true);
  const Polynomial t = Polynomial::variable(tring, VarSet::t());
  const Polynomial one_minus_t = Polynomial::constant(tring, Rational(1)) - t;

  std::vector<Polynomial> gens;
  gens.reserve(I.size() + J.size());
  for (const auto& f : I) gens.push_back(t * f.with_vars(tring));
  for (const auto& g : J) gens.push_back(one_minus_t * g.with_vars(tring));

  IntersectionResult res;
  res.elimination_basis = groebner::reduced_groebner_basis(
      IdealPresentation(tring, std::move(gens), elim_order), opts, &res.stats);
  std::vector<Polynomial> kept;
  for (const auto& e : res.elimination_basis.elements())
    if (!e.uses(VarSet::t())) kept.push_back(e.with_vars(base));
  res.intersection = GroebnerBasis(base, drop_t(elim_order), std::move(kept), true);
  return res;
}

std::vector<Polynomial> product_ideal(const std::vector<Polynomial>& I,
                                      const std::vector<Polynomial>& J) {
  std::vector<Polynomial> out;
  out.reserve(I.size() * J.size());
  for (const auto& a : I)
    for (const auto& b : J) out.push_back(a * b);
  return out;
}

Polynomial knutson_F(const Signature& eps) {
  const VarSet vs = VarSet::tensorial(eps.size());
  Polynomial f = Polynomial::constant(vs, Rational(1));
  for (int i = 1; i <= eps.size(); ++i)
    f = f * linear(vs, vs.x(i), eps[i], vs.y(i)) * linear(vs, vs.y(i), eps[i], vs.z(i)) *
        var(vs, vs.z(i));
  return f;
}

std::array<Letter, 3> knutson_letters(AxisPair pair) {
  switch (pair) {
    case AxisPair::XZ: return {Letter::X, Letter::Y, Letter::Z};
    case AxisPair::XY: return {Letter::Y, Letter::Z, Letter::X};
    case AxisPair::YZ: return {Letter::Z, Letter::X, Letter::Y};
  }
  throw DomainError("bad axis pair");
}

Verdict verify_knutson_product(const Signature& eps, const BuchbergerOptions& opts) {
  Verdict v;
  const AxisIdealTriple ax = build_axis_ideals(eps);
  const VarSet base = ax.vars;
  const VarSet tring = base.with_t(true);

  const Polynomial F = knutson_F(eps);
  Monomial all;
  for (int i = 1; i <= eps.size(); ++i) {
    all.set(base.x(i), 1);
    all.set(base.y(i), 1);
    all.set(base.z(i), 1);
  }
  for (const auto& ord : {MonomialOrder::index_descending(base), MonomialOrder::letter_major(base)}) {
    const Monomial lead = algebra::leading_term(F, ord).first;
    v.add("splitting-polynomial-leading-monomial-" + ord.name(), lead == all,
          "leading monomial " + render_mono(base, lead), {render_mono(base, lead)});
  }

  struct Case {
    AxisPair pair;
    const char* name;
    const std::vector<Polynomial>* a;
    const std::vector<Polynomial>* b;
  };
  const Case cases[] = {{AxisPair::XZ, "xz", &ax.x, &ax.z},
                        {AxisPair::XY, "xy", &ax.x, &ax.y},
                        {AxisPair::YZ, "yz", &ax.y, &ax.z}};
  for (const auto& c : cases) {
    const auto letters = knutson_letters(c.pair);
    const MonomialOrder ord = MonomialOrder::index_descending_letters(base, letters);
    const MonomialOrder ord_t = MonomialOrder::index_descending_letters(tring, letters);
    const std::vector<Polynomial> prod = product_ideal(*c.a, *c.b);
    const GroebnerBasis prod_gb =
        groebner::reduced_groebner_basis(IdealPresentation(base, prod, ord), opts);
    const IntersectionResult inter = intersect_pair(*c.a, *c.b, ord_t, opts);
    check_equal(v, std::string("product-equals-intersection-") + c.name, prod, prod_gb,
                inter.intersection);
    const MonomialIdeal in = groebner::initial_ideal(prod_gb);
    const auto sq = in.square_witness();
    v.add(std::string("product-initial-ideal-squarefree-") + c.name, !sq,
          sq ? "non-squarefree leading monomial" : "",
          sq ? std::vector<std::string>{render_mono(base, *sq)} : std::vector<std::string>{});
  }
  return v;
}

std::vector<Polynomial> j_generators(const Signature& eps) {
  const int n = eps.size();
  const VarSet tr = VarSet::tensorial(n, true);
  const Polynomial t = var(tr, VarSet::t());
  const Polynomial one_minus_t = Polynomial::constant(tr, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(t * linear(tr, tr.y(i), eps[i], tr.z(i)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      gens.push_back(one_minus_t * linear(tr, tr.z(i), eps[i], tr.x(i)) *
                     linear(tr, tr.x(j), eps[j], tr.y(j)));
  return gens;
}

std::vector<int> indices_of(const VarSet& vs, const Monomial& m) {
  std::vector<int> out;
  for (int i = 1; i <= vs.n_indices(); ++i)
    if (m[vs.x(i)] || m[vs.y(i)] || m[vs.z(i)]) out.push_back(i);
  return out;
}

GeneratingSetResult verify_generating_theorem(const Signature& eps,
                                              const GeneratingSetOptions& opts) {
  const int n = eps.size();
  const VarSet base = VarSet::tensorial(n);
  const VarSet tring = VarSet::tensorial(n, true);
  const MonomialOrder ord_t = MonomialOrder::index_descending(tring);
  const MonomialOrder ord = drop_t(ord_t);

  GeneratingSetResult res;
  res.j_basis = groebner::reduced_groebner_basis(
      IdealPresentation(tring, j_generators(eps), ord_t), opts.buchberger, &res.stats);
  std::vector<Polynomial> kept;
  for (const auto& e : res.j_basis.elements())
    if (!e.uses(VarSet::t())) kept.push_back(e.with_vars(base));
  res.i_basis = GroebnerBasis(base, ord, std::move(kept), true);
  res.initial = groebner::initial_ideal(res.i_basis);

  Verdict& v = res.verdict;
  const CandidateBasis cand = candidate_basis(eps);
  const std::vector<Polynomial> g = cand.all();
  const GroebnerBasis g_basis =
      groebner::reduced_groebner_basis(IdealPresentation(base, g, ord), opts.buchberger);
  check_equal(v, "intersection-equals-candidate-ideal", g, g_basis, res.i_basis);

  // Structural claims on the elimination basis.
  bool few = true;
  bool spans = true;
  std::string few_w;
  std::string spans_w;
  std::string spans_detail;
  for (const auto& e : res.j_basis.elements()) {
    const std::set<int> used_set = e.indices_used();
    const std::vector<int> used(used_set.begin(), used_set.end());
    if (few && used.size() > 3) {
      few = false;
      few_w = io::render_polynomial(e, ord_t);
    }
    const Monomial lead = algebra::leading_term(e, ord_t).first;
    const std::vector<int> lead_used = indices_of(tring, lead);
    if (spans && lead_used != used) {
      spans = false;
      spans_w = io::render_polynomial(e, ord_t);
      spans_detail = "leading term indices " + join_indices(lead_used) + " vs element indices " +
                     join_indices(used);
    }
  }
  v.add("elimination-basis-at-most-three-indices", few,
        few ? "" : "element involving more than three indices",
        few ? std::vector<std::string>{} : std::vector<std::string>{few_w});
  v.add("elimination-basis-leading-term-covers-indices", spans,
        spans_detail,
        spans ? std::vector<std::string>{} : std::vector<std::string>{spans_w});

  if (opts.cross_check) {
    const AxisIdealTriple ax = build_axis_ideals(eps);
    const IntersectionResult yz = intersect_pair(ax.y, ax.z, ord_t, opts.buchberger);
    const IntersectionResult xyz =
        intersect_pair(ax.x, yz.intersection.elements(), ord_t, opts.buchberger);
    check_equal(v, "two-elimination-cross-check", res.i_basis.elements(), res.i_basis,
                xyz.intersection);
  }

  const auto sq = res.initial.square_witness();
  v.notes.push_back("elimination basis size " + std::to_string(res.j_basis.size()) +
                    ", intersection basis size " + std::to_string(res.i_basis.size()));
  v.notes.push_back(sq ? "initial ideal not squarefree: " + render_mono(base, *sq)
                       : "initial ideal squarefree");
  return res;
}

MonomialIdeal squeeze_closed_form(int n) {
  const VarSet vs = VarSet::tensorial(n);
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= std::min(i, j); ++k) {
        Monomial m = Monomial::var(vs.x(i)) * Monomial::var(vs.x(j)) * Monomial::var(vs.y(k));
        gens.push_back(m);
      }
  for (int l = 1; l <= n; ++l)
    for (int m = l + 1; m <= n; ++m)
      gens.push_back(Monomial::var(vs.x(l)) * Monomial::var(vs.y(m)));
  return MonomialIdeal(std::move(gens));
}

Verdict verify_squeeze_appendix(int n, const BuchbergerOptions& opts) {
  Verdict v;
  const Signature eps = Signature::constant(n, 1);
  const VarSet vs = VarSet::tensorial(n);
  const MonomialOrder ord = MonomialOrder::letter_major(vs);
  const AxisIdealTriple ax = build_axis_ideals(eps);

  struct Prod {
    const char* name;
    std::vector<Polynomial> natural;
    std::vector<Polynomial> gens;
  };
  // The y-z product needs the quadratic generators on top of its natural
  // products to become a basis under the letter-major order.
  std::vector<Polynomial> yz = product_ideal(ax.y, ax.z);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) yz.push_back(generator_P(i, j, eps, vs));
  const Prod prods[] = {{"xy", product_ideal(ax.x, ax.y), product_ideal(ax.x, ax.y)},
                        {"xz", product_ideal(ax.x, ax.z), product_ideal(ax.x, ax.z)},
                        {"yz", product_ideal(ax.y, ax.z), yz}};
  std::optional<MonomialIdeal> meet;
  for (const auto& p : prods) {
    if (p.gens.size() != p.natural.size()) {
      const GroebnerBasis nat =
          groebner::reduced_groebner_basis(IdealPresentation(vs, p.natural, ord), opts);
      const auto miss = groebner::first_non_member(p.gens, nat);
      v.add(std::string("augmented-generators-inside-product-") + p.name, !miss, "",
            miss ? std::vector<std::string>{render(*miss)} : std::vector<std::string>{});
    }
    const auto crit = groebner::check_buchberger_criterion(p.gens, ord);
    v.add(std::string("product-generators-form-basis-") + p.name, crit.ok,
          crit.ok ? std::to_string(crit.pairs_checked) + " pairs" : "S-pair with nonzero remainder",
          crit.ok ? std::vector<std::string>{} : std::vector<std::string>{render(crit.witness)});
    const GroebnerBasis gb =
        groebner::reduced_groebner_basis(IdealPresentation(vs, p.gens, ord), opts);
    const MonomialIdeal in = groebner::initial_ideal(gb);
    meet = meet ? meet->intersect(in) : in;
  }

  const MonomialIdeal closed = squeeze_closed_form(n);
  {
    std::vector<std::string> w;
    for (const auto& m : meet->generators())
      if (!closed.contains(m)) w.push_back(render_mono(vs, m));
    for (const auto& m : closed.generators())
      if (!meet->contains(m)) w.push_back(render_mono(vs, m));
    v.add("initial-ideal-intersection-matches-closed-form", *meet == closed,
          std::to_string(meet->size()) + " minimal generators", w);
  }

  const CandidateBasis cand = candidate_basis(eps);
  bool leads_ok = true;
  std::vector<std::string> lead_w;
  std::vector<Monomial> leads;
  for (std::size_t k = 0; k < cand.torsion.size(); ++k) {
    const auto [i, j, kk] = cand.torsion_indices[k];
    const Monomial lead = algebra::leading_term(cand.torsion[k], ord).first;
    const Monomial want = Monomial::var(vs.x(i)) * Monomial::var(vs.x(kk)) * Monomial::var(vs.y(j));
    if (lead != want && leads_ok) {
      leads_ok = false;
      lead_w.push_back(render(cand.torsion[k]));
    }
    leads.push_back(lead);
  }
  for (std::size_t k = 0; k < cand.quadratic.size(); ++k) {
    const auto [i, j] = cand.quadratic_indices[k];
    const Monomial lead = algebra::leading_term(cand.quadratic[k], ord).first;
    const Monomial want = Monomial::var(vs.x(i)) * Monomial::var(vs.y(j));
    if (lead != want && leads_ok) {
      leads_ok = false;
      lead_w.push_back(render(cand.quadratic[k]));
    }
    leads.push_back(lead);
  }
  v.add("candidate-leading-monomials", leads_ok, "", lead_w);

  const std::vector<Polynomial> g = cand.all();
  bool inside = true;
  std::vector<std::string> inside_w;
  for (const auto& p : g)
    if (!vanishes_on_variety(p, eps)) {
      inside = false;
      inside_w.push_back(render(p));
      break;
    }
  v.add("candidate-inside-tensorial-ideal", inside, "", inside_w);

  const MonomialIdeal cand_in(leads);
  {
    std::vector<std::string> w;
    for (const auto& m : cand_in.generators())
      if (!meet->contains(m)) w.push_back(render_mono(vs, m));
    for (const auto& m : meet->generators())
      if (!cand_in.contains(m)) w.push_back(render_mono(vs, m));
    v.add("candidate-initial-ideal-matches-intersection", cand_in == *meet,
          std::to_string(cand_in.size()) + " vs " + std::to_string(meet->size()) + " generators",
          w);
  }

  const auto crit = groebner::check_buchberger_criterion(g, ord);
  v.add("candidate-satisfies-buchberger-criterion", crit.ok,
        std::to_string(crit.pairs_checked) + " pairs",
        crit.ok ? std::vector<std::string>{} : std::vector<std::string>{render(crit.witness)});

  BuchbergerStats st;
  const GroebnerBasis rerun = groebner::buchberger(IdealPresentation(vs, g, ord), opts, &st);
  v.add("candidate-buchberger-adds-nothing", rerun.size() == g.size(),
        std::to_string(rerun.size() - g.size()) + " elements added",
        rerun.size() == g.size() ? std::vector<std::string>{}
                                 : std::vector<std::string>{render(rerun.elements()[g.size()])});
  return v;
}

Verdict s3_invariance_check(const Signature& eps, const GroebnerBasis& i_basis) {
  Verdict v;
  const CandidateBasis cand = candidate_basis(eps);
  std::vector<Polynomial> subjects = i_basis.elements();
  subjects.insert(subjects.end(), cand.torsion.begin(), cand.torsion.end());
  std::vector<std::string> w;
  for (const auto& sigma : algebra::LetterPerm::all()) {
    for (const auto& g : subjects) {
      const Polynomial img = algebra::apply_s3(g, sigma);
      if (!groebner::membership(img, i_basis)) {
        w.push_back(render(img));
        break;
      }
    }
    if (!w.empty()) break;
  }
  v.add("letter-permutation-invariance", w.empty(), "", w);

  std::vector<std::string> wc;
  for (const auto& g : i_basis.elements()) {
    for (const auto& [d, comp] : algebra::multidegree_components(g))
      if (!groebner::membership(comp, i_basis)) {
        wc.push_back(render(comp));
        break;
      }
    if (!wc.empty()) break;
  }
  v.add("multidegree-component-membership", wc.empty(), "", wc);
  return v;
}

Polynomial random_polynomial(std::mt19937_64& rng, const VarSet& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<int> co(-3, 3);
  algebra::TermList out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 1; i <= vars.n_indices(); ++i)
      for (VarId id : {vars.x(i), vars.y(i), vars.z(i)}) m.set(id, ex(rng));
    int c = 0;
    while (c == 0) c = co(rng);
    out.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(vars, std::move(out));
}

Polynomial random_member(std::mt19937_64& rng, const std::vector<Polynomial>& gens, int summands) {
  if (gens.empty()) throw DomainError("random member of the zero ideal");
  const VarSet vs = gens.front().vars();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Polynomial acc(vs);
  for (int s = 0; s < summands; ++s) {
    const Polynomial mult = random_polynomial(rng, vs, 2, 1);
    acc += mult * gens[pick(rng)];
  }
  return acc;
}

OracleTally oracle_equivalence(const Signature& eps, const GroebnerBasis& i_basis, int samples,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const VarSet vs = VarSet::tensorial(eps.size());
  const CandidateBasis cand = candidate_basis(eps);
  const std::vector<Polynomial> g = cand.all();

  std::vector<Polynomial> subjects;
  subjects.reserve(static_cast<std::size_t>(samples) + g.size());
  std::uniform_int_distribution<int> nterms(1, 6);
  for (int s = 0; s < samples; ++s) {
    switch (s % 3) {
      case 0: subjects.push_back(random_polynomial(rng, vs, nterms(rng), 2)); break;
      case 1: subjects.push_back(random_member(rng, g, 3)); break;
      default:
        subjects.push_back(random_member(rng, g, 2) + random_polynomial(rng, vs, 1, 2));
        break;
    }
  }
  subjects.insert(subjects.end(), g.begin(), g.end());

  OracleTally tally;
  for (std::size_t k = 0; k < subjects.size(); ++k) {
    const Polynomial& p = subjects[k];
    const bool a = is_universally_tensorial_linear(p, eps);
    const bool b = vanishes_on_variety(p, eps);
    const bool c = groebner::membership(p, i_basis);
    const bool candidate = k >= static_cast<std::size_t>(samples);
    ++tally.samples;
    if (c) ++tally.members;
    if (a != b || b != c || (candidate && !c)) {
      ++tally.disagreements;
      if (!tally.first_disagreement) tally.first_disagreement = p;
    }
  }
  return tally;
}

}  // namespace tenscert::ideals
