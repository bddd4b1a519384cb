#include "tenscert/polynomial.hpp"

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

namespace {

void check_membership(const VarSet& vars, const Monomial& m) {
  for (std::size_t id = 0; id < kMaxVars; ++id)
    if (m[static_cast<VarId>(id)] != 0 && !vars.contains(static_cast<VarId>(id)))
      throw DomainError("monomial uses a variable outside its ring");
}

}  // namespace

Polynomial Polynomial::constant(VarSet vars, const Rational& c) {
  Polynomial p(vars);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarSet vars, VarId id) {
  if (!vars.contains(id)) throw DomainError("variable not in ring");
  Polynomial p(vars);
  p.terms_.push_back({Monomial::var(id), Rational(1)});
  return p;
}

Polynomial Polynomial::term(VarSet vars, const Monomial& m, const Rational& c) {
  check_membership(vars, m);
  Polynomial p(vars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(VarSet vars, TermList terms) {
  for (const auto& t : terms) check_membership(vars, t.mono);
  detail::normalize(terms);
  Polynomial p(vars);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

std::set<int> Polynomial::indices_used() const {
  std::set<int> out;
  const std::uint32_t s = support();
  for (int id = 1; id <= 3 * vars_.n_indices(); ++id)
    if ((s >> id) & 1u) out.insert(vars_.index(static_cast<VarId>(id)));
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

Polynomial Polynomial::with_vars(VarSet target) const {
  const bool has_chart = target.n_chart() != 0 || vars_.n_chart() != 0;
  if (has_chart && (target.n_indices() != vars_.n_indices() || target.n_chart() != vars_.n_chart()))
    throw ConfigError("cannot re-home between rings with different layouts");
  Polynomial p(target);
  for (const auto& t : terms_) check_membership(target, t.mono);
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::derivative(VarId id) const {
  TermList out;
  for (const auto& t : terms_) {
    const int e = t.mono[id];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(id, e - 1);
    out.push_back({m, t.coeff * Rational(e)});
  }
  // Lowering one exponent keeps distinct monomials distinct and preserves
  // relative order among the survivors.
  Polynomial p(vars_);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative power");
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(vars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!(vars_ == o.vars_)) throw ConfigError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  terms_ = detail::add(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  terms_ = detail::add(terms_, o.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial p(a.vars_);
  p.terms_ = detail::mul(a.terms_, b.terms_);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  check_membership(vars_, m);
  Polynomial p(vars_);
  p.terms_ = detail::scale(terms_, c, m);
  return p;
}

Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment,
                      const VarSet& target) {
  for (const auto& [id, img] : assignment)
    if (!(img.vars() == target)) throw ConfigError("substitution images must share a ring");

  // Cache powers of each image as they are requested.
  std::map<std::pair<VarId, int>, Polynomial> powers;
  auto power_of = [&](VarId id, int e) -> const Polynomial& {
    auto key = std::make_pair(id, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial base;
    if (auto a = assignment.find(id); a != assignment.end()) {
      base = a->second;
    } else {
      base = Polynomial::variable(target, id);
    }
    return powers.emplace(key, base.pow(e)).first->second;
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t id = 0; id < kMaxVars; ++id) {
      const int e = t.mono[static_cast<VarId>(id)];
      if (e != 0) term = term * power_of(static_cast<VarId>(id), e);
    }
    result += term;
  }
  return result;
}

MultiDegree multidegree(const VarSet& vars, const Monomial& m) {
  MultiDegree d(static_cast<std::size_t>(vars.n_indices()), 0);
  for (int i = 1; i <= vars.n_indices(); ++i)
    d[i - 1] = m[vars.x(i)] + m[vars.y(i)] + m[vars.z(i)];
  return d;
}

std::map<MultiDegree, Polynomial> multidegree_components(const Polynomial& f) {
  if (f.uses(VarSet::t())) throw DomainError("multidegree is undefined in the presence of t");
  std::map<MultiDegree, TermList> buckets;
  for (const auto& t : f.terms()) buckets[multidegree(f.vars(), t.mono)].push_back(t);
  std::map<MultiDegree, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Polynomial::from_terms(f.vars(), std::move(terms)));
  return out;
}

}  // namespace tenscert::algebra
