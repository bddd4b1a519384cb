#include "tenscert/courant.hpp"

#include <map>
#include <utility>

#include "tenscert/errors.hpp"
#include "tenscert/io.hpp"

namespace tenscert::courant {

using algebra::Monomial;
using algebra::VarId;

Chart::Chart(int dim) : dim_(dim), vars_(VarSet::chart(dim)) {
  if (dim < 1) throw ConfigError("chart dimension must be positive");
}

Scalar Chart::coordinate(int k) const {
  if (k < 1 || k > dim_) throw DomainError("chart coordinate out of range");
  return Scalar::variable(vars_, vars_.u(k));
}

Scalar Chart::partial(const Scalar& f, int k) const {
  if (k < 1 || k > dim_) throw DomainError("chart coordinate out of range");
  return f.derivative(vars_.u(k));
}

namespace {

void check_dims(const Section& a, const Section& b) {
  if (a.vec.size() != b.vec.size() || a.form.size() != b.form.size() || a.vec.empty() ||
      a.vec.front().vars() != b.vec.front().vars())
    throw ConfigError("sections live on different charts");
}

const VarSet& vars_of(const Section& s) {
  if (s.vec.empty()) throw ConfigError("empty section");
  return s.vec.front().vars();
}

Scalar d(const Scalar& f, int j) {
  const VarSet& vs = f.vars();
  return f.derivative(vs.u(j));
}

}  // namespace

Section Section::zero(const Chart& chart) {
  return {std::vector<Scalar>(static_cast<std::size_t>(chart.dim()), chart.zero()),
          std::vector<Scalar>(static_cast<std::size_t>(chart.dim()), chart.zero())};
}

Section Section::basis(const Chart& chart, int idx) {
  const int n = chart.dim();
  if (idx < 0 || idx >= 2 * n) throw DomainError("basis index out of range");
  Section s = zero(chart);
  if (idx < n)
    s.vec[static_cast<std::size_t>(idx)] = chart.constant(1);
  else
    s.form[static_cast<std::size_t>(idx - n)] = chart.constant(1);
  return s;
}

Section Section::vector_field(std::vector<Scalar> comps) {
  if (comps.empty()) throw ConfigError("empty section");
  std::vector<Scalar> zeros(comps.size(), Scalar(comps.front().vars()));
  return {std::move(comps), std::move(zeros)};
}

Section Section::one_form(std::vector<Scalar> comps) {
  if (comps.empty()) throw ConfigError("empty section");
  std::vector<Scalar> zeros(comps.size(), Scalar(comps.front().vars()));
  return {std::move(zeros), std::move(comps)};
}

bool Section::is_zero() const {
  for (const auto& c : vec)
    if (!c.is_zero()) return false;
  for (const auto& c : form)
    if (!c.is_zero()) return false;
  return true;
}

Section& Section::operator+=(const Section& o) {
  check_dims(*this, o);
  for (std::size_t k = 0; k < vec.size(); ++k) {
    vec[k] += o.vec[k];
    form[k] += o.form[k];
  }
  return *this;
}

Section& Section::operator-=(const Section& o) {
  check_dims(*this, o);
  for (std::size_t k = 0; k < vec.size(); ++k) {
    vec[k] -= o.vec[k];
    form[k] -= o.form[k];
  }
  return *this;
}

Section& Section::operator*=(const Scalar& f) {
  for (auto& c : vec) c *= f;
  for (auto& c : form) c *= f;
  return *this;
}

Section& Section::operator*=(const Rational& c) {
  for (auto& v : vec) v *= c;
  for (auto& v : form) v *= c;
  return *this;
}

Section Section::operator-() const {
  Section out = *this;
  out *= Rational(-1);
  return out;
}

std::string to_string(const Section& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.vec.size(); ++k)
    out += (k ? ", " : "") + io::render_polynomial(s.vec[k]);
  out += " | ";
  for (std::size_t k = 0; k < s.form.size(); ++k)
    out += (k ? ", " : "") + io::render_polynomial(s.form[k]);
  return out + ")";
}

Scalar inner_product(const Section& a, const Section& b) {
  check_dims(a, b);
  Scalar acc(vars_of(a));
  for (std::size_t k = 0; k < a.vec.size(); ++k) {
    acc += a.form[k] * b.vec[k];
    acc += b.form[k] * a.vec[k];
  }
  return acc * Rational(1, 2);
}

Scalar anchor(const Section& a, const Scalar& f) {
  if (f.vars() != vars_of(a)) throw ConfigError("function and section live on different charts");
  Scalar acc(f.vars());
  for (int j = 1; j <= a.dim(); ++j) acc += a.vec[static_cast<std::size_t>(j - 1)] * d(f, j);
  return acc;
}

Section differential(const Scalar& f) {
  const int n = f.vars().n_chart();
  if (n < 1) throw ConfigError("differential needs a chart scalar");
  std::vector<Scalar> comps;
  for (int j = 1; j <= n; ++j) comps.push_back(d(f, j));
  return Section::one_form(std::move(comps));
}

Section courant_bracket(const Section& a, const Section& b) {
  check_dims(a, b);
  const int n = a.dim();
  const auto& X = a.vec;
  const auto& al = a.form;
  const auto& Y = b.vec;
  const auto& be = b.form;
  Section out{std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(vars_of(a))),
              std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(vars_of(a)))};
  for (int k = 0; k < n; ++k) {
    auto& vk = out.vec[static_cast<std::size_t>(k)];
    auto& fk = out.form[static_cast<std::size_t>(k)];
    for (int j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const auto uk = static_cast<std::size_t>(k);
      // [X, Y]
      vk += X[uj] * d(Y[uk], j + 1) - Y[uj] * d(X[uk], j + 1);
      // L_X β
      fk += X[uj] * d(be[uk], j + 1) + be[uj] * d(X[uj], k + 1);
      // - i_Y dα
      fk -= Y[uj] * (d(al[uk], j + 1) - d(al[uj], k + 1));
    }
  }
  return out;
}

Endomorphism::Endomorphism(const Chart& chart, std::vector<Scalar> entries)
    : n_(chart.dim()), m_(std::move(entries)) {
  if (m_.size() != static_cast<std::size_t>(4 * n_ * n_))
    throw ConfigError("endomorphism needs (2n)^2 entries");
  for (const auto& e : m_)
    if (e.vars() != chart.vars()) throw ConfigError("endomorphism entry outside the chart ring");
}

Endomorphism Endomorphism::zero(const Chart& chart) {
  return Endomorphism(chart, std::vector<Scalar>(static_cast<std::size_t>(4 * chart.dim() * chart.dim()),
                                                 chart.zero()));
}

Endomorphism Endomorphism::identity(const Chart& chart) { return scalar(chart, chart.constant(1)); }

Endomorphism Endomorphism::scalar(const Chart& chart, const Scalar& c) {
  Endomorphism e = zero(chart);
  for (int r = 0; r < e.size(); ++r) e.at(r, r) = c;
  return e;
}

Endomorphism Endomorphism::blocks(const Chart& chart, const std::vector<Scalar>& a,
                                  const std::vector<Scalar>& b, const std::vector<Scalar>& c,
                                  const std::vector<Scalar>& dd) {
  const int n = chart.dim();
  const auto nn = static_cast<std::size_t>(n * n);
  if (a.size() != nn || b.size() != nn || c.size() != nn || dd.size() != nn)
    throw ConfigError("endomorphism blocks need n^2 entries each");
  Endomorphism e = zero(chart);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      const auto idx = static_cast<std::size_t>(r * n + s);
      e.at(r, s) = a[idx];
      e.at(r, n + s) = b[idx];
      e.at(n + r, s) = c[idx];
      e.at(n + r, n + s) = dd[idx];
    }
  for (const auto& v : e.m_)
    if (v.vars() != chart.vars()) throw ConfigError("endomorphism entry outside the chart ring");
  return e;
}

Section Endomorphism::apply(const Section& s) const {
  if (s.dim() != n_) throw ConfigError("section and endomorphism live on different charts");
  const VarSet& vs = vars_of(s);
  Section out{std::vector<Scalar>(static_cast<std::size_t>(n_), Scalar(vs)),
              std::vector<Scalar>(static_cast<std::size_t>(n_), Scalar(vs))};
  for (int r = 0; r < size(); ++r) {
    Scalar acc(vs);
    for (int c = 0; c < size(); ++c) {
      const Scalar& m = at(r, c);
      if (m.is_zero()) continue;
      const Scalar& v = c < n_ ? s.vec[static_cast<std::size_t>(c)]
                               : s.form[static_cast<std::size_t>(c - n_)];
      if (!v.is_zero()) acc += m * v;
    }
    (r < n_ ? out.vec[static_cast<std::size_t>(r)] : out.form[static_cast<std::size_t>(r - n_)]) =
        std::move(acc);
  }
  return out;
}

bool Endomorphism::is_zero() const {
  for (const auto& e : m_)
    if (!e.is_zero()) return false;
  return true;
}

Endomorphism& Endomorphism::operator+=(const Endomorphism& o) {
  if (o.n_ != n_) throw ConfigError("endomorphisms live on different charts");
  for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
  return *this;
}

Endomorphism& Endomorphism::operator-=(const Endomorphism& o) {
  if (o.n_ != n_) throw ConfigError("endomorphisms live on different charts");
  for (std::size_t k = 0; k < m_.size(); ++k) m_[k] -= o.m_[k];
  return *this;
}

Endomorphism& Endomorphism::operator*=(const Rational& c) {
  for (auto& e : m_) e *= c;
  return *this;
}

Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
  if (a.n_ != b.n_) throw ConfigError("endomorphisms live on different charts");
  Endomorphism out = a;
  const int s = a.size();
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      Scalar acc(a.at(0, 0).vars());
      for (int k = 0; k < s; ++k) {
        const Scalar& x = a.at(r, k);
        const Scalar& y = b.at(k, c);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      out.at(r, c) = std::move(acc);
    }
  return out;
}

Endomorphism adjoint(const Endomorphism& phi) {
  // With G the pairing matrix, φ* = G⁻¹ φᵀ G; G swaps the two blocks.
  const int n = phi.dim();
  const int s = phi.size();
  Endomorphism out = phi;
  auto swap_block = [n](int r) { return r < n ? r + n : r - n; };
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) out.at(r, c) = phi.at(swap_block(c), swap_block(r));
  return out;
}

std::optional<std::string> family_violation(const Chart& chart,
                                            const std::vector<Endomorphism>& members,
                                            const Signature& eps) {
  if (static_cast<int>(members.size()) != eps.size())
    return "family has " + std::to_string(members.size()) + " members but signature length " +
           std::to_string(eps.size());
  if (members.empty()) return "empty family";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].dim() != chart.dim())
      return "member " + std::to_string(i + 1) + ": wrong chart dimension";
    for (const auto& e : members[i].entries())
      if (e.vars() != chart.vars()) return "member " + std::to_string(i + 1) + ": entry outside chart";
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int e = eps[static_cast<int>(i) + 1];
    Endomorphism expect = members[i];
    if (e < 0) expect *= Rational(-1);
    if (adjoint(members[i]) != expect)
      return "member " + std::to_string(i + 1) + ": adjoint is not " +
             (e > 0 ? "phi (not symmetric)" : "-phi (not skew)");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] * members[j] != members[j] * members[i])
        return "members " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               " do not commute";
  return std::nullopt;
}

CommutingFamily::CommutingFamily(Chart chart, std::vector<Endomorphism> members, Signature eps)
    : chart_(std::move(chart)), members_(std::move(members)), eps_(std::move(eps)) {
  if (auto v = family_violation(chart_, members_, eps_)) throw DomainError("invalid family: " + *v);
}

CommutingFamily validate_family(const Chart& chart, std::vector<Endomorphism> members,
                                const Signature& eps) {
  return CommutingFamily(chart, std::move(members), eps);
}

TrilinearForm courant_element() {
  return [](const Section& a, const Section& b, const Section& c) {
    return inner_product(courant_bracket(a, b), c);
  };
}

TrilinearForm anchor_pairing_form() {
  return [](const Section& a, const Section& b, const Section& c) {
    return anchor(a, inner_product(b, c));
  };
}

namespace {

using Exponents = std::vector<int>;

struct ActionTerm {
  Exponents I, J, K;
  Rational coeff;
};

std::vector<ActionTerm> decompose(const Polynomial& p, int n_family) {
  const VarSet& vs = p.vars();
  if (vs.has_t() || vs.n_chart() != 0 || vs.n_indices() != n_family)
    throw ConfigError("polynomial ring does not match a family of size " +
                      std::to_string(n_family));
  std::vector<ActionTerm> out;
  for (const auto& [m, c] : p.terms()) {
    ActionTerm t{Exponents(static_cast<std::size_t>(n_family)),
                 Exponents(static_cast<std::size_t>(n_family)),
                 Exponents(static_cast<std::size_t>(n_family)), c};
    for (int i = 1; i <= n_family; ++i) {
      const auto ui = static_cast<std::size_t>(i - 1);
      t.I[ui] = m[vs.x(i)];
      t.J[ui] = m[vs.y(i)];
      t.K[ui] = m[vs.z(i)];
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// φ^E s with memoization over exponent vectors.
class PowerCache {
 public:
  PowerCache(const CommutingFamily& phi, Section base) : phi_(phi) {
    cache_.emplace(Exponents(static_cast<std::size_t>(phi.size()), 0), std::move(base));
  }

  const Section& get(const Exponents& e) {
    if (auto it = cache_.find(e); it != cache_.end()) return it->second;
    // Peel one factor off the last nonzero exponent.
    Exponents prev = e;
    int i = static_cast<int>(prev.size()) - 1;
    while (prev[static_cast<std::size_t>(i)] == 0) --i;
    --prev[static_cast<std::size_t>(i)];
    Section s = phi_[i + 1].apply(get(prev));
    return cache_.emplace(e, std::move(s)).first->second;
  }

 private:
  const CommutingFamily& phi_;
  std::map<Exponents, Section> cache_;
};

/// For fixed (a, b): the brackets [[φ^I a, φ^J b]] keyed by (I, J).
using BracketTable = std::map<std::pair<Exponents, Exponents>, Section>;

BracketTable bracket_table(const std::vector<ActionTerm>& terms, PowerCache& a, PowerCache& b) {
  BracketTable out;
  for (const auto& t : terms) {
    auto key = std::make_pair(t.I, t.J);
    if (out.count(key)) continue;
    out.emplace(std::move(key), courant_bracket(a.get(t.I), b.get(t.J)));
  }
  return out;
}

Scalar eval_table(const std::vector<ActionTerm>& terms, const BracketTable& table, PowerCache& c,
                  const VarSet& vs) {
  Scalar acc(vs);
  for (const auto& t : terms)
    acc += t.coeff * inner_product(table.at({t.I, t.J}), c.get(t.K));
  return acc;
}

}  // namespace

TrilinearForm polynomial_action(const Polynomial& p, const CommutingFamily& phi,
                                TrilinearForm tau) {
  auto terms = decompose(p, phi.size());
  return [terms = std::move(terms), phi, tau = std::move(tau)](
             const Section& a, const Section& b, const Section& c) {
    PowerCache pa(phi, a), pb(phi, b), pc(phi, c);
    Scalar acc(vars_of(a));
    for (const auto& t : terms) acc += t.coeff * tau(pa.get(t.I), pb.get(t.J), pc.get(t.K));
    return acc;
  };
}

Scalar linearity_defect(const Polynomial& p, const CommutingFamily& phi, int slot,
                        const Scalar& f, const Section& a, const Section& b, const Section& c) {
  const TrilinearForm w = polynomial_action(p, phi, courant_element());
  const Scalar base = f * w(a, b, c);
  switch (slot) {
    case 1: return w(f * a, b, c) - base;
    case 2: return w(a, f * b, c) - base;
    case 3: return w(a, b, f * c) - base;
    default: throw DomainError("slot must be 1, 2 or 3");
  }
}

std::optional<TensorialityDefect> tensoriality_defect(const Polynomial& p,
                                                      const CommutingFamily& phi) {
  const auto terms = decompose(p, phi.size());
  const Chart& chart = phi.chart();
  const int n = chart.dim();
  std::vector<Section> basis;
  for (int k = 0; k < 2 * n; ++k) basis.push_back(Section::basis(chart, k));
  std::vector<PowerCache> pows;
  for (const auto& s : basis) pows.emplace_back(phi, s);

  for (int ia = 0; ia < 2 * n; ++ia)
    for (int ib = 0; ib < 2 * n; ++ib) {
      const BracketTable plain = bracket_table(terms, pows[static_cast<std::size_t>(ia)],
                                               pows[static_cast<std::size_t>(ib)]);
      for (int k = 1; k <= n; ++k) {
        const Scalar f = chart.coordinate(k);
        PowerCache fa(phi, f * basis[static_cast<std::size_t>(ia)]);
        PowerCache fb(phi, f * basis[static_cast<std::size_t>(ib)]);
        const BracketTable slot2 = bracket_table(terms, pows[static_cast<std::size_t>(ia)], fb);
        const BracketTable slot1 = bracket_table(terms, fa, pows[static_cast<std::size_t>(ib)]);
        for (int ic = 0; ic < 2 * n; ++ic) {
          PowerCache& pc = pows[static_cast<std::size_t>(ic)];
          const Scalar base = f * eval_table(terms, plain, pc, chart.vars());
          Scalar d2 = eval_table(terms, slot2, pc, chart.vars()) - base;
          if (!d2.is_zero()) return TensorialityDefect{2, k, ia, ib, ic, std::move(d2)};
          Scalar d1 = eval_table(terms, slot1, pc, chart.vars()) - base;
          if (!d1.is_zero()) return TensorialityDefect{1, k, ia, ib, ic, std::move(d1)};
        }
      }
    }
  return std::nullopt;
}

bool tensoriality_check(const Polynomial& p, const CommutingFamily& phi) {
  return !tensoriality_defect(p, phi).has_value();
}

Section semiconcomitant(const Endomorphism& phi1, const Endomorphism& phi2, const Section& a,
                        const Section& b) {
  const Section p1a = phi1.apply(a);
  const Section p2b = phi2.apply(b);
  Section out = courant_bracket(p1a, p2b);
  out -= phi1.apply(courant_bracket(a, p2b));
  out -= phi2.apply(courant_bracket(p1a, b));
  out += phi1.apply(phi2.apply(courant_bracket(a, b)));
  return out;
}

Section nijenhuis_torsion(const Endomorphism& phi, const Section& a, const Section& b) {
  return semiconcomitant(phi, phi, a, b);
}

Section shifted_torsion(const Endomorphism& phi, const Section& a, const Section& b) {
  return nijenhuis_torsion(phi, phi.apply(a), b) + nijenhuis_torsion(phi, a, phi.apply(b));
}

namespace {

void check_index(const CommutingFamily& phi, int i) {
  if (i < 1 || i > phi.size()) throw DomainError("family index out of range");
}

}  // namespace

Section torsion_T(int i, int j, int k, const CommutingFamily& phi, const Section& a,
                  const Section& b) {
  check_index(phi, i);
  check_index(phi, j);
  check_index(phi, k);
  const Rational ei(phi.signature()[i]);
  const Rational ek(phi.signature()[k]);
  const Endomorphism& pi = phi[i];
  Section out = (ei * ek) * semiconcomitant(phi[k], phi[j], a, pi.apply(b));
  out -= ek * semiconcomitant(phi[k], phi[j], pi.apply(a), b);
  return out;
}

Section tensor_P(int i, int j, const CommutingFamily& phi, const Section& a, const Section& b) {
  check_index(phi, i);
  check_index(phi, j);
  if (phi.signature()[i] != 1 || phi.signature()[j] != 1)
    throw DomainError("tensor_P needs symmetric members (epsilon_i = epsilon_j = 1)");
  return semiconcomitant(phi[i], phi[j], a, b) - semiconcomitant(phi[j], phi[i], a, b);
}

Gaussian pair_determinant(const EigenvalueVector& lambda, const EigenvalueVector& mu,
                          const EigenvalueVector& xi, int i, int j) {
  const auto ui = static_cast<std::size_t>(i - 1);
  const auto uj = static_cast<std::size_t>(j - 1);
  // Cofactor expansion along the column of ones.
  return (mu[ui] * xi[uj] - mu[uj] * xi[ui]) - (lambda[ui] * xi[uj] - lambda[uj] * xi[ui]) +
         (lambda[ui] * mu[uj] - lambda[uj] * mu[ui]);
}

bool whitney_star_condition(const EigenvalueVector& lambda, const EigenvalueVector& mu,
                            const EigenvalueVector& xi, const Signature& eps) {
  const auto n = static_cast<std::size_t>(eps.size());
  if (lambda.size() != n || mu.size() != n || xi.size() != n)
    throw ConfigError("eigenvalue vectors and signature differ in length");
  for (int i = 1; i <= eps.size(); ++i)
    for (int j = i + 1; j <= eps.size(); ++j)
      if (eps[i] == 1 && eps[j] == 1 && !pair_determinant(lambda, mu, xi, i, j).is_zero())
        return false;
  return true;
}

}  // namespace tenscert::courant
