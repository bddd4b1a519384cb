#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tenscert/polynomial.hpp"
#include "tenscert/signature.hpp"

namespace tenscert::courant {

using algebra::Polynomial;
using algebra::Rational;
using algebra::Signature;
using algebra::VarSet;

/// Coefficient functions on the chart: polynomials in u_1..u_n.
using Scalar = Polynomial;

/// A coordinate chart R^n with polynomial coefficient functions.
class Chart {
 public:
  explicit Chart(int dim);

  int dim() const { return dim_; }
  const VarSet& vars() const { return vars_; }
  Scalar zero() const { return Scalar(vars_); }
  Scalar constant(const Rational& c) const { return Scalar::constant(vars_, c); }
  /// u_k, 1-based.
  Scalar coordinate(int k) const;
  /// ∂_k / ∂u_k applied to f.
  Scalar partial(const Scalar& f, int k) const;

  friend bool operator==(const Chart& a, const Chart& b) { return a.dim_ == b.dim_; }

 private:
  int dim_ = 0;
  VarSet vars_;
};

/// X + α: vector components X^k and form components α_k.
struct Section {
  std::vector<Scalar> vec;
  std::vector<Scalar> form;

  static Section zero(const Chart& chart);
  /// Standard basis: 0..n-1 are ∂_1..∂_n, n..2n-1 are du_1..du_n.
  static Section basis(const Chart& chart, int idx);
  static Section vector_field(std::vector<Scalar> comps);
  static Section one_form(std::vector<Scalar> comps);

  int dim() const { return static_cast<int>(vec.size()); }
  bool is_zero() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section& operator*=(const Scalar& f);
  Section& operator*=(const Rational& c);
  Section operator-() const;
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Scalar& f, Section a) { return a *= f; }
  friend Section operator*(const Rational& c, Section a) { return a *= c; }
  friend bool operator==(const Section&, const Section&) = default;
};

std::string to_string(const Section& s);

/// ½(α(Y) + β(X)).
Scalar inner_product(const Section& a, const Section& b);
/// π(a)(f) = X(f).
Scalar anchor(const Section& a, const Scalar& f);
/// df as a section.
Section differential(const Scalar& f);
/// [X,Y] + L_X β - i_Y dα.
Section courant_bracket(const Section& a, const Section& b);

/// 2n×2n matrix of scalars acting on the stacked column (X, α).
class Endomorphism {
 public:
  Endomorphism() = default;
  /// Row-major entries; size must be (2n)^2.
  Endomorphism(const Chart& chart, std::vector<Scalar> entries);
  static Endomorphism zero(const Chart& chart);
  static Endomorphism identity(const Chart& chart);
  static Endomorphism scalar(const Chart& chart, const Scalar& c);
  /// [[A, B], [C, D]] from four n×n row-major blocks.
  static Endomorphism blocks(const Chart& chart, const std::vector<Scalar>& a,
                             const std::vector<Scalar>& b, const std::vector<Scalar>& c,
                             const std::vector<Scalar>& d);

  int dim() const { return n_; }
  int size() const { return 2 * n_; }
  const Scalar& at(int r, int c) const { return m_[static_cast<std::size_t>(r * size() + c)]; }
  Scalar& at(int r, int c) { return m_[static_cast<std::size_t>(r * size() + c)]; }
  const std::vector<Scalar>& entries() const { return m_; }

  Section apply(const Section& s) const;
  bool is_zero() const;

  Endomorphism& operator+=(const Endomorphism& o);
  Endomorphism& operator-=(const Endomorphism& o);
  Endomorphism& operator*=(const Rational& c);
  friend Endomorphism operator+(Endomorphism a, const Endomorphism& b) { return a += b; }
  friend Endomorphism operator-(Endomorphism a, const Endomorphism& b) { return a -= b; }
  friend Endomorphism operator*(const Rational& c, Endomorphism a) { return a *= c; }
  /// Composition: (a * b)(s) = a(b(s)).
  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b);
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int n_ = 0;
  std::vector<Scalar> m_;
};

/// Adjoint for the tautological pairing: [[A,B],[C,D]]* = [[Dᵀ,Bᵀ],[Cᵀ,Aᵀ]].
Endomorphism adjoint(const Endomorphism& phi);

/// Pairwise-commuting endomorphisms with φ_i* = ε_i φ_i.
class CommutingFamily {
 public:
  /// Throws DomainError naming the first violated constraint.
  CommutingFamily(Chart chart, std::vector<Endomorphism> members, Signature eps);

  const Chart& chart() const { return chart_; }
  const Signature& signature() const { return eps_; }
  int size() const { return static_cast<int>(members_.size()); }
  /// 1-based.
  const Endomorphism& operator[](int i) const { return members_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Endomorphism>& members() const { return members_; }

 private:
  Chart chart_;
  std::vector<Endomorphism> members_;
  Signature eps_;
};

/// First violated constraint of a would-be family, e.g. "member 2: adjoint
/// is not -phi" or "members 1,3 do not commute"; nullopt if valid.
std::optional<std::string> family_violation(const Chart& chart,
                                            const std::vector<Endomorphism>& members,
                                            const Signature& eps);

/// Convenience wrapper around the CommutingFamily constructor.
CommutingFamily validate_family(const Chart& chart, std::vector<Endomorphism> members,
                                const Signature& eps);

using TrilinearForm =
    std::function<Scalar(const Section&, const Section&, const Section&)>;

/// (a, b, c) ↦ ⟨[[a, b]], c⟩.
TrilinearForm courant_element();

/// (a, b, c) ↦ π(a)⟨b, c⟩.
TrilinearForm anchor_pairing_form();

/// (P •_φ τ)(a,b,c) = Σ a_{IJK} τ(φ^I a, φ^J b, φ^K c). P must be t-free over
/// exactly φ.size() indices (ConfigError otherwise).
TrilinearForm polynomial_action(const Polynomial& p, const CommutingFamily& phi,
                                TrilinearForm tau);

/// Defects of P •_φ τ_C in slots 2 and 1 against f = u_1..u_n on the 2n basis
/// sections; empty when the pair is tensorial.
struct TensorialityDefect {
  int slot = 0;
  int coordinate = 0;
  int a = 0, b = 0, c = 0;
  Scalar value;
};
std::optional<TensorialityDefect> tensoriality_defect(const Polynomial& p,
                                                      const CommutingFamily& phi);
bool tensoriality_check(const Polynomial& p, const CommutingFamily& phi);

/// Defect of P •_φ τ_C in one slot (1, 2 or 3) for an arbitrary f and sections.
Scalar linearity_defect(const Polynomial& p, const CommutingFamily& phi, int slot,
                        const Scalar& f, const Section& a, const Section& b, const Section& c);

/// [[φ1 a, φ2 b]] - φ1[[a, φ2 b]] - φ2[[φ1 a, b]] + φ1 φ2 [[a, b]].
Section semiconcomitant(const Endomorphism& phi1, const Endomorphism& phi2, const Section& a,
                        const Section& b);

/// Courant-Nijenhuis torsion of φ: the semiconcomitant of (φ, φ).
Section nijenhuis_torsion(const Endomorphism& phi, const Section& a, const Section& b);
/// T_φ(φa, b) + T_φ(a, φb).
Section shifted_torsion(const Endomorphism& phi, const Section& a, const Section& b);

/// ε_i ε_k K_{(φ_k,φ_j)}(a, φ_i b) - ε_k K_{(φ_k,φ_j)}(φ_i a, b); 1-based indices.
Section torsion_T(int i, int j, int k, const CommutingFamily& phi, const Section& a,
                  const Section& b);

/// K_{(φ_i,φ_j)} - K_{(φ_j,φ_i)}; DomainError unless ε_i = ε_j = 1.
Section tensor_P(int i, int j, const CommutingFamily& phi, const Section& a, const Section& b);

/// Exact complex number with rational parts.
struct Gaussian {
  Rational re;
  Rational im;

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

using EigenvalueVector = std::vector<Gaussian>;

/// det[[λ_i, λ_j, 1], [μ_i, μ_j, 1], [ξ_i, ξ_j, 1]].
Gaussian pair_determinant(const EigenvalueVector& lambda, const EigenvalueVector& mu,
                          const EigenvalueVector& xi, int i, int j);

/// True iff the determinant vanishes for every pair i < j with ε_i = ε_j = 1.
/// ConfigError on length mismatch.
bool whitney_star_condition(const EigenvalueVector& lambda, const EigenvalueVector& mu,
                            const EigenvalueVector& xi, const Signature& eps);

/// Named commuting family over a chart.
struct FleetEntry {
  std::string name;
  CommutingFamily family;
};

/// Shipped test fleet: zero, scaled identities, constant generalized almost
/// complex structures, families with entries linear in u, and diagonal
/// vector-to-vector families; charts of dimension 1, 2 and 3.
std::vector<FleetEntry> builtin_fleet();

/// {"dim": n, "signature": [±1, ...], "matrices": [[poly strings, row-major]]},
/// plus an optional "name". A top-level array holds several families.
std::string dump_family(const FleetEntry& e);
FleetEntry load_family(const std::string& json_text);
std::string dump_fleet(const std::vector<FleetEntry>& fleet);
std::vector<FleetEntry> load_fleet(const std::string& json_text);

/// Random scalar with `terms` terms, each exponent at most max_exp and
/// coefficients in [-3, 3].
Scalar random_scalar(std::mt19937_64& rng, const Chart& chart, int terms, int max_exp);
Section random_section(std::mt19937_64& rng, const Chart& chart, int terms = 2, int max_exp = 2);

}  // namespace tenscert::courant
