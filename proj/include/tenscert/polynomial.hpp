#pragma once

#include <map>
#include <set>
#include <vector>

#include "tenscert/detail/term_ops.hpp"
#include "tenscert/monomial.hpp"
#include "tenscert/rational.hpp"

namespace tenscert::algebra {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored strictly descending in the canonical (byte-wise) order,
/// with no zero coefficients, so equality is term-wise. Arithmetic between
/// polynomials over different VarSets throws ConfigError.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(vars) {}

  static Polynomial constant(VarSet vars, const Rational& c);
  static Polynomial variable(VarSet vars, VarId id);
  static Polynomial term(VarSet vars, const Monomial& m, const Rational& c);
  /// Normalizes: sorts, merges duplicates, drops zeros. Checks every variable
  /// belongs to vars.
  static Polynomial from_terms(VarSet vars, TermList terms);

  const VarSet& vars() const { return vars_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int total_degree() const;
  /// Union of supports of all terms.
  std::uint32_t support() const;
  bool uses(VarId id) const { return (support() >> id) & 1u; }
  /// The 1-based indices i for which some x_i, y_i or z_i occurs.
  std::set<int> indices_used() const;
  /// Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  /// Re-home into another VarSet with the same layout prefix; throws
  /// DomainError if a used variable is missing there.
  Polynomial with_vars(VarSet target) const;

  Polynomial derivative(VarId id) const;
  Polynomial pow(int e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const Polynomial& o) const;

  VarSet vars_;
  TermList terms_;
};

/// Composition: each variable in assignment is replaced by the mapped
/// polynomial; unassigned variables map to themselves. All images (and f,
/// for unassigned variables) must share the target VarSet.
Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment,
                      const VarSet& target);

/// Per-index degree I + J + K of a monomial over a tensorial VarSet.
using MultiDegree = std::vector<int>;

MultiDegree multidegree(const VarSet& vars, const Monomial& m);

/// Splits f into multi-homogeneous components; DomainError if t occurs.
std::map<MultiDegree, Polynomial> multidegree_components(const Polynomial& f);

}  // namespace tenscert::algebra
