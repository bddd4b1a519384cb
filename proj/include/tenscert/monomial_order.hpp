#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tenscert/monomial.hpp"
#include "tenscert/polynomial.hpp"

namespace tenscert::algebra {

/// Lexicographic order given by an explicit variable ranking, highest first.
///
/// Internally a monomial is "ranked" by permuting its exponents into ranking
/// order; ranked monomials compare byte-wise, which is what the Groebner
/// engine works with.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<VarId> ranking, std::string name);

  /// t > x_N > y_N > z_N > x_{N-1} > ... > z_1 (t omitted when with_t is false).
  static MonomialOrder index_descending(const VarSet& vars);
  /// x_1 > x_2 > ... > x_N > y_1 > ... > y_N > z_1 > ... > z_N.
  static MonomialOrder letter_major(const VarSet& vars);
  /// Like index_descending but with letters inside each index block ranked
  /// as given (e.g. {Z, X, Y} gives z_N > x_N > y_N > z_{N-1} > ...).
  static MonomialOrder index_descending_letters(const VarSet& vars, std::array<Letter, 3> letters);
  /// Parses "lt", "prec", or an explicit comma separated ranking such as
  /// "t,x2,y2,z2,x1,y1,z1".
  static MonomialOrder parse(const std::string& spec, const VarSet& vars);

  const std::vector<VarId>& ranking() const { return ranking_; }
  const std::string& name() const { return name_; }
  bool ranks(VarId id) const { return position_[id] >= 0; }
  /// True when t is ranked above every other variable.
  bool eliminates_t() const { return !ranking_.empty() && ranking_.front() == VarSet::t(); }

  /// Throws ConfigError if a or b uses a variable the ranking omits.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  Monomial to_ranked(const Monomial& m) const;
  Monomial from_ranked(const Monomial& m) const;
  /// Ranked term list, descending.
  TermList to_ranked(const Polynomial& f) const;
  Polynomial from_ranked(const VarSet& vars, const TermList& ranked) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<VarId> ranking_;
  std::array<std::int8_t, kMaxVars> position_{};
  std::string name_;
};

/// The ord-greatest term; DomainError for f = 0.
std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& ord);

/// Terms of f sorted descending under ord.
TermList terms_in_order(const Polynomial& f, const MonomialOrder& ord);

}  // namespace tenscert::algebra
