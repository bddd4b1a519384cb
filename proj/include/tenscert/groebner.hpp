#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenscert/monomial_order.hpp"
#include "tenscert/polynomial.hpp"

namespace tenscert::groebner {

using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::Rational;
using algebra::TermList;
using algebra::VarSet;

/// Ordered generator list plus the order used for division. List order is
/// observable: division scans divisors in this order.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  /// DomainError on a zero generator; ConfigError if a generator lives in a
  /// different VarSet or uses a variable the order does not rank.
  IdealPresentation(VarSet vars, std::vector<Polynomial> generators, MonomialOrder order);

  const VarSet& vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

 private:
  VarSet vars_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
};

/// Elements are monic and stored alongside their ranked form (exponents
/// permuted into ranking order), which is what the reducers consume.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(VarSet vars, MonomialOrder order, std::vector<Polynomial> elements, bool reduced);
  /// From monic ranked term lists, as produced by the reducers.
  static GroebnerBasis from_ranked(VarSet vars, MonomialOrder order, std::vector<TermList> ranked,
                                   bool reduced);

  const VarSet& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const std::vector<TermList>& ranked() const { return ranked_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elems_.size(); }

  /// Elements not involving t; for an elimination order these form a basis
  /// of the elimination ideal.
  GroebnerBasis without_t() const;

 private:
  VarSet vars_;
  MonomialOrder order_;
  std::vector<Polynomial> elems_;
  std::vector<TermList> ranked_;
  bool reduced_ = false;
};

/// 10^7, or the value of CERTIFY_BUDGET when set to a positive integer.
std::uint64_t default_step_budget();

struct BuchbergerOptions {
  std::uint64_t step_budget = default_step_budget();
  /// Skip pairs whose leading monomials are coprime.
  bool coprime_criterion = true;
  /// Buchberger's chain criterion; off so certified runs follow the plain
  /// algorithm.
  bool chain_criterion = false;
};

struct BuchbergerStats {
  std::uint64_t pairs = 0;
  std::uint64_t skipped_coprime = 0;
  std::uint64_t skipped_chain = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t steps = 0;
  std::size_t final_size = 0;
};

/// Plain Buchberger. Pairs (i, j), i < j, are processed in lexicographic order
/// of (j, i) over the current list; each nonzero remainder is made monic and
/// appended to the tail. Throws BudgetExhausted past the step budget.
GroebnerBasis buchberger(const IdealPresentation& input, const BuchbergerOptions& opts = {},
                         BuchbergerStats* stats = nullptr);

/// Minimal, monic, tail-reduced basis sorted by increasing leading monomial.
/// Unique for a given ideal and order.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// reduce_basis(buchberger(input)).
GroebnerBasis reduced_groebner_basis(const IdealPresentation& input,
                                     const BuchbergerOptions& opts = {},
                                     BuchbergerStats* stats = nullptr);

/// lc(g) m_g f - lc(f) m_f g where m_f = in(f)/gcd, m_g = in(g)/gcd.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct StandardForm {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  std::uint64_t steps = 0;
};

/// Multivariate division. At every step the divisors are scanned from the
/// first one in list order; the first whose leading monomial divides the
/// current leading term is used, otherwise that term moves to the remainder.
StandardForm reduce_standard_form(const Polynomial& f, const IdealPresentation& divisors);

/// Remainder of f modulo gb, computed on ranked term lists.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool membership(const Polynomial& f, const GroebnerBasis& gb);
/// First generator of gens not in the ideal of gb, if any.
std::optional<Polynomial> first_non_member(const std::vector<Polynomial>& gens,
                                           const GroebnerBasis& gb);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes: drops generators divisible by another, removes duplicates.
  explicit MonomialIdeal(std::vector<Monomial> gens);

  /// Minimal generators, sorted by the canonical byte order.
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  bool is_squarefree() const;
  /// First minimal generator with an exponent above 1.
  std::optional<Monomial> square_witness() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

struct CriterionResult {
  bool ok = true;
  std::size_t pairs_checked = 0;
  /// Offending pair (i, j) and the nonzero remainder of its S-polynomial.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  Polynomial witness;
};

/// Reference check that every S-pair of elems reduces to zero against elems
/// (division in list order). Uses Polynomial-level arithmetic only, so it is
/// independent of the ranked reducers behind buchberger().
CriterionResult check_buchberger_criterion(const std::vector<Polynomial>& elems,
                                           const MonomialOrder& ord);

}  // namespace tenscert::groebner
