#pragma once

// Reducers over ranked term lists: exponents already permuted into the
// order's ranking, so byte-wise comparison is the monomial order and the
// first term is the leading term.

#include <cstdint>
#include <vector>

#include "tenscert/detail/term_ops.hpp"
#include "tenscert/errors.hpp"

namespace tenscert::groebner::detail {

using algebra::Monomial;
using algebra::Rational;
using algebra::TermList;

struct RankedPoly {
  TermList terms;
  std::uint32_t lead_mask = 0;

  RankedPoly() = default;
  explicit RankedPoly(TermList t) : terms(std::move(t)) {
    if (!terms.empty()) lead_mask = terms.front().mono.support();
  }
  const Monomial& lead() const { return terms.front().mono; }
};

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++steps_ > budget_) throw BudgetExhausted(budget_);
  }
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

void make_monic(TermList& p);

/// Index of the first divisor (among the first count) whose leading monomial
/// divides m, or -1.
int find_divisor(const Monomial& m, const std::vector<RankedPoly>& divisors, std::size_t count);

/// Full reduction of p against monic divisors; returns the remainder.
TermList reduce_full(TermList p, const std::vector<RankedPoly>& divisors, std::size_t count,
                     StepCounter& counter);
inline TermList reduce_full(TermList p, const std::vector<RankedPoly>& divisors,
                            StepCounter& counter) {
  return reduce_full(std::move(p), divisors, divisors.size(), counter);
}

/// S-polynomial of two monic ranked polynomials.
TermList s_poly(const RankedPoly& f, const RankedPoly& g);

}  // namespace tenscert::groebner::detail
