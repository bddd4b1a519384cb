#pragma once

// Merge kernels over term lists kept strictly descending in byte-wise
// monomial order. Shared by Polynomial and the Groebner engine, which
// stores polynomials with exponents permuted into ranking order.

#include <vector>

#include "tenscert/monomial.hpp"
#include "tenscert/rational.hpp"

namespace tenscert::algebra {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

using TermList = std::vector<Term>;

namespace detail {

/// Sorts, combines equal monomials and drops zero coefficients.
void normalize(TermList& terms);

/// a + sign * b.
TermList add(const TermList& a, const TermList& b, int sign);

/// a - c * m * b[from..], with b[from..] already descending (multiplication
/// by a monomial preserves any monomial order).
TermList sub_scaled(const TermList& a, std::size_t a_from, const Rational& c, const Monomial& m,
                    const TermList& b, std::size_t b_from);

TermList mul(const TermList& a, const TermList& b);

TermList scale(const TermList& a, const Rational& c, const Monomial& m);

}  // namespace detail
}  // namespace tenscert::algebra
