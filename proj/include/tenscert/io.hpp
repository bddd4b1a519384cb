#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tenscert/monomial_order.hpp"
#include "tenscert/polynomial.hpp"

namespace tenscert::io {

using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::VarSet;

/// Grammar (whitespace-insensitive):
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var ('^' nat)? | '(' expr ')' ('^' nat)?
///   var    := ('t'|'x'|'y'|'z'|'u') nat
///   rational := int ('/' nat)?
/// Throws ParseError with 1-based line/column.
Polynomial parse_polynomial(std::string_view src, const VarSet& vars);

/// Terms in decreasing ord; coefficients shown only when not +-1.
std::string render_polynomial(const Polynomial& f, const MonomialOrder& ord);
/// Renders in the storage order (t, x1, y1, z1, x2, ..., u1, ...).
std::string render_polynomial(const Polynomial& f);

/// One polynomial per line; blank lines and lines starting with '#' are
/// skipped. Line numbers in errors refer to the whole text.
std::vector<Polynomial> parse_ideal(std::string_view text, const VarSet& vars);

/// Smallest tensorial VarSet (N = largest index seen, t iff t occurs) able to
/// hold every polynomial in the texts. Lexical scan only.
VarSet infer_varset(const std::vector<std::string>& texts);

}  // namespace tenscert::io
