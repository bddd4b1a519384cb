#pragma once

#include <random>
#include <string>

#include "tenscert/io.hpp"
#include "tenscert/polynomial.hpp"

namespace testing_helpers {

using tenscert::algebra::Polynomial;
using tenscert::algebra::VarSet;

inline Polynomial P(const std::string& s, const VarSet& vs) {
  return tenscert::io::parse_polynomial(s, vs);
}

inline std::string R(const Polynomial& f) { return tenscert::io::render_polynomial(f); }

/// Random polynomial over every variable of vs (t included), coefficients
/// p/q with |p| <= 4, 1 <= q <= 3.
inline Polynomial random_poly(std::mt19937_64& rng, const VarSet& vs, int terms, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  tenscert::algebra::TermList out;
  for (int k = 0; k < terms; ++k) {
    tenscert::algebra::Monomial m;
    for (int id = vs.has_t() ? 0 : 1; id < vs.id_count(); ++id)
      m.set(static_cast<tenscert::algebra::VarId>(id), ex(rng));
    out.push_back({m, tenscert::algebra::Rational(num(rng), den(rng))});
  }
  return Polynomial::from_terms(vs, std::move(out));
}

}  // namespace testing_helpers
