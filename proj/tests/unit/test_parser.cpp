#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/ideals.hpp"
#include "tenscert/io.hpp"
#include "tenscert/monomial_order.hpp"
#include "tenscert/signature.hpp"

using namespace tenscert;
using namespace tenscert::algebra;
using io::parse_polynomial;
using io::render_polynomial;
using testing_helpers::random_poly;

namespace {

ParseError parse_failure(const std::string& src, const VarSet& vs) {
  try {
    (void)parse_polynomial(src, vs);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for '" << src << "'";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parse, ProductOfLinearForms) {
  const VarSet vs = VarSet::tensorial(2);
  const Polynomial x1 = Polynomial::variable(vs, vs.x(1));
  const Polynomial y1 = Polynomial::variable(vs, vs.y(1));
  const Polynomial y2 = Polynomial::variable(vs, vs.y(2));
  const Polynomial z2 = Polynomial::variable(vs, vs.z(2));
  EXPECT_EQ(parse_polynomial("(x1 - y1)*(y2 - z2)", vs), (x1 - y1) * (y2 - z2));
}

TEST(Parse, TorsionGeneratorText) {
  const VarSet vs = VarSet::tensorial(1);
  EXPECT_EQ(parse_polynomial("(x1-y1)*(y1-z1)*(z1-x1)", vs),
            ideals::generator_T(1, 1, 1, Signature::parse("+"), vs));
}

TEST(Parse, EliminationGenerator) {
  const VarSet vs = VarSet::tensorial(1, true);
  const Polynomial t = Polynomial::variable(vs, VarSet::t());
  const Polynomial y = Polynomial::variable(vs, vs.y(1));
  const Polynomial z = Polynomial::variable(vs, vs.z(1));
  EXPECT_EQ(parse_polynomial("t*(y1 + z1)", vs), t * (y + z));
  EXPECT_EQ(parse_polynomial("t*(y1 + z1)", vs), ideals::j_generators(Signature::parse("-"))[0]);
}

TEST(Parse, RationalsAndPowers) {
  const VarSet vs = VarSet::tensorial(1);
  const Polynomial x = Polynomial::variable(vs, vs.x(1));
  EXPECT_EQ(parse_polynomial("3/6*x1^2", vs), Rational(1, 2) * x * x);
  EXPECT_EQ(parse_polynomial("  x1 *x1 ", vs), x * x);
  EXPECT_EQ(parse_polynomial("x1^0", vs), Polynomial::constant(vs, Rational(1)));
  EXPECT_TRUE(parse_polynomial("x1 - x1", vs).is_zero());
}

TEST(Parse, ChartVariables) {
  const VarSet vs = VarSet::chart(2);
  const Polynomial u1 = Polynomial::variable(vs, vs.u(1));
  const Polynomial u2 = Polynomial::variable(vs, vs.u(2));
  EXPECT_EQ(parse_polynomial("-1-u1^2 + u2", vs), u2 - u1 * u1 - Polynomial::constant(vs, 1));
}

TEST(Parse, ErrorsCarryPosition) {
  const VarSet vs = VarSet::tensorial(2);
  {
    const ParseError e = parse_failure("x1 +* y1", vs);
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  {
    const ParseError e = parse_failure("x1 + x3", vs);
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 6);
  }
  {
    const ParseError e = parse_failure("x1 +\n  w1", vs);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  parse_failure("x1 y1", vs);
  parse_failure("(x1 + y1", vs);
  parse_failure("1/0*x1", vs);
  parse_failure("2/", vs);
  parse_failure("t*x1", vs);
  parse_failure("", vs);
  parse_failure("x0", vs);
}

TEST(Render, ZeroAndOrderedTerms) {
  const VarSet vs = VarSet::tensorial(1);
  EXPECT_EQ(render_polynomial(Polynomial(vs), MonomialOrder::letter_major(vs)), "0");
  const Polynomial f = parse_polynomial("-x1^2*z1 + x1^2*y1", vs);
  EXPECT_EQ(render_polynomial(f, MonomialOrder::letter_major(vs)), "x1^2*y1 - x1^2*z1");
}

TEST(Render, CoefficientsOnlyWhenNotUnit) {
  const VarSet vs = VarSet::tensorial(1);
  const auto ord = MonomialOrder::letter_major(vs);
  EXPECT_EQ(render_polynomial(parse_polynomial("-x1 + 1", vs), ord), "-x1 + 1");
  EXPECT_EQ(render_polynomial(parse_polynomial("2/3*x1*y1 - 5", vs), ord), "2/3*x1*y1 - 5");
  EXPECT_EQ(render_polynomial(parse_polynomial("-1/2", vs), ord), "-1/2");
}

TEST(Render, RoundTripRandom) {
  std::mt19937_64 rng(21);
  for (const VarSet& vs : {VarSet::tensorial(1), VarSet::tensorial(3, true), VarSet::chart(3)}) {
    std::vector<MonomialOrder> orders;
    if (vs.n_indices() > 0) orders.push_back(MonomialOrder::index_descending(vs));
    for (int s = 0; s < 200; ++s) {
      const Polynomial f = random_poly(rng, vs, 1 + s % 6, 3);
      const std::string text = render_polynomial(f);
      EXPECT_EQ(parse_polynomial(text, vs), f) << text;
      EXPECT_EQ(render_polynomial(f), text);
      for (const auto& ord : orders) {
        const std::string ranked = render_polynomial(f, ord);
        EXPECT_EQ(parse_polynomial(ranked, vs), f) << ranked;
        EXPECT_EQ(render_polynomial(f, ord), ranked);
      }
    }
  }
}

TEST(ParseIdeal, CommentsAndBlankLines) {
  const VarSet vs = VarSet::tensorial(1);
  const auto gens = io::parse_ideal("# axis ideal\nx1 - y1\n\n  # second\n  y1 - z1\n", vs);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], parse_polynomial("x1 - y1", vs));
  EXPECT_EQ(gens[1], parse_polynomial("y1 - z1", vs));
}

TEST(ParseIdeal, ErrorsReportFileLine) {
  const VarSet vs = VarSet::tensorial(1);
  try {
    (void)io::parse_ideal("x1\ny1\nx1 ** y1\n", vs);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(InferVarset, LargestIndexAndT) {
  const VarSet a = io::infer_varset({"x1 - y3", "z2"});
  EXPECT_EQ(a.n_indices(), 3);
  EXPECT_FALSE(a.has_t());
  const VarSet b = io::infer_varset({"t*x2"});
  EXPECT_EQ(b.n_indices(), 2);
  EXPECT_TRUE(b.has_t());
}
