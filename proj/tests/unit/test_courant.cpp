#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "tenscert/actions.hpp"
#include "tenscert/courant.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/ideals.hpp"

using namespace tenscert;
using namespace tenscert::courant;
using algebra::LetterPerm;
using testing_helpers::P;

namespace {

Section d(const Chart& c, int k) { return Section::basis(c, k - 1); }
Section du(const Chart& c, int k) { return Section::basis(c, c.dim() + k - 1); }
Scalar S(const std::string& s, const Chart& c) { return io::parse_polynomial(s, c.vars()); }

const FleetEntry& fleet_entry(const std::string& name) {
  static const auto fleet = builtin_fleet();
  for (const auto& e : fleet)
    if (e.name == name) return e;
  throw std::runtime_error("no fleet entry " + name);
}

Endomorphism gacs_complex() { return fleet_entry("gacs-complex-n2").family[1]; }

std::vector<Endomorphism> scaled_members(const CommutingFamily& phi, const std::vector<Rational>& c) {
  std::vector<Endomorphism> out;
  for (int i = 1; i <= phi.size(); ++i) out.push_back(c[static_cast<std::size_t>(i - 1)] * phi[i]);
  return out;
}

}  // namespace

TEST(InnerProduct, Examples) {
  const Chart c(2);
  EXPECT_EQ(inner_product(d(c, 1), du(c, 1)), c.constant(Rational(1, 2)));
  EXPECT_TRUE(inner_product(d(c, 1), d(c, 2)).is_zero());
  EXPECT_TRUE(inner_product(d(c, 1), du(c, 2)).is_zero());
  std::mt19937_64 rng(1);
  for (int s = 0; s < 30; ++s) {
    const Section a = random_section(rng, c), b = random_section(rng, c);
    EXPECT_EQ(inner_product(a, b), inner_product(b, a));
  }
}

TEST(Bracket, Examples) {
  const Chart c(1);
  const Section u_du = c.coordinate(1) * du(c, 1);
  EXPECT_EQ(courant_bracket(d(c, 1), u_du), du(c, 1));
  const Chart c2(2);
  const Section X = Rational(3) * d(c2, 1) + Rational(-1) * d(c2, 2);
  EXPECT_TRUE(courant_bracket(X, d(c2, 2)).is_zero());
  // [u1 ∂2, ∂1] = -∂2
  EXPECT_EQ(courant_bracket(c2.coordinate(1) * d(c2, 2), d(c2, 1)), Rational(-1) * d(c2, 2));
}

TEST(Bracket, AxiomsOnRandomSections) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    const Chart c(n);
    for (int s = 0; s < 20; ++s) {
      const Section a = random_section(rng, c), b = random_section(rng, c), e = random_section(rng, c);
      const Scalar f = random_scalar(rng, c, 2, 2);
      EXPECT_EQ(anchor(a, inner_product(b, e)),
                inner_product(courant_bracket(a, b), e) + inner_product(courant_bracket(a, e), b));
      EXPECT_EQ(courant_bracket(a, f * b), f * courant_bracket(a, b) + anchor(a, f) * b);
      EXPECT_EQ(courant_bracket(f * a, b),
                f * courant_bracket(a, b) - anchor(b, f) * a +
                    (Rational(2) * inner_product(a, b)) * differential(f));
    }
  }
}

TEST(Adjoint, DefiningIdentityOnBasis) {
  const Chart c(2);
  std::vector<Endomorphism> samples = {Endomorphism::identity(c), gacs_complex(),
                                       fleet_entry("gacs-symplectic-n2").family[1],
                                       fleet_entry("linear-mixed-pair-n2").family[1]};
  std::mt19937_64 rng(3);
  std::vector<Scalar> rnd;
  for (int k = 0; k < 16; ++k) rnd.push_back(random_scalar(rng, c, 2, 1));
  samples.emplace_back(c, rnd);
  for (const auto& phi : samples) {
    const Endomorphism star = adjoint(phi);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        EXPECT_EQ(inner_product(phi.apply(Section::basis(c, i)), Section::basis(c, j)),
                  inner_product(Section::basis(c, i), star.apply(Section::basis(c, j))));
  }
  EXPECT_EQ(adjoint(Endomorphism::identity(c)), Endomorphism::identity(c));
  // [[A, 0], [0, -Aᵀ]] is skew.
  const Endomorphism lift = fleet_entry("linear-skew-pair-n2").family[1];
  EXPECT_EQ(adjoint(lift), Rational(-1) * lift);
}

TEST(Adjoint, ReversesComposition) {
  const Chart c(2);
  std::mt19937_64 rng(4);
  auto rand_endo = [&] {
    std::vector<Scalar> e;
    for (int k = 0; k < 16; ++k) e.push_back(random_scalar(rng, c, 1, 1));
    return Endomorphism(c, e);
  };
  for (int s = 0; s < 10; ++s) {
    const Endomorphism a = rand_endo(), b = rand_endo();
    EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
    const Section x = random_section(rng, c);
    EXPECT_EQ((a * b).apply(x), a.apply(b.apply(x)));
  }
}

TEST(Family, Validation) {
  const Chart c(2);
  const Endomorphism J = gacs_complex();
  EXPECT_EQ(J * J, Rational(-1) * Endomorphism::identity(c));
  EXPECT_NO_THROW(validate_family(c, {J}, Signature::parse("-")));
  EXPECT_NO_THROW(validate_family(c, {J, J}, Signature::parse("--")));
  EXPECT_THROW(validate_family(c, {J}, Signature::parse("+")), DomainError);
  EXPECT_TRUE(family_violation(c, {J}, Signature::parse("+")).has_value());
  // diag(1, 2) on vectors does not commute with the complex structure.
  const Endomorphism D = fleet_entry("diagonal-triple-n2").family[1];
  const auto v = family_violation(c, {D, J}, Signature::parse("+-"));
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("commute"), std::string::npos) << *v;
}

TEST(Fleet, AllFamiliesValidAndRoundTrip) {
  const auto fleet = builtin_fleet();
  EXPECT_GE(fleet.size(), 20u);
  for (const auto& e : fleet) {
    EXPECT_FALSE(family_violation(e.family.chart(), e.family.members(), e.family.signature()))
        << e.name;
    const auto back = load_family(dump_family(e));
    EXPECT_EQ(back.name, e.name);
    EXPECT_EQ(back.family.members(), e.family.members());
    EXPECT_EQ(back.family.signature(), e.family.signature());
  }
}

TEST(Fleet, FixtureFileMatchesBuiltin) {
  std::ifstream in(std::string(TENSCERT_FIXTURE_DIR) + "/fleet.json");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto loaded = load_fleet(ss.str());
  const auto fleet = builtin_fleet();
  ASSERT_EQ(loaded.size(), fleet.size());
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    EXPECT_EQ(loaded[k].name, fleet[k].name);
    EXPECT_EQ(loaded[k].family.members(), fleet[k].family.members());
  }
}

TEST(Fleet, MalformedFixturesRejected) {
  EXPECT_THROW(load_fleet("{not json"), ConfigError);
  EXPECT_THROW(load_family(R"({"dim": 1, "signature": [1]})"), ConfigError);
  EXPECT_THROW(load_family(R"({"dim": 1, "signature": [1], "matrices": [["1","0","0","-1"]]})"),
               DomainError);
}

TEST(Action, UnitAndIdentity) {
  const Chart c(1);
  const auto& phi = fleet_entry("scaled-identity-n1").family;  // (2, -1/3), both symmetric
  const CommutingFamily id(c, {Endomorphism::identity(c)}, Signature::parse("+"));
  const TrilinearForm tau = courant_element();
  std::mt19937_64 rng(5);
  for (int s = 0; s < 10; ++s) {
    const Section a = random_section(rng, c), b = random_section(rng, c), e = random_section(rng, c);
    EXPECT_EQ(polynomial_action(P("1", algebra::VarSet::tensorial(2)), phi, tau)(a, b, e), tau(a, b, e));
    EXPECT_EQ(polynomial_action(P("x1", algebra::VarSet::tensorial(1)), id, tau)(a, b, e), tau(a, b, e));
  }
  EXPECT_THROW(polynomial_action(P("x1", algebra::VarSet::tensorial(2)), id, tau), ConfigError);
}

TEST(Action, CourantElementExample) {
  const Chart c(1);
  const TrilinearForm tau = courant_element();
  EXPECT_EQ(tau(d(c, 1), c.coordinate(1) * du(c, 1), d(c, 1)), c.constant(Rational(1, 2)));
  const Chart c3(3);
  EXPECT_TRUE(tau(d(c3, 1), d(c3, 2), d(c3, 3)).is_zero());
}

TEST(Action, SlotPermutationCompatibility) {
  // (σP) acting through τ∘σ equals P acting through τ, read with permuted slots.
  std::mt19937_64 rng(6);
  const auto& phi = fleet_entry("linear-mixed-pair-n2").family;
  const auto vs = algebra::VarSet::tensorial(2);
  const TrilinearForm tau = courant_element();
  const TrilinearForm tau_swapped = [tau](const Section& a, const Section& b, const Section& e) {
    return tau(b, a, e);
  };
  const TrilinearForm tau_rotated = [tau](const Section& a, const Section& b, const Section& e) {
    return tau(b, e, a);
  };
  for (int s = 0; s < 4; ++s) {
    const Polynomial p = testing_helpers::random_poly(rng, vs, 2, 1);
    const Section a = random_section(rng, phi.chart(), 1, 1);
    const Section b = random_section(rng, phi.chart(), 1, 1);
    const Section e = random_section(rng, phi.chart(), 1, 1);
    const Scalar lhs = polynomial_action(p, phi, tau)(b, a, e);
    EXPECT_EQ(polynomial_action(algebra::apply_s3(p, LetterPerm::swap_xy()), phi, tau_swapped)(a, b, e), lhs);
    const Scalar rot = polynomial_action(p, phi, tau)(b, e, a);
    EXPECT_EQ(polynomial_action(algebra::apply_s3(p, LetterPerm::cycle()), phi, tau_rotated)(a, b, e), rot);
  }
}

TEST(Action, ReindexingCompatibility) {
  std::mt19937_64 rng(7);
  const auto& phi = fleet_entry("diagonal-triple-n3").family;
  const auto& eps = phi.signature().entries();
  // ρ: 1 -> 3, 2 -> 1.
  const CommutingFamily pulled(phi.chart(), {phi[3], phi[1]}, Signature({eps[2], eps[0]}));
  const TrilinearForm tau = courant_element();
  for (int s = 0; s < 4; ++s) {
    const Polynomial p = testing_helpers::random_poly(rng, algebra::VarSet::tensorial(2), 2, 1);
    const Polynomial moved = algebra::apply_index_map(p, {{1, 3}, {2, 1}}, 3);
    const Section a = random_section(rng, phi.chart(), 1, 1);
    const Section b = random_section(rng, phi.chart(), 1, 1);
    const Section e = random_section(rng, phi.chart(), 1, 1);
    EXPECT_EQ(polynomial_action(moved, phi, tau)(a, b, e), polynomial_action(p, pulled, tau)(a, b, e));
  }
}

TEST(Action, DiagonalRescaling) {
  std::mt19937_64 rng(8);
  const auto& phi = fleet_entry("linear-mixed-pair-n2").family;
  const auto vs = algebra::VarSet::tensorial(2);
  const TrilinearForm tau = courant_element();
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < 4; ++s) {
    const std::vector<Rational> c = {Rational(coef(rng), 2), Rational(coef(rng))};
    const CommutingFamily scaled(phi.chart(), scaled_members(phi, c), phi.signature());
    const Polynomial p = testing_helpers::random_poly(rng, vs, 2, 1);
    std::map<algebra::VarId, Polynomial> sub;
    for (int i = 1; i <= 2; ++i)
      for (auto id : {vs.x(i), vs.y(i), vs.z(i)})
        sub.emplace(id, c[static_cast<std::size_t>(i - 1)] * Polynomial::variable(vs, id));
    const Polynomial q = algebra::substitute(p, sub, vs);
    const Section a = random_section(rng, phi.chart(), 1, 1);
    const Section b = random_section(rng, phi.chart(), 1, 1);
    const Section e = random_section(rng, phi.chart(), 1, 1);
    EXPECT_EQ(polynomial_action(p, scaled, tau)(a, b, e), polynomial_action(q, phi, tau)(a, b, e));
  }
}

TEST(Action, SumOfCommutingFamilies) {
  // P acting through φ + φ' equals P(x + x', y + y', z + z') acting through (φ, φ').
  const Chart c(1);
  const Endomorphism phi = fleet_entry("diagonal-n1").family[1];
  const Endomorphism phi2 = Endomorphism::scalar(c, S("2", c));
  const CommutingFamily sum(c, {phi + phi2}, Signature::parse("+"));
  const CommutingFamily both(c, {phi, phi2}, Signature::parse("++"));
  const auto v1 = algebra::VarSet::tensorial(1);
  const auto v2 = algebra::VarSet::tensorial(2);
  std::mt19937_64 rng(9);
  const TrilinearForm tau = courant_element();
  for (int s = 0; s < 4; ++s) {
    const Polynomial p = testing_helpers::random_poly(rng, v1, 2, 2);
    std::map<algebra::VarId, Polynomial> sub;
    sub.emplace(v2.x(1), P("x1+x2", v2));
    sub.emplace(v2.y(1), P("y1+y2", v2));
    sub.emplace(v2.z(1), P("z1+z2", v2));
    const Polynomial q = algebra::substitute(p.with_vars(v2), sub, v2);
    const Section a = random_section(rng, c, 1, 1);
    const Section b = random_section(rng, c, 1, 1);
    const Section e = random_section(rng, c, 1, 1);
    EXPECT_EQ(polynomial_action(p, sum, tau)(a, b, e), polynomial_action(q, both, tau)(a, b, e));
  }
}

TEST(Semiconcomitant, IdentitySecondArgumentVanishes) {
  std::mt19937_64 rng(10);
  const Chart c(2);
  const Endomorphism phi = fleet_entry("linear-symmetric-pair-n2").family[1];
  for (int s = 0; s < 10; ++s) {
    const Section a = random_section(rng, c), b = random_section(rng, c);
    EXPECT_TRUE(semiconcomitant(phi, Endomorphism::identity(c), a, b).is_zero());
  }
}

TEST(Semiconcomitant, DiagonalPairIsNijenhuisTorsion) {
  std::mt19937_64 rng(11);
  const Chart c(2);
  const Endomorphism J = fleet_entry("gacs-complex-nonconstant-n2").family[1];
  for (int s = 0; s < 10; ++s) {
    const Section a = random_section(rng, c), b = random_section(rng, c);
    // Expanded by hand: [[Ja, Jb]] - J[[a, Jb]] - J[[Ja, b]] + J^2[[a, b]].
    const Section want = courant_bracket(J.apply(a), J.apply(b)) - J.apply(courant_bracket(a, J.apply(b))) -
                         J.apply(courant_bracket(J.apply(a), b)) + (J * J).apply(courant_bracket(a, b));
    EXPECT_EQ(nijenhuis_torsion(J, a, b), want);
    EXPECT_EQ(semiconcomitant(J, J, a, b), want);
  }
}

TEST(Semiconcomitant, PairingMatchesAction) {
  std::mt19937_64 rng(12);
  const auto v2 = algebra::VarSet::tensorial(2);
  for (const char* name : {"linear-mixed-pair-n2", "linear-skew-pair-n2", "mixed-n1"}) {
    const auto& phi = fleet_entry(name).family;
    const auto& e = phi.signature().entries();
    const Polynomial q = (Polynomial::variable(v2, v2.x(1)) - Rational(e[0]) * Polynomial::variable(v2, v2.z(1))) *
                         (Polynomial::variable(v2, v2.y(2)) - Rational(e[1]) * Polynomial::variable(v2, v2.z(2)));
    const TrilinearForm act = polynomial_action(q, phi, courant_element());
    for (int s = 0; s < 10; ++s) {
      const Section a = random_section(rng, phi.chart()), b = random_section(rng, phi.chart()),
                    c = random_section(rng, phi.chart());
      EXPECT_EQ(inner_product(semiconcomitant(phi[1], phi[2], a, b), c), act(a, b, c)) << name;
    }
  }
}

TEST(Torsion, SingleSkewIndexIsShiftedTorsion) {
  std::mt19937_64 rng(13);
  for (const char* name : {"gacs-complex-n2", "gacs-symplectic-n2", "gacs-complex-nonconstant-n2",
                           "diagonal-skew-n1"}) {
    const auto& phi = fleet_entry(name).family;
    const Endomorphism& J = phi[1];
    for (int s = 0; s < 10; ++s) {
      const Section a = random_section(rng, phi.chart()), b = random_section(rng, phi.chart());
      const Section shifted = nijenhuis_torsion(J, J.apply(a), b) + nijenhuis_torsion(J, a, J.apply(b));
      EXPECT_EQ(shifted_torsion(J, a, b), shifted);
      EXPECT_EQ(torsion_T(1, 1, 1, phi, a, b), shifted) << name;
    }
  }
}

TEST(Torsion, ZeroFamilyGivesZero) {
  std::mt19937_64 rng(14);
  const auto& phi = fleet_entry("zero-triple-n3").family;
  for (int s = 0; s < 5; ++s) {
    const Section a = random_section(rng, phi.chart()), b = random_section(rng, phi.chart());
    EXPECT_TRUE(torsion_T(1, 2, 3, phi, a, b).is_zero());
    EXPECT_TRUE(torsion_T(3, 3, 1, phi, a, b).is_zero());
  }
}

TEST(Torsion, PairingMatchesGenerator) {
  std::mt19937_64 rng(15);
  for (const char* name : {"linear-triple-n2", "triple-mixed-n1", "linear-triple-n3"}) {
    const auto& phi = fleet_entry(name).family;
    const int n = phi.size();
    const auto vs = algebra::VarSet::tensorial(n);
    for (int s = 0; s < 6; ++s) {
      const int i = 1 + s % n, j = 1 + (s / 2) % n, k = 1 + (s + 1) % n;
      const TrilinearForm act =
          polynomial_action(ideals::generator_T(i, j, k, phi.signature(), vs), phi, courant_element());
      const Section a = random_section(rng, phi.chart(), 1, 1), b = random_section(rng, phi.chart(), 1, 1),
                    c = random_section(rng, phi.chart(), 1, 1);
      EXPECT_EQ(inner_product(torsion_T(i, j, k, phi, a, b), c), act(a, b, c)) << name;
    }
  }
}

TEST(TensorP, Properties) {
  std::mt19937_64 rng(16);
  const auto& phi = fleet_entry("linear-symmetric-pair-n2").family;
  const auto vs = algebra::VarSet::tensorial(2);
  const TrilinearForm act = polynomial_action(ideals::generator_P(1, 2, phi.signature(), vs), phi, courant_element());
  const CommutingFamily twice(phi.chart(), {phi[1], phi[1]}, phi.signature());
  for (int s = 0; s < 8; ++s) {
    const Section a = random_section(rng, phi.chart()), b = random_section(rng, phi.chart()),
                  c = random_section(rng, phi.chart());
    EXPECT_TRUE(tensor_P(1, 1, phi, a, b).is_zero());
    EXPECT_EQ(tensor_P(1, 2, phi, a, b), -tensor_P(2, 1, phi, a, b));
    EXPECT_TRUE(tensor_P(1, 2, twice, a, b).is_zero());
    EXPECT_EQ(inner_product(tensor_P(1, 2, phi, a, b), c), act(a, b, c));
  }
  EXPECT_THROW(tensor_P(1, 2, fleet_entry("linear-mixed-pair-n2").family, Section::zero(phi.chart()),
                        Section::zero(phi.chart())),
               DomainError);
}

TEST(Tensoriality, Examples) {
  const auto v1 = algebra::VarSet::tensorial(1);
  const Polynomial s = P("(x1+z1)*(y1+z1)*(x1+y1)", v1);
  for (const char* name : {"gacs-complex-n2", "gacs-symplectic-n2", "gacs-complex-nonconstant-n2",
                           "diagonal-skew-n1"})
    EXPECT_TRUE(tensoriality_check(s, fleet_entry(name).family)) << name;
  const Polynomial partial = P("(x1+z1)*(y1+z1)", v1);
  EXPECT_FALSE(ideals::vanishes_on_variety(partial, Signature::parse("-")));
  EXPECT_TRUE(tensoriality_check(partial, fleet_entry("gacs-complex-n2").family));
  EXPECT_TRUE(tensoriality_check(partial, fleet_entry("gacs-symplectic-n2").family));
}

TEST(Tensoriality, UnitPolynomialFails) {
  const Chart c(1);
  const TrilinearForm tau = courant_element();
  const Scalar u = c.coordinate(1);
  const Scalar lhs = tau(d(c, 1), u * d(c, 1), du(c, 1));
  const Scalar rhs = u * tau(d(c, 1), d(c, 1), du(c, 1));
  EXPECT_NE(lhs, rhs);
  for (const auto& e : builtin_fleet()) {
    const auto defect = tensoriality_defect(P("1", algebra::VarSet::tensorial(e.family.size())), e.family);
    ASSERT_TRUE(defect.has_value()) << e.name;
    EXPECT_FALSE(defect->value.is_zero());
  }
}

TEST(Tensoriality, BasisCheckAgreesWithRandomSpotChecks) {
  std::mt19937_64 rng(17);
  for (const char* name : {"linear-mixed-pair-n2", "gacs-complex-nonconstant-n2", "diagonal-triple-n2"}) {
    const auto& phi = fleet_entry(name).family;
    const auto vs = algebra::VarSet::tensorial(phi.size());
    for (const auto& g : ideals::candidate_basis(phi.signature()).all()) {
      ASSERT_TRUE(tensoriality_check(g, phi)) << name;
      for (int s = 0; s < 2; ++s) {
        const Scalar f = random_scalar(rng, phi.chart(), 3, 2);
        const Section a = random_section(rng, phi.chart(), 1, 1), b = random_section(rng, phi.chart(), 1, 1),
                      c = random_section(rng, phi.chart(), 1, 1);
        for (int slot = 1; slot <= 3; ++slot)
          EXPECT_TRUE(linearity_defect(g, phi, slot, f, a, b, c).is_zero()) << name << " slot " << slot;
      }
    }
    const Polynomial one = P("1", vs);
    for (int s = 0; s < 5; ++s) {
      const Scalar f = random_scalar(rng, phi.chart(), 3, 2);
      const Section a = random_section(rng, phi.chart(), 1, 1), b = random_section(rng, phi.chart(), 1, 1),
                    c = random_section(rng, phi.chart(), 1, 1);
      EXPECT_TRUE(linearity_defect(one, phi, 3, f, a, b, c).is_zero());
    }
  }
}

TEST(Whitney, Examples) {
  auto g = [](long re) { return Gaussian{Rational(re), Rational(0)}; };
  const Signature pp = Signature::parse("++");
  const EigenvalueVector lam = {g(0), g(0)}, mu = {g(1), g(0)}, xi = {g(0), g(1)};
  EXPECT_EQ(pair_determinant(lam, mu, xi, 1, 2), g(1));
  EXPECT_FALSE(whitney_star_condition(lam, mu, xi, pp));
  EXPECT_TRUE(whitney_star_condition(lam, lam, xi, pp));
  EXPECT_TRUE(whitney_star_condition(lam, mu, lam, pp));
  EXPECT_TRUE(whitney_star_condition(lam, mu, mu, pp));
  EXPECT_TRUE(whitney_star_condition(lam, mu, xi, Signature::parse("+-")));
  const EigenvalueVector cplx = {Gaussian{Rational(0), Rational(1)}, Gaussian{Rational(1), Rational(-1)}};
  EXPECT_TRUE(whitney_star_condition(cplx, mu, cplx, pp));
  EXPECT_THROW(whitney_star_condition(lam, mu, {g(0)}, pp), ConfigError);
}
