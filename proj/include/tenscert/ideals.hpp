#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "tenscert/groebner.hpp"
#include "tenscert/signature.hpp"
#include "tenscert/verdict.hpp"

namespace tenscert::ideals {

using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Polynomial;
using algebra::Rational;
using algebra::Signature;
using algebra::VarSet;
using groebner::BuchbergerOptions;
using groebner::BuchbergerStats;
using groebner::GroebnerBasis;
using groebner::IdealPresentation;
using groebner::MonomialIdeal;

/// The three linear ideals whose zero sets are y = εz, z = εx and x = εy.
/// Generator lists are ordered by index ascending.
struct AxisIdealTriple {
  Signature signature;
  VarSet vars;
  std::vector<Polynomial> x;  // y_i - ε_i z_i
  std::vector<Polynomial> y;  // z_i - ε_i x_i
  std::vector<Polynomial> z;  // x_i - ε_i y_i
};

AxisIdealTriple build_axis_ideals(const Signature& eps);

/// (x_i - ε_i y_i)(y_j - ε_j z_j)(z_k - ε_k x_k) over vars (which must have
/// at least eps.size() indices).
Polynomial generator_T(int i, int j, int k, const Signature& eps, const VarSet& vars);
/// (z_i - x_i)(x_j - y_j) - (z_j - x_j)(x_i - y_i); DomainError unless
/// ε_i = ε_j = 1.
Polynomial generator_P(int i, int j, const Signature& eps, const VarSet& vars);

struct CandidateBasis {
  Signature signature;
  std::vector<std::array<int, 3>> torsion_indices;
  std::vector<Polynomial> torsion;
  std::vector<std::pair<int, int>> quadratic_indices;
  std::vector<Polynomial> quadratic;

  /// Torsion generators first (i, j, k lexicographic), then quadratic ones.
  std::vector<Polynomial> all() const;
};

/// All N^3 cubic generators and P^{ij} for i < j with ε_i = ε_j = 1.
CandidateBasis candidate_basis(const Signature& eps);

/// Coefficient a_{I,J,K} of x^I y^J z^K, keyed by the three exponent tuples.
using ExponentTriple = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
using CoefficientTensor = std::map<ExponentTriple, Rational>;

CoefficientTensor coefficient_tensor(const Polynomial& p);

/// Checks the three families of linear relations on the coefficients
/// (one per component of the variety), e.g. Σ_J ε^J a_{I,J,T-J} = 0 for all
/// I, T. DomainError if p uses t.
bool is_universally_tensorial_linear(const Polynomial& p, const Signature& eps);

/// Substitutes y = diag(ε) z, z = diag(ε) x and x = diag(ε) y in turn and
/// requires each image to vanish.
bool vanishes_on_variety(const Polynomial& p, const Signature& eps);

/// Order with the t-free ranking of ord (t dropped).
MonomialOrder drop_t(const MonomialOrder& ord);

struct IntersectionResult {
  /// Reduced GB of tI + (1-t)J in the ring with t.
  GroebnerBasis elimination_basis;
  /// Its t-free members, re-homed into the ring without t: a reduced GB of
  /// I ∩ J for the restricted order.
  GroebnerBasis intersection;
  BuchbergerStats stats;
};

/// I and J live in the same t-free ring; elim_order lives in the ring with t
/// and must rank t first (ConfigError otherwise). The generator list of
/// tI + (1-t)J is t*I in order followed by (1-t)*J in order.
IntersectionResult intersect_pair(const std::vector<Polynomial>& I,
                                  const std::vector<Polynomial>& J,
                                  const MonomialOrder& elim_order,
                                  const BuchbergerOptions& opts = {});

/// All products a_i b_j ordered by (i, j). Empty if either side is empty.
std::vector<Polynomial> product_ideal(const std::vector<Polynomial>& I,
                                      const std::vector<Polynomial>& J);

/// ∏_i (x_i - ε_i y_i)(y_i - ε_i z_i) z_i.
Polynomial knutson_F(const Signature& eps);

/// Letters inside each index block for the lex order used with a given
/// product: x>y>z for I^x I^z, cyclically shifted for the other two pairs.
enum class AxisPair { XZ, XY, YZ };
std::array<algebra::Letter, 3> knutson_letters(AxisPair pair);

Verdict verify_knutson_product(const Signature& eps, const BuchbergerOptions& opts = {});

struct GeneratingSetOptions {
  BuchbergerOptions buchberger;
  /// Also compute the triple intersection by two eliminations and compare.
  bool cross_check = false;
};

struct GeneratingSetResult {
  Verdict verdict;
  /// Reduced GB of J_ε = t I^x + (1-t) I^y I^z under <_N.
  GroebnerBasis j_basis;
  /// Reduced GB of I_ε (t-free part), order <_N without t.
  GroebnerBasis i_basis;
  MonomialIdeal initial;
  BuchbergerStats stats;
};

/// The generator list of J_ε: t(y_i - ε_i z_i) for i ascending, then
/// (1-t)(z_i - ε_i x_i)(x_j - ε_j y_j) ordered by (i, j).
std::vector<Polynomial> j_generators(const Signature& eps);

GeneratingSetResult verify_generating_theorem(const Signature& eps,
                                              const GeneratingSetOptions& opts = {});

/// Sorted indices i such that one of x_i, y_i, z_i divides m.
std::vector<int> indices_of(const VarSet& vars, const Monomial& m);

/// Expected meet of the three product initial ideals under the letter-major
/// order for ε = (1,...,1): x_i x_j y_k (k <= i, j) and x_l y_m (l < m).
MonomialIdeal squeeze_closed_form(int n);

Verdict verify_squeeze_appendix(int n, const BuchbergerOptions& opts = {});

/// σ(g) ∈ I_ε for every σ ∈ S_3 and every g in the basis and every cubic
/// generator; every multidegree component of every basis element ∈ I_ε.
Verdict s3_invariance_check(const Signature& eps, const GroebnerBasis& i_basis);

/// Random polynomial with exponents of each variable at most max_exp.
Polynomial random_polynomial(std::mt19937_64& rng, const VarSet& vars, int terms, int max_exp);

/// Random element Σ c_k m_k g_k of the ideal generated by gens.
Polynomial random_member(std::mt19937_64& rng, const std::vector<Polynomial>& gens, int summands);

struct OracleTally {
  int samples = 0;
  int members = 0;
  int disagreements = 0;
  std::optional<Polynomial> first_disagreement;
};

/// Runs the linear, variety and membership oracles on `samples` random
/// polynomials (a third each of random polynomials, ideal members and
/// perturbed members) plus every candidate generator.
OracleTally oracle_equivalence(const Signature& eps, const GroebnerBasis& i_basis, int samples,
                               std::uint64_t seed);

}  // namespace tenscert::ideals
