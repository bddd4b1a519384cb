#include <gtest/gtest.h>

#include <atomic>

#include "helpers.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/ideals.hpp"
#include "tenscert/kernels.hpp"

using namespace tenscert;
using namespace tenscert::kernels;
using algebra::Signature;

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(500);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, RethrowsLowestIndexError) {
  try {
    parallel_for(100, 4, [](std::size_t i) {
      if (i == 70) throw ConfigError("seventy");
      if (i == 30) throw DomainError("thirty");
    });
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "thirty");
  }
}

TEST(NormalForms, SerialEqualsParallel) {
  const Signature eps = Signature::parse("+-+");
  const auto r = ideals::verify_generating_theorem(eps);
  std::mt19937_64 rng(1);
  std::vector<groebner::Polynomial> fs;
  for (int k = 0; k < 60; ++k) fs.push_back(ideals::random_polynomial(rng, r.i_basis.vars(), 4, 2));
  for (const auto& g : ideals::candidate_basis(eps).all()) fs.push_back(g);
  const auto serial = normal_forms_serial(fs, r.i_basis);
  for (int w : {1, 2, 4}) EXPECT_EQ(normal_forms_parallel(fs, r.i_basis, w), serial);
  for (std::size_t k = 0; k < fs.size(); ++k)
    EXPECT_EQ(serial[k], groebner::normal_form(fs[k], r.i_basis));
}

TEST(Criterion, SerialEqualsParallelAndReference) {
  const Signature eps = Signature::parse("++-");
  const auto r = ideals::verify_generating_theorem(eps);
  const auto& ord = r.i_basis.order();
  const auto ref = groebner::check_buchberger_criterion(r.i_basis.elements(), ord);
  const auto s = criterion_serial(r.i_basis.elements(), ord);
  EXPECT_TRUE(ref.ok);
  EXPECT_TRUE(s.ok);
  EXPECT_EQ(s.pairs_checked, ref.pairs_checked);
  for (int w : {1, 3}) EXPECT_TRUE(criterion_parallel(r.i_basis.elements(), ord, w).ok);

  // The bare generator list is not a basis; every implementation names the same first pair.
  const auto gens = ideals::candidate_basis(eps).all();
  const auto bad_ref = groebner::check_buchberger_criterion(gens, ord);
  ASSERT_FALSE(bad_ref.ok);
  const auto bad_s = criterion_serial(gens, ord);
  EXPECT_EQ(bad_s.pair, bad_ref.pair);
  EXPECT_EQ(bad_s.witness, bad_ref.witness);
  for (int w : {1, 2, 4}) {
    const auto bad_p = criterion_parallel(gens, ord, w);
    EXPECT_FALSE(bad_p.ok);
    EXPECT_EQ(bad_p.pair, bad_ref.pair);
    EXPECT_EQ(bad_p.witness, bad_ref.witness);
  }
}

TEST(Tensoriality, SerialEqualsParallel) {
  std::vector<std::vector<groebner::Polynomial>> polys;
  std::vector<courant::CommutingFamily> families;
  for (const auto& e : courant::builtin_fleet()) {
    if (e.family.size() > 2) continue;
    auto g = ideals::candidate_basis(e.family.signature()).all();
    g.push_back(testing_helpers::P("1", algebra::VarSet::tensorial(e.family.size())));
    polys.push_back(g);
    families.push_back(e.family);
  }
  const auto serial = tensoriality_serial(polys, families);
  EXPECT_EQ(tensoriality_parallel(polys, families, 3), serial);
  for (std::size_t f = 0; f < families.size(); ++f) {
    ASSERT_EQ(serial[f].size(), polys[f].size());
    for (std::size_t p = 0; p + 1 < polys[f].size(); ++p) EXPECT_TRUE(serial[f][p]);
    EXPECT_FALSE(serial[f].back());
  }
}
