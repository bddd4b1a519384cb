#include "tenscert/kernels.hpp"

#include <omp.h>

#include <utility>

namespace tenscert::kernels {

int omp_threads() { return omp_get_max_threads(); }

std::vector<Polynomial> normal_forms_serial(const std::vector<Polynomial>& fs,
                                            const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(groebner::normal_form(f, gb));
  return out;
}

std::vector<Polynomial> normal_forms_parallel(const std::vector<Polynomial>& fs,
                                              const GroebnerBasis& gb, int workers) {
  std::vector<Polynomial> out(fs.size());
  parallel_for(fs.size(), workers, [&](std::size_t i) { out[i] = groebner::normal_form(fs[i], gb); });
  return out;
}

CriterionResult criterion_serial(const std::vector<Polynomial>& elems, const MonomialOrder& ord) {
  return groebner::check_buchberger_criterion(elems, ord);
}

CriterionResult criterion_parallel(const std::vector<Polynomial>& elems, const MonomialOrder& ord,
                                   int workers) {
  CriterionResult res;
  if (elems.empty()) return res;
  const groebner::IdealPresentation divisors(elems.front().vars(), elems, ord);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < elems.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<Polynomial> rems(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const Polynomial s = groebner::s_polynomial(elems[i], elems[j], ord);
    if (!s.is_zero()) rems[p] = groebner::reduce_standard_form(s, divisors).remainder;
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    ++res.pairs_checked;
    if (!rems[p].is_zero()) {
      res.ok = false;
      res.pair = pairs[p];
      res.witness = std::move(rems[p]);
      return res;
    }
  }
  return res;
}

TensorialityTable tensoriality_serial(const std::vector<std::vector<Polynomial>>& polys_per_family,
                                      const std::vector<courant::CommutingFamily>& families) {
  TensorialityTable out(families.size());
  for (std::size_t f = 0; f < families.size(); ++f)
    for (const auto& p : polys_per_family[f])
      out[f].push_back(courant::tensoriality_check(p, families[f]));
  return out;
}

TensorialityTable tensoriality_parallel(const std::vector<std::vector<Polynomial>>& polys_per_family,
                                        const std::vector<courant::CommutingFamily>& families,
                                        int workers) {
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  TensorialityTable out(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    out[f].assign(polys_per_family[f].size(), false);
    for (std::size_t p = 0; p < polys_per_family[f].size(); ++p) jobs.emplace_back(f, p);
  }
  std::vector<char> ok(jobs.size(), 0);
  parallel_for(jobs.size(), workers, [&](std::size_t k) {
    const auto [f, p] = jobs[k];
    ok[k] = courant::tensoriality_check(polys_per_family[f][p], families[f]);
  });
  for (std::size_t k = 0; k < jobs.size(); ++k) out[jobs[k].first][jobs[k].second] = ok[k];
  return out;
}

}  // namespace tenscert::kernels
