#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "tenscert/courant.hpp"
#include "tenscert/groebner.hpp"

namespace tenscert::kernels {

using algebra::MonomialOrder;
using algebra::Polynomial;
using groebner::CriterionResult;
using groebner::GroebnerBasis;

/// omp_get_max_threads(), kept out of line so callers need no omp.h.
int omp_threads();

/// Runs fn(i) for i in [0, n) on `workers` OpenMP threads (0 = runtime
/// default), dynamic schedule. The first exception thrown (lowest i) is
/// rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, int workers, F&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers > 0 ? workers : omp_threads())
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Polynomial> normal_forms_serial(const std::vector<Polynomial>& fs,
                                            const GroebnerBasis& gb);
std::vector<Polynomial> normal_forms_parallel(const std::vector<Polynomial>& fs,
                                              const GroebnerBasis& gb, int workers = 0);

/// Same contract as groebner::check_buchberger_criterion: the reported pair
/// is the first failing one in (j, i) order regardless of thread timing.
CriterionResult criterion_serial(const std::vector<Polynomial>& elems, const MonomialOrder& ord);
CriterionResult criterion_parallel(const std::vector<Polynomial>& elems, const MonomialOrder& ord,
                                   int workers = 0);

/// Tensoriality of each family's polynomials against that family; result[f][p].
using TensorialityTable = std::vector<std::vector<bool>>;
TensorialityTable tensoriality_serial(const std::vector<std::vector<Polynomial>>& polys_per_family,
                                      const std::vector<courant::CommutingFamily>& families);
TensorialityTable tensoriality_parallel(const std::vector<std::vector<Polynomial>>& polys_per_family,
                                        const std::vector<courant::CommutingFamily>& families,
                                        int workers = 0);

}  // namespace tenscert::kernels
