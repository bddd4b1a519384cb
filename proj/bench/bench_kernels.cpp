#include <benchmark/benchmark.h>

#include <random>

#include "tenscert/ideals.hpp"
#include "tenscert/kernels.hpp"

using namespace tenscert;

namespace {

struct NormalFormInput {
  groebner::GroebnerBasis gb;
  std::vector<groebner::Polynomial> fs;
};

const NormalFormInput& nf_input() {
  static const NormalFormInput in = [] {
    const auto eps = algebra::Signature::parse("+-+-");
    NormalFormInput r{ideals::verify_generating_theorem(eps).i_basis, {}};
    std::mt19937_64 rng(7);
    for (int k = 0; k < 80; ++k) r.fs.push_back(ideals::random_polynomial(rng, r.gb.vars(), 4, 2));
    return r;
  }();
  return in;
}

void BM_NormalFormsSerial(benchmark::State& st) {
  const auto& in = nf_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::normal_forms_serial(in.fs, in.gb));
}

void BM_NormalFormsParallel(benchmark::State& st) {
  const auto& in = nf_input();
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::normal_forms_parallel(in.fs, in.gb, static_cast<int>(st.range(0))));
}

void BM_CriterionSerial(benchmark::State& st) {
  const auto& gb = nf_input().gb;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::criterion_serial(gb.elements(), gb.order()));
}

void BM_CriterionParallel(benchmark::State& st) {
  const auto& gb = nf_input().gb;
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::criterion_parallel(gb.elements(), gb.order(), static_cast<int>(st.range(0))));
}

struct TensorInput {
  std::vector<std::vector<groebner::Polynomial>> polys;
  std::vector<courant::CommutingFamily> families;
};

const TensorInput& tensor_input() {
  static const TensorInput in = [] {
    TensorInput r;
    for (const auto& e : courant::builtin_fleet()) {
      r.polys.push_back(ideals::candidate_basis(e.family.signature()).all());
      r.families.push_back(e.family);
    }
    return r;
  }();
  return in;
}

void BM_TensorialitySerial(benchmark::State& st) {
  const auto& in = tensor_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::tensoriality_serial(in.polys, in.families));
}

void BM_TensorialityParallel(benchmark::State& st) {
  const auto& in = tensor_input();
  for (auto _ : st)
    benchmark::DoNotOptimize(
        kernels::tensoriality_parallel(in.polys, in.families, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_NormalFormsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NormalFormsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CriterionSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CriterionParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TensorialitySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TensorialityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
