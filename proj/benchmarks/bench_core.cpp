#include <benchmark/benchmark.h>

#include "upd/decomposition.hpp"
#include "upd/engine.hpp"
#include "upd/family_json.hpp"
#include "upd/random_gen.hpp"

namespace {

using namespace upd;

MonomialIdeal sample_ideal(std::uint64_t seed, std::size_t dim) {
  Rng rng(seed);
  return random_ideal(rng, pooled_context(dim), {6, 5, /*allow_zero=*/false});
}

void BM_Intersect(benchmark::State& state) {
  const auto a = sample_ideal(1, 3);
  const auto b = sample_ideal(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_Intersect);

void BM_PrimePower(benchmark::State& state) {
  const auto& ctx = pooled_context(3);
  std::vector<Monomial> vars;
  for (std::size_t v = 0; v < 3; ++v) {
    Monomial m = Monomial::one(3);
    m.exponents[v] = 1;
    vars.push_back(m);
  }
  const auto maximal = minimalize(ctx, vars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power(maximal, state.range(0)));
  }
}
BENCHMARK(BM_PrimePower)->RangeMultiplier(2)->Range(2, 16);

void BM_Saturate(benchmark::State& state) {
  const auto a = sample_ideal(3, 3);
  const auto b = sample_ideal(4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate(a, b));
  }
}
BENCHMARK(BM_Saturate);

void BM_PrimaryDecomposition(benchmark::State& state) {
  const auto a = sample_ideal(state.range(0), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(primary_decomposition(a));
  }
}
BENCHMARK(BM_PrimaryDecomposition)->DenseRange(5, 8);

void BM_BoundedCertificate(benchmark::State& state) {
  const auto a = sample_ideal(9, 2);
  std::uint64_t k = 1;
  for (const auto& prime : associated_primes(a)) {
    k = std::max(k, k_min(a, prime, default_cap(a)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_decomposition(a, k));
  }
}
BENCHMARK(BM_BoundedCertificate);

void BM_ScanConstantFamily(benchmark::State& state) {
  const auto spec = parse_family(
      R"({"mode":"graded","vars":["x","y"],"params":["n"],
          "generators":[{"x":2},{"x":1,"y":1}]})");
  const Box box({{Integer(0), Integer(state.range(0))}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_uniform_k(spec, box));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanConstantFamily)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
