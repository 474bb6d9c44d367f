// Serial reference vs OpenMP kernels on the weight enumerations that
// dominate inspect/scan.

#include <benchmark/benchmark.h>

#include "trinom/codes.hpp"
#include "trinom/kernels.hpp"
#include "trinom/numtheory.hpp"

namespace {

using namespace trinom;

kernels::TraceCode example_code(const gf::FieldCtx& ctx) {
  // (e1, e2) = (1, 1) qualifies for every q
  return {ctx.delta_exponent() % ctx.n(), 1, true};
}

void BM_TraceSerial(benchmark::State& state) {
  const auto ctx = gf::build_field_for_q(static_cast<std::uint64_t>(state.range(0)));
  const auto code = example_code(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_weights_serial(ctx, code));
}

void BM_TraceParallel(benchmark::State& state) {
  const auto ctx = gf::build_field_for_q(static_cast<std::uint64_t>(state.range(0)));
  const auto code = example_code(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_weights_parallel(ctx, code));
}

gf::Poly example_generator(const gf::FieldCtx& ctx) {
  const auto h = codes::parity_check_polynomial(ctx, {ctx.q(), 1, 1});
  return gf::poly_divide_xn_minus_1(ctx, h);
}

void BM_GeneratorSerial(benchmark::State& state) {
  const auto ctx = gf::build_field_for_q(static_cast<std::uint64_t>(state.range(0)));
  const auto g = example_generator(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::generator_weights_serial(ctx, g, 3));
}

void BM_GeneratorParallel(benchmark::State& state) {
  const auto ctx = gf::build_field_for_q(static_cast<std::uint64_t>(state.range(0)));
  const auto g = example_generator(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::generator_weights_parallel(ctx, g, 3));
}

}  // namespace

BENCHMARK(BM_TraceSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
