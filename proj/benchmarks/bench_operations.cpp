#include <benchmark/benchmark.h>

#include "milnor/expr.hpp"
#include "milnor/operations.hpp"

using namespace milnor;

namespace {

Element top_class(std::uint32_t prime) {
  const RingContext ctx(prime, 3);
  return x(ctx, 1) * x(ctx, 2) * x(ctx, 3);
}

// Everything in first degree <= max_degree with weight up to m + 1.
std::vector<Element> slice(const RingContext& ctx, std::int64_t max_degree) {
  std::vector<Element> out;
  for (std::int64_t m = 0; m <= max_degree; ++m)
    for (std::int64_t w = (m + 1) / 2; w <= m + 1; ++w)
      for (const auto& mono : enumerate_basis(ctx, {m, w}))
        out.emplace_back(ctx, mono);
  return out;
}

} // namespace

static void BM_TripleMilnor(benchmark::State& state) {
  const auto a = top_class(static_cast<std::uint32_t>(state.range(0)));
  const auto word = parse_word("Q0,Q1,Q2");
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_word(word, a));
}
BENCHMARK(BM_TripleMilnor)->Arg(2)->Arg(3)->Arg(5);

static void BM_MilnorRecursiveSweep(benchmark::State& state) {
  const RingContext ctx(static_cast<std::uint32_t>(state.range(0)), 3);
  const auto basis = slice(ctx, 8);
  for (auto _ : state)
    for (const auto& a : basis)
      benchmark::DoNotOptimize(milnor_recursive(2, a));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * basis.size()));
}
BENCHMARK(BM_MilnorRecursiveSweep)->Arg(2)->Arg(3)->Arg(5);

static void BM_MilnorOracleSweep(benchmark::State& state) {
  const RingContext ctx(static_cast<std::uint32_t>(state.range(0)), 3);
  const auto basis = slice(ctx, 8);
  for (auto _ : state)
    for (const auto& a : basis)
      benchmark::DoNotOptimize(milnor_oracle(2, a));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * basis.size()));
}
BENCHMARK(BM_MilnorOracleSweep)->Arg(2)->Arg(3)->Arg(5);

static void BM_PowerOnPolynomial(benchmark::State& state) {
  const RingContext ctx(5, 3);
  const auto a = parse_element("(y1 + y2 + y3) * y1^4*y2^3*y3^2 + tau*y1*x2*x3", ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(power(static_cast<std::uint32_t>(state.range(0)), a));
}
BENCHMARK(BM_PowerOnPolynomial)->Arg(1)->Arg(5)->Arg(10);

static void BM_Multiply(benchmark::State& state) {
  const RingContext ctx(3, 4);
  const auto a = parse_element("(x1 + y2 + tau*x3)*(y1 + x2 + x4)*(1 + y3 + x1*x2)", ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_Multiply);

BENCHMARK_MAIN();
