#include <benchmark/benchmark.h>

#include <vector>

#include "weylsb/weylsb.hpp"

namespace {

using namespace weylsb;

void BM_WeylProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto deg = static_cast<Exponent>(state.range(1));
  OperatorSampler s(7);
  const auto p = s.nonzero_weyl(n, deg, 6), q = s.nonzero_weyl(n, deg, 6);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_WeylProduct)->Args({1, 4})->Args({2, 4})->Args({3, 6});

void BM_Divide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  OperatorSampler s(11);
  const OrderContext ctx(LinearForm::order_form(n));
  std::vector<HomogOperator> divisors;
  for (int i = 0; i < 3; ++i) divisors.push_back(s.homogeneous(n, 2, 3));
  const auto h = s.homogeneous(n, 6, 12);
  for (auto _ : state) benchmark::DoNotOptimize(divide(ctx, h, divisors));
}
BENCHMARK(BM_Divide)->Arg(1)->Arg(2);

void BM_StdBasis(benchmark::State& state) {
  const OrderContext ctx(LinearForm::v_form(2));
  const std::vector<WeylOperator> gens{
      weyl_x(2, 0) * weyl_d(2, 1) + weyl_x(2, 1),
      weyl_d(2, 0) * weyl_d(2, 1) - weyl_d(2, 0),
  };
  for (auto _ : state) benchmark::DoNotOptimize(std_basis_pipeline(ctx, gens));
}
BENCHMARK(BM_StdBasis);

void BM_Oracle(benchmark::State& state) {
  const OrderContext ctx(LinearForm::bernstein(1));
  const auto x = weyl_x(1, 0), d = weyl_d(1, 0);
  const std::vector<WeylOperator> gens{x * x, x * d + weyl_constant(1, Scalar(1))};
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_exponents(ctx, gens, bound));
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
