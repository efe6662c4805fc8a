#include <benchmark/benchmark.h>

#include "norlund/buhring.hpp"
#include "norlund/gfunction.hpp"
#include "norlund/hyper.hpp"
#include "norlund/identities.hpp"
#include "norlund/norlund.hpp"

using namespace norlund;

namespace {

ParamSet rational_params(int p) {
  std::vector<Scalar> a, b;
  const int dens[] = {3, 5, 7, 11};
  for (int i = 0; i < p; ++i) {
    a.push_back(Scalar::ratio(2 * i + 1, dens[i % 4]));
    b.push_back(Scalar::ratio(-(3 * i + 2), dens[(i + 1) % 4]));
  }
  return ParamSet(a, b);
}

ParamSet float_params(int p) { return rational_params(p).promoted(); }

}  // namespace

static void BM_g_young(benchmark::State& state) {
  auto ps = rational_params(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(g_young(ps, 1, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_g_young)->Args({3, 8})->Args({5, 8})->Args({5, 12});

static void BM_g_recurrence_n(benchmark::State& state) {
  auto ps = rational_params(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        g_recurrence_n(ps, 1, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_g_recurrence_n)->Args({3, 8})->Args({5, 12});

static void BM_g_bernoulli(benchmark::State& state) {
  auto ps = rational_params(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(g_bernoulli(ps, 1, static_cast<int>(state.range(1)),
                                         BernoulliForm::Psi));
}
BENCHMARK(BM_g_bernoulli)->Args({3, 8})->Args({5, 12});

static void BM_h_multisum(benchmark::State& state) {
  auto ps = float_params(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(h_multisum(ps, 1, 3, 1e-10));
}
BENCHMARK(BM_h_multisum)->Unit(benchmark::kMillisecond);

static void BM_eval_pfq(benchmark::State& state) {
  auto spec = HyperSpec::make({Scalar(0.4), Scalar(-0.3), Scalar(0.7)},
                              {Scalar(1.1), Scalar(0.9)});
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_pfq(spec, Scalar(0.6), 1e-13));
}
BENCHMARK(BM_eval_pfq);

static void BM_gp0pp_near1(benchmark::State& state) {
  auto ps = float_params(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(gp0pp_near1(ps, 1, 80));
}
BENCHMARK(BM_gp0pp_near1)->Unit(benchmark::kMillisecond);

static void BM_verify_ptolemy(benchmark::State& state) {
  auto ps = float_params(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ptolemy(ps, 1e-10));
}
BENCHMARK(BM_verify_ptolemy)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
