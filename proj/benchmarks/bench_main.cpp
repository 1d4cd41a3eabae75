#include <benchmark/benchmark.h>

#include <random>

#include "latkern/latkern.hpp"

using namespace latkern;

namespace {

class Inputs {
 public:
  explicit Inputs(unsigned seed) : rng_(seed) {}

  Rational small() { return Rational(std::uniform_int_distribution<long>(-4, 4)(rng_), 1); }

  // monic denominator of degree deg, strictly lower numerator
  RatFun strictly_proper(long deg) {
    std::vector<Rational> num(static_cast<std::size_t>(deg)), den(static_cast<std::size_t>(deg) + 1);
    for (auto& c : num) c = small();
    for (auto& c : den) c = small();
    den.back() = 1;
    return RatFun(Poly(std::move(num)), Poly(std::move(den)));
  }

  TransferMatrix bicausal(std::size_t n, long deg) {
    TransferMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = strictly_proper(deg) + RatFun(i == j ? 1 : 0);
    return b;
  }

  // B1 diag(z^-s) B2 with s = 1..n
  TransferMatrix latent(std::size_t n, long deg) {
    TransferMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = RatFun::z_power(-static_cast<long>(i) - 1);
    return bicausal(n, deg) * d * bicausal(n, deg);
  }

 private:
  std::mt19937_64 rng_;
};

void BM_SmithAtInfinity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TransferMatrix f = Inputs(1).latent(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_at_infinity(f));
}
BENCHMARK(BM_SmithAtInfinity)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LatencyKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TransferMatrix f = Inputs(2).latent(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(latency_kernel(f));
}
BENCHMARK(BM_LatencyKernel)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RightCoprimeFraction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TransferMatrix v = Inputs(3).bicausal(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(right_coprime_fraction(v));
}
BENCHMARK(BM_RightCoprimeFraction)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VgRepresentation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Inputs in(4);
  const TransferMatrix f = in.latent(n, 1);
  const TransferMatrix l = in.bicausal(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vg_representation(f, l));
}
BENCHMARK(BM_VgRepresentation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PolyGcd(benchmark::State& state) {
  Inputs in(5);
  const RatFun common = in.strictly_proper(3);
  const Poly a = (in.strictly_proper(8) * common).den();
  const Poly b = (in.strictly_proper(8) * common).den();
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
