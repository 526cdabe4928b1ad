#include <benchmark/benchmark.h>

#include <random>

#include "cremona/bn.hpp"
#include "cremona/expr.hpp"
#include "cremona/jonq.hpp"
#include "cremona/moebius.hpp"
#include "cremona/torus.hpp"

using namespace cremona;

namespace {

void BM_UnivariateGcd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  auto random_poly = [&rng](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
    c.back() = 1;
    return Poly(c);
  };
  const Poly common = random_poly(d / 2);
  const Poly a = common * random_poly(d / 2), b = common * random_poly(d / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_UnivariateGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_MultivariateGcd(benchmark::State& state) {
  const VarTable v = bn_vars(3);
  const MRat a = parse_multirat("(x1*x2 + x3^2 - 1)*(x1^2 + x2*x3 + 3)", v);
  const MRat b = parse_multirat("(x1*x2 + x3^2 - 1)*(x2^2 - x1*x3 + x1)", v);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a.num(), b.num()));
}
BENCHMARK(BM_MultivariateGcd);

void BM_DegreeSequence(benchmark::State& state) {
  const JonqElem j = parse_jonq("jonq(A = [[1, y], [1, 1]], m = (1, 0, 0, 1))");
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(j, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DegreeSequence)->Arg(8)->Arg(16);

void BM_Stabilizer(benchmark::State& state) {
  const Configuration c = parse_configuration("{0, 1, -1, 2, 1/2, inf}");
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer(c));
}
BENCHMARK(BM_Stabilizer);

void BM_TorusConjugacyIrrational(benchmark::State& state) {
  const RatFunc f = parse_ratfunc("y^5 - y + 1");
  const RatFunc g = compose_moebius(f, Moebius(2, 1, 1, 3).inverse());
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_tori(f, g));
}
BENCHMARK(BM_TorusConjugacyIrrational);

void BM_DerivedWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derived_witness(n));
}
BENCHMARK(BM_DerivedWitness)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
