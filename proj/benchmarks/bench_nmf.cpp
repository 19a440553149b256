#include <benchmark/benchmark.h>

#include "nmf/bifurcation.hpp"
#include "nmf/oracle.hpp"
#include "nmf/parse.hpp"

using namespace nmf;

namespace {

const BiPoly kP = parse_bipoly("(x^2+y^3)^2+x^5");
const BiPoly kQ = parse_bipoly("2x^4+x^2y^3+x*y^5+y^8");

void BM_Parse(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parse_bipoly("2x^4+x^2y^3+x*y^5+y^8 - 3/7(x+y)^6"));
}
BENCHMARK(BM_Parse);

void BM_NewtonDiagram(benchmark::State& st) {
  const BiPoly F = kP - kQ.scaled(Fe(mpq_class(1, 2)));
  for (auto _ : st) benchmark::DoNotOptimize(NewtonDiagram::of(F).faces());
}
BENCHMARK(BM_NewtonDiagram);

void BM_FactorRational(benchmark::State& st) {
  // (z^2 - 2)(z^3 + z + 1)(z - 5)^2
  const Poly f = Poly({Fe(-2), Fe(), Fe(1)}) * Poly({Fe(1), Fe(1), Fe(), Fe(1)}) *
                 Poly({Fe(-5), Fe(1)}).pow(2);
  for (auto _ : st) benchmark::DoNotOptimize(factor_rational(f));
}
BENCHMARK(BM_FactorRational);

void BM_MilnorFiber(benchmark::State& st) {
  const Value values[] = {Value::finite(Fe(-4)), Value::finite(Fe(0)), Value::finite(Fe(mpq_class(1, 2))),
                          Value::infinity()};
  const Value v = values[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(motivic_milnor_fiber(MilnorQuery{kP, kQ, Fe(), Fe(), v}));
  st.SetLabel(v.str());
}
BENCHMARK(BM_MilnorFiber)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_NewtonBifurcationSet(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(newton_bifurcation_set(kP, kQ));
}
BENCHMARK(BM_NewtonBifurcationSet)->Unit(benchmark::kMillisecond);

void BM_CompareSets(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(compare_sets(kP, kQ));
}
BENCHMARK(BM_CompareSets)->Unit(benchmark::kMillisecond);

void BM_MilnorNumber(benchmark::State& st) {
  const BiPoly F = kP + kQ.scaled(Fe(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(milnor_number(F, Fe(), Fe()));
}
BENCHMARK(BM_MilnorNumber)->Arg(0)->Arg(4)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_MilnorNumberDegree(benchmark::State& st) {
  // y^n - x^(n+1) + x^2 y^(n-1), mu grows quadratically in n
  const int n = static_cast<int>(st.range(0));
  const BiPoly F = BiPoly::monomial(Fe(1), 0, n) - BiPoly::monomial(Fe(1), n + 1, 0) +
                   BiPoly::monomial(Fe(1), 2, n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(milnor_number(F, Fe(), Fe()));
  st.counters["mu"] = static_cast<double>(milnor_number(F, Fe(), Fe()));
}
BENCHMARK(BM_MilnorNumberDegree)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
