#include <benchmark/benchmark.h>

#include "qalink/determinant.hpp"
#include "qalink/families.hpp"
#include "qalink/qa.hpp"
#include "qalink/tangle.hpp"

namespace {

using namespace qalink;

void BM_ParseReduce(benchmark::State& state) {
  LinkDiagram d = two_bridge_diagram(make_slope(13, 9));
  std::string pd = to_pd(d);
  for (auto _ : state) {
    LinkDiagram parsed = parse_pd(pd);
    benchmark::DoNotOptimize(reduce(parsed));
  }
}
BENCHMARK(BM_ParseReduce);

void BM_DeterminantGoeritz(benchmark::State& state) {
  long long p = state.range(0);
  LinkDiagram d = two_bridge_diagram(make_slope(p, p - 1));  // [1, p-1]: p crossings
  for (auto _ : state) benchmark::DoNotOptimize(determinant(d));
}
BENCHMARK(BM_DeterminantGoeritz)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_DeterminantOracle(benchmark::State& state) {
  long long p = state.range(0);
  LinkDiagram d = two_bridge_diagram(make_slope(p, p - 1));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_oracle(d));
}
BENCHMARK(BM_DeterminantOracle)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CertifyPretzelFill(benchmark::State& state) {
  FramedQATangle t = pretzel_quotient_tangle(3);
  LinkDiagram d = closure(t.tangle, make_slope(state.range(0), 1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_qa(d));
}
BENCHMARK(BM_CertifyPretzelFill)->Arg(1)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
