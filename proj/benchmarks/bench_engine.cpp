#include <benchmark/benchmark.h>

#include "bsk/coefficient.hpp"
#include "bsk/dsl/parser.hpp"
#include "bsk/dsl/runner.hpp"
#include "bsk/groebner.hpp"
#include "bsk/harness.hpp"
#include "bsk/newton.hpp"

namespace {

using namespace bsk;

Ring ring3() { return RingContext::make({"x", "y", "z"}, Field::rationals()); }

Ideal ideal_of(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(dsl::parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

void BM_BuchbergerCyclic(benchmark::State& state) {
  Ring r = ring3();
  const Ideal ideal = ideal_of(r, {"x + y + z", "x*y + y*z + x*z", "x*y*z - 1"});
  const MonomialOrder order = state.range(0) ? MonomialOrder::lex() : MonomialOrder::grevlex();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal.generators(), order));
}
BENCHMARK(BM_BuchbergerCyclic)->Arg(0)->Arg(1);

void BM_BuchbergerQuadricsAndCubic(benchmark::State& state) {
  Ring r = ring3();
  const Ideal ideal = ideal_of(r, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x^3 + y^3 + z^3 - 1"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal.generators(), MonomialOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerQuadricsAndCubic);

void BM_IntegralClosurePower(benchmark::State& state) {
  Ring r = ring3();
  const MonomialIdeal ideal = MonomialIdeal::from_ideal(ideal_of(r, {"x^3", "y^3", "z^3", "x*y*z"}));
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integral_closure_power(ideal, k));
}
BENCHMARK(BM_IntegralClosurePower)->DenseRange(1, 3);

void BM_CoefficientIdeal(benchmark::State& state) {
  Ring r = ring3();
  const Ideal ideal = ideal_of(r, {"x^3", "x*y", "y^3"});
  const Ideal reduction = ideal_of(r, {"x^3 + x*y", "y^3 + 2*x*y"});
  for (auto _ : state) {
    // fresh copies so the Gröbner cache is not reused across iterations
    Ideal i(r, ideal.generators()), j(r, reduction.generators());
    benchmark::DoNotOptimize(coefficient_ideal(i, j, 12));
  }
}
BENCHMARK(BM_CoefficientIdeal)->Unit(benchmark::kMillisecond);

void BM_CorpusRun(benchmark::State& state) {
  dsl::RunConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(dsl::run_corpus(BSK_CORPUS_DIR, cfg));
}
BENCHMARK(BM_CorpusRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
