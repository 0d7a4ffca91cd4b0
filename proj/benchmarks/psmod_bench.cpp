#include "psmod/arith.hpp"
#include "psmod/constructions.hpp"
#include "psmod/ideals.hpp"
#include "psmod/refine.hpp"
#include "psmod/syntax.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace psmod;

Instance instance(std::string_view domain, std::string_view module, std::string_view a,
                  std::string_view b, std::string_view x, std::string_view y) {
  const Domain d = parse_domain(domain);
  const Module m = parse_module(module, d);
  const Domain& ed = element_domain(m);
  return make_instance(d, m, parse_element(d, a), parse_element(d, b), parse_vector(ed, x),
                       parse_vector(ed, y));
}

void BM_DivisorsZ(benchmark::State& state) {
  const Domain z = Domain::integers();
  const Element n = parse_element(z, std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(divisors_up_to_units(z, n));
}
BENCHMARK(BM_DivisorsZ)->Arg(360)->Arg(5040)->Arg(720720);

void BM_DivisorsQuadratic(benchmark::State& state) {
  const Domain d = parse_domain("Z[w,-5]");
  const Element n = parse_element(d, "(1+w)^3*(2+w)*6");
  for (auto _ : state) benchmark::DoNotOptimize(divisors_up_to_units(d, n));
}
BENCHMARK(BM_DivisorsQuadratic);

void BM_ColonIdeal(benchmark::State& state) {
  const Domain d = parse_domain("Z[w,-5]");
  const OIdeal i = parse_ideal(d, "[6, 2+2w]");
  const OIdeal j = parse_ideal(d, "[2, 1+w]");
  for (auto _ : state) benchmark::DoNotOptimize(colon(i, j));
}
BENCHMARK(BM_ColonIdeal);

void BM_FindRefinementFound(benchmark::State& state) {
  const Instance inst = instance("Z[w,-5]", "rank 2 gens [(1,0),(0,1)]", "6", "(1+w)*2",
                                 "((1+w)*2, 2-2w)", "(6, -4-2w)");
  for (auto _ : state) benchmark::DoNotOptimize(find_refinement(inst));
}
BENCHMARK(BM_FindRefinementFound);

void BM_FindRefinementNotRefinable(benchmark::State& state) {
  const Instance inst = instance("Z[w,-5]", "rank 1 gens [1]", "2", "1+w", "1+w", "2");
  for (auto _ : state) benchmark::DoNotOptimize(find_refinement(inst));
}
BENCHMARK(BM_FindRefinementNotRefinable);

void BM_LocalizedFind(benchmark::State& state) {
  const Instance inst = instance("Z[w,-3]", "rank 1 gens [1]", "2", "1+w", "2", "1-w");
  const Instance loc = localize(inst, {OrderElement(2), OrderElement(Integer(1), Integer(1)), OrderElement(Integer(1), Integer(-1))});
  for (auto _ : state) benchmark::DoNotOptimize(find_refinement(loc));
}
BENCHMARK(BM_LocalizedFind);

void BM_EnvelopeStep(benchmark::State& state) {
  const Domain z = Domain::integers();
  const Module m = parse_module("rank 2 gens [(1,0),(0,1)]", z);
  const Submodule n(m, {parse_vector(z, "(2,0)"), parse_vector(z, "(0,3)")});
  const EnvelopeBounds bounds{Integer(state.range(0)), 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ps_envelope_step(n, bounds));
}
BENCHMARK(BM_EnvelopeStep)->Arg(4)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
