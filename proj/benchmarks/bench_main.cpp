#include <benchmark/benchmark.h>

#include <random>

#include "famloc/action.hpp"
#include "famloc/binomiality.hpp"
#include "famloc/parse.hpp"

using namespace famloc;

namespace {

Ideal make_ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(ps));
}

void BM_GroebnerCyclic4(benchmark::State& state) {
  auto r = RingSpec::make({}, {"a", "b", "c", "d"});
  auto I = make_ideal(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                          "a*b*c*d - 1"});
  GroebnerOptions opts;
  opts.use_cache = false;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, grevlex_order(*r), opts));
}
BENCHMARK(BM_GroebnerCyclic4)->Unit(benchmark::kMillisecond);

void BM_GroebnerKatsura3Lex(benchmark::State& state) {
  auto r = RingSpec::make({}, {"x", "y", "z", "w"});
  auto I = make_ideal(r, {"x + 2*y + 2*z + 2*w - 1", "x^2 + 2*y^2 + 2*z^2 + 2*w^2 - x",
                          "2*x*y + 2*y*z + 2*z*w - y", "y^2 + 2*x*z + 2*y*w - z"});
  GroebnerOptions opts;
  opts.use_cache = false;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, lex_order(*r), opts));
}
BENCHMARK(BM_GroebnerKatsura3Lex)->Unit(benchmark::kMillisecond);

void BM_CgsCoincidence(benchmark::State& state) {
  auto r = RingSpec::make({"s", "t"}, {"x"});
  auto I = make_ideal(r, {"x"});
  auto J = make_ideal(r, {"s*x - t"});
  for (auto _ : state) {
    clear_groebner_cache();
    benchmark::DoNotOptimize(coincidence_locus(I, J));
  }
}
BENCHMARK(BM_CgsCoincidence)->Unit(benchmark::kMillisecond);

void BM_CgsTwoParameters(benchmark::State& state) {
  auto r = RingSpec::make({"a", "b"}, {"x", "y"});
  auto I = make_ideal(r, {"a*x^2 + b*y - 1", "b*x*y + a*y^2 - x"});
  for (auto _ : state) {
    clear_groebner_cache();
    benchmark::DoNotOptimize(relative_reduced_gb(I));
  }
}
BENCHMARK(BM_CgsTwoParameters)->Unit(benchmark::kMillisecond);

void BM_UnitalShear(benchmark::State& state) {
  auto r = RingSpec::make({"a"}, {"x", "y"});
  auto I = make_ideal(r, {"x*y + (2 - a)*y^2 - 1"});
  for (auto _ : state) {
    clear_groebner_cache();
    benchmark::DoNotOptimize(unital_locus(I));
  }
}
BENCHMARK(BM_UnitalShear)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> val(-50, 50);
  std::vector<IntegerMatrix> mats;
  for (int k = 0; k < 16; ++k) {
    IntegerMatrix M(n, std::vector<Integer>(n));
    for (auto& row : M)
      for (auto& v : row) v = val(rng);
    mats.push_back(std::move(M));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(mats[k++ % mats.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
