// Parallel kernels against their serial references on identical inputs.

#include "apforge/curve/points.hpp"
#include "apforge/param/family.hpp"
#include "apforge/search/search.hpp"

#include <benchmark/benchmark.h>

using namespace apforge;

namespace {

const search::SearchConfig& search_cfg() {
  static const auto cfg = search::theorem3_config(300, 60);
  return cfg;
}

void BM_search_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search::search_general(search_cfg()));
}

void BM_search_reference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search::search_general_reference(search_cfg()));
}

const exact::RatPoly& c3() {
  static const auto f = exact::rat_poly_desc({"-1", "0", "0", "2", "0", "0", "3"});
  return f;
}

void BM_points_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(curve::rational_points_search(c3(), st.range(0)));
}

void BM_points_reference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(curve::rational_points_search_reference(c3(), st.range(0)));
}

const param::ParamFamily& family_vi() {
  static const param::ParamFamily f{"vi", 1, 1, 2, 2,
                                    {{exact::form_from_ints({1, -2, -1}), exact::form_from_ints({1, 2, -1}),
                                      std::nullopt}}};
  return f;
}

void BM_cover_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(param::param_cover_check(family_vi(), st.range(0)));
}

void BM_cover_reference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(param::param_cover_check_reference(family_vi(), st.range(0)));
}

}  // namespace

BENCHMARK(BM_search_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_parallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_reference)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cover_parallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cover_reference)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
