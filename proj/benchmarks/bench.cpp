#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "qm/enumerate.hpp"
#include "qm/phi.hpp"
#include "qm/psi.hpp"

namespace {

// A long walk that keeps both matching stacks busy: U pushes, A pops.
qm::QuarterPlaneWalk zigzag(std::size_t pairs) {
  std::vector<qm::WalkStep> steps;
  steps.reserve(2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    steps.push_back(qm::WalkStep::U);
    steps.push_back(qm::WalkStep::A);
  }
  return qm::QuarterPlaneWalk(std::move(steps));
}

void BM_phi(benchmark::State& state) {
  auto walk = zigzag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qm::phi(walk));
  state.SetItemsProcessed(state.iterations() * walk.size());
}
BENCHMARK(BM_phi)->Range(8, 4096);

void BM_psi(benchmark::State& state) {
  auto path = qm::forget_marks(qm::phi(zigzag(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(qm::psi(path));
  state.SetItemsProcessed(state.iterations() * path.size());
}
BENCHMARK(BM_psi)->Range(8, 4096);

void BM_parse_marked_path(benchmark::State& state) {
  std::string text =
      qm::format_path(qm::phi(zigzag(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(qm::parse_path<qm::ColourMark>(text));
  state.SetItemsProcessed(state.iterations() * (text.size() / 3));
}
BENCHMARK(BM_parse_marked_path)->Range(8, 1024);

void BM_count_swalks(benchmark::State& state) {
  qm::ClassSpec spec;
  spec.family = qm::Family::SWalks;
  spec.length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qm::count_class(spec));
}
BENCHMARK(BM_count_swalks)->DenseRange(6, 9);

void BM_count_swalks_sharded(benchmark::State& state) {
  qm::ClassSpec spec;
  spec.family = qm::Family::SWalks;
  spec.length = 9;
  std::size_t threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qm::count_class_sharded(spec, 3, threads));
}
BENCHMARK(BM_count_swalks_sharded)->RangeMultiplier(2)->Range(1, 8);

}  // namespace

BENCHMARK_MAIN();
