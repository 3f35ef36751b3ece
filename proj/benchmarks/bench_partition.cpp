#include <benchmark/benchmark.h>

#include "bench_util.hpp"

using namespace modeseek;

namespace {

void BM_FilterPoint(benchmark::State& state) {
  const PointSet data = benchutil::blob_cloud(11, 5, 4, 1024);
  const BandwidthMatrix H(std::vector<double>(5, 4.0));
  MeanShiftConfig cfg;
  cfg.variant = MeanShiftVariant::Fixed;
  const auto src = BandwidthSource::fixed(H);

  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_point(data.point(i % data.size()), data, src, cfg));
    ++i;
  }
}
BENCHMARK(BM_FilterPoint);

void BM_PartitionFixed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointSet data = benchutil::blob_cloud(12, 5, 4, n / 4);
  const BandwidthMatrix H(std::vector<double>(5, 4.0));
  MeanShiftConfig cfg;

  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_fixed(data, H, cfg));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_PartitionFixed)->Unit(benchmark::kMillisecond)->Arg(512)->Arg(2048);

void BM_PartitionPseudoBalloon(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointSet data = benchutil::blob_cloud(13, 5, 4, n / 4);
  std::vector<BandwidthMatrix> per;
  for (std::size_t i = 0; i < data.size(); ++i) {
    per.emplace_back(std::vector<double>(5, 3.0 + 0.2 * static_cast<double>(i % 5)));
  }
  MeanShiftConfig cfg;

  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_pseudo_balloon(data, per, cfg));
  }
}
BENCHMARK(BM_PartitionPseudoBalloon)->Unit(benchmark::kMillisecond)->Arg(512)->Arg(2048);

void BM_GroupModes(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(14);
  std::vector<std::vector<double>> modes(n, std::vector<double>(5));
  std::vector<BandwidthMatrix> per;
  for (auto& m : modes) {
    for (auto& v : m) {
      v = static_cast<double>(rng() % 8) * 10.0;
    }
    per.emplace_back(std::vector<double>(5, 4.0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_modes(modes, per));
  }
}
BENCHMARK(BM_GroupModes)->Unit(benchmark::kMillisecond)->Arg(1024)->Arg(4096);

void BM_SelectIterative(benchmark::State& state) {
  const FeatureSpaceLayout layout({1, 1});
  std::mt19937_64 rng(15);
  std::vector<std::vector<double>> rows;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 100; ++i) {
      rows.push_back({c * 12.0 + benchutil::standard_normal(rng),
                      c * 12.0 + benchutil::standard_normal(rng)});
    }
  }
  const PointSet data = PointSet::from_rows(rows, layout);
  const BandwidthRange range = BandwidthRange::sqrt_spaced(layout, 0.7, 6.0, 5);
  MeanShiftConfig cfg;

  for (auto _ : state) {
    benchmark::DoNotOptimize(select_iterative(data, range, {0, 1}, cfg));
  }
}
BENCHMARK(BM_SelectIterative)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
