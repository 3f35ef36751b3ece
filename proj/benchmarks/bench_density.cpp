#include <benchmark/benchmark.h>

#include "bench_util.hpp"

using namespace modeseek;

namespace {

void BM_KdeFixed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t d = static_cast<std::size_t>(state.range(1));
  const PointSet data = benchutil::blob_cloud(1, d, 4, n / 4);
  const BandwidthMatrix H(std::vector<double>(d, 2.0));
  const KernelProfile gauss{KernelKind::Gaussian};
  const std::vector<double> x(d, 5.0);

  for (auto _ : state) {
    benchmark::DoNotOptimize(kde_fixed(data, H, x, gauss));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_KdeFixed)->Args({1024, 2})->Args({4096, 5})->Args({16384, 5});

void BM_KdeSamplePoint(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointSet data = benchutil::blob_cloud(2, 5, 4, n / 4);
  std::vector<BandwidthMatrix> per;
  per.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    per.emplace_back(std::vector<double>(5, 1.5 + 0.1 * static_cast<double>(i % 7)));
  }
  const KernelProfile gauss{KernelKind::Gaussian};
  const std::vector<double> x(5, 5.0);

  for (auto _ : state) {
    benchmark::DoNotOptimize(kde_sample_point(data, per, x, gauss));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_KdeSamplePoint)->Arg(1024)->Arg(4096);

void BM_MsVectorFixed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointSet data = benchutil::blob_cloud(3, 5, 4, n / 4);
  const BandwidthMatrix H(std::vector<double>(5, 2.0));
  const std::vector<double> x(5, 5.0);

  for (auto _ : state) {
    benchmark::DoNotOptimize(ms_vector_fixed(x, data, H));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_MsVectorFixed)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_JsDivergence(benchmark::State& state) {
  const Eigen::Index d = static_cast<Eigen::Index>(state.range(0));
  std::vector<GaussianSummary> summaries;
  for (int j = 0; j < 3; ++j) {
    GaussianSummary s;
    s.mean = Eigen::VectorXd::Constant(d, static_cast<double>(j));
    s.cov = Eigen::MatrixXd::Identity(d, d) * (1.0 + 0.2 * j);
    s.member_count = 10;
    summaries.push_back(std::move(s));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(js_divergence(summaries));
  }
}
BENCHMARK(BM_JsDivergence)->Arg(1)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
