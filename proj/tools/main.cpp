#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "modeseek/imaging.hpp"

using modeseek::tools::BenchOptions;
using modeseek::tools::SegmentOptions;

int main(int argc, char** argv) {
  CLI::App app{"modeseek: mean shift clustering with per-domain adaptive bandwidth selection"};
  app.require_subcommand(1);

  SegmentOptions seg;
  CLI::App* segment = app.add_subcommand("segment", "Segment a binary PPM (P6) image");
  segment->add_option("--input", seg.input, "input image (P6 PPM, maxval 255)")->required();
  segment->add_option("--out-prefix", seg.out_prefix,
                      "output prefix for .seg.ppm, .labels.csv and .report.json")
      ->required();
  segment->add_option("--range", seg.ranges,
                      "scale ladder MIN:MAX:COUNT in sqrt-bandwidth units; give once for "
                      "all domains or once per domain (x,y,r,g,b)");
  segment->add_option("--order", seg.order, "domain processing order (default x,y,r,g,b)");
  segment->add_option("--mode", seg.mode, "bandwidth selection: iterative | joint");
  segment->add_option("--variant", seg.variant, "final partitioner: balloon | sample-point");
  segment->add_option("--eps", seg.eps, "trajectory convergence threshold");
  segment->add_option("--max-iters", seg.max_iters, "trajectory iteration cap");
  segment->add_option("--subsample", seg.subsample,
                      "keep every n-th point as a kernel center (1 = all)");
  segment->add_option("--seed", seg.seed, "seed for the subsampling draw");

  BenchOptions bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Cluster a seeded Gaussian mixture and score the result");
  bench_cmd->add_option("--dim", bench.dim, "space dimension (1..5)")->required();
  bench_cmd->add_option("--component", bench.components,
                        "mixture component COUNT:MU,..:SIGMA,.. (repeatable)")
      ->required();
  bench_cmd->add_option("--seed", bench.seed, "mixture seed");
  bench_cmd->add_option("--variant", bench.variant, "fixed | balloon | sample-point");
  bench_cmd->add_option("--mode", bench.mode, "bandwidth source: none | iterative | joint");
  bench_cmd->add_option("--bandwidth", bench.h, "bandwidth diagonal (1 or --dim entries)")
      ->delimiter(',');
  bench_cmd->add_option("--range", bench.range, "scale ladder MIN:MAX:COUNT for selection");
  bench_cmd->add_option("--eps", bench.eps, "trajectory convergence threshold");
  bench_cmd->add_option("--max-iters", bench.max_iters, "trajectory iteration cap");
  bench_cmd->add_option("--out", bench.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (segment->parsed()) {
      return modeseek::tools::run_segment(seg);
    }
    return modeseek::tools::run_bench(bench);
  } catch (const modeseek::tools::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const modeseek::PpmParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const modeseek::tools::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
