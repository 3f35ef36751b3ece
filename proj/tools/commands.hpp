#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modeseek::tools {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scale ladder spec: `count` bandwidths whose square roots are equally
/// spaced over [sqrt_min, sqrt_max]. Parsed from "MIN:MAX:COUNT".
struct RangeSpec {
  double sqrt_min = 10.0;
  double sqrt_max = 30.0;
  std::size_t count = 9;
};

RangeSpec parse_range(const std::string& text);

struct SegmentOptions {
  std::string input;
  std::string out_prefix;
  std::vector<std::string> ranges;  // raw MIN:MAX:COUNT, 0, 1 or 5 entries
  std::string order = "x,y,r,g,b";
  std::string mode = "iterative";
  std::string variant = "balloon";
  double eps = 1e-6;
  std::size_t max_iters = 500;
  std::size_t subsample = 1;
  std::uint64_t seed = 0;
};

int run_segment(const SegmentOptions& options);

struct BenchOptions {
  std::size_t dim = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> components;  // raw COUNT:MU,..:SIG,..
  std::string variant = "fixed";
  std::string mode = "none";
  std::vector<double> h;  // bandwidth diagonal for fixed/constant runs
  std::string range;      // MIN:MAX:COUNT for the selection modes
  double eps = 1e-6;
  std::size_t max_iters = 500;
  std::string out;  // empty = stdout
};

int run_bench(const BenchOptions& options);

}  // namespace modeseek::tools
