#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "modeseek/modeseek.hpp"

namespace modeseek::tools {

namespace {

using nlohmann::ordered_json;

constexpr const char* kDomainNames[5] = {"x", "y", "r", "g", "b"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    parts.push_back(item);
  }
  return parts;
}

std::vector<std::size_t> parse_order(const std::string& text) {
  const std::map<std::string, std::size_t> names = {
      {"x", 0}, {"y", 1}, {"r", 2}, {"g", 3}, {"b", 4}};
  std::vector<std::size_t> order;
  for (const auto& tok : split(text, ',')) {
    auto it = names.find(tok);
    if (it == names.end()) {
      throw ConfigError("--order: unknown domain name '" + tok +
                        "' (expected a permutation of x,y,r,g,b)");
    }
    order.push_back(it->second);
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::size_t>{0, 1, 2, 3, 4}) {
    throw ConfigError("--order: must be a permutation of x,y,r,g,b");
  }
  return order;
}

std::vector<RangeSpec> resolve_ranges(const std::vector<std::string>& raw) {
  std::vector<RangeSpec> specs;
  if (raw.empty()) {
    specs.assign(5, RangeSpec{});
  } else if (raw.size() == 1) {
    specs.assign(5, parse_range(raw.front()));
  } else if (raw.size() == 5) {
    for (const auto& r : raw) {
      specs.push_back(parse_range(r));
    }
  } else {
    throw ConfigError("--range: give one spec for all domains or one per domain (5)");
  }
  return specs;
}

MeanShiftVariant parse_variant(const std::string& text) {
  if (text == "balloon") {
    return MeanShiftVariant::PseudoBalloon;
  }
  if (text == "sample-point") {
    return MeanShiftVariant::SamplePoint;
  }
  throw ConfigError("--variant: expected 'balloon' or 'sample-point', got '" + text + "'");
}

// Without-replacement subsample of m indices, ascending.
std::vector<std::size_t> subsample_indices(std::size_t n, std::size_t m,
                                           std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng() % (n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

RasterImage load_input(const std::string& path) {
  try {
    return load_ppm(path);
  } catch (const PpmParseError&) {
    throw;  // parse errors carry their own context
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << body;
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

}  // namespace

RangeSpec parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw ConfigError("--range: expected MIN:MAX:COUNT, got '" + text + "'");
  }
  RangeSpec spec;
  try {
    spec.sqrt_min = std::stod(parts[0]);
    spec.sqrt_max = std::stod(parts[1]);
    spec.count = static_cast<std::size_t>(std::stoul(parts[2]));
  } catch (const std::exception&) {
    throw ConfigError("--range: malformed spec '" + text + "'");
  }
  if (!(spec.sqrt_min > 0.0) || !(spec.sqrt_max > spec.sqrt_min)) {
    throw ConfigError("--range: need 0 < MIN < MAX in '" + text + "'");
  }
  if (spec.count < 3) {
    throw ConfigError("--range: COUNT must be at least 3 in '" + text + "'");
  }
  return spec;
}

int run_segment(const SegmentOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();

  if (options.subsample < 1) {
    throw ConfigError("--subsample: factor must be at least 1");
  }
  const auto order = parse_order(options.order);
  const auto specs = resolve_ranges(options.ranges);
  const MeanShiftVariant variant = parse_variant(options.variant);
  if (options.mode != "iterative" && options.mode != "joint") {
    throw ConfigError("--mode: expected 'iterative' or 'joint', got '" + options.mode + "'");
  }

  const RasterImage image = load_input(options.input);
  const PointSet all_points = image_to_features(image);
  const FeatureSpaceLayout& layout = all_points.layout();
  const std::size_t n = all_points.size();

  // Kernel-center subset; trajectories and sums run over these points.
  std::vector<std::size_t> kernel_idx(n);
  std::iota(kernel_idx.begin(), kernel_idx.end(), 0);
  if (options.subsample > 1) {
    const std::size_t m = std::max<std::size_t>(1, (n + options.subsample - 1) / options.subsample);
    kernel_idx = subsample_indices(n, m, options.seed);
  }
  std::vector<std::vector<double>> kernel_rows;
  kernel_rows.reserve(kernel_idx.size());
  for (std::size_t i : kernel_idx) {
    kernel_rows.push_back(all_points.point(i));
  }
  const PointSet kernel_points = PointSet::from_rows(kernel_rows, layout);

  MeanShiftConfig config;
  config.convergence_eps = options.eps;
  config.max_iters = options.max_iters;
  config.variant = variant;
  config.validate();

  std::vector<BandwidthRange::SqrtSpec> sqrt_specs;
  for (const auto& s : specs) {
    sqrt_specs.push_back({s.sqrt_min, s.sqrt_max, s.count});
  }
  const BandwidthRange range = BandwidthRange::sqrt_spaced_per_domain(layout, sqrt_specs);

  SelectionResult selection;
  if (options.mode == "iterative") {
    selection = select_iterative(kernel_points, range, order, config);
  } else {
    const std::size_t count = specs.front().count;
    for (const auto& s : specs) {
      if (s.count != count) {
        throw ConfigError("--mode joint requires the same COUNT in every domain range");
      }
    }
    std::vector<BandwidthMatrix> scales;
    scales.reserve(count);
    for (std::size_t b = 0; b < count; ++b) {
      std::vector<std::vector<double>> blocks;
      for (std::size_t p = 0; p < layout.domain_count(); ++p) {
        blocks.push_back(range.block(p, b));
      }
      scales.push_back(compose_bandwidth(blocks, layout));
    }
    selection = select_joint(kernel_points, scales, config);
  }

  const Partition kernel_partition =
      final_partition(kernel_points, selection.assignment, variant, config);

  // Expand to every pixel: subset pixels keep their result, the rest inherit
  // from the closest kernel point under that point's selected bandwidth.
  Partition full;
  full.dim = layout.total_dim();
  full.labels.assign(n, 0);
  full.modes.resize(n * full.dim);
  full.converged.assign(n, 1);
  full.cluster_count = kernel_partition.cluster_count;

  std::vector<std::size_t> owner(n, n);
  for (std::size_t j = 0; j < kernel_idx.size(); ++j) {
    owner[kernel_idx[j]] = j;
  }
  parallel_for(0, n, worker_count(config.threads), [&](std::size_t i) {
    std::size_t j = owner[i];
    if (j == n) {
      const auto p = all_points.point(i);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < kernel_points.size(); ++c) {
        const double d2 =
            mahalanobis_sq(p, kernel_points.point(c), selection.assignment.composed[c]);
        if (d2 < best) {
          best = d2;
          j = c;
        }
      }
    }
    full.labels[i] = kernel_partition.labels[j];
    full.converged[i] = kernel_partition.converged[j];
    const auto mode = kernel_partition.mode(j);
    std::copy(mode.begin(), mode.end(), full.modes.begin() + i * full.dim);
  });

  // outputs
  const RasterImage seg = render_segmentation(image.width, image.height, full);
  save_ppm(seg, options.out_prefix + ".seg.ppm");

  std::string labels_csv;
  labels_csv.reserve(n * 4);
  for (std::size_t i = 0; i < n; ++i) {
    labels_csv += std::to_string(full.labels[i]);
    labels_csv += '\n';
  }
  write_text(options.out_prefix + ".labels.csv", labels_csv);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  ordered_json report;
  report["schema_version"] = 1;
  report["command"] = "segment";
  report["input"] = options.input;
  report["width"] = image.width;
  report["height"] = image.height;
  report["points"] = n;
  report["mode"] = options.mode;
  report["variant"] = options.variant;
  {
    ordered_json names = ordered_json::array();
    for (std::size_t p : order) {
      names.push_back(kDomainNames[p]);
    }
    report["order"] = names;
  }
  {
    ordered_json ranges = ordered_json::array();
    for (std::size_t p = 0; p < 5; ++p) {
      ranges.push_back({{"domain", kDomainNames[p]},
                        {"sqrt_min", specs[p].sqrt_min},
                        {"sqrt_max", specs[p].sqrt_max},
                        {"count", specs[p].count}});
    }
    report["ranges"] = ranges;
  }
  report["eps"] = options.eps;
  report["max_iters"] = options.max_iters;
  report["subsample"] = options.subsample;
  report["kernel_points"] = kernel_points.size();
  report["seed"] = options.seed;
  report["cluster_count"] = full.cluster_count;
  {
    // per-domain histogram of selected scale indices over kernel points
    ordered_json histograms;
    const auto& scale_index = selection.assignment.scale_index;
    for (std::size_t p = 0; p < scale_index.size(); ++p) {
      std::size_t scales = 0;
      for (std::size_t b : scale_index[p]) {
        scales = std::max(scales, b + 1);
      }
      scales = std::max(scales, options.mode == "iterative" ? range.scale_count(p)
                                                            : specs.front().count);
      std::vector<std::size_t> hist(scales, 0);
      for (std::size_t b : scale_index[p]) {
        ++hist[b];
      }
      const std::string key = options.mode == "iterative" ? kDomainNames[p] : "joint";
      histograms[key] = hist;
    }
    report["selected_scale_histograms"] = histograms;
  }
  report["partition_runs"] = {{"selection", selection.runs.partition_runs},
                              {"final", 1},
                              {"total", selection.runs.partition_runs + 1}};
  {
    std::size_t affected = 0;
    for (auto c : selection.diagnostics.non_converged_per_point) {
      affected += (c > 0);
    }
    report["non_convergence"] = {
        {"selection_flags", selection.diagnostics.non_converged_total},
        {"selection_affected_points", affected},
        {"final_non_converged_points", kernel_partition.non_converged_count()}};
  }
  report["wall_time_seconds"] = seconds;

  write_text(options.out_prefix + ".report.json", report.dump(2) + "\n");
  return 0;
}

}  // namespace modeseek::tools
