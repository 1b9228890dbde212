#include "impulse/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"

namespace impulse {

std::string_view filter_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::Sm: return "sm";
    case FilterKind::Cwmf: return "cwmf";
    case FilterKind::Tsmf: return "tsmf";
    case FilterKind::Psmf: return "psmf";
    case FilterKind::Apsmf: return "apsmf";
    case FilterKind::Amf: return "amf";
    case FilterKind::Dbmf: return "dbmf";
    case FilterKind::Adbmf: return "adbmf";
  }
  return "?";
}

std::optional<FilterKind> filter_from_name(std::string_view name) {
  for (FilterKind kind : kAllFilters) {
    if (filter_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Image apply_filter(const Image& image, FilterKind kind, const FilterSettings& s) {
  switch (kind) {
    case FilterKind::Sm: return filter_sm(image, s.classic.window);
    case FilterKind::Cwmf: return filter_cwmf(image, s.classic);
    case FilterKind::Tsmf: return filter_tsmf(image, s.classic);
    case FilterKind::Psmf: return filter_psmf(image, s.switching);
    case FilterKind::Apsmf: return filter_apsmf(image, s.switching);
    case FilterKind::Amf: return filter_amf(image, s.adaptive);
    case FilterKind::Dbmf: return filter_dbmf(image, s.adaptive.start_window);
    case FilterKind::Adbmf: return filter_adbmf(image, s.adaptive);
  }
  throw std::invalid_argument("unknown filter kind");
}

std::string config_digest(FilterKind kind, const FilterSettings& s) {
  const auto item = [](std::string_view key, int value) {
    return std::string(key) + "=" + std::to_string(value);
  };
  switch (kind) {
    case FilterKind::Sm:
      return item("window", s.classic.window.size);
    case FilterKind::Cwmf:
      return item("window", s.classic.window.size) + ";" +
             item("weight", s.classic.center_weight);
    case FilterKind::Tsmf:
      return item("window", s.classic.window.size) + ";" +
             item("weight", s.classic.center_weight) + ";" +
             item("tsm_threshold", s.classic.tsm_threshold);
    case FilterKind::Psmf:
      return item("window", s.switching.window.size) + ";" +
             item("detect_threshold", s.switching.detect_threshold) + ";" +
             item("detect_iters", s.switching.detect_iterations) + ";" +
             item("iter_cap", s.switching.filter_iteration_cap);
    case FilterKind::Apsmf:
      return item("window", s.switching.window.size) + ";" +
             item("detect_threshold", s.switching.detect_threshold) + ";" +
             item("detect_iters", s.switching.detect_iterations) + ";" +
             item("max_window", s.switching.max_window) + ";" +
             item("iter_cap", s.switching.filter_iteration_cap);
    case FilterKind::Amf:
    case FilterKind::Adbmf:
      return item("window", s.adaptive.start_window.size) + ";" +
             item("max_window", s.adaptive.max_window);
    case FilterKind::Dbmf:
      return item("window", s.adaptive.start_window.size);
  }
  return {};
}

namespace {

void validate_plan(const BenchPlan& plan) {
  if (plan.filters.empty() || plan.densities.empty() || plan.seeds.empty()) {
    throw std::invalid_argument("bench plan needs at least one filter, density and seed");
  }
  for (std::size_t i = 0; i < plan.densities.size(); ++i) {
    const double d = plan.densities[i];
    if (!(d >= 0.0 && d <= 1.0)) {
      throw std::invalid_argument("bench density must be in [0,1]");
    }
    if (i > 0 && !(plan.densities[i - 1] < d)) {
      throw std::invalid_argument("bench densities must be strictly increasing");
    }
  }
  if (std::set<std::uint64_t>(plan.seeds.begin(), plan.seeds.end()).size() !=
      plan.seeds.size()) {
    throw std::invalid_argument("bench seeds must be distinct");
  }
  if (std::set<FilterKind>(plan.filters.begin(), plan.filters.end()).size() !=
      plan.filters.size()) {
    throw std::invalid_argument("bench filters must be distinct");
  }
}

std::string format_psnr(double psnr_db) {
  if (std::isinf(psnr_db)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", psnr_db);
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

// Seed-averaged metric per (filter, density) cell, preserving the
// first-appearance order of filters and the density order.
struct Aggregate {
  std::string image_name;
  std::vector<FilterKind> filters;
  std::vector<double> densities;
  // cell[f][d] = (sum, count)
  std::vector<std::vector<std::pair<double, int>>> cells_mse;
  std::vector<std::vector<std::pair<double, int>>> cells_psnr;

  double mean_mse(std::size_t f, std::size_t d) const {
    return cells_mse[f][d].first / cells_mse[f][d].second;
  }
  double mean_psnr(std::size_t f, std::size_t d) const {
    return cells_psnr[f][d].first / cells_psnr[f][d].second;
  }
  bool has(std::size_t f, std::size_t d) const { return cells_mse[f][d].second > 0; }
};

Aggregate aggregate(const std::vector<BenchResult>& results) {
  if (results.empty()) {
    throw std::invalid_argument("no results to aggregate");
  }
  Aggregate agg;
  agg.image_name = results.front().image_name;
  for (const auto& r : results) {
    if (r.image_name != agg.image_name) {
      throw std::invalid_argument("results span multiple images");
    }
    if (std::find(agg.filters.begin(), agg.filters.end(), r.filter) ==
        agg.filters.end()) {
      agg.filters.push_back(r.filter);
    }
    if (std::find(agg.densities.begin(), agg.densities.end(), r.density) ==
        agg.densities.end()) {
      agg.densities.push_back(r.density);
    }
  }
  std::sort(agg.densities.begin(), agg.densities.end());
  agg.cells_mse.assign(agg.filters.size(),
                       std::vector<std::pair<double, int>>(agg.densities.size(), {0.0, 0}));
  agg.cells_psnr = agg.cells_mse;
  for (const auto& r : results) {
    const auto f = static_cast<std::size_t>(
        std::find(agg.filters.begin(), agg.filters.end(), r.filter) -
        agg.filters.begin());
    const auto d = static_cast<std::size_t>(
        std::find(agg.densities.begin(), agg.densities.end(), r.density) -
        agg.densities.begin());
    agg.cells_mse[f][d].first += r.mse;
    agg.cells_mse[f][d].second += 1;
    agg.cells_psnr[f][d].first += r.psnr_db;
    agg.cells_psnr[f][d].second += 1;
  }
  return agg;
}

}  // namespace

std::vector<BenchResult> run_benchmark(const BenchPlan& plan, const Image& clean) {
  validate_plan(plan);
  std::vector<BenchResult> results;
  results.reserve(plan.densities.size() * plan.filters.size() * plan.seeds.size());
  for (std::size_t di = 0; di < plan.densities.size(); ++di) {
    const double density = plan.densities[di];
    // One noise realization per (density, seed), shared by every filter.
    std::vector<Image> noisy;
    noisy.reserve(plan.seeds.size());
    for (std::uint64_t seed : plan.seeds) {
      noisy.push_back(
          inject_impulse(clean, {density, derive_stream(seed, di)}).image);
    }
    for (FilterKind kind : plan.filters) {
      const std::string digest = config_digest(kind, plan.settings);
      for (std::size_t ti = 0; ti < plan.seeds.size(); ++ti) {
        const auto start = std::chrono::steady_clock::now();
        const Image filtered = apply_filter(noisy[ti], kind, plan.settings);
        const auto stop = std::chrono::steady_clock::now();
        const QualityScore score = psnr(clean, filtered);
        results.push_back({plan.image_name, kind, density, plan.seeds[ti],
                           score.mse, score.psnr_db,
                           std::chrono::duration<double, std::milli>(stop - start).count(),
                           digest});
      }
    }
  }
  return results;
}

std::vector<BenchResult> run_benchmark(const BenchPlan& plan) {
  if (plan.image_path.empty()) {
    throw std::invalid_argument("bench plan has no image path");
  }
  const Image clean = load_pgm(plan.image_path);
  BenchPlan named = plan;
  if (named.image_name.empty()) {
    named.image_name = std::filesystem::path(plan.image_path).stem().string();
  }
  return run_benchmark(named, clean);
}

std::string emit_csv(const std::vector<BenchResult>& results) {
  std::string out = "image,filter,density,seed,mse,psnr_db,wall_time_ms,config_digest\n";
  for (const auto& r : results) {
    out += r.image_name;
    out += ',';
    out += filter_name(r.filter);
    out += ',';
    out += format_fixed(r.density, 2);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_fixed(r.mse, 4);
    out += ',';
    out += format_psnr(r.psnr_db);
    out += ',';
    out += format_fixed(r.wall_time_ms, 3);
    out += ',';
    out += r.config_digest;
    out += '\n';
  }
  return out;
}

std::string emit_table(const std::vector<BenchResult>& results, Metric metric) {
  const Aggregate agg = aggregate(results);
  const int width = 10;
  char buf[64];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-8s", "density");
  out += buf;
  for (FilterKind kind : agg.filters) {
    std::snprintf(buf, sizeof(buf), "%*s", width, std::string(filter_name(kind)).c_str());
    out += buf;
  }
  out += '\n';
  for (std::size_t d = 0; d < agg.densities.size(); ++d) {
    std::snprintf(buf, sizeof(buf), "%-8.2f", agg.densities[d]);
    out += buf;
    for (std::size_t f = 0; f < agg.filters.size(); ++f) {
      if (!agg.has(f, d)) {
        std::snprintf(buf, sizeof(buf), "%*s", width, "-");
      } else {
        const double v = metric == Metric::Psnr ? agg.mean_psnr(f, d) : agg.mean_mse(f, d);
        if (std::isinf(v)) {
          std::snprintf(buf, sizeof(buf), "%*s", width, "inf");
        } else {
          std::snprintf(buf, sizeof(buf), "%*.2f", width, v);
        }
      }
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string emit_series(const std::vector<BenchResult>& results) {
  const Aggregate agg = aggregate(results);
  std::string out = "# image " + agg.image_name + "\n";
  out += "# filter density mse psnr_db\n";
  for (std::size_t f = 0; f < agg.filters.size(); ++f) {
    for (std::size_t d = 0; d < agg.densities.size(); ++d) {
      if (!agg.has(f, d)) continue;
      out += filter_name(agg.filters[f]);
      out += ' ';
      out += format_fixed(agg.densities[d], 2);
      out += ' ';
      out += format_fixed(agg.mean_mse(f, d), 4);
      out += ' ';
      out += format_psnr(agg.mean_psnr(f, d));
      out += '\n';
    }
    if (f + 1 < agg.filters.size()) out += '\n';
  }
  return out;
}

}  // namespace impulse
