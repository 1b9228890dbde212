#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/filters_classic.hpp"
#include "impulse/filters_decision.hpp"
#include "impulse/filters_switching.hpp"
#include "impulse/image.hpp"

namespace impulse {

enum class FilterKind { Sm, Cwmf, Tsmf, Psmf, Apsmf, Amf, Dbmf, Adbmf };

inline constexpr FilterKind kAllFilters[] = {
    FilterKind::Sm,   FilterKind::Cwmf, FilterKind::Tsmf, FilterKind::Psmf,
    FilterKind::Apsmf, FilterKind::Amf, FilterKind::Dbmf, FilterKind::Adbmf};

std::string_view filter_name(FilterKind kind);
std::optional<FilterKind> filter_from_name(std::string_view name);

struct FilterSettings {
  ClassicConfig classic;
  SwitchingConfig switching;
  AdaptiveConfig adaptive;
};

/// Dispatches to the eight filter implementations.
Image apply_filter(const Image& image, FilterKind kind, const FilterSettings& settings);

/// Parameter values relevant to one filter, as a self-describing string
/// recorded in every result row.
std::string config_digest(FilterKind kind, const FilterSettings& settings);

struct BenchPlan {
  std::string image_path;
  std::string image_name;  // defaults to the path stem
  std::vector<FilterKind> filters;
  std::vector<double> densities;  // strictly increasing, each in [0,1]
  std::vector<std::uint64_t> seeds;
  FilterSettings settings;
};

struct BenchResult {
  std::string image_name;
  FilterKind filter = FilterKind::Sm;
  double density = 0.0;
  std::uint64_t seed = 0;
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity for a perfect reconstruction
  double wall_time_ms = 0.0;
  std::string config_digest;
};

enum class Metric { Mse, Psnr };

/// One trial per (density, seed, filter): corrupt the clean image with the
/// noise seed derived from (seed, density index), filter, and score against
/// the clean original. Results come back ordered by (density, filter, seed).
/// Everything except wall_time_ms is a pure function of the plan.
std::vector<BenchResult> run_benchmark(const BenchPlan& plan);
std::vector<BenchResult> run_benchmark(const BenchPlan& plan, const Image& clean);

/// CSV with header image,filter,density,seed,mse,psnr_db,wall_time_ms,
/// config_digest. psnr_db uses two decimals and the string "inf" for a
/// perfect score; byte-identical for identical result lists.
std::string emit_csv(const std::vector<BenchResult>& results);

/// Plain-text matrix, densities down, filters across, cells seed-averaged
/// to two decimals. All results must come from one image.
std::string emit_table(const std::vector<BenchResult>& results, Metric metric);

/// Per-filter (density, mse, psnr) blocks, plot-ready.
std::string emit_series(const std::vector<BenchResult>& results);

}  // namespace impulse
