#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "impulse/bench.hpp"
#include "impulse/image.hpp"
#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("short write to " + path.string());
  }
}

std::string psnr_str(double psnr_db) {
  if (std::isinf(psnr_db)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", psnr_db);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"impulse: corrupt, denoise, score and benchmark grayscale PGM images"};
  app.require_subcommand(1);

  const std::vector<std::string> filter_ids = {"sm",    "cwmf", "tsmf", "psmf",
                                               "apsmf", "amf",  "dbmf", "adbmf"};

  const CLI::Validator odd_window(
      [](std::string& s) -> std::string {
        try {
          std::size_t used = 0;
          const int v = std::stoi(s, &used);
          if (used != s.size() || v < 3 || v % 2 == 0) {
            return "must be an odd integer >= 3";
          }
        } catch (const std::exception&) {
          return "must be an odd integer >= 3";
        }
        return {};
      },
      "ODD>=3", "odd_window");

  // Filter parameters shared by denoise and bench; every value lands in the
  // CSV config digest so runs stay self-describing.
  int window = 3;
  int weight = 3;
  int tsm_threshold = 20;
  int detect_threshold = 40;
  int detect_iters = 3;
  int max_window = 15;
  int iter_cap = 100;

  const auto add_filter_options = [&](CLI::App* cmd) {
    cmd->add_option("--window", window, "window side, odd, >= 3")
        ->check(odd_window)
        ->capture_default_str();
    cmd->add_option("--weight", weight, "center weight for cwmf/tsmf, odd")
        ->capture_default_str();
    cmd->add_option("--threshold", tsm_threshold, "tri-state threshold, 0..255")
        ->check(CLI::Range(0, 255))
        ->capture_default_str();
    cmd->add_option("--detect-threshold", detect_threshold,
                    "psmf/apsmf detection threshold")
        ->check(CLI::Range(0, 255))
        ->capture_default_str();
    cmd->add_option("--detect-iters", detect_iters, "psmf/apsmf detection rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-window", max_window,
                    "largest window for apsmf/amf/adbmf, odd")
        ->check(odd_window)
        ->capture_default_str();
    cmd->add_option("--iter-cap", iter_cap, "psmf/apsmf filtering round cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  std::string noise_input, noise_output;
  double density = 0.0;
  std::uint64_t seed = 0;
  auto* noise_cmd =
      app.add_subcommand("noise", "add seeded salt-and-pepper noise to a PGM image");
  noise_cmd->add_option("--input", noise_input, "clean PGM")->required();
  noise_cmd->add_option("--output", noise_output, "noisy PGM to write")->required();
  noise_cmd->add_option("--density", density, "fraction of pixels corrupted, 0..1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  noise_cmd->add_option("--seed", seed, "noise seed")->capture_default_str();

  std::string den_input, den_output, filter_id;
  auto* den_cmd = app.add_subcommand("denoise", "run one filter over a PGM image");
  den_cmd->add_option("--input", den_input, "noisy PGM")->required();
  den_cmd->add_option("--output", den_output, "filtered PGM to write")->required();
  den_cmd->add_option("--filter", filter_id, "one of sm cwmf tsmf psmf apsmf amf dbmf adbmf")
      ->required()
      ->check(CLI::IsMember(filter_ids));
  add_filter_options(den_cmd);

  std::string ref_path, cand_path;
  auto* score_cmd =
      app.add_subcommand("score", "print MSE and PSNR of a candidate against a reference");
  score_cmd->add_option("--reference", ref_path, "clean PGM")->required();
  score_cmd->add_option("--candidate", cand_path, "PGM to score")->required();

  std::string bench_image, csv_path = "bench.csv", table_path, series_path;
  std::vector<std::string> bench_filters = filter_ids;
  std::vector<double> bench_densities = {0.05, 0.10, 0.20, 0.30, 0.40, 0.50};
  std::vector<std::uint64_t> bench_seeds = {1, 2, 3, 4, 5};
  auto* bench_cmd = app.add_subcommand(
      "bench", "sweep noise densities over filters and emit CSV/table/series files");
  bench_cmd->add_option("--image", bench_image, "clean PGM to corrupt and restore")
      ->required();
  bench_cmd->add_option("--filters", bench_filters, "comma-separated filter ids")
      ->delimiter(',')
      ->check(CLI::IsMember(filter_ids));
  bench_cmd->add_option("--densities", bench_densities,
                        "comma-separated noise densities, strictly increasing")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seeds", bench_seeds, "comma-separated trial seeds")
      ->delimiter(',');
  bench_cmd->add_option("--csv", csv_path, "per-trial CSV output path")
      ->capture_default_str();
  bench_cmd->add_option("--table", table_path,
                        "write seed-averaged PSNR and MSE matrices here");
  bench_cmd->add_option("--series", series_path, "write per-filter plot series here");
  add_filter_options(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (weight < 1 || weight % 2 == 0) {
    std::cerr << "usage error: --weight must be odd and positive\n";
    return 1;
  }
  if (max_window < window) {
    std::cerr << "usage error: --max-window must be >= --window\n";
    return 1;
  }
  if (*bench_cmd) {
    if (!std::is_sorted(bench_densities.begin(), bench_densities.end()) ||
        std::adjacent_find(bench_densities.begin(), bench_densities.end()) !=
            bench_densities.end()) {
      std::cerr << "usage error: --densities must be strictly increasing\n";
      return 1;
    }
    if (std::set<std::uint64_t>(bench_seeds.begin(), bench_seeds.end()).size() !=
        bench_seeds.size()) {
      std::cerr << "usage error: --seeds must be distinct\n";
      return 1;
    }
  }

  impulse::FilterSettings settings;
  settings.classic.window = {window};
  settings.classic.center_weight = weight;
  settings.classic.tsm_threshold = tsm_threshold;
  settings.switching.window = {window};
  settings.switching.detect_threshold = detect_threshold;
  settings.switching.detect_iterations = detect_iters;
  settings.switching.max_window = max_window;
  settings.switching.filter_iteration_cap = iter_cap;
  settings.adaptive.start_window = {window};
  settings.adaptive.max_window = max_window;

  try {
    if (*noise_cmd) {
      const impulse::Image input = impulse::load_pgm(noise_input);
      impulse::save_pgm(noise_output,
                        impulse::inject_impulse(input, {density, seed}).image);
    } else if (*den_cmd) {
      const impulse::Image input = impulse::load_pgm(den_input);
      impulse::save_pgm(den_output,
                        impulse::apply_filter(input, *impulse::filter_from_name(filter_id),
                                              settings));
    } else if (*score_cmd) {
      const impulse::QualityScore q =
          impulse::psnr(impulse::load_pgm(ref_path), impulse::load_pgm(cand_path));
      std::printf("mse=%.10g psnr_db=%s\n", q.mse, psnr_str(q.psnr_db).c_str());
    } else if (*bench_cmd) {
      impulse::BenchPlan plan;
      plan.image_path = bench_image;
      for (const auto& id : bench_filters) {
        plan.filters.push_back(*impulse::filter_from_name(id));
      }
      plan.densities = bench_densities;
      plan.seeds = bench_seeds;
      plan.settings = settings;
      const auto results = impulse::run_benchmark(plan);
      write_text(csv_path, impulse::emit_csv(results));
      if (!table_path.empty()) {
        write_text(table_path, "# psnr_db, seed-averaged\n" +
                                   impulse::emit_table(results, impulse::Metric::Psnr) +
                                   "\n# mse, seed-averaged\n" +
                                   impulse::emit_table(results, impulse::Metric::Mse));
      }
      if (!series_path.empty()) {
        write_text(series_path, impulse::emit_series(results));
      }
      std::cout << impulse::emit_table(results, impulse::Metric::Psnr);
      std::cout << "wrote " << results.size() << " results to " << csv_path << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
