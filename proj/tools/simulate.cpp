#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iovtsim/harness.hpp"

namespace {

std::vector<int> parse_sweep(const std::string& spec) {
  int start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw std::invalid_argument("--n-sweep expects start:stop:step, e.g. 10:55:5");
  }
  if (step <= 0 || stop < start || start < 0) {
    throw std::invalid_argument("--n-sweep expects 0 <= start <= stop and step > 0");
  }
  std::vector<int> sweep;
  for (int n = start; n <= stop; n += step) sweep.push_back(n);
  return sweep;
}

std::vector<iovtsim::Arm> parse_arms(const std::string& spec) {
  std::vector<iovtsim::Arm> arms;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) arms.push_back(iovtsim::arm_from_name(token));
  }
  if (arms.empty()) throw std::invalid_argument("--arms expects a comma-separated list");
  return arms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NOMA-assisted multi-MEC offloading simulator"};

  std::string config_path;
  std::string out_dir;
  std::string arms_spec;
  std::string sweep_spec;
  int runs = -1;
  std::int64_t seed = -1;
  int threads = 0;

  app.add_option("--config", config_path, "JSON config file with scenario parameters")
      ->required();
  app.add_option("--out", out_dir, "output directory for CSV results")->required();
  app.add_option("--arms", arms_spec,
                 "comma-separated strategy arms (default "
                 "game-deadline,dist-deadline,dist-channel)");
  app.add_option("--runs", runs, "Monte Carlo runs per sweep point (default 100)");
  app.add_option("--seed", seed, "base seed (default: seed from config)");
  app.add_option("--n-sweep", sweep_spec, "device-count sweep start:stop:step (default 10:55:5)");
  app.add_option("--threads", threads, "worker threads, 0 = all cores");

  CLI11_PARSE(app, argc, argv);

  try {
    iovtsim::ExperimentConfig config;
    config.sim_params = iovtsim::load_params(config_path);
    config.base_seed = config.sim_params.seed;
    if (seed >= 0) config.base_seed = static_cast<std::uint64_t>(seed);
    if (runs >= 0) config.runs_per_point = runs;
    if (!arms_spec.empty()) config.arms = parse_arms(arms_spec);
    if (!sweep_spec.empty()) config.n_devices_sweep = parse_sweep(sweep_spec);
    config.threads = threads;

    const iovtsim::SweepResult result = iovtsim::run_sweep(config);
    iovtsim::emit_results(result, out_dir);

    std::cout << "wrote " << result.runs.size() << " runs ("
              << config.n_devices_sweep.size() << " sweep points x " << config.arms.size()
              << " arms x " << config.runs_per_point << " runs) to " << out_dir << "\n";
    for (const iovtsim::SweepRow& row : result.aggregate) {
      std::cout << row.arm << " n=" << row.n_devices
                << " mean_total_delay_s=" << row.mean_total_delay_s
                << " mean_unassoc_frac=" << row.mean_unassoc_frac << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return 1;
  }
}
