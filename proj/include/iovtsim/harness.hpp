#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iovtsim/association.hpp"
#include "iovtsim/compute.hpp"
#include "iovtsim/noma.hpp"
#include "iovtsim/scenario.hpp"

namespace iovtsim {

enum class AssociationPolicy { Game, Distance };

// One strategy arm: how devices associate and in which order SIC decodes.
struct Arm {
  AssociationPolicy association = AssociationPolicy::Game;
  SicMode sic = SicMode::DeadlineAscending;

  std::string name() const;
};

// "game-deadline", "dist-deadline", "dist-channel" (also accepts the
// remaining combination "game-channel")
Arm arm_from_name(const std::string& name);

struct ExperimentConfig {
  SimParams sim_params;
  std::vector<int> n_devices_sweep{10, 15, 20, 25, 30, 35, 40, 45, 50, 55};
  int runs_per_point = 100;
  std::vector<Arm> arms{
      {AssociationPolicy::Game, SicMode::DeadlineAscending},
      {AssociationPolicy::Distance, SicMode::DeadlineAscending},
      {AssociationPolicy::Distance, SicMode::ChannelDescending},
  };
  std::uint64_t base_seed = 1;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct DeviceOutcome {
  int device_id = -1;
  int bs_id = kUnassociated;
  double alpha = 0.0;
  double mec_rate_bps = 0.0;
  double uplink_rate_bps = 0.0;
  double planned_delay_s = 0.0;
  double realized_delay_s = 0.0;
  bool met_deadline = false;
};

struct RunMetrics {
  std::string arm;
  int n_devices = 0;
  std::uint64_t seed = 0;
  double total_delay_s = 0.0;
  double unassociated_fraction = 0.0;
  std::vector<int> bs_load;              // associated-device count per BS id
  std::vector<double> bs_capacity_bps;   // per BS id
  std::vector<DeviceOutcome> devices;    // one entry per device
};

struct SweepRow {
  std::string arm;
  int n_devices = 0;
  double mean_total_delay_s = 0.0;
  double std_total_delay_s = 0.0;
  double mean_unassoc_frac = 0.0;
  double std_unassoc_frac = 0.0;
};

struct SweepResult {
  std::vector<RunMetrics> runs;    // ordered by (n, arm, run index)
  std::vector<SweepRow> aggregate; // ordered by (n, arm)
};

// Full pipeline for one run: scenario + channel from scenario_seed, arm's
// association, per-BS NOMA plan, task division and water-filling, staged
// timeline for realized delays. Deterministic in (params, scenario_seed, n,
// arm). Unassociated devices contribute the penalty delay.
RunMetrics run_once(const SimParams& params, std::uint64_t scenario_seed, int n,
                    const Arm& arm);

// Paired Monte Carlo sweep: run r uses seed base_seed + r, identical across
// arms and sweep points. Runs may execute in parallel; results are always in
// (n, arm, run) order.
SweepResult run_sweep(const ExperimentConfig& config);

// per_run.csv, aggregate.csv, bs_load.csv under out_dir (created if missing).
// LF line endings, shortest round-trip doubles.
void emit_results(const SweepResult& result, const std::string& out_dir);

}  // namespace iovtsim
