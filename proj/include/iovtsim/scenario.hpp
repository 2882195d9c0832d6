#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace iovtsim {

struct Position {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

inline double distance_m(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Physical and compute parameters of a simulation world. Defaults follow the
// evaluation setup: B = 2 MHz, N0 = -174 dBm/Hz, workloads 5..10 Mbit,
// deadlines 0.1..2 s, local rates 1..10 Mbit/s, MEC capacity 0.4..2 Gbit/s,
// 600 m area, 10 s penalty for unassociated devices.
struct SimParams {
  double bandwidth_hz = 2e6;
  double noise_psd_dbm_hz = -174.0;
  std::array<double, 2> workload_range_bits{5e6, 10e6};
  std::array<double, 2> deadline_range_s{0.1, 2.0};
  std::array<double, 2> local_rate_range_bps{1e6, 10e6};
  std::array<double, 2> mec_capacity_range_bps{0.4e9, 2e9};
  double area_m = 600.0;
  double penalty_delay_s = 10.0;
  double power_cap_w = 0.2;  // per-device transmit power cap
  double beta_sic = 1.0;     // SIC decoding margin, in (0, 1]
  std::uint64_t seed = 1;

  // throws std::invalid_argument on any violated invariant
  void validate() const;
};

struct MecBs {
  int id = 0;
  Position position;
  double capacity_bps = 0.0;  // compute rate the MEC can grant
};

struct IovtDevice {
  int id = 0;
  Position position;
  double workload_bits = 0.0;   // C_i
  double deadline_s = 0.0;      // T_i
  double local_rate_bps = 0.0;  // L_i
  double power_cap_w = 0.0;     // P_i
};

// Immutable world state: topology, device population, parameters.
struct Scenario {
  SimParams params;
  std::vector<MecBs> bss;
  std::vector<IovtDevice> devices;
};

// Nine MEC-BSs on the {-200, 0, 200}^2 m grid, row by row from (-200, 200) to
// (200, -200). Capacities drawn uniformly from mec_capacity_range_bps using
// the scenario seed. No devices.
Scenario make_paper_topology(const SimParams& params);

// Returns a copy of `base` holding exactly n devices, positions uniform over
// the area box and attributes uniform over the configured ranges.
// Reproducible: same (base.params, n, seed) gives bit-identical devices.
Scenario populate_devices(const Scenario& base, int n, std::uint64_t seed);

// JSON config: each SimParams field is a key, missing keys take defaults,
// unknown keys are an error.
SimParams params_from_json(const std::string& text);
SimParams load_params(const std::string& path);

}  // namespace iovtsim
