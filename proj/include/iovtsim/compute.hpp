#pragma once

#include <optional>
#include <vector>

namespace iovtsim {

// One offloaded task as the MEC allocator sees it: workload C, deadline T,
// local rate L, uplink rate R, and the admission floor U_min.
struct DeviceDemand {
  double workload_bits = 0.0;     // C
  double deadline_s = 0.0;        // T
  double local_rate_bps = 0.0;    // L
  double uplink_rate_bps = 0.0;   // R
  double min_mec_rate_bps = 0.0;  // U_min
};

// Per-device outcome of task division plus compute allocation.
struct AllocationResult {
  int device_id = -1;
  double alpha = 0.0;            // offloaded fraction, in [0, 1]
  double mec_rate_bps = 0.0;     // U
  double uplink_rate_bps = 0.0;  // planning-time R
  double planned_delay_s = 0.0;
  double realized_delay_s = 0.0;
  bool met_deadline = false;
};

// alpha = (1/L) / (1/R + 1/U + 1/L); U = 0 means pure local (alpha = 0).
// Equalizes (1-alpha)C/L and alpha*C*(1/R + 1/U).
double split_ratio(double local_rate, double uplink_rate, double mec_rate);

// max(local path, offload path) with the optimal split; algebraically equals
// C / (L + R*U/(R+U)).
double task_delay(double workload, double local_rate, double uplink_rate, double mec_rate);

// Smallest U with task_delay <= T, or nullopt when even infinite MEC rate
// cannot meet the deadline (R <= C/T - L). Returns 0 when local compute alone
// suffices.
std::optional<double> min_required_rate(double workload, double deadline, double local_rate,
                                        double uplink_rate);

// Distributes `capacity_bps` so every device gets at least its U_min and the
// residual minimizes total delay (common water level on the marginal delay
// reduction, solved by bisection). Requires sum of U_min <= capacity.
std::vector<double> waterfill(const std::vector<DeviceDemand>& demands, double capacity_bps);

}  // namespace iovtsim
