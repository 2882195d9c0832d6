#pragma once

#include <cstddef>
#include <vector>

namespace iovtsim {

enum class SicMode {
  DeadlineAscending,   // decode tightest deadline first
  ChannelDescending,   // decode strongest instantaneous gain first
};

// One uplink participant at a given BS. `gain` is the instantaneous |h|^2
// toward that BS.
struct UplinkUser {
  int device_id = 0;
  double deadline_s = 0.0;
  double gain = 0.0;
  double power_cap_w = 0.0;
  double offload_bits = 0.0;  // used by staged_timeline only
};

struct Stage {
  double duration_s = 0.0;
  std::vector<std::size_t> active;  // indices into the users vector, decode order
  std::vector<double> rates_bps;    // aligned with `active`
};

struct StagedResult {
  std::vector<Stage> stages;
  std::vector<double> completion_s;  // aligned with the users vector
};

// SIC order + powers + full-interference rates for one BS's NOMA cluster.
struct UplinkPlan {
  std::vector<std::size_t> order;  // indices into users, decode position 1 first
  std::vector<double> powers_w;    // aligned with order
  std::vector<double> rates_bps;   // aligned with order
};

// Permutation of user indices, decode position 1 first. Ties broken by
// ascending device id. Throws on an empty set.
std::vector<std::size_t> sic_order(const std::vector<UplinkUser>& users, SicMode mode);

// First device in decode order transmits at its cap; each next one at
// min(beta * g_prev * p_prev / g_self, cap). Result keeps received powers
// non-increasing: g_i p_i <= beta * g_{i-1} p_{i-1}. Throws on zero gain.
std::vector<double> allocate_power(const std::vector<UplinkUser>& users,
                                   const std::vector<std::size_t>& order, double beta);

// R_k = B log2(1 + g_k p_k / (sum of received powers decoded after k + sigma2)),
// aligned with order. Throws for sigma2 <= 0.
std::vector<double> sic_rates(const std::vector<UplinkUser>& users,
                              const std::vector<std::size_t>& order,
                              const std::vector<double>& powers_w, double sigma2,
                              double bandwidth_hz);

// Conservative planning rate: a signal can only be subtracted once its
// transmission has completed, so while the whole cluster transmits, every
// other member is noise. R_k = B log2(1 + g_k p_k / (sum of all other
// received powers + sigma2)), aligned with order. With chain powers these
// rates are non-increasing along the decode order, so earlier-decoded
// devices finish sooner. Throws for sigma2 <= 0.
std::vector<double> full_interference_rates(const std::vector<UplinkUser>& users,
                                            const std::vector<std::size_t>& order,
                                            const std::vector<double>& powers_w, double sigma2,
                                            double bandwidth_hz);

// Event-driven transmission: all unfinished devices transmit, each seeing the
// other active devices as noise (finished signals are subtracted); a stage
// ends when the active device with the least remaining time finishes. Powers
// stay fixed, so every completion relieves the survivors and stage rates only
// improve. Devices with zero offload bits never become active and complete
// at 0.
StagedResult staged_timeline(const std::vector<UplinkUser>& users,
                             const std::vector<std::size_t>& order,
                             const std::vector<double>& powers_w, double sigma2,
                             double bandwidth_hz);

// order + allocate_power + full_interference_rates in one call.
UplinkPlan plan_uplink(const std::vector<UplinkUser>& users, SicMode mode, double beta,
                       double sigma2, double bandwidth_hz);

}  // namespace iovtsim
