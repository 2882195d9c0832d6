#include "iovtsim/compute.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace iovtsim {

double split_ratio(double local_rate, double uplink_rate, double mec_rate) {
  if (!(local_rate > 0.0)) throw std::domain_error("split_ratio: local rate must be > 0");
  if (!(uplink_rate > 0.0)) throw std::domain_error("split_ratio: uplink rate must be > 0");
  if (mec_rate < 0.0) throw std::domain_error("split_ratio: mec rate must be >= 0");
  if (mec_rate == 0.0) return 0.0;
  const double inv_l = 1.0 / local_rate;
  return inv_l / (1.0 / uplink_rate + 1.0 / mec_rate + inv_l);
}

double task_delay(double workload, double local_rate, double uplink_rate, double mec_rate) {
  if (workload < 0.0) throw std::domain_error("task_delay: workload must be >= 0");
  const double alpha = split_ratio(local_rate, uplink_rate, mec_rate);
  const double local = (1.0 - alpha) * workload / local_rate;
  if (alpha == 0.0) return local;
  const double offload = alpha * workload * (1.0 / uplink_rate + 1.0 / mec_rate);
  return std::max(local, offload);
}

std::optional<double> min_required_rate(double workload, double deadline, double local_rate,
                                        double uplink_rate) {
  if (!(workload > 0.0) || !(deadline > 0.0) || !(local_rate > 0.0) || !(uplink_rate > 0.0)) {
    throw std::domain_error("min_required_rate: all inputs must be > 0");
  }
  const double deficit = workload / deadline - local_rate;  // rate the offload path must add
  if (deficit <= 0.0) return 0.0;
  if (uplink_rate <= deficit) return std::nullopt;
  return deficit * uplink_rate / (uplink_rate - deficit);
}

namespace {

// Marginal delay reduction -d'(U) = C R^2 / (L R + (L+R) U)^2, strictly
// decreasing in U.
double marginal(const DeviceDemand& d, double u) {
  const double den = d.local_rate_bps * d.uplink_rate_bps +
                     (d.local_rate_bps + d.uplink_rate_bps) * u;
  return d.workload_bits * d.uplink_rate_bps * d.uplink_rate_bps / (den * den);
}

// Inverse of marginal(): the U at which -d'(U) equals `level`.
double rate_at_level(const DeviceDemand& d, double level) {
  const double target = d.uplink_rate_bps * std::sqrt(d.workload_bits / level);
  return (target - d.local_rate_bps * d.uplink_rate_bps) /
         (d.local_rate_bps + d.uplink_rate_bps);
}

}  // namespace

std::vector<double> waterfill(const std::vector<DeviceDemand>& demands, double capacity_bps) {
  if (demands.empty()) return {};
  if (!(capacity_bps >= 0.0)) throw std::invalid_argument("waterfill: capacity must be >= 0");

  double floor_sum = 0.0;
  for (const DeviceDemand& d : demands) {
    if (!(d.workload_bits > 0.0) || !(d.local_rate_bps > 0.0) || !(d.uplink_rate_bps > 0.0)) {
      throw std::invalid_argument("waterfill: C, L, R must be > 0");
    }
    if (d.min_mec_rate_bps < 0.0) throw std::invalid_argument("waterfill: U_min must be >= 0");
    floor_sum += d.min_mec_rate_bps;
  }
  if (floor_sum > capacity_bps * (1.0 + 1e-12)) {
    throw std::invalid_argument("waterfill: sum of minimum rates exceeds capacity");
  }

  const auto total_at = [&](double level) {
    double t = 0.0;
    for (const DeviceDemand& d : demands) {
      t += std::max(d.min_mec_rate_bps, rate_at_level(d, level));
    }
    return t;
  };

  // At hi every device is pinned at its floor; walk lo down until the pool
  // overflows the capacity, then bisect.
  double hi = 0.0;
  for (const DeviceDemand& d : demands) {
    hi = std::max(hi, marginal(d, d.min_mec_rate_bps));
  }
  if (hi <= 0.0) {
    std::vector<double> out;
    for (const DeviceDemand& d : demands) out.push_back(d.min_mec_rate_bps);
    return out;
  }
  double lo = hi;
  while (total_at(lo) < capacity_bps) {
    lo *= 0.5;
    if (lo < 1e-300) break;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (total_at(mid) >= capacity_bps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const double level = 0.5 * (lo + hi);
  std::vector<double> out;
  out.reserve(demands.size());
  for (const DeviceDemand& d : demands) {
    out.push_back(std::max(d.min_mec_rate_bps, rate_at_level(d, level)));
  }
  return out;
}

}  // namespace iovtsim
