#pragma once

// Test-only reference implementations, kept independent of the library's
// production paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "iovtsim/association.hpp"
#include "iovtsim/compute.hpp"

namespace oracles {

// Literal two-principle allocator: start everyone at U_min, then hand out the
// residual in steps of `step`, each step to the device whose delay drops the
// most. Independent of the bisection path.
inline std::vector<double> greedy_waterfill(const std::vector<iovtsim::DeviceDemand>& demands,
                                            double capacity, double step) {
  const auto delay = [](const iovtsim::DeviceDemand& d, double u) {
    const double eff =
        d.local_rate_bps + d.uplink_rate_bps * u / (d.uplink_rate_bps + u);
    return d.workload_bits / eff;
  };
  std::vector<double> u;
  double residual = capacity;
  for (const auto& d : demands) {
    u.push_back(d.min_mec_rate_bps);
    residual -= d.min_mec_rate_bps;
  }
  while (residual >= step) {
    double best_drop = -1.0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < demands.size(); ++i) {
      const double drop = delay(demands[i], u[i]) - delay(demands[i], u[i] + step);
      if (drop > best_drop) {
        best_drop = drop;
        best = i;
      }
    }
    u[best] += step;
    residual -= step;
  }
  return u;
}

inline double total_delay(const std::vector<iovtsim::DeviceDemand>& demands,
                          const std::vector<double>& u) {
  double t = 0.0;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const double eff = demands[i].local_rate_bps +
                       demands[i].uplink_rate_bps * u[i] /
                           (demands[i].uplink_rate_bps + u[i]);
    t += demands[i].workload_bits / eff;
  }
  return t;
}

// Blocking pair under the admission-without-ejection definition: some device
// strictly prefers BS b to its assignment and b can take it on top of its
// current held set.
inline bool has_blocking_pair(const iovtsim::Scenario& scenario,
                              const iovtsim::PreferenceLists& prefs,
                              const iovtsim::ChannelState& channel,
                              const iovtsim::Matching& matching, iovtsim::SicMode mode) {
  const int n = static_cast<int>(scenario.devices.size());
  const int m = static_cast<int>(scenario.bss.size());
  const auto members = matching.members_per_bs(m);
  for (int d = 0; d < n; ++d) {
    const auto& list = prefs.device_prefs[d];
    for (int b : list) {
      if (matching.assignment[d] == b) break;  // past here is weakly worse
      std::vector<int> extended = members[b];
      extended.push_back(d);
      if (iovtsim::feasible(scenario.bss[b], extended, scenario, channel, mode).feasible) {
        return true;
      }
    }
  }
  return false;
}

// Spearman rank correlation with average ranks on ties.
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace oracles
