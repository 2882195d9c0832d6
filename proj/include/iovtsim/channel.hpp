#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iovtsim/scenario.hpp"

namespace iovtsim {

// Per-run channel snapshot. gains hold |h|^2 with the Rayleigh draw applied,
// mean_gains hold the pathloss-only linear gain (fading averaged out, E|h|^2
// per unit fading power). Block fading: one draw per (device, BS, run).
struct ChannelState {
  int n_devices = 0;
  int n_bss = 0;
  std::vector<double> gains;       // row-major (device, bs)
  std::vector<double> mean_gains;  // row-major (device, bs)

  double gain(int device, int bs) const {
    return gains[static_cast<std::size_t>(device) * n_bss + bs];
  }
  double mean_gain(int device, int bs) const {
    return mean_gains[static_cast<std::size_t>(device) * n_bss + bs];
  }
};

// 128.1 + 37.6 log10(d[km]) dB. Throws std::domain_error for d <= 0.
double pathloss_db(double distance_km);

// |fading|^2 * 10^(-pathloss/10). Throws std::domain_error for zero distance.
double channel_gain(double distance_m, std::complex<double> fading_coeff);
double channel_gain(const IovtDevice& device, const MecBs& bs, std::complex<double> fading_coeff);

// sigma^2 = B * N0, N0 converted from dBm/Hz to W/Hz
double noise_power_w(const SimParams& params);

// Draws one CN(0,1) fading coefficient per (device, BS) from the scenario's
// fading sub-seed, devices outer, BSs inner.
ChannelState make_channel_state(const Scenario& scenario, std::uint64_t seed);

}  // namespace iovtsim
