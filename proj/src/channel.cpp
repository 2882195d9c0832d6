#include "iovtsim/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "iovtsim/rng.hpp"

namespace iovtsim {

double pathloss_db(double distance_km) {
  if (!(distance_km > 0.0)) {
    throw std::domain_error("pathloss_db: distance must be > 0");
  }
  return 128.1 + 37.6 * std::log10(distance_km);
}

double channel_gain(double distance_m, std::complex<double> fading_coeff) {
  if (!(distance_m > 0.0)) {
    throw std::domain_error("channel_gain: distance must be > 0");
  }
  const double pl_db = pathloss_db(distance_m / 1000.0);
  return std::norm(fading_coeff) * std::pow(10.0, -pl_db / 10.0);
}

double channel_gain(const IovtDevice& device, const MecBs& bs,
                    std::complex<double> fading_coeff) {
  return channel_gain(distance_m(device.position, bs.position), fading_coeff);
}

double noise_power_w(const SimParams& params) {
  if (!(params.bandwidth_hz > 0.0)) {
    throw std::invalid_argument("noise_power_w: bandwidth must be > 0");
  }
  // dBm/Hz -> W/Hz, then times bandwidth
  return params.bandwidth_hz * std::pow(10.0, (params.noise_psd_dbm_hz - 30.0) / 10.0);
}

ChannelState make_channel_state(const Scenario& scenario, std::uint64_t seed) {
  ChannelState cs;
  cs.n_devices = static_cast<int>(scenario.devices.size());
  cs.n_bss = static_cast<int>(scenario.bss.size());
  cs.gains.resize(static_cast<std::size_t>(cs.n_devices) * cs.n_bss);
  cs.mean_gains.resize(cs.gains.size());
  Rng rng(seed + kFadingSeedOffset);
  std::size_t k = 0;
  for (const IovtDevice& d : scenario.devices) {
    for (const MecBs& b : scenario.bss) {
      const std::complex<double> f = rng.complex_normal();
      const double dist = distance_m(d.position, b.position);
      const double pl_lin = std::pow(10.0, -pathloss_db(dist / 1000.0) / 10.0);
      cs.mean_gains[k] = pl_lin;
      cs.gains[k] = std::norm(f) * pl_lin;
      ++k;
    }
  }
  return cs;
}

}  // namespace iovtsim
