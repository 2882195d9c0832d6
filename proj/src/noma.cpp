#include "iovtsim/noma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace iovtsim {

std::vector<std::size_t> sic_order(const std::vector<UplinkUser>& users, SicMode mode) {
  if (users.empty()) throw std::invalid_argument("sic_order: empty device set");
  std::vector<std::size_t> order(users.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (mode == SicMode::DeadlineAscending) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (users[a].deadline_s != users[b].deadline_s) {
        return users[a].deadline_s < users[b].deadline_s;
      }
      return users[a].device_id < users[b].device_id;
    });
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (users[a].gain != users[b].gain) return users[a].gain > users[b].gain;
      return users[a].device_id < users[b].device_id;
    });
  }
  return order;
}

std::vector<double> allocate_power(const std::vector<UplinkUser>& users,
                                   const std::vector<std::size_t>& order, double beta) {
  if (order.empty()) throw std::invalid_argument("allocate_power: empty order");
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("allocate_power: beta must be in (0, 1]");
  }
  std::vector<double> powers(order.size());
  double prev_received = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const UplinkUser& u = users[order[k]];
    if (!(u.gain > 0.0)) {
      throw std::invalid_argument("allocate_power: zero channel gain");
    }
    if (!(u.power_cap_w > 0.0)) {
      throw std::invalid_argument("allocate_power: power cap must be > 0");
    }
    const double p = (k == 0) ? u.power_cap_w
                              : std::min(beta * prev_received / u.gain, u.power_cap_w);
    powers[k] = p;
    prev_received = u.gain * p;
  }
  return powers;
}

namespace {

// Core rate rule on an ordered list of received powers: interference comes
// from entries decoded later.
std::vector<double> rates_from_received(const std::vector<double>& received, double sigma2,
                                        double bandwidth_hz) {
  std::vector<double> rates(received.size());
  double tail = 0.0;  // sum of received powers after position k
  for (std::size_t k = received.size(); k-- > 0;) {
    rates[k] = bandwidth_hz * std::log2(1.0 + received[k] / (tail + sigma2));
    tail += received[k];
  }
  return rates;
}

// Planning rule: every other simultaneous transmission is noise, since a
// signal is subtracted only after it has been fully received.
std::vector<double> mutual_rates_from_received(const std::vector<double>& received,
                                               double sigma2, double bandwidth_hz) {
  double total = sigma2;
  for (double q : received) total += q;
  std::vector<double> rates(received.size());
  for (std::size_t k = 0; k < received.size(); ++k) {
    rates[k] = bandwidth_hz * std::log2(1.0 + received[k] / (total - received[k]));
  }
  return rates;
}

std::vector<double> received_powers(const std::vector<UplinkUser>& users,
                                    const std::vector<std::size_t>& order,
                                    const std::vector<double>& powers_w) {
  std::vector<double> received(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    received[k] = users[order[k]].gain * powers_w[k];
  }
  return received;
}

}  // namespace

std::vector<double> sic_rates(const std::vector<UplinkUser>& users,
                              const std::vector<std::size_t>& order,
                              const std::vector<double>& powers_w, double sigma2,
                              double bandwidth_hz) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sic_rates: sigma2 must be > 0");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("sic_rates: bandwidth must be > 0");
  if (order.size() != powers_w.size()) {
    throw std::invalid_argument("sic_rates: order and powers must align");
  }
  return rates_from_received(received_powers(users, order, powers_w), sigma2, bandwidth_hz);
}

std::vector<double> full_interference_rates(const std::vector<UplinkUser>& users,
                                            const std::vector<std::size_t>& order,
                                            const std::vector<double>& powers_w, double sigma2,
                                            double bandwidth_hz) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("full_interference_rates: sigma2 must be > 0");
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("full_interference_rates: bandwidth must be > 0");
  }
  if (order.size() != powers_w.size()) {
    throw std::invalid_argument("full_interference_rates: order and powers must align");
  }
  return mutual_rates_from_received(received_powers(users, order, powers_w), sigma2,
                                    bandwidth_hz);
}

StagedResult staged_timeline(const std::vector<UplinkUser>& users,
                             const std::vector<std::size_t>& order,
                             const std::vector<double>& powers_w, double sigma2,
                             double bandwidth_hz) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("staged_timeline: sigma2 must be > 0");
  StagedResult result;
  result.completion_s.assign(users.size(), 0.0);

  std::vector<std::size_t> active;  // positions within `order`
  std::vector<double> remaining(order.size(), 0.0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double bits = users[order[k]].offload_bits;
    if (bits < 0.0) throw std::invalid_argument("staged_timeline: negative offload bits");
    remaining[k] = bits;
    if (bits > 0.0) active.push_back(k);
  }

  double now = 0.0;
  while (!active.empty()) {
    std::vector<double> received(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      received[i] = users[order[active[i]]].gain * powers_w[active[i]];
    }
    const std::vector<double> rates = mutual_rates_from_received(received, sigma2, bandwidth_hz);

    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      dt = std::min(dt, remaining[active[i]] / rates[i]);
    }

    Stage stage;
    stage.duration_s = dt;
    for (std::size_t i = 0; i < active.size(); ++i) stage.active.push_back(order[active[i]]);
    stage.rates_bps = rates;
    result.stages.push_back(std::move(stage));

    now += dt;
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const std::size_t k = active[i];
      remaining[k] -= rates[i] * dt;
      if (remaining[k] <= 1e-12 * users[order[k]].offload_bits) {
        result.completion_s[order[k]] = now;
      } else {
        survivors.push_back(k);
      }
    }
    active = std::move(survivors);
  }
  return result;
}

UplinkPlan plan_uplink(const std::vector<UplinkUser>& users, SicMode mode, double beta,
                       double sigma2, double bandwidth_hz) {
  UplinkPlan plan;
  plan.order = sic_order(users, mode);
  plan.powers_w = allocate_power(users, plan.order, beta);
  plan.rates_bps = full_interference_rates(users, plan.order, plan.powers_w, sigma2, bandwidth_hz);
  return plan;
}

}  // namespace iovtsim
