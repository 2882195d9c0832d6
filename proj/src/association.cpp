#include "iovtsim/association.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "iovtsim/compute.hpp"

namespace iovtsim {

int Matching::associated_count() const {
  int n = 0;
  for (int a : assignment) {
    if (a != kUnassociated) ++n;
  }
  return n;
}

std::vector<std::vector<int>> Matching::members_per_bs(int n_bss) const {
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n_bss));
  for (std::size_t d = 0; d < assignment.size(); ++d) {
    if (assignment[d] != kUnassociated) {
      members[assignment[d]].push_back(static_cast<int>(d));
    }
  }
  return members;
}

PreferenceLists build_preferences(const Scenario& scenario, const ChannelState& channel) {
  const int n = static_cast<int>(scenario.devices.size());
  const int m = static_cast<int>(scenario.bss.size());
  PreferenceLists prefs;
  prefs.device_prefs.resize(n);
  prefs.bs_prefs.resize(m);

  for (int d = 0; d < n; ++d) {
    std::vector<int> bs_ids(m);
    std::iota(bs_ids.begin(), bs_ids.end(), 0);
    std::sort(bs_ids.begin(), bs_ids.end(), [&](int a, int b) {
      const double ga = channel.mean_gain(d, a);
      const double gb = channel.mean_gain(d, b);
      if (ga != gb) return ga > gb;
      return a < b;
    });
    prefs.device_prefs[d] = std::move(bs_ids);
  }
  for (int b = 0; b < m; ++b) {
    std::vector<int> dev_ids(n);
    std::iota(dev_ids.begin(), dev_ids.end(), 0);
    std::sort(dev_ids.begin(), dev_ids.end(), [&](int x, int y) {
      const double gx = channel.mean_gain(x, b);
      const double gy = channel.mean_gain(y, b);
      if (gx != gy) return gx > gy;
      return x < y;
    });
    prefs.bs_prefs[b] = std::move(dev_ids);
  }
  return prefs;
}

FeasibilityResult feasible(const MecBs& bs, const std::vector<int>& candidate_devices,
                           const Scenario& scenario, const ChannelState& channel,
                           SicMode mode) {
  FeasibilityResult result;
  if (candidate_devices.empty()) {
    result.feasible = true;
    return result;
  }

  std::vector<UplinkUser> users;
  users.reserve(candidate_devices.size());
  for (std::size_t i = 0; i < candidate_devices.size(); ++i) {
    const IovtDevice& dev = scenario.devices[candidate_devices[i]];
    UplinkUser u;
    u.device_id = dev.id;
    u.deadline_s = dev.deadline_s;
    u.gain = channel.gain(static_cast<int>(candidate_devices[i]), bs.id);
    u.power_cap_w = dev.power_cap_w;
    if (!(u.gain > 0.0)) {  // degenerate fading draw: no uplink at all
      result.unreachable.push_back(i);
      return result;
    }
    users.push_back(u);
  }

  const double sigma2 = noise_power_w(scenario.params);
  const UplinkPlan plan =
      plan_uplink(users, mode, scenario.params.beta_sic, sigma2, scenario.params.bandwidth_hz);

  // rates come back in decode order; map them to candidate order
  std::vector<double> rate_of(candidate_devices.size());
  for (std::size_t k = 0; k < plan.order.size(); ++k) {
    rate_of[plan.order[k]] = plan.rates_bps[k];
  }

  result.min_rates_bps.resize(candidate_devices.size());
  double total = 0.0;
  for (std::size_t i = 0; i < candidate_devices.size(); ++i) {
    const IovtDevice& dev = scenario.devices[candidate_devices[i]];
    if (!(rate_of[i] > 0.0)) {  // rate underflows to 0 deep in a long decode chain
      result.unreachable.push_back(i);
      continue;
    }
    const auto u_min =
        min_required_rate(dev.workload_bits, dev.deadline_s, dev.local_rate_bps, rate_of[i]);
    if (!u_min) {
      result.unreachable.push_back(i);  // deadline unreachable at any MEC rate
    } else {
      result.min_rates_bps[i] = *u_min;
      total += *u_min;
    }
  }
  if (!result.unreachable.empty() || total > bs.capacity_bps) {
    result.min_rates_bps.clear();
    return result;
  }
  result.feasible = true;
  return result;
}

namespace {

// position of each device in the BS's preference list, for least-preferred
// lookups
std::vector<int> rank_by_bs(const std::vector<int>& bs_pref, int n_devices) {
  std::vector<int> rank(n_devices, n_devices);
  for (std::size_t i = 0; i < bs_pref.size(); ++i) rank[bs_pref[i]] = static_cast<int>(i);
  return rank;
}

// Shrinks `held` until the feasibility oracle accepts it, ejecting the
// least-preferred member one at a time. Returns the rejected device ids.
std::vector<int> eject_until_feasible(const MecBs& bs, std::vector<int>& held,
                                      const Scenario& scenario, const ChannelState& channel,
                                      SicMode mode, const std::vector<int>& rank,
                                      std::vector<int>& assignment, long& rejections) {
  std::vector<int> ejected;
  while (!held.empty()) {
    if (feasible(bs, held, scenario, channel, mode).feasible) break;
    const auto worst = std::max_element(held.begin(), held.end(),
                                        [&](int x, int y) { return rank[x] < rank[y]; });
    assignment[*worst] = kUnassociated;
    ejected.push_back(*worst);
    held.erase(worst);
    ++rejections;
  }
  return ejected;
}

}  // namespace

Matching gale_shapley(const Scenario& scenario, const PreferenceLists& prefs,
                      const ChannelState& channel, SicMode mode, MatchingStats* stats) {
  const int n = static_cast<int>(scenario.devices.size());
  const int m = static_cast<int>(scenario.bss.size());
  Matching matching;
  matching.assignment.assign(n, kUnassociated);
  if (n == 0 || m == 0) return matching;

  std::vector<std::vector<int>> lists = prefs.device_prefs;  // consumed on rejection
  std::vector<std::vector<int>> held(m);
  std::vector<std::vector<int>> ranks(m);
  for (int b = 0; b < m; ++b) ranks[b] = rank_by_bs(prefs.bs_prefs[b], n);

  MatchingStats local;
  const long proposal_budget = static_cast<long>(n) * m;

  for (;;) {
    std::vector<std::vector<int>> incoming(m);
    bool any = false;
    for (int d = 0; d < n; ++d) {
      if (matching.assignment[d] == kUnassociated && !lists[d].empty()) {
        incoming[lists[d].front()].push_back(d);
        ++local.proposals;
        any = true;
      }
    }
    if (!any) break;
    if (local.proposals > proposal_budget) {
      throw std::logic_error("gale_shapley: proposal budget exceeded");
    }

    for (int b = 0; b < m; ++b) {
      if (incoming[b].empty()) continue;
      for (int d : incoming[b]) {
        held[b].push_back(d);
        matching.assignment[d] = b;
      }
      const std::vector<int> rejected = eject_until_feasible(
          scenario.bss[b], held[b], scenario, channel, mode, ranks[b], matching.assignment,
          local.rejections);
      // a rejected device's list head is this BS; drop it so it proposes on
      for (int r : rejected) lists[r].erase(lists[r].begin());
    }
  }

  // Deferred acceptance alone does not always land on the fixed point here:
  // feasibility is not subset-closed (removing a chain-limited device raises
  // a later-decoded one's power, which can sink an earlier-decoded member),
  // so a rejected device occasionally fits again after the held set
  // reshuffles. Keep playing the better-response dynamic until no device can
  // improve; each move strictly advances the mover up its own list, and the
  // budget guards the rare ejection-induced cycles.
  const long move_budget = 16L * n * m;
  long moves = 0;
  for (bool changed = true; changed && moves < move_budget;) {
    changed = false;
    for (int d = 0; d < n; ++d) {
      const int cur = matching.assignment[d];
      for (int b : prefs.device_prefs[d]) {
        if (b == cur) break;
        held[b].push_back(d);
        if (!feasible(scenario.bss[b], held[b], scenario, channel, mode).feasible) {
          held[b].pop_back();
          continue;
        }
        matching.assignment[d] = b;
        if (cur != kUnassociated) {
          auto& old_set = held[cur];
          old_set.erase(std::find(old_set.begin(), old_set.end(), d));
          // the departure can uncork a chain-limited member and overload the rest
          eject_until_feasible(scenario.bss[cur], old_set, scenario, channel, mode, ranks[cur],
                               matching.assignment, local.rejections);
        }
        ++moves;
        changed = true;
        break;
      }
    }
  }

  if (stats) *stats = local;
  return matching;
}

Matching distance_association(const Scenario& scenario, const ChannelState& channel,
                              SicMode mode) {
  const int n = static_cast<int>(scenario.devices.size());
  const int m = static_cast<int>(scenario.bss.size());
  Matching matching;
  matching.assignment.assign(n, kUnassociated);
  if (n == 0 || m == 0) return matching;

  const PreferenceLists prefs = build_preferences(scenario, channel);

  std::vector<std::vector<int>> proposers(m);
  for (int d = 0; d < n; ++d) {
    proposers[prefs.device_prefs[d].front()].push_back(d);
  }

  for (int b = 0; b < m; ++b) {
    if (proposers[b].empty()) continue;
    const std::vector<int> rank = rank_by_bs(prefs.bs_prefs[b], n);
    std::sort(proposers[b].begin(), proposers[b].end(),
              [&](int x, int y) { return rank[x] < rank[y]; });
    std::vector<int> accepted;
    for (int d : proposers[b]) {
      accepted.push_back(d);
      if (feasible(scenario.bss[b], accepted, scenario, channel, mode).feasible) {
        matching.assignment[d] = b;
      } else {
        accepted.pop_back();
      }
    }
  }
  return matching;
}

}  // namespace iovtsim
