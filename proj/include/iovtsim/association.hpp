#pragma once

#include <vector>

#include "iovtsim/channel.hpp"
#include "iovtsim/noma.hpp"
#include "iovtsim/scenario.hpp"

namespace iovtsim {

inline constexpr int kUnassociated = -1;

struct PreferenceLists {
  std::vector<std::vector<int>> device_prefs;  // device index -> BS ids, best first
  std::vector<std::vector<int>> bs_prefs;      // BS index -> device ids, best first
};

struct Matching {
  std::vector<int> assignment;  // device index -> BS id or kUnassociated

  int associated_count() const;
  // device indices per BS id
  std::vector<std::vector<int>> members_per_bs(int n_bss) const;
};

struct FeasibilityResult {
  bool feasible = false;
  // U_min per candidate, aligned with the candidate list; valid iff feasible
  std::vector<double> min_rates_bps;
  // candidate positions whose deadline is unreachable at any MEC rate (their
  // uplink rate is at or below the deficit); empty when feasible
  std::vector<std::size_t> unreachable;
};

struct MatchingStats {
  long proposals = 0;
  long rejections = 0;
};

// Device lists by descending pathloss-only gain (equivalently ascending
// distance), BS lists by descending pathloss-only gain of the device. Ties by
// ascending id.
PreferenceLists build_preferences(const Scenario& scenario, const ChannelState& channel);

// NOMA plan for the whole candidate set, then U_min per candidate; feasible
// iff every U_min is finite and their sum fits the BS capacity. Any zero
// instantaneous gain makes the set infeasible.
FeasibilityResult feasible(const MecBs& bs, const std::vector<int>& candidate_devices,
                           const Scenario& scenario, const ChannelState& channel,
                           SicMode mode);

// Deferred acceptance with the feasibility oracle. A BS holding an infeasible
// set ejects its least-preferred device, one at a time, until the set is
// feasible again. Because feasibility is not subset-closed, the proposal
// rounds alone can miss the fixed point; a better-response sweep then moves
// any device whose admission at a preferred BS needs no ejection until no
// device can improve, so the result has no blocking pair in that
// admission-without-ejection sense.
Matching gale_shapley(const Scenario& scenario, const PreferenceLists& prefs,
                      const ChannelState& channel, SicMode mode,
                      MatchingStats* stats = nullptr);

// Baseline: every device proposes only to its nearest BS; the BS accepts
// greedily in its preference order while the accepted set stays feasible.
Matching distance_association(const Scenario& scenario, const ChannelState& channel,
                              SicMode mode);

}  // namespace iovtsim
