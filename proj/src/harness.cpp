#include "iovtsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "iovtsim/channel.hpp"

namespace iovtsim {

std::string Arm::name() const {
  std::string s = association == AssociationPolicy::Game ? "game" : "dist";
  s += sic == SicMode::DeadlineAscending ? "-deadline" : "-channel";
  return s;
}

Arm arm_from_name(const std::string& name) {
  for (AssociationPolicy a : {AssociationPolicy::Game, AssociationPolicy::Distance}) {
    for (SicMode s : {SicMode::DeadlineAscending, SicMode::ChannelDescending}) {
      Arm arm{a, s};
      if (arm.name() == name) return arm;
    }
  }
  throw std::invalid_argument("unknown arm '" + name +
                              "' (expected e.g. game-deadline, dist-deadline, dist-channel)");
}

void ExperimentConfig::validate() const {
  sim_params.validate();
  if (runs_per_point < 1) throw std::invalid_argument("runs_per_point must be >= 1");
  if (n_devices_sweep.empty()) throw std::invalid_argument("device sweep must be non-empty");
  for (int n : n_devices_sweep) {
    if (n < 0) throw std::invalid_argument("device counts must be >= 0");
  }
  if (arms.empty()) throw std::invalid_argument("arms must be non-empty");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

RunMetrics run_once(const SimParams& params, std::uint64_t scenario_seed, int n,
                    const Arm& arm) {
  SimParams p = params;
  p.seed = scenario_seed;
  const Scenario scenario = populate_devices(make_paper_topology(p), n, scenario_seed);
  const ChannelState channel = make_channel_state(scenario, scenario_seed);
  const double sigma2 = noise_power_w(p);

  Matching matching;
  if (arm.association == AssociationPolicy::Game) {
    const PreferenceLists prefs = build_preferences(scenario, channel);
    matching = gale_shapley(scenario, prefs, channel, arm.sic);
  } else {
    matching = distance_association(scenario, channel, arm.sic);
  }

  RunMetrics metrics;
  metrics.arm = arm.name();
  metrics.n_devices = n;
  metrics.seed = scenario_seed;
  metrics.bs_load.assign(scenario.bss.size(), 0);
  for (const MecBs& bs : scenario.bss) metrics.bs_capacity_bps.push_back(bs.capacity_bps);
  metrics.devices.resize(scenario.devices.size());

  for (std::size_t d = 0; d < scenario.devices.size(); ++d) {
    DeviceOutcome& out = metrics.devices[d];
    out.device_id = scenario.devices[d].id;
    out.bs_id = matching.assignment[d];
  }

  const auto members = matching.members_per_bs(static_cast<int>(scenario.bss.size()));
  for (std::size_t b = 0; b < members.size(); ++b) {
    const std::vector<int>& devs = members[b];
    if (devs.empty()) continue;
    metrics.bs_load[b] = static_cast<int>(devs.size());
    const MecBs& bs = scenario.bss[b];

    std::vector<UplinkUser> users;
    users.reserve(devs.size());
    for (int d : devs) {
      const IovtDevice& dev = scenario.devices[d];
      users.push_back({dev.id, dev.deadline_s, channel.gain(d, bs.id), dev.power_cap_w, 0.0});
    }
    UplinkPlan plan = plan_uplink(users, arm.sic, p.beta_sic, sigma2, p.bandwidth_hz);

    std::vector<double> rate_of(devs.size());
    for (std::size_t k = 0; k < plan.order.size(); ++k) {
      rate_of[plan.order[k]] = plan.rates_bps[k];
    }

    std::vector<DeviceDemand> demands(devs.size());
    for (std::size_t i = 0; i < devs.size(); ++i) {
      const IovtDevice& dev = scenario.devices[devs[i]];
      const auto u_min = min_required_rate(dev.workload_bits, dev.deadline_s,
                                           dev.local_rate_bps, rate_of[i]);
      if (!u_min) {
        // association feasibility guarantees this cannot happen
        throw std::logic_error("run_once: admitted device with unreachable deadline");
      }
      demands[i] = {dev.workload_bits, dev.deadline_s, dev.local_rate_bps, rate_of[i], *u_min};
    }
    const std::vector<double> mec_rates = waterfill(demands, bs.capacity_bps);

    // realized transmission times from the staged timeline
    for (std::size_t i = 0; i < devs.size(); ++i) {
      const IovtDevice& dev = scenario.devices[devs[i]];
      const double alpha = split_ratio(dev.local_rate_bps, rate_of[i], mec_rates[i]);
      users[i].offload_bits = alpha * dev.workload_bits;
    }
    const StagedResult staged =
        staged_timeline(users, plan.order, plan.powers_w, sigma2, p.bandwidth_hz);

    for (std::size_t i = 0; i < devs.size(); ++i) {
      const IovtDevice& dev = scenario.devices[devs[i]];
      DeviceOutcome& out = metrics.devices[devs[i]];
      out.alpha = split_ratio(dev.local_rate_bps, rate_of[i], mec_rates[i]);
      out.mec_rate_bps = mec_rates[i];
      out.uplink_rate_bps = rate_of[i];
      out.planned_delay_s =
          task_delay(dev.workload_bits, dev.local_rate_bps, rate_of[i], mec_rates[i]);
      const double local = (1.0 - out.alpha) * dev.workload_bits / dev.local_rate_bps;
      if (out.alpha > 0.0) {
        const double offload = staged.completion_s[i] +
                               out.alpha * dev.workload_bits / mec_rates[i];
        out.realized_delay_s = std::max(local, offload);
      } else {
        out.realized_delay_s = local;
      }
      out.met_deadline = out.realized_delay_s <= dev.deadline_s * (1.0 + 1e-9);
    }
  }

  int unassociated = 0;
  double total = 0.0;
  for (std::size_t d = 0; d < scenario.devices.size(); ++d) {
    DeviceOutcome& out = metrics.devices[d];
    if (out.bs_id == kUnassociated) {
      ++unassociated;
      out.planned_delay_s = p.penalty_delay_s;
      out.realized_delay_s = p.penalty_delay_s;
      out.met_deadline = false;
      total += p.penalty_delay_s;
    } else {
      total += out.realized_delay_s;
    }
  }
  metrics.total_delay_s = total;
  metrics.unassociated_fraction = n > 0 ? static_cast<double>(unassociated) / n : 0.0;
  return metrics;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::size_t n_points = config.n_devices_sweep.size();
  const std::size_t n_arms = config.arms.size();
  const std::size_t n_runs = static_cast<std::size_t>(config.runs_per_point);
  const std::size_t total = n_points * n_arms * n_runs;

  SweepResult result;
  result.runs.resize(total);

  // slot layout fixes the output order: (n, arm, run)
  const auto job = [&](std::size_t idx) {
    const std::size_t point = idx / (n_arms * n_runs);
    const std::size_t arm_i = (idx / n_runs) % n_arms;
    const std::size_t run = idx % n_runs;
    result.runs[idx] =
        run_once(config.sim_params, config.base_seed + run,
                 config.n_devices_sweep[point], config.arms[arm_i]);
  };

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= total) return;
          job(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t point = 0; point < n_points; ++point) {
    for (std::size_t arm_i = 0; arm_i < n_arms; ++arm_i) {
      SweepRow row;
      row.arm = config.arms[arm_i].name();
      row.n_devices = config.n_devices_sweep[point];
      double sum_d = 0.0, sum_u = 0.0;
      const std::size_t base = (point * n_arms + arm_i) * n_runs;
      for (std::size_t r = 0; r < n_runs; ++r) {
        sum_d += result.runs[base + r].total_delay_s;
        sum_u += result.runs[base + r].unassociated_fraction;
      }
      row.mean_total_delay_s = sum_d / static_cast<double>(n_runs);
      row.mean_unassoc_frac = sum_u / static_cast<double>(n_runs);
      double var_d = 0.0, var_u = 0.0;
      for (std::size_t r = 0; r < n_runs; ++r) {
        const double dd = result.runs[base + r].total_delay_s - row.mean_total_delay_s;
        const double du = result.runs[base + r].unassociated_fraction - row.mean_unassoc_frac;
        var_d += dd * dd;
        var_u += du * du;
      }
      row.std_total_delay_s = std::sqrt(var_d / static_cast<double>(n_runs));
      row.std_unassoc_frac = std::sqrt(var_u / static_cast<double>(n_runs));
      result.aggregate.push_back(std::move(row));
    }
  }
  return result;
}

namespace {

// shortest round-trip decimal form
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot write output file: " + path.string());
  return out;
}

}  // namespace

void emit_results(const SweepResult& result, const std::string& out_dir) {
  if (result.runs.empty()) throw std::invalid_argument("emit_results: empty sweep");
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + dir.string());

  {
    std::ofstream out = open_csv(dir / "per_run.csv");
    out << "arm,n_devices,seed,total_delay_s,unassociated_fraction\n";
    for (const RunMetrics& run : result.runs) {
      out << run.arm << ',' << run.n_devices << ',' << run.seed << ','
          << fmt(run.total_delay_s) << ',' << fmt(run.unassociated_fraction) << '\n';
    }
  }
  {
    std::ofstream out = open_csv(dir / "aggregate.csv");
    out << "arm,n_devices,mean_total_delay_s,std_total_delay_s,mean_unassoc_frac,"
           "std_unassoc_frac\n";
    for (const SweepRow& row : result.aggregate) {
      out << row.arm << ',' << row.n_devices << ',' << fmt(row.mean_total_delay_s) << ','
          << fmt(row.std_total_delay_s) << ',' << fmt(row.mean_unassoc_frac) << ','
          << fmt(row.std_unassoc_frac) << '\n';
    }
  }
  {
    std::ofstream out = open_csv(dir / "bs_load.csv");
    out << "arm,n_devices,seed,bs_id,capacity_bps,associated_devices\n";
    for (const RunMetrics& run : result.runs) {
      for (std::size_t b = 0; b < run.bs_load.size(); ++b) {
        out << run.arm << ',' << run.n_devices << ',' << run.seed << ',' << b << ','
            << fmt(run.bs_capacity_bps[b]) << ',' << run.bs_load[b] << '\n';
      }
    }
  }
}

}  // namespace iovtsim
