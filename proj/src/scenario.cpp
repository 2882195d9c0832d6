#include "iovtsim/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "iovtsim/rng.hpp"
#include "json.hpp"

namespace iovtsim {

namespace {

void check_range(const std::array<double, 2>& r, const char* name) {
  if (!(r[0] <= r[1])) {
    throw std::invalid_argument(std::string(name) + ": min must be <= max");
  }
}

}  // namespace

void SimParams::validate() const {
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth_hz must be > 0");
  check_range(workload_range_bits, "workload_range_bits");
  check_range(deadline_range_s, "deadline_range_s");
  check_range(local_rate_range_bps, "local_rate_range_bps");
  check_range(mec_capacity_range_bps, "mec_capacity_range_bps");
  if (!(mec_capacity_range_bps[0] > 0.0)) {
    throw std::invalid_argument("mec_capacity_range_bps must be strictly positive");
  }
  if (!(power_cap_w > 0.0)) throw std::invalid_argument("power_cap_w must be > 0");
  if (!(beta_sic > 0.0 && beta_sic <= 1.0)) {
    throw std::invalid_argument("beta_sic must be in (0, 1]");
  }
  if (!(area_m > 0.0)) throw std::invalid_argument("area_m must be > 0");
  if (!(penalty_delay_s >= 0.0)) throw std::invalid_argument("penalty_delay_s must be >= 0");
}

Scenario make_paper_topology(const SimParams& params) {
  params.validate();
  Scenario s;
  s.params = params;
  Rng rng(params.seed + kTopologySeedOffset);
  // enumeration order matches the evaluation listing: (-200,200), (0,200), ...
  const double ys[3] = {200.0, 0.0, -200.0};
  const double xs[3] = {-200.0, 0.0, 200.0};
  int id = 0;
  for (double y : ys) {
    for (double x : xs) {
      MecBs bs;
      bs.id = id++;
      bs.position = {x, y};
      bs.capacity_bps =
          rng.uniform(params.mec_capacity_range_bps[0], params.mec_capacity_range_bps[1]);
      s.bss.push_back(bs);
    }
  }
  return s;
}

Scenario populate_devices(const Scenario& base, int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("device count must be >= 0");
  base.params.validate();
  Scenario s = base;
  s.devices.clear();
  s.devices.reserve(static_cast<std::size_t>(n));
  Rng rng(seed + kDeviceSeedOffset);
  const SimParams& p = s.params;
  const double half = p.area_m / 2.0;
  for (int i = 0; i < n; ++i) {
    IovtDevice d;
    d.id = i;
    d.position.x = rng.uniform(-half, half);
    d.position.y = rng.uniform(-half, half);
    d.workload_bits = rng.uniform(p.workload_range_bits[0], p.workload_range_bits[1]);
    d.deadline_s = rng.uniform(p.deadline_range_s[0], p.deadline_range_s[1]);
    d.local_rate_bps = rng.uniform(p.local_rate_range_bps[0], p.local_rate_range_bps[1]);
    d.power_cap_w = p.power_cap_w;
    s.devices.push_back(d);
  }
  return s;
}

namespace {

std::array<double, 2> range_from_json(const nlohmann::json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw std::invalid_argument("config key '" + key + "' must be a [min, max] array");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

double number_from_json(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) {
    throw std::invalid_argument("config key '" + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

SimParams params_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  SimParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "bandwidth_hz") {
      p.bandwidth_hz = number_from_json(value, key);
    } else if (key == "noise_psd_dbm_hz") {
      p.noise_psd_dbm_hz = number_from_json(value, key);
    } else if (key == "workload_range_bits") {
      p.workload_range_bits = range_from_json(value, key);
    } else if (key == "deadline_range_s") {
      p.deadline_range_s = range_from_json(value, key);
    } else if (key == "local_rate_range_bps") {
      p.local_rate_range_bps = range_from_json(value, key);
    } else if (key == "mec_capacity_range_bps") {
      p.mec_capacity_range_bps = range_from_json(value, key);
    } else if (key == "area_m") {
      p.area_m = number_from_json(value, key);
    } else if (key == "penalty_delay_s") {
      p.penalty_delay_s = number_from_json(value, key);
    } else if (key == "power_cap_w") {
      p.power_cap_w = number_from_json(value, key);
    } else if (key == "beta_sic") {
      p.beta_sic = number_from_json(value, key);
    } else if (key == "seed") {
      if (!value.is_number_integer() && !value.is_number_unsigned()) {
        throw std::invalid_argument("config key 'seed' must be an integer");
      }
      p.seed = value.get<std::uint64_t>();
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

SimParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

}  // namespace iovtsim
