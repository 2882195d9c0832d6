#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iovtsim/association.hpp"
#include "iovtsim/channel.hpp"
#include "iovtsim/compute.hpp"
#include "iovtsim/harness.hpp"
#include "iovtsim/noma.hpp"
#include "iovtsim/scenario.hpp"

namespace py = pybind11;
using namespace iovtsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "NOMA-assisted multi-MEC visual-task offloading simulator";

  py::class_<Position>(m, "Position")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Position{x, y}; }), py::arg("x"),
           py::arg("y"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y);
  m.def("distance_m", &distance_m, py::arg("a"), py::arg("b"));

  py::class_<SimParams>(m, "SimParams")
      .def(py::init<>())
      .def_readwrite("bandwidth_hz", &SimParams::bandwidth_hz)
      .def_readwrite("noise_psd_dbm_hz", &SimParams::noise_psd_dbm_hz)
      .def_readwrite("workload_range_bits", &SimParams::workload_range_bits)
      .def_readwrite("deadline_range_s", &SimParams::deadline_range_s)
      .def_readwrite("local_rate_range_bps", &SimParams::local_rate_range_bps)
      .def_readwrite("mec_capacity_range_bps", &SimParams::mec_capacity_range_bps)
      .def_readwrite("area_m", &SimParams::area_m)
      .def_readwrite("penalty_delay_s", &SimParams::penalty_delay_s)
      .def_readwrite("power_cap_w", &SimParams::power_cap_w)
      .def_readwrite("beta_sic", &SimParams::beta_sic)
      .def_readwrite("seed", &SimParams::seed)
      .def("validate", &SimParams::validate);

  py::class_<MecBs>(m, "MecBs")
      .def(py::init<>())
      .def_readwrite("id", &MecBs::id)
      .def_readwrite("position", &MecBs::position)
      .def_readwrite("capacity_bps", &MecBs::capacity_bps);

  py::class_<IovtDevice>(m, "IovtDevice")
      .def(py::init<>())
      .def_readwrite("id", &IovtDevice::id)
      .def_readwrite("position", &IovtDevice::position)
      .def_readwrite("workload_bits", &IovtDevice::workload_bits)
      .def_readwrite("deadline_s", &IovtDevice::deadline_s)
      .def_readwrite("local_rate_bps", &IovtDevice::local_rate_bps)
      .def_readwrite("power_cap_w", &IovtDevice::power_cap_w);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("params", &Scenario::params)
      .def_readwrite("bss", &Scenario::bss)
      .def_readwrite("devices", &Scenario::devices);

  m.def("make_paper_topology", &make_paper_topology, py::arg("params"));
  m.def("populate_devices", &populate_devices, py::arg("base"), py::arg("n"), py::arg("seed"));
  m.def("params_from_json", &params_from_json, py::arg("text"));
  m.def("load_params", &load_params, py::arg("path"));

  py::class_<ChannelState>(m, "ChannelState")
      .def_readonly("n_devices", &ChannelState::n_devices)
      .def_readonly("n_bss", &ChannelState::n_bss)
      .def("gain", &ChannelState::gain, py::arg("device"), py::arg("bs"))
      .def("mean_gain", &ChannelState::mean_gain, py::arg("device"), py::arg("bs"));

  m.def("pathloss_db", &pathloss_db, py::arg("distance_km"));
  m.def("channel_gain",
        py::overload_cast<double, std::complex<double>>(&channel_gain),
        py::arg("distance_m"), py::arg("fading_coeff"));
  m.def("noise_power_w", &noise_power_w, py::arg("params"));
  m.def("make_channel_state", &make_channel_state, py::arg("scenario"), py::arg("seed"));

  py::enum_<SicMode>(m, "SicMode")
      .value("DEADLINE_ASCENDING", SicMode::DeadlineAscending)
      .value("CHANNEL_DESCENDING", SicMode::ChannelDescending);

  py::class_<UplinkUser>(m, "UplinkUser")
      .def(py::init<>())
      .def_readwrite("device_id", &UplinkUser::device_id)
      .def_readwrite("deadline_s", &UplinkUser::deadline_s)
      .def_readwrite("gain", &UplinkUser::gain)
      .def_readwrite("power_cap_w", &UplinkUser::power_cap_w)
      .def_readwrite("offload_bits", &UplinkUser::offload_bits);

  py::class_<Stage>(m, "Stage")
      .def_readonly("duration_s", &Stage::duration_s)
      .def_readonly("active", &Stage::active)
      .def_readonly("rates_bps", &Stage::rates_bps);

  py::class_<StagedResult>(m, "StagedResult")
      .def_readonly("stages", &StagedResult::stages)
      .def_readonly("completion_s", &StagedResult::completion_s);

  py::class_<UplinkPlan>(m, "UplinkPlan")
      .def_readonly("order", &UplinkPlan::order)
      .def_readonly("powers_w", &UplinkPlan::powers_w)
      .def_readonly("rates_bps", &UplinkPlan::rates_bps);

  m.def("sic_order", &sic_order, py::arg("users"), py::arg("mode"));
  m.def("allocate_power", &allocate_power, py::arg("users"), py::arg("order"), py::arg("beta"));
  m.def("sic_rates", &sic_rates, py::arg("users"), py::arg("order"), py::arg("powers_w"),
        py::arg("sigma2"), py::arg("bandwidth_hz"));
  m.def("full_interference_rates", &full_interference_rates, py::arg("users"), py::arg("order"),
        py::arg("powers_w"), py::arg("sigma2"), py::arg("bandwidth_hz"));
  m.def("staged_timeline", &staged_timeline, py::arg("users"), py::arg("order"),
        py::arg("powers_w"), py::arg("sigma2"), py::arg("bandwidth_hz"));
  m.def("plan_uplink", &plan_uplink, py::arg("users"), py::arg("mode"), py::arg("beta"),
        py::arg("sigma2"), py::arg("bandwidth_hz"));

  py::class_<DeviceDemand>(m, "DeviceDemand")
      .def(py::init<>())
      .def_readwrite("workload_bits", &DeviceDemand::workload_bits)
      .def_readwrite("deadline_s", &DeviceDemand::deadline_s)
      .def_readwrite("local_rate_bps", &DeviceDemand::local_rate_bps)
      .def_readwrite("uplink_rate_bps", &DeviceDemand::uplink_rate_bps)
      .def_readwrite("min_mec_rate_bps", &DeviceDemand::min_mec_rate_bps);

  m.def("split_ratio", &split_ratio, py::arg("local_rate"), py::arg("uplink_rate"),
        py::arg("mec_rate"));
  m.def("task_delay", &task_delay, py::arg("workload"), py::arg("local_rate"),
        py::arg("uplink_rate"), py::arg("mec_rate"));
  m.def("min_required_rate", &min_required_rate, py::arg("workload"), py::arg("deadline"),
        py::arg("local_rate"), py::arg("uplink_rate"));
  m.def("waterfill", &waterfill, py::arg("demands"), py::arg("capacity_bps"));

  py::class_<PreferenceLists>(m, "PreferenceLists")
      .def_readonly("device_prefs", &PreferenceLists::device_prefs)
      .def_readonly("bs_prefs", &PreferenceLists::bs_prefs);

  py::class_<Matching>(m, "Matching")
      .def_readonly("assignment", &Matching::assignment)
      .def("associated_count", &Matching::associated_count)
      .def("members_per_bs", &Matching::members_per_bs, py::arg("n_bss"));

  py::class_<FeasibilityResult>(m, "FeasibilityResult")
      .def_readonly("feasible", &FeasibilityResult::feasible)
      .def_readonly("min_rates_bps", &FeasibilityResult::min_rates_bps)
      .def_readonly("unreachable", &FeasibilityResult::unreachable);

  py::class_<MatchingStats>(m, "MatchingStats")
      .def_readonly("proposals", &MatchingStats::proposals)
      .def_readonly("rejections", &MatchingStats::rejections);

  m.def("build_preferences", &build_preferences, py::arg("scenario"), py::arg("channel"));
  m.def("feasible", &feasible, py::arg("bs"), py::arg("candidate_devices"), py::arg("scenario"),
        py::arg("channel"), py::arg("mode"));
  m.def(
      "gale_shapley",
      [](const Scenario& scenario, const PreferenceLists& prefs, const ChannelState& channel,
         SicMode mode) {
        MatchingStats stats;
        Matching matched = gale_shapley(scenario, prefs, channel, mode, &stats);
        return py::make_tuple(matched, stats);
      },
      py::arg("scenario"), py::arg("prefs"), py::arg("channel"), py::arg("mode"));
  m.def("distance_association", &distance_association, py::arg("scenario"), py::arg("channel"),
        py::arg("mode"));

  py::enum_<AssociationPolicy>(m, "AssociationPolicy")
      .value("GAME", AssociationPolicy::Game)
      .value("DISTANCE", AssociationPolicy::Distance);

  py::class_<Arm>(m, "Arm")
      .def(py::init<>())
      .def_readwrite("association", &Arm::association)
      .def_readwrite("sic", &Arm::sic)
      .def("name", &Arm::name);
  m.def("arm_from_name", &arm_from_name, py::arg("name"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("sim_params", &ExperimentConfig::sim_params)
      .def_readwrite("n_devices_sweep", &ExperimentConfig::n_devices_sweep)
      .def_readwrite("runs_per_point", &ExperimentConfig::runs_per_point)
      .def_readwrite("arms", &ExperimentConfig::arms)
      .def_readwrite("base_seed", &ExperimentConfig::base_seed)
      .def_readwrite("threads", &ExperimentConfig::threads)
      .def("validate", &ExperimentConfig::validate);

  py::class_<DeviceOutcome>(m, "DeviceOutcome")
      .def_readonly("device_id", &DeviceOutcome::device_id)
      .def_readonly("bs_id", &DeviceOutcome::bs_id)
      .def_readonly("alpha", &DeviceOutcome::alpha)
      .def_readonly("mec_rate_bps", &DeviceOutcome::mec_rate_bps)
      .def_readonly("uplink_rate_bps", &DeviceOutcome::uplink_rate_bps)
      .def_readonly("planned_delay_s", &DeviceOutcome::planned_delay_s)
      .def_readonly("realized_delay_s", &DeviceOutcome::realized_delay_s)
      .def_readonly("met_deadline", &DeviceOutcome::met_deadline);

  py::class_<RunMetrics>(m, "RunMetrics")
      .def_readonly("arm", &RunMetrics::arm)
      .def_readonly("n_devices", &RunMetrics::n_devices)
      .def_readonly("seed", &RunMetrics::seed)
      .def_readonly("total_delay_s", &RunMetrics::total_delay_s)
      .def_readonly("unassociated_fraction", &RunMetrics::unassociated_fraction)
      .def_readonly("bs_load", &RunMetrics::bs_load)
      .def_readonly("bs_capacity_bps", &RunMetrics::bs_capacity_bps)
      .def_readonly("devices", &RunMetrics::devices);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("arm", &SweepRow::arm)
      .def_readonly("n_devices", &SweepRow::n_devices)
      .def_readonly("mean_total_delay_s", &SweepRow::mean_total_delay_s)
      .def_readonly("std_total_delay_s", &SweepRow::std_total_delay_s)
      .def_readonly("mean_unassoc_frac", &SweepRow::mean_unassoc_frac)
      .def_readonly("std_unassoc_frac", &SweepRow::std_unassoc_frac);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("runs", &SweepResult::runs)
      .def_readonly("aggregate", &SweepResult::aggregate);

  m.def("run_once", &run_once, py::arg("params"), py::arg("scenario_seed"), py::arg("n"),
        py::arg("arm"));
  m.def("run_sweep", &run_sweep, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("emit_results", &emit_results, py::arg("result"), py::arg("out_dir"));

  m.attr("UNASSOCIATED") = kUnassociated;
}
