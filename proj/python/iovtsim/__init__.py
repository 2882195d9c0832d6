"""System-level simulator for NOMA-assisted multi-MEC visual-task offloading."""

from ._core import (
    UNASSOCIATED,
    Arm,
    AssociationPolicy,
    ChannelState,
    DeviceDemand,
    DeviceOutcome,
    ExperimentConfig,
    FeasibilityResult,
    IovtDevice,
    Matching,
    MatchingStats,
    MecBs,
    Position,
    PreferenceLists,
    RunMetrics,
    Scenario,
    SicMode,
    SimParams,
    Stage,
    StagedResult,
    SweepResult,
    SweepRow,
    UplinkPlan,
    UplinkUser,
    allocate_power,
    arm_from_name,
    build_preferences,
    channel_gain,
    distance_association,
    distance_m,
    emit_results,
    feasible,
    gale_shapley,
    load_params,
    make_channel_state,
    make_paper_topology,
    min_required_rate,
    noise_power_w,
    params_from_json,
    pathloss_db,
    plan_uplink,
    populate_devices,
    run_once,
    run_sweep,
    sic_order,
    full_interference_rates,
    sic_rates,
    split_ratio,
    staged_timeline,
    task_delay,
    waterfill,
)

__all__ = [
    "UNASSOCIATED",
    "Arm",
    "AssociationPolicy",
    "ChannelState",
    "DeviceDemand",
    "DeviceOutcome",
    "ExperimentConfig",
    "FeasibilityResult",
    "IovtDevice",
    "Matching",
    "MatchingStats",
    "MecBs",
    "Position",
    "PreferenceLists",
    "RunMetrics",
    "Scenario",
    "SicMode",
    "SimParams",
    "Stage",
    "StagedResult",
    "SweepResult",
    "SweepRow",
    "UplinkPlan",
    "UplinkUser",
    "allocate_power",
    "arm_from_name",
    "build_preferences",
    "channel_gain",
    "distance_association",
    "distance_m",
    "emit_results",
    "feasible",
    "gale_shapley",
    "load_params",
    "make_channel_state",
    "make_paper_topology",
    "min_required_rate",
    "noise_power_w",
    "params_from_json",
    "pathloss_db",
    "plan_uplink",
    "populate_devices",
    "run_once",
    "run_sweep",
    "sic_order",
    "full_interference_rates",
    "sic_rates",
    "split_ratio",
    "staged_timeline",
    "task_delay",
    "waterfill",
]

__version__ = "0.1.0"
