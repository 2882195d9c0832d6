import math

import pytest

import iovtsim as iv


def test_topology():
    s = iv.make_paper_topology(iv.SimParams())
    assert len(s.bss) == 9
    assert (s.bss[0].position.x, s.bss[0].position.y) == (-200.0, 200.0)
    assert (s.bss[8].position.x, s.bss[8].position.y) == (200.0, -200.0)
    assert len(s.devices) == 0


def test_populate_is_reproducible():
    base = iv.make_paper_topology(iv.SimParams())
    a = iv.populate_devices(base, 12, 5)
    b = iv.populate_devices(base, 12, 5)
    assert len(a.devices) == 12
    assert all(
        (x.position.x, x.workload_bits) == (y.position.x, y.workload_bits)
        for x, y in zip(a.devices, b.devices)
    )


def test_task_division_math():
    assert iv.split_ratio(1.0, 1.0, 1.0) == pytest.approx(1.0 / 3.0)
    assert iv.task_delay(8e6, 2e6, 8e6, 24e6) == pytest.approx(1.0)
    assert iv.min_required_rate(8e6, 1.0, 2e6, 8e6) == pytest.approx(24e6)
    assert iv.min_required_rate(8e6, 1.0, 2e6, 5e6) is None


def test_sum_rate_identity():
    params = iv.SimParams()
    sigma2 = iv.noise_power_w(params)
    users = []
    for k in range(4):
        u = iv.UplinkUser()
        u.device_id = k
        u.deadline_s = 0.2 + 0.3 * k
        u.gain = 10.0 ** (-10 - k)
        u.power_cap_w = 0.2
        users.append(u)
    order = iv.sic_order(users, iv.SicMode.DEADLINE_ASCENDING)
    powers = iv.allocate_power(users, order, 1.0)
    rates = iv.sic_rates(users, order, powers, sigma2, params.bandwidth_hz)
    received = sum(users[i].gain * p for i, p in zip(order, powers))
    capacity = params.bandwidth_hz * math.log2(1.0 + received / sigma2)
    assert sum(rates) == pytest.approx(capacity, rel=1e-9)

    # plan rates are the conservative ones: full interference, never above
    # the SIC rate at the same decode position
    plan = iv.plan_uplink(users, iv.SicMode.DEADLINE_ASCENDING, 1.0, sigma2, params.bandwidth_hz)
    assert plan.order == order
    assert all(r <= s * (1 + 1e-12) for r, s in zip(plan.rates_bps, rates))


def test_run_once_and_matching():
    m = iv.run_once(iv.SimParams(), 3, 20, iv.arm_from_name("game-deadline"))
    assert m.n_devices == 20
    assert len(m.devices) == 20
    assert len(m.bs_load) == 9
    for d in m.devices:
        if d.bs_id != iv.UNASSOCIATED:
            assert d.met_deadline
            assert d.realized_delay_s <= d.planned_delay_s * (1 + 1e-9)


def test_sweep_and_emit(tmp_path):
    cfg = iv.ExperimentConfig()
    cfg.n_devices_sweep = [10]
    cfg.runs_per_point = 2
    res = iv.run_sweep(cfg)
    assert len(res.runs) == 2 * 3
    assert len(res.aggregate) == 3

    iv.emit_results(res, str(tmp_path))
    per_run = (tmp_path / "per_run.csv").read_bytes()
    assert per_run.startswith(b"arm,n_devices,seed,total_delay_s,unassociated_fraction\n")
    assert b"\r" not in per_run
    assert (tmp_path / "aggregate.csv").exists()
    assert (tmp_path / "bs_load.csv").exists()


def test_config_json_rejects_unknown_keys():
    p = iv.params_from_json('{"bandwidth_hz": 1e6}')
    assert p.bandwidth_hz == 1e6
    with pytest.raises(ValueError):
        iv.params_from_json('{"bandwith_hz": 1e6}')
