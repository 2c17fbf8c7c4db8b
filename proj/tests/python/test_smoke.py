import os
from fractions import Fraction
from pathlib import Path

import pytest

import contractkit as ck

DATA = Path(os.environ.get("CONTRACTKIT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture
def contract():
    return ck.load_contract(str(DATA / "contract.json"))


def test_consistent_subspace_of_guarantees():
    g = ck.load_system(str(DATA / "guarantees.json"))
    v = ck.consistent_subspace(g)
    assert v.dim == 3
    assert v.ambient_dim == 4
    assert v.contains_vector([1, 2, 0, 1])
    assert not v.contains_vector([1, 2, "0.8", 1])
    assert ck.is_consistent_state(g, ["1", "2", "0", "1"])


def test_implements(contract):
    plain = ck.implements(ck.load_system(str(DATA / "sigma.json")), contract)
    assert not plain["holds"]
    assert plain["reason"] == "NotFull"
    assert plain["witness"].relation.dim == 3
    constrained = ck.implements(ck.load_system(str(DATA / "sigma_constrained.json")), contract)
    assert constrained["holds"]
    assert constrained["reason"] is None


def test_refines_compatible_saturate(contract):
    assert ck.refines(contract, contract)["holds"]
    env = ck.load_system(str(DATA / "vehicle1.json"))
    assert ck.is_compatible_environment(env, contract)["holds"]
    sat = ck.saturate(contract)
    assert sat.guarantees.state_dim == 8
    sigma = ck.load_system(str(DATA / "sigma.json"))
    assert ck.implements(sigma, sat)["holds"] == ck.implements(sigma, contract)["holds"]


def test_build_systems_in_python():
    one = ck.DVSystem(A=[[0]], G=[[1]], C=[[1]], name="one")
    both = ck.compose(one, one)
    assert ck.as_fractions(both.C) == [[Fraction(1, 2), Fraction(1, 2)]]
    assert ck.simulates(both, one)["holds"]
    assert ck.DVSystem.from_json(both.to_json()) == both
    with pytest.raises(ValueError):
        ck.DVSystem(A=[[0, 1]], G=[], C=[[1]])
    with pytest.raises(ValueError):
        ck.compose(one, ck.DVSystem(A=[[0]], G=[], C=[[1], [1]]))


def test_vehicle_experiment():
    run = ck.run_vehicle_experiment(dt=0.01, t_end=15.0)
    assert len(run["t"]) == 1501
    assert max(abs(e) for e in run["e"]) < 1e-6
    assert run["csv"].startswith("t,v1,v2,e\n")
    dashed = ck.run_vehicle_experiment(x0=[1, 2, 0.8, 1], dt=0.01, t_end=15.0)
    assert abs(dashed["e"][-1]) < 0.02
