"""Fingerprint branching: children semantics, solver verdicts, search bounds."""

import pytest

from ecse.branching import (
    Fingerprint,
    agent_fingerprints,
    branch_children,
    lift,
    solve_branch,
    solve_pe_gcse_branch,
    solve_pe_qcse_branch,
)
from ecse.model import EGALITARIAN, EQUITABLE, PeInstance, pe_feasible, verify
from ecse.oracle import brute_solve, brute_solve_pe
from ecse.generators import random_instance

from conftest import TRIP_ROWS, make_instance


def test_lift_trip(trip_egalitarian):
    pe = lift(trip_egalitarian)
    assert pe.kvec == (2, 2)
    assert pe.xvec == (4, 4)
    assert pe.yvec == (1,) * 6
    assert pe.profile == trip_egalitarian.profile
    # distinct (k, x, y) always lift to distinct vectors
    other = make_instance(TRIP_ROWS, mode=trip_egalitarian.mode, k=2, x=4, y=0, m=6)
    assert lift(other) != pe


def test_lift_preserves_verdicts():
    for seed in range(120):
        inst = random_instance(
            seed, n=1 + seed % 4, m=1 + seed % 4, tau=1 + seed % 3,
            k=seed % 3, x=seed % 3, y=seed % 3,
            mode=EGALITARIAN if seed % 2 else EQUITABLE, empty_prob=0.25,
        )
        assert brute_solve_pe(lift(inst)).verdict == brute_solve(inst).verdict


def test_agent_fingerprints_trip(trip_egalitarian, trip_equitable_x3):
    fps = agent_fingerprints(lift(trip_egalitarian), 1)
    assert [fp.bits for fp in fps] == [(True, False), (False, True), (True, True)]
    assert all(fp.popcount >= 1 for fp in fps)
    fps = agent_fingerprints(lift(trip_equitable_x3), 1)
    assert [fp.bits for fp in fps] == [(True, False), (False, True)]


def test_branch_children_updates(trip_egalitarian):
    pe = lift(trip_egalitarian)
    children = branch_children(pe, 1)
    assert len(children) == 3
    # first fingerprint: elect the nominee in level 1 only
    child = children[0]
    assert child.n == 5
    assert child.kvec == (1, 2)
    assert child.xvec == (2, 4)  # two agents nominate candidate 1 in level 1
    assert child.yvec == (1, 0, 1, 1, 1)  # agent 3 shares the elected nominee
    assert child.profile == ((5, 0, 5, 3, 4), (3, 2, 6, 2, 3))


def test_branch_children_preconditions(trip_egalitarian):
    pe = lift(trip_egalitarian)
    with pytest.raises(IndexError):
        branch_children(pe, 9)
    zero = PeInstance(pe.mode, pe.n, pe.m, pe.tau, pe.kvec, pe.xvec, (0,) * 6, pe.profile)
    with pytest.raises(ValueError):
        branch_children(zero, 1)
    starved = PeInstance(pe.mode, pe.n, pe.m, pe.tau, pe.kvec, pe.xvec, (3,) * 6, pe.profile)
    with pytest.raises(ValueError):
        branch_children(starved, 1)


def test_branch_children_or_equivalence():
    """Parent yes iff some child yes, for the chosen agent, node-wise."""
    checked = 0
    for seed in range(300):
        inst = random_instance(
            seed, n=1 + seed % 4, m=1 + (seed * 5) % 4, tau=1 + seed % 3,
            k=seed % 3, x=seed % 3, y=1 + seed % 2,
            mode=EGALITARIAN if seed % 2 else EQUITABLE, empty_prob=0.2,
        )
        pe = lift(inst)
        agent = None
        for a in range(1, pe.n + 1):
            nz = sum(1 for t0 in range(pe.tau) if pe.profile[t0][a - 1] != 0)
            if pe.yvec[a - 1] > 0 and nz >= pe.yvec[a - 1]:
                agent = a
                break
        if agent is None:
            continue
        checked += 1
        parent = brute_solve_pe(pe).verdict
        children = branch_children(pe, agent)
        child_verdicts = [brute_solve_pe(child).verdict for child in children]
        assert (parent == "yes") == ("yes" in child_verdicts)
    assert checked >= 200


def test_solve_trip_egalitarian(trip_egalitarian):
    result = solve_pe_gcse_branch(lift(trip_egalitarian))
    assert result.verdict == "yes"
    assert verify(trip_egalitarian, result.witness).feasible
    assert result.witness.committees[0] == (1, 5)


def test_negative_budget_is_no(trip_egalitarian):
    pe = lift(trip_egalitarian)
    pe = PeInstance(pe.mode, pe.n, pe.m, pe.tau, (-1, 2), pe.xvec, pe.yvec, pe.profile)
    result = solve_pe_gcse_branch(pe)
    assert result.verdict == "no"
    assert result.stats["nodes_expanded"] == 1


def test_terminal_success_path():
    inst = make_instance([(1, 2), (2, 1)], mode=EGALITARIAN, k=1, x=0, y=0)
    result = solve_pe_gcse_branch(lift(inst))
    assert result.verdict == "yes"
    assert result.witness.committees == ((), ())


def test_solve_trip_equitable(trip_equitable_x3, trip_equitable_x4):
    result = solve_pe_qcse_branch(lift(trip_equitable_x3))
    assert result.verdict == "yes"
    report = verify(trip_equitable_x3, result.witness)
    assert report.feasible and set(report.agent_scores) == {1}
    assert solve_pe_qcse_branch(lift(trip_equitable_x4)).verdict == "no"


def test_equitable_rejects_starved_agent_without_branching():
    inst = make_instance([(1, 0), (0, 0)], mode=EQUITABLE, k=1, x=0, y=2)
    result = solve_pe_qcse_branch(lift(inst))
    assert result.verdict == "no"
    assert result.stats["fingerprints_tried"] == 0


def test_verdicts_and_bounds_against_oracle():
    for seed in range(250):
        inst = random_instance(
            seed, n=1 + seed % 5, m=1 + (seed * 3) % 5, tau=1 + seed % 4,
            k=seed % 4, x=seed % 4, y=seed % 3,
            mode=EGALITARIAN if seed % 2 else EQUITABLE, empty_prob=(seed % 3) / 8,
        )
        pe = lift(inst)
        result = solve_pe_gcse_branch(pe) if inst.egalitarian else solve_pe_qcse_branch(pe)
        assert result.verdict == brute_solve(inst).verdict, f"seed {seed}"
        if result.witness is not None:
            assert verify(inst, result.witness).feasible
            assert pe_feasible(pe, result.witness.committees)
        assert result.stats["max_depth"] <= min(inst.n, sum(pe.kvec))
        assert result.stats["max_children"] <= 2 ** inst.tau


def test_solve_branch_dispatch(trip_egalitarian, trip_equitable_x3):
    assert solve_branch(trip_egalitarian).verdict == "yes"
    assert solve_branch(trip_equitable_x3).verdict == "yes"
    with pytest.raises(ValueError):
        solve_pe_gcse_branch(lift(trip_equitable_x3))
    with pytest.raises(ValueError):
        solve_pe_qcse_branch(lift(trip_egalitarian))


def test_fingerprint_type_invariants(trip_equitable_x3):
    pe = lift(trip_equitable_x3)
    for a in range(1, 7):
        for fp in agent_fingerprints(pe, a):
            assert isinstance(fp, Fingerprint)
            assert len(fp.bits) == pe.tau
            for t0, bit in enumerate(fp.bits):
                if bit:
                    assert pe.profile[t0][a - 1] != 0
            assert fp.popcount == pe.yvec[a - 1]
