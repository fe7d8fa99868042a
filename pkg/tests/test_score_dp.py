"""Score-vector DP: verdicts, table bounds, pruning soundness."""

import pytest

from ecse.model import EGALITARIAN, EQUITABLE, verify
from ecse.oracle import brute_solve
from ecse.score_dp import DpGuardError, solve_dp
from ecse.generators import random_instance

from conftest import make_instance


def test_trip_equitable_x3(trip_equitable_x3):
    result = solve_dp(trip_equitable_x3)
    assert result.verdict == "yes"
    report = verify(trip_equitable_x3, result.witness)
    assert report.feasible and set(report.agent_scores) == {1}
    assert result.stats["table_entries"] <= trip_equitable_x3.tau * 2 ** 6


def test_trip_equitable_x4(trip_equitable_x4):
    assert solve_dp(trip_equitable_x4).verdict == "no"


def test_trip_egalitarian(trip_egalitarian):
    result = solve_dp(trip_egalitarian)
    assert result.verdict == "yes"
    assert result.witness.committees == ((1, 5), (2, 3))


def test_zero_target_chain():
    inst = make_instance([(1, 2), (2, 2)], mode=EGALITARIAN, k=1, x=0, y=0)
    result = solve_dp(inst)
    assert result.verdict == "yes"
    assert result.stats["max_frontier"] == 1  # only the all-zero vector


def test_guard():
    inst = random_instance(0, n=21, m=3, tau=1, k=1, x=0, y=0, mode=EGALITARIAN)
    with pytest.raises(DpGuardError):
        solve_dp(inst)


def test_agrees_with_oracle_and_respects_bound():
    for seed in range(250):
        inst = random_instance(
            seed, n=1 + seed % 5, m=1 + (seed * 7) % 5, tau=1 + seed % 4,
            k=seed % 4, x=seed % 4, y=seed % 3,
            mode=EGALITARIAN if seed % 2 else EQUITABLE, empty_prob=(seed % 4) / 10,
        )
        result = solve_dp(inst)
        assert result.verdict == brute_solve(inst).verdict, f"seed {seed}"
        if result.witness is not None:
            assert verify(inst, result.witness).feasible
        assert result.stats["max_frontier"] <= (inst.y + 1) ** inst.n


def test_pruned_equals_unpruned_small():
    """No vector with an overshot entry can come back: the cut is lossless."""
    for seed in range(300):
        inst = random_instance(
            seed, n=1 + seed % 4, m=1 + seed % 4, tau=1 + seed % 4,
            k=seed % 4, x=seed % 3, y=seed % 3,
            mode=EQUITABLE, empty_prob=(seed % 3) / 10,
        )
        pruned = solve_dp(inst, prune=True)
        unpruned = solve_dp(inst, prune=False)
        assert pruned.verdict == unpruned.verdict, f"seed {seed}"
        assert pruned.stats["table_entries"] <= unpruned.stats["table_entries"]
