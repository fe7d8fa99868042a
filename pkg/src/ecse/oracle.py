"""Brute-force reference solvers.

These are the ground truth for every property test in the suite.  They are
deliberately plain: per level a committee list is enumerated, then a depth
first search over the level product checks the constraints, with only the
obvious dead-branch cuts (an agent that can no longer reach, or has already
overshot, its target).  Nothing here is shared with the optimized solvers
beyond the data model.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .model import (
    CMP_EQ,
    CMP_GE,
    CMP_LE,
    CommitteeSequence,
    ComparatorSpec,
    GuardExceeded,
    Instance,
    PeInstance,
    SolveResult,
    compares,
    enumerate_valid_committees,
    rename_candidates,
)


class OracleLimitError(GuardExceeded):
    """Instance too large for exhaustive search."""


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 8
    max_m: int = 8
    max_tau: int = 6
    max_committees_per_level: int = 4096

    def __post_init__(self):
        if min(self.max_n, self.max_m, self.max_tau, self.max_committees_per_level) < 1:
            raise ValueError("limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def _nominated_subsets(row: tuple[int, ...], max_size: int) -> list[tuple[int, ...]]:
    """All committees over the candidates nominated in ``row``, size capped."""
    nominated = sorted({c for c in row if c != 0})
    if max_size < 0:
        return []
    out = []
    for size in range(0, min(max_size, len(nominated)) + 1):
        out.extend(itertools.combinations(nominated, size))
    return out


def _satisfied(row: tuple[int, ...], committee: tuple[int, ...]) -> list[int]:
    chosen = set(committee)
    return [a0 for a0, c in enumerate(row) if c != 0 and c in chosen]


def _suffix_potential(profile) -> list[list[int]]:
    """potential[t][a]: levels >= t in which agent a nominates someone."""
    tau = len(profile)
    n = len(profile[0]) if profile else 0
    potential = [[0] * n for _ in range(tau + 1)]
    for t0 in range(tau - 1, -1, -1):
        for a0 in range(n):
            potential[t0][a0] = potential[t0 + 1][a0] + (1 if profile[t0][a0] != 0 else 0)
    return potential


def _search(profile, options, xvec, yvec, equitable, stats) -> list[tuple[int, ...]] | None:
    """DFS over per-level committee options.

    ``options[t]`` holds (committee, satisfied-agents, score) triples; the
    first feasible sequence in enumeration order is returned.
    """
    tau = len(profile)
    n = len(profile[0]) if profile else 0
    potential = _suffix_potential(profile)
    scores = [0] * n
    chosen: list[tuple[int, ...]] = []

    def dead(t0: int) -> bool:
        for a0 in range(n):
            if scores[a0] + potential[t0][a0] < yvec[a0]:
                return True
            if equitable and scores[a0] > yvec[a0]:
                return True
        return False

    def rec(t0: int) -> bool:
        stats["nodes"] += 1
        if dead(t0):
            return False
        if t0 == tau:
            for a0 in range(n):
                if equitable:
                    if scores[a0] != yvec[a0]:
                        return False
                elif scores[a0] < yvec[a0]:
                    return False
            return True
        for committee, sats, score in options[t0]:
            if score < xvec[t0]:
                continue
            chosen.append(committee)
            for a0 in sats:
                scores[a0] += 1
            if rec(t0 + 1):
                return True
            for a0 in sats:
                scores[a0] -= 1
            chosen.pop()
        return False

    return list(chosen) if rec(0) else None


def brute_solve(inst: Instance, limits: OracleLimits | None = None) -> SolveResult:
    """Exact verdict by exhaustion, witness included on yes.

    Egalitarian search runs over the per-level valid committees (anything
    else violates the level constraint anyway); equitable search runs over
    all size-at-most-k committees of nominated candidates and checks the
    level score during the sweep.
    """
    limits = limits or DEFAULT_LIMITS
    started = time.perf_counter()
    renamed, renaming = rename_candidates(inst)
    # the enumeration base per level is its distinct nominated candidates
    effective_m = max((len(set(row) - {0}) for row in renamed.profile), default=0)
    if renamed.n > limits.max_n or effective_m > limits.max_m or renamed.tau > limits.max_tau:
        raise OracleLimitError(
            f"n={renamed.n}, m={effective_m} (effective), tau={renamed.tau} "
            f"exceed limits {limits}"
        )
    options = []
    total = 0
    for t in range(1, renamed.tau + 1):
        row = renamed.profile[t - 1]
        if renamed.egalitarian:
            committees = enumerate_valid_committees(renamed, t)
        else:
            committees = _nominated_subsets(row, renamed.k)
        if len(committees) > limits.max_committees_per_level:
            raise OracleLimitError(f"{len(committees)} committees at level {t}")
        total += len(committees)
        sat_lists = [_satisfied(row, c) for c in committees]
        options.append([(c, s, len(s)) for c, s in zip(committees, sat_lists)])

    stats = {"nodes": 0, "committees_enumerated": total}
    xvec = (renamed.x,) * renamed.tau
    yvec = (renamed.y,) * renamed.n
    found = _search(renamed.profile, options, xvec, yvec, not renamed.egalitarian, stats)
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    if found is None:
        return SolveResult.no(stats)
    return SolveResult.yes(renaming.lift(CommitteeSequence(tuple(found))), stats)


def brute_solve_pe(pe: PeInstance, limits: OracleLimits | None = None) -> SolveResult:
    """Exhaustive solver for pre-elected instances.

    Negative per-level budgets admit no committee at all, so any such level
    makes the instance a no.
    """
    limits = limits or DEFAULT_LIMITS
    started = time.perf_counter()
    if pe.n > limits.max_n or pe.tau > limits.max_tau:
        raise OracleLimitError(f"n={pe.n}, tau={pe.tau} exceed limits {limits}")
    options = []
    total = 0
    for t0 in range(pe.tau):
        row = pe.profile[t0]
        committees = _nominated_subsets(row, pe.kvec[t0])
        if len(committees) > limits.max_committees_per_level:
            raise OracleLimitError(f"{len(committees)} committees at level {t0 + 1}")
        total += len(committees)
        sat_lists = [_satisfied(row, c) for c in committees]
        options.append([(c, s, len(s)) for c, s in zip(committees, sat_lists)])

    stats = {"nodes": 0, "committees_enumerated": total}
    found = _search(pe.profile, options, pe.xvec, pe.yvec, not pe.egalitarian, stats)
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    if found is None:
        return SolveResult.no(stats)
    return SolveResult.yes(CommitteeSequence(tuple(found)), stats)


def brute_solve_generalized(
    inst: Instance, spec: ComparatorSpec, limits: OracleLimits | None = None
) -> SolveResult:
    """Exhaustive solver for an arbitrary comparator triple.

    Size constraints other than ``<=`` may force unnominated candidates into
    a committee, so enumeration runs over the full candidate set here.
    """
    limits = limits or DEFAULT_LIMITS
    started = time.perf_counter()
    if inst.n > limits.max_n or inst.m > limits.max_m or inst.tau > limits.max_tau:
        raise OracleLimitError(f"n={inst.n}, m={inst.m}, tau={inst.tau} exceed limits {limits}")

    everyone = list(range(1, inst.m + 1))
    if spec.cmp_k == CMP_LE:
        sizes = range(0, min(inst.k, inst.m) + 1)
    elif spec.cmp_k == CMP_EQ:
        sizes = range(inst.k, inst.k + 1) if inst.k <= inst.m else range(0)
    else:
        sizes = range(inst.k, inst.m + 1)
    base = [c for size in sizes for c in itertools.combinations(everyone, size)]
    if len(base) > limits.max_committees_per_level:
        raise OracleLimitError(f"{len(base)} committees per level")

    potential = _suffix_potential(inst.profile)
    scores = [0] * inst.n
    chosen: list[tuple[int, ...]] = []
    stats = {"nodes": 0, "committees_enumerated": len(base) * inst.tau}
    per_level = []
    for t0 in range(inst.tau):
        row = inst.profile[t0]
        per_level.append([(c, _satisfied(row, c)) for c in base])

    def dead(t0: int) -> bool:
        for a0 in range(inst.n):
            s = scores[a0]
            if spec.cmp_y in (CMP_GE, CMP_EQ) and s + potential[t0][a0] < inst.y:
                return True
            if spec.cmp_y in (CMP_LE, CMP_EQ) and s > inst.y:
                return True
        return False

    def rec(t0: int) -> bool:
        stats["nodes"] += 1
        if dead(t0):
            return False
        if t0 == inst.tau:
            return all(compares(spec.cmp_y, scores[a0], inst.y) for a0 in range(inst.n))
        for committee, sats in per_level[t0]:
            if not compares(spec.cmp_x, len(sats), inst.x):
                continue
            chosen.append(committee)
            for a0 in sats:
                scores[a0] += 1
            if rec(t0 + 1):
                return True
            for a0 in sats:
                scores[a0] -= 1
            chosen.pop()
        return False

    ok = rec(0)
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    if not ok:
        return SolveResult.no(stats)
    return SolveResult.yes(CommitteeSequence(tuple(chosen)), stats)
