"""Dynamic programming over per-agent score vectors.

The state after level t is the vector of agent scores so far; transitions
are the distinct agent-inclusion fingerprints of the level's valid
committees.  Equitable mode keeps exact scores and discards any vector with
an entry above the target (scores only grow, so such a vector is dead);
egalitarian mode caps entries at the target, where excess satisfaction is
irrelevant.  Either way at most (y+1)^n vectors survive per level and the
all-target vector at the last level decides the instance.
"""

from __future__ import annotations

import time

from .model import (
    CommitteeSequence,
    GuardExceeded,
    Instance,
    SolveResult,
    level_fingerprints,
    rename_candidates,
)


class DpGuardError(GuardExceeded):
    """Too many agents for the score-vector table."""


MAX_AGENTS = 20


def solve_dp(inst: Instance, prune: bool = True) -> SolveResult:
    """Exact verdict via the score-vector sweep; witness from back-pointers.

    ``prune=False`` disables the equitable above-target cut (scores then run
    up to tau); it exists so tests can confirm the cut never changes the
    outcome.  Egalitarian mode always caps, which is its exact semantics.
    """
    started = time.perf_counter()
    renamed, renaming = rename_candidates(inst)
    if renamed.n > MAX_AGENTS:
        raise DpGuardError(f"{renamed.n} agents exceed the table guard ({MAX_AGENTS})")
    y = renamed.y
    cap = renamed.egalitarian

    levels = []
    committees_enumerated = 0
    for t in range(1, renamed.tau + 1):
        fps = list(level_fingerprints(renamed, t).items())
        committees_enumerated += len(fps)
        levels.append(fps)

    # frontier per level: score vector -> (previous vector, committee)
    trace: list[dict[tuple[int, ...], tuple[tuple[int, ...] | None, tuple[int, ...]]]] = []
    stats = {"table_entries": 0, "max_frontier": 0, "committees_enumerated": committees_enumerated}

    def step(vec: tuple[int, ...], fp: tuple[int, ...]) -> tuple[int, ...] | None:
        if cap:
            return tuple(min(y, v + b) for v, b in zip(vec, fp))
        out = tuple(v + b for v, b in zip(vec, fp))
        if prune and any(v > y for v in out):
            return None
        return out

    frontier: dict = {}
    zero = (0,) * renamed.n
    for fp, committee in levels[0]:
        vec = step(zero, fp)
        if vec is not None and vec not in frontier:
            frontier[vec] = (None, committee)
    trace.append(frontier)
    for t0 in range(1, renamed.tau):
        nxt: dict = {}
        for vec in sorted(trace[-1]):
            for fp, committee in levels[t0]:
                out = step(vec, fp)
                if out is not None and out not in nxt:
                    nxt[out] = (vec, committee)
        trace.append(nxt)
    for frontier in trace:
        stats["table_entries"] += len(frontier)
        stats["max_frontier"] = max(stats["max_frontier"], len(frontier))

    target = (y,) * renamed.n
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    if target not in trace[-1]:
        return SolveResult.no(stats)

    committees: list[tuple[int, ...]] = []
    vec: tuple[int, ...] | None = target
    for t0 in range(renamed.tau - 1, -1, -1):
        prev, committee = trace[t0][vec]
        committees.append(committee)
        vec = prev
    committees.reverse()
    witness = renaming.lift(CommitteeSequence(tuple(committees)))
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    return SolveResult.yes(witness, stats)
