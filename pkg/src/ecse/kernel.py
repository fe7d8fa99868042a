"""Data reduction: the egalitarian level kernel and the zero-target rule.

The egalitarian kernel hinges on agent criticality.  ``Z(a)`` collects the
levels in which some valid committee contains agent a's nominee; since scores
are additive, the score-maximal committee through a fixed candidate is its
greedy completion, so membership is a polynomial check.  An agent with more
than ``n * y`` such levels is never a bottleneck (non-critical); once every
agent is non-critical the instance is a guaranteed yes, and a level that no
critical agent can use may be dropped.  Exhaustive application leaves at most
``n^2 * y`` levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    EGALITARIAN,
    EQUITABLE,
    CommitteeSequence,
    Instance,
    PeInstance,
    greedy_committee,
    rename_candidates,
    row_support,
)


@dataclass(frozen=True)
class CriticalityTable:
    """Per agent: the usable-level set Z(a) (1-based) and the critical flag
    (|Z(a)| <= n*y)."""

    z_sets: tuple[tuple[int, ...], ...]
    critical: tuple[bool, ...]
    threshold: int

    def z_size(self, a: int) -> int:
        return len(self.z_sets[a - 1])


@dataclass(frozen=True)
class KernelResult:
    """Either a resolved verdict (with witness on yes) or a reduced instance.

    ``kept_levels``/``deleted_levels`` partition the original level indices;
    the reduced instance is expressed over renamed candidate ids.
    """

    resolved: bool
    verdict: str | None
    witness: CommitteeSequence | None
    instance: Instance | None
    kept_levels: tuple[int, ...]
    deleted_levels: tuple[int, ...]
    rule_log: tuple[tuple, ...]

    def __post_init__(self):
        if self.resolved == (self.instance is not None):
            raise ValueError("exactly one of verdict and instance must be set")


def _best_score_with(support: dict[int, int], k: int, candidate: int) -> int:
    """Score of the best size-<=k committee containing ``candidate``;
    -1 when k = 0 makes inclusion impossible."""
    if k < 1:
        return -1
    others = sorted((support[c] for c in support if c != candidate), reverse=True)
    return support[candidate] + sum(others[: k - 1])


def compute_criticality(inst: Instance) -> CriticalityTable:
    """Z(a) and criticality flags for an egalitarian instance."""
    if inst.mode != EGALITARIAN:
        raise ValueError("criticality is defined for egalitarian instances")
    threshold = inst.n * inst.y
    z: list[list[int]] = [[] for _ in range(inst.n)]
    for t0, row in enumerate(inst.profile):
        support = row_support(row)
        usable = {c for c in support if _best_score_with(support, inst.k, c) >= inst.x}
        for a0, c in enumerate(row):
            if c != 0 and c in usable:
                z[a0].append(t0 + 1)
    critical = tuple(len(levels) <= threshold for levels in z)
    return CriticalityTable(tuple(tuple(lv) for lv in z), critical, threshold)


def _sub_instance(renamed: Instance, kept: list[int]) -> Instance:
    rows = tuple(renamed.profile[t - 1] for t in kept)
    return Instance(
        renamed.mode, renamed.n, renamed.m, len(kept), renamed.k, renamed.x, renamed.y, rows
    )


def kernelize_ny(inst: Instance) -> KernelResult:
    """Exhaustive kernelization of an egalitarian instance.

    Applied in order: (0) a level without any valid committee resolves to
    no; (1) all agents non-critical resolves to yes, witnessed by the greedy
    level assignment; (2) a level no critical agent can use is deleted and
    criticality recomputed.  When nothing applies the reduced instance has
    at most ``n^2 * y`` levels and at most ``n`` candidates.
    """
    if inst.mode != EGALITARIAN:
        raise ValueError("the level kernel is defined for egalitarian instances")
    renamed, renaming = rename_candidates(inst)
    log: list[tuple] = []

    supports = [row_support(row) for row in renamed.profile]
    for t0, support in enumerate(supports):
        top = greedy_committee(support, renamed.k)
        if sum(support[c] for c in top) < renamed.x:
            log.append(("no-valid-committee", t0 + 1))
            return KernelResult(
                True, "no", None, None, tuple(range(1, inst.tau + 1)), (), tuple(log)
            )

    kept = list(range(1, inst.tau + 1))
    deleted: list[int] = []
    while kept:
        sub = _sub_instance(renamed, kept)
        table = compute_criticality(sub)
        if not any(table.critical):
            log.append(("all-non-critical",))
            witness = _non_critical_witness(renamed, kept, table, supports)
            return KernelResult(
                True, "yes", renaming.lift(witness), None, tuple(kept), tuple(deleted), tuple(log)
            )
        critical_levels: set[int] = set()
        for a0 in range(sub.n):
            if table.critical[a0]:
                critical_levels.update(table.z_sets[a0])
        droppable = next((s for s in range(1, len(kept) + 1) if s not in critical_levels), None)
        if droppable is None:
            break
        original = kept.pop(droppable - 1)
        deleted.append(original)
        log.append(("delete-level", original))

    if not kept:
        # every level was useless to critical agents; with a positive target
        # some agent can never score, without one the greedy committees do
        if inst.y > 0:
            return KernelResult(True, "no", None, None, (), tuple(deleted), tuple(log))
        witness = _greedy_sequence(renamed, supports)
        return KernelResult(
            True, "yes", renaming.lift(witness), None, (), tuple(deleted), tuple(log)
        )

    reduced = _sub_instance(renamed, kept)
    return KernelResult(False, None, None, reduced, tuple(kept), tuple(deleted), tuple(log))


def _greedy_sequence(renamed: Instance, supports) -> CommitteeSequence:
    committees = []
    for support in supports:
        committees.append(greedy_committee(support, renamed.k))
    return CommitteeSequence.of(committees)


def _non_critical_witness(renamed, kept, table, supports) -> CommitteeSequence:
    """Greedy level assignment: agents in index order each claim their y
    smallest still-free usable levels; every other level gets the plain
    greedy committee (valid, by the step-0 check)."""
    assigned: dict[int, tuple[int, ...]] = {}
    for a0 in range(renamed.n):
        need = renamed.y
        if need == 0:
            continue
        for s in table.z_sets[a0]:
            if need == 0:
                break
            original = kept[s - 1]
            if original in assigned:
                continue
            nominee = renamed.profile[original - 1][a0]
            committee = greedy_committee(supports[original - 1], renamed.k, include=nominee)
            assigned[original] = committee
            need -= 1
        if need:
            raise AssertionError("non-critical agent ran out of usable levels")
    committees = []
    for t in range(1, renamed.tau + 1):
        if t in assigned:
            committees.append(assigned[t])
        else:
            committees.append(greedy_committee(supports[t - 1], renamed.k))
    return CommitteeSequence.of(committees)


def rr_pe_qcse_zero_y(pe: PeInstance) -> PeInstance:
    """Remove satisfied agents from an equitable pre-elected instance.

    An agent whose remaining target is zero forbids every candidate it
    nominates (electing one would overshoot), so those nominations are
    erased everywhere and the agent is dropped.  No agent with target zero
    is the identity.
    """
    if pe.mode != EQUITABLE:
        raise ValueError("the zero-target rule applies to equitable instances")
    zeros = [a0 for a0 in range(pe.n) if pe.yvec[a0] == 0]
    if not zeros:
        return pe
    keep = [a0 for a0 in range(pe.n) if pe.yvec[a0] != 0]
    rows = []
    for t0, row in enumerate(pe.profile):
        banned = {row[a0] for a0 in zeros if row[a0] != 0}
        rows.append(tuple(0 if row[a0] in banned else row[a0] for a0 in keep))
    return PeInstance(
        pe.mode,
        len(keep),
        pe.m,
        pe.tau,
        pe.kvec,
        pe.xvec,
        tuple(pe.yvec[a0] for a0 in keep),
        tuple(rows),
    )
