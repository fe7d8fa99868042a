"""Type-based integer program: few agents, arbitrarily many levels.

Levels with identical nomination rows are interchangeable, so the model
groups them into types and counts, per type, how many of its levels elect
each valid committee.  Feasibility of the program is equivalent to the
instance; it is decided here by plain depth-first search with constraint
propagation (exact, budgeted) and can be exported in LP text format for
external solvers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .model import (
    CommitteeSequence,
    GuardExceeded,
    Instance,
    SolveResult,
    rename_candidates,
    row_support,
    valid_committees,
)

Committee = tuple[int, ...]
VarKey = tuple[int, int]  # (type index, committee index), both 0-based


class UndecidedError(GuardExceeded):
    """Search budget exhausted before a verdict; never a wrong answer."""


@dataclass(frozen=True)
class IpModel:
    """Integer program over variables x[type, committee].

    Constraints: per agent, the variables whose committee respects the
    agent's nomination in that type sum to at least (egalitarian) or exactly
    (equitable) ``y``; per type, all variables sum to the type's level count;
    every variable ranges over 0..count.
    """

    equitable: bool
    n: int
    y: int
    type_counts: tuple[int, ...]
    type_levels: tuple[tuple[int, ...], ...]  # 1-based level indices per type
    committees: tuple[tuple[Committee, ...], ...]  # valid committees per type
    agent_vars: tuple[tuple[VarKey, ...], ...]  # X_a per agent

    @property
    def num_types(self) -> int:
        return len(self.type_counts)

    @property
    def num_variables(self) -> int:
        return sum(len(cs) for cs in self.committees)


def build_ip(inst: Instance) -> IpModel:
    """Group levels into types and enumerate each type's valid committees.

    Callers should rename candidates first so the per-type enumeration stays
    within the guard; types are ordered by first occurrence.
    """
    type_index: dict[tuple[int, ...], int] = {}
    type_levels: list[list[int]] = []
    for t in range(1, inst.tau + 1):
        row = inst.profile[t - 1]
        if row not in type_index:
            type_index[row] = len(type_levels)
            type_levels.append([])
        type_levels[type_index[row]].append(t)
    rows = list(type_index)
    committees = tuple(
        tuple(valid_committees(row_support(row), inst.k, inst.x)) for row in rows
    )
    agent_vars: list[tuple[VarKey, ...]] = []
    for a0 in range(inst.n):
        pairs: list[VarKey] = []
        for ti, row in enumerate(rows):
            c = row[a0]
            if c == 0:
                continue
            for ci, committee in enumerate(committees[ti]):
                if c in committee:
                    pairs.append((ti, ci))
        agent_vars.append(tuple(pairs))
    return IpModel(
        not inst.egalitarian,
        inst.n,
        inst.y,
        tuple(len(levels) for levels in type_levels),
        tuple(tuple(levels) for levels in type_levels),
        committees,
        tuple(agent_vars),
    )


def solve_ip_naive(model: IpModel, max_nodes: int = 2_000_000) -> dict[VarKey, int] | None:
    """Feasible assignment by depth-first value search, or None.

    Variables are visited type by type in committee order; the last variable
    of a type is forced by the type-sum constraint.  Agent constraints prune
    via running sums and optimistic remaining capacity.  Raises
    :class:`UndecidedError` when ``max_nodes`` search nodes are exhausted.
    """
    order: list[VarKey] = [
        (ti, ci) for ti in range(model.num_types) for ci in range(len(model.committees[ti]))
    ]
    for ti in range(model.num_types):
        if not model.committees[ti] and model.type_counts[ti] > 0:
            return None  # type-sum constraint unsatisfiable

    # var -> agents whose constraint it feeds
    consumers: dict[VarKey, list[int]] = {key: [] for key in order}
    for a0, pairs in enumerate(model.agent_vars):
        for key in pairs:
            consumers[key].append(a0)
    # per agent, per type: number of its variables of that type (for bounds)
    agent_types: list[set[int]] = [set(ti for ti, _ in pairs) for pairs in model.agent_vars]

    assignment: dict[VarKey, int] = {}
    remaining = list(model.type_counts)  # capacity left per type
    agent_sum = [0] * model.n
    open_vars = [len(pairs) for pairs in model.agent_vars]
    open_by_type: list[dict[int, int]] = []
    for pairs in model.agent_vars:
        per: dict[int, int] = {}
        for ti, _ in pairs:
            per[ti] = per.get(ti, 0) + 1
        open_by_type.append(per)
    nodes = 0

    def optimistic(a0: int) -> int:
        bound = agent_sum[a0]
        for ti, open_count in open_by_type[a0].items():
            if open_count > 0:
                bound += remaining[ti]
        return bound

    def feasible_so_far() -> bool:
        for a0 in range(model.n):
            if model.equitable and agent_sum[a0] > model.y:
                return False
            if optimistic(a0) < model.y:
                return False
        return True

    def rec(idx: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise UndecidedError(f"gave up after {max_nodes} search nodes")
        if not feasible_so_far():
            return False
        if idx == len(order):
            return all(remaining[ti] == 0 for ti in range(model.num_types))
        ti, ci = order[idx]
        last_of_type = ci == len(model.committees[ti]) - 1
        values = [remaining[ti]] if last_of_type else range(remaining[ti] + 1)
        for value in values:
            assignment[(ti, ci)] = value
            remaining[ti] -= value
            for a0 in consumers[(ti, ci)]:
                agent_sum[a0] += value
                open_by_type[a0][ti] -= 1
            if rec(idx + 1):
                return True
            for a0 in consumers[(ti, ci)]:
                agent_sum[a0] -= value
                open_by_type[a0][ti] += 1
            remaining[ti] += value
            del assignment[(ti, ci)]
        return False

    if rec(0):
        return dict(assignment)
    return None


def lift_ip_witness(inst: Instance, model: IpModel, assignment: dict[VarKey, int]) -> CommitteeSequence:
    """Distribute each type's committee counts over its (interchangeable)
    levels, in level order and canonical committee order."""
    committees: list[Committee | None] = [None] * inst.tau
    for ti, levels in enumerate(model.type_levels):
        queue: list[Committee] = []
        for ci, committee in enumerate(model.committees[ti]):
            queue.extend([committee] * assignment.get((ti, ci), 0))
        if len(queue) != len(levels):
            raise ValueError("assignment does not cover the type's levels")
        for t, committee in zip(levels, queue):
            committees[t - 1] = committee
    return CommitteeSequence(tuple(committees))


def solve_ip(inst: Instance, max_nodes: int = 2_000_000) -> SolveResult:
    """Rename, build, search, and lift back to original candidate ids."""
    started = time.perf_counter()
    renamed, renaming = rename_candidates(inst)
    model = build_ip(renamed)
    assignment = solve_ip_naive(model, max_nodes=max_nodes)
    stats = {
        "types": model.num_types,
        "variables": model.num_variables,
        "elapsed_micros": int((time.perf_counter() - started) * 1e6),
    }
    if assignment is None:
        return SolveResult.no(stats)
    witness = renaming.lift(lift_ip_witness(renamed, model, assignment))
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    return SolveResult.yes(witness, stats)


def export_lp(model: IpModel) -> str:
    """Serialize the program in LP text format.

    Variables are named ``x_t<type>_c<committee>`` (1-based); agent rows come
    first, then the type sums, then bounds and integrality.  An agent with no
    eligible variable gets a zero-coefficient row on the first variable (the
    standard way to spell an unsatisfiable-sum row in LP text), provided any
    variable exists.
    """
    names = {
        (ti, ci): f"x_t{ti + 1}_c{ci + 1}"
        for ti in range(model.num_types)
        for ci in range(len(model.committees[ti]))
    }
    ordered = [names[key] for key in sorted(names)]
    op = "=" if model.equitable else ">="
    lines = ["Minimize", " obj: 0", "Subject To"]
    for a0, pairs in enumerate(model.agent_vars):
        if pairs:
            expr = " + ".join(names[key] for key in pairs)
        elif ordered:
            expr = f"0 {ordered[0]}"
        else:
            continue
        lines.append(f" a{a0 + 1}: {expr} {op} {model.y}")
    for ti in range(model.num_types):
        if not model.committees[ti]:
            continue
        expr = " + ".join(names[(ti, ci)] for ci in range(len(model.committees[ti])))
        lines.append(f" t{ti + 1}: {expr} = {model.type_counts[ti]}")
    lines.append("Bounds")
    for ti in range(model.num_types):
        for ci in range(len(model.committees[ti])):
            lines.append(f" 0 <= {names[(ti, ci)]} <= {model.type_counts[ti]}")
    lines.append("General")
    for name in ordered:
        lines.append(f" {name}")
    lines.append("End")
    return "\n".join(lines) + "\n"
