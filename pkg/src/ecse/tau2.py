"""Polynomial solver for equitable elections with exactly two levels.

With target one, an agent nominating in a single level forces that candidate,
and after the forcing rules every agent nominates in both levels.  Candidates
then become vertices of a bipartite graph (one side per level) and agents its
edges; a solution is an independent vertex cover respecting per-side budgets
whose degree sums reach the remaining per-level thresholds.  In every
connected component such a cover takes exactly one full side, so a sweep over
components with reachable (budget, budget, score) triples decides the graph
problem in polynomial time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .model import (
    EQUITABLE,
    CommitteeSequence,
    Instance,
    SolveResult,
    trivial_solve,
)

Vertex = tuple[int, int]  # (level side 1|2, candidate id)


@dataclass(frozen=True)
class X2Instance:
    """Two-level equitable instance with independent per-level bounds and a
    log of force-elected candidates."""

    n: int
    m: int
    row1: tuple[int, ...]
    row2: tuple[int, ...]
    k1: int
    k2: int
    x1: int
    x2: int
    y: int
    agent_ids: tuple[int, ...] = ()
    forced1: tuple[int, ...] = ()
    forced2: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.row1) != self.n or len(self.row2) != self.n:
            raise ValueError("rows must have one entry per agent")
        if not self.agent_ids:
            object.__setattr__(self, "agent_ids", tuple(range(1, self.n + 1)))
        elif len(self.agent_ids) != self.n:
            raise ValueError("agent_ids must have one entry per agent")


def x2_from_instance(inst: Instance) -> X2Instance:
    if inst.mode != EQUITABLE or inst.tau != 2:
        raise ValueError("expected an equitable two-level instance")
    return X2Instance(
        inst.n, inst.m, inst.profile[0], inst.profile[1], inst.k, inst.k, inst.x, inst.x, inst.y
    )


def rr_x2_no_nomination(x2: X2Instance) -> X2Instance | None:
    """An agent without any nomination can never reach target one: None
    (meaning: resolved no) if such an agent exists, else the input."""
    if x2.y != 1:
        raise ValueError("rule applies to target-one instances")
    for a0 in range(x2.n):
        if x2.row1[a0] == 0 and x2.row2[a0] == 0:
            return None
    return x2


def rr_x2_force_single(x2: X2Instance) -> X2Instance | None:
    """Force the nominee of the first single-nomination agent.

    The candidate is recorded as elected, its level's budget and threshold
    are paid (threshold clamps at zero), its supporters are deleted, and
    every other-level nomination those supporters held is erased everywhere
    (electing one would overshoot a deleted agent).  Returns the input
    unchanged when no agent qualifies, None when the budget goes negative.
    """
    if x2.y != 1:
        raise ValueError("rule applies to target-one instances")
    pick = None
    for a0 in range(x2.n):
        one, two = x2.row1[a0], x2.row2[a0]
        if (one == 0) != (two == 0):
            pick = (1, one) if two == 0 else (2, two)
            break
    if pick is None:
        return x2
    t, star = pick
    here, there = (x2.row1, x2.row2) if t == 1 else (x2.row2, x2.row1)
    supporters = [a0 for a0 in range(x2.n) if here[a0] == star]
    partners = {there[a0] for a0 in supporters if there[a0] != 0}
    keep = [a0 for a0 in range(x2.n) if here[a0] != star]
    new_here = tuple(here[a0] for a0 in keep)
    new_there = tuple(0 if there[a0] in partners else there[a0] for a0 in keep)
    budget = (x2.k1 if t == 1 else x2.k2) - 1
    if budget < 0:
        return None
    threshold = max(0, (x2.x1 if t == 1 else x2.x2) - len(supporters))
    fields = {
        "n": len(keep),
        "agent_ids": tuple(x2.agent_ids[a0] for a0 in keep),
    }
    if t == 1:
        fields.update(
            row1=new_here, row2=new_there, k1=budget, x1=threshold,
            forced1=x2.forced1 + (star,),
        )
    else:
        fields.update(
            row2=new_here, row1=new_there, k2=budget, x2=threshold,
            forced2=x2.forced2 + (star,),
        )
    return replace(x2, **fields)


def apply_x2_rules(x2: X2Instance) -> X2Instance | None:
    """Both rules to a joint fixed point; None means resolved no."""
    while True:
        checked = rr_x2_no_nomination(x2)
        if checked is None:
            return None
        nxt = rr_x2_force_single(checked)
        if nxt is None:
            return None
        if nxt is checked:
            return checked
        x2 = nxt


@dataclass(frozen=True)
class CbivcsComponent:
    left: tuple[int, ...]
    right: tuple[int, ...]
    edge_count: int


@dataclass(frozen=True)
class CbivcsInstance:
    """Bipartite budget/score cover instance with its component index.

    Vertices are (side, candidate) pairs; parallel edges are kept since
    degree must count agents.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (left candidate, right candidate, agent id)
    k1: int
    k2: int
    x1: int
    x2: int
    components: tuple[CbivcsComponent, ...]


def _components(left, right, edges) -> tuple[CbivcsComponent, ...]:
    parent: dict[Vertex, Vertex] = {(1, c): (1, c) for c in left}
    parent.update({(2, c): (2, c) for c in right})

    def find(v: Vertex) -> Vertex:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v, _ in edges:
        ru, rv = find((1, u)), find((2, v))
        if ru != rv:
            parent[ru] = rv
    groups: dict[Vertex, list] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    edge_counts: dict[Vertex, int] = {}
    for u, v, _ in edges:
        edge_counts[find((1, u))] = edge_counts.get(find((1, u)), 0) + 1
    components = []
    for root, members in groups.items():
        lefts = tuple(sorted(c for side, c in members if side == 1))
        rights = tuple(sorted(c for side, c in members if side == 2))
        components.append(CbivcsComponent(lefts, rights, edge_counts.get(root, 0)))
    # every component carries at least one edge, so both sides are nonempty
    components.sort(key=lambda comp: (comp.left[0], comp.right[0]))
    return tuple(components)


def build_cbivcs(x2: X2Instance) -> CbivcsInstance:
    """Agents as edges between their two nominations; rules must have run
    first so that every agent nominates at both levels."""
    for a0 in range(x2.n):
        if x2.row1[a0] == 0 or x2.row2[a0] == 0:
            raise ValueError("agents must nominate at both levels; apply the rules first")
    if x2.y != 1:
        raise ValueError("the graph reduction applies to target-one instances")
    left = tuple(sorted(set(x2.row1)))
    right = tuple(sorted(set(x2.row2)))
    edges = tuple(
        (x2.row1[a0], x2.row2[a0], x2.agent_ids[a0]) for a0 in range(x2.n)
    )
    return CbivcsInstance(
        left, right, edges, x2.k1, x2.k2, x2.x1, x2.x2, _components(left, right, edges)
    )


def solve_cbivcs(g: CbivcsInstance) -> set[Vertex] | None:
    """Independent vertex cover within budgets and score targets, or None.

    Per component the cover is one full side, so the sweep tracks reachable
    (left-use, right-use, left-degree-sum) triples component by component;
    identical (|left|, |right|, edges) component types are batched, with j of
    a type's components taking the left side.  States over budget are cut
    (budgets only grow); the lexicographically smallest accepting state is
    walked back into the cover.
    """
    if g.k1 < 0 or g.k2 < 0:
        return None
    total = sum(comp.edge_count for comp in g.components)
    type_order: list[tuple[int, int, int]] = []
    type_members: dict[tuple[int, int, int], list[int]] = {}
    for idx, comp in enumerate(g.components):
        key = (len(comp.left), len(comp.right), comp.edge_count)
        if key not in type_members:
            type_members[key] = []
            type_order.append(key)
        type_members[key].append(idx)

    stages: list[dict[tuple[int, int, int], tuple | None]] = [{(0, 0, 0): None}]
    for key in type_order:
        n1, n2, m = key
        count = len(type_members[key])
        nxt: dict[tuple[int, int, int], tuple | None] = {}
        for state in sorted(stages[-1]):
            k1u, k2u, x1s = state
            for j in range(count + 1):
                cand = (k1u + j * n1, k2u + (count - j) * n2, x1s + j * m)
                if cand[0] > g.k1 or cand[1] > g.k2:
                    continue
                if cand not in nxt:
                    nxt[cand] = (state, j)
        if not nxt:
            return None
        stages.append(nxt)

    accepting = sorted(s for s in stages[-1] if s[2] >= g.x1 and total - s[2] >= g.x2)
    if not accepting:
        return None

    cover: set[Vertex] = set()
    state = accepting[0]
    for stage_idx in range(len(type_order), 0, -1):
        prev, j = stages[stage_idx][state]
        members = type_members[type_order[stage_idx - 1]]
        for pos, comp_idx in enumerate(members):
            comp = g.components[comp_idx]
            if pos < j:
                cover.update((1, c) for c in comp.left)
            else:
                cover.update((2, c) for c in comp.right)
        state = prev
    return cover


def solve_qcse_tau2(inst: Instance) -> SolveResult:
    """Exact polynomial solver for equitable two-level instances."""
    if inst.mode != EQUITABLE or inst.tau != 2:
        raise ValueError("expected an equitable two-level instance")
    started = time.perf_counter()
    if inst.y != 1:
        result = trivial_solve(inst)
        if result is None:
            raise AssertionError("y != 1 must hit a trivial case for tau = 2")
        return result

    stats = {"forced": 0, "components": 0, "surviving_agents": 0}
    x2 = apply_x2_rules(x2_from_instance(inst))
    if x2 is None:
        stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
        return SolveResult.no(stats)
    stats["forced"] = len(x2.forced1) + len(x2.forced2)
    stats["surviving_agents"] = x2.n
    graph = build_cbivcs(x2)
    stats["components"] = len(graph.components)
    cover = solve_cbivcs(graph)
    stats["elapsed_micros"] = int((time.perf_counter() - started) * 1e6)
    if cover is None:
        return SolveResult.no(stats)
    first = set(x2.forced1) | {c for side, c in cover if side == 1}
    second = set(x2.forced2) | {c for side, c in cover if side == 2}
    return SolveResult.yes(CommitteeSequence.of([first, second]), stats)
