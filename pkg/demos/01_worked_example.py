#!/usr/bin/env python3
"""The weekend-trip election, end to end.

Six agents plan a two-day trip and nominate one activity per day:

          day 1        day 2
  a1      dancing      restaurant
  a2      sightseeing  museum
  a3      dancing      hiking
  a4      sightseeing  theater
  a5      museum       hiking
  a6      restaurant   museum

Two activities run per day.  We first ask for a strict majority satisfied
per day with everyone satisfied at least once (egalitarian), then for a weak
majority per day with everyone satisfied exactly once (equitable).
"""

from ecse import (
    Instance,
    agent_score,
    brute_solve,
    committee_score,
    serialize_instance,
    verify,
)

NAMES = {1: "dancing", 2: "hiking", 3: "museum", 4: "restaurant", 5: "sightseeing", 6: "theater"}
ROWS = (
    (1, 5, 1, 5, 3, 4),  # day 1 nominations, one per agent
    (4, 3, 2, 6, 2, 3),  # day 2
)

egal = Instance("egalitarian", n=6, m=6, tau=2, k=2, x=4, y=1, profile=ROWS)
print(serialize_instance(egal))

# Committee scores count the agents whose nominee got in.
print("day-1 score of {dancing, sightseeing}:", committee_score(egal, 1, {1, 5}))
print("day-2 score of {museum, theater}:   ", committee_score(egal, 2, {3, 6}))

# The egalitarian instance has exactly one solution.
result = brute_solve(egal)
print("\negalitarian verdict:", result.verdict)
for day, committee in enumerate(result.witness, start=1):
    print(f"  day {day}:", ", ".join(NAMES[c] for c in committee))

# Agent 2 is satisfied on both days under that plan; others only once.
print("agent 2 satisfaction:", agent_score(egal, 2, result.witness))

# Asking for *exactly once* each (equitable) makes that plan infeasible ...
equit = Instance("equitable", 6, 6, 2, 2, 4, 1, ROWS)
report = verify(equit, result.witness)
print("\nsame plan, equitable x=4:", "feasible" if report.feasible else f"infeasible ({report.first_violation})")
print("equitable x=4 verdict:", brute_solve(equit).verdict)

# ... but lowering the per-day demand to a weak majority makes it solvable.
relaxed = Instance("equitable", 6, 6, 2, 2, 3, 1, ROWS)
result = brute_solve(relaxed)
print("\nequitable x=3 verdict:", result.verdict)
for day, committee in enumerate(result.witness, start=1):
    print(f"  day {day}:", ", ".join(NAMES[c] for c in committee))
report = verify(relaxed, result.witness)
print("per-agent satisfaction:", report.agent_scores)
