#!/usr/bin/env python3
"""Shrinking egalitarian instances before solving.

An agent is *critical* when its nominee joins a scoring committee in at
most n*y levels; only critical agents can be bottlenecks.  Two rules follow:
if nobody is critical the instance is a guaranteed yes, and a level useless
to every critical agent can be dropped.  Exhaustively applied, at most
n^2 * y levels survive.
"""

from ecse import compute_criticality, kernelize_ny, random_instance, solve_dp, verify
from ecse.model import Instance

# an instance with one scarce agent: agent 4 nominates candidate 3, which no
# scoring committee can afford in most levels
rows = [(1, 1, 2, 3)] * 9 + [(3, 3, 3, 3)]
inst = Instance("egalitarian", 4, 3, 10, 1, 2, 1, tuple(rows))

table = compute_criticality(inst)
for a0 in range(inst.n):
    flag = "critical" if table.critical[a0] else "non-critical"
    print(f"agent {a0 + 1}: usable levels {table.z_sets[a0]} -> {flag}")

result = kernelize_ny(inst)
if result.resolved:
    print("\nresolved outright:", result.verdict)
else:
    kernel = result.instance
    print(f"\nreduced from tau={inst.tau} to tau={kernel.tau} "
          f"(bound n^2*y = {inst.n ** 2 * inst.y}); deleted levels {result.deleted_levels}")
    print("kernel verdict:", solve_dp(kernel).verdict, "| direct verdict:", solve_dp(inst).verdict)

# the rules never change the answer, and resolved-yes outcomes carry a witness
hits = {"resolved": 0, "reduced": 0}
for seed in range(300):
    inst = random_instance(seed, n=3, m=3, tau=1 + seed % 25, k=1, x=seed % 3, y=seed % 2,
                           mode="egalitarian", empty_prob=0.25)
    outcome = kernelize_ny(inst)
    direct = solve_dp(inst).verdict
    if outcome.resolved:
        hits["resolved"] += 1
        assert outcome.verdict == direct
        if outcome.witness is not None:
            assert verify(inst, outcome.witness).feasible
    else:
        hits["reduced"] += 1
        assert outcome.instance.tau <= inst.n ** 2 * inst.y
        assert solve_dp(outcome.instance).verdict == direct
print("\n300 random instances:", hits, "- all verdicts preserved")
