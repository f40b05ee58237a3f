"""Which directions give an additive parallel-axis flow?

Each rule picks a direction from the current body, so the second move is
taken along the rule's axis for the intermediate body. The Galois axis
passes. A fixed generic direction fails, since the second move starts from
a rotated eigenframe. The principal rules are subtler. A shift along the
smallest-moment axis raises the other two moments and keeps that axis
smallest. A shift along the largest-moment axis can lift another moment past
it, so "principal:3" then names a different physical axis.
"""
from galois_inertia import falsify_search, parse_rule

rules = [parse_rule(r) for r in ("galois", "principal:1", "principal:3", "fixed:1:1:1", "fixed:1:0:1")]
report = falsify_search(rules, samples=500, seed=7)

for r in report.rules:
    print(f"{r.rule:50s} max {r.max_residual:.2e}  median {r.median_residual:.2e}")
