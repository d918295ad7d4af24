"""The open osp(1|2) sum rule as a laboratory.

No general 6-j^S formula is known.  Here a synthetic table that satisfies the
pseudo-orthogonality relation is plugged in.  The residual of the sum rule is
then computed in two independent ways, and the contraction-invariance
property is checked.

Run with:  python demos/sum_rule_lab.py
"""

import json

from supersum.lab import (
    contraction_invariance,
    emit_identification_system,
    orthogonality_check,
    residual_delta_sum_rule,
)
from supersum.providers import SyntheticProvider

provider = SyntheticProvider(seed=42)
family = (2, 1, 2, 1)           # twice-values of (a, b, d, e)

print("orthogonality:", orthogonality_check(provider, family).status)

res = residual_delta_sum_rule(2, 1, 3, 2, 1, provider)
print("residual on u^(N-m) v^m:", res.rendered(), f"(basis degree {res.basis_degree}, {res.branch})")

system = emit_identification_system(2, 1, 2, 1, 3)
print("same residual through the linear system:", [r.render() for r in system.residuals(provider)])
print(json.dumps(system.to_dict(), indent=2))

print("contraction invariance:", contraction_invariance(*family, provider).status)

# Degenerate chain c = a + b, e = c + d: only f = b + d contributes and the
# residual vanishes exactly when that entry equals (-1)^(2e).
for seed in range(4):
    p = SyntheticProvider(seed)
    entry = p.value(1, 1, 2, 1, 3, 2)
    print(f"seed {seed}: entry {entry.render():>3}, residual zero: {residual_delta_sum_rule(1, 1, 2, 1, 3, p).is_zero()}")
