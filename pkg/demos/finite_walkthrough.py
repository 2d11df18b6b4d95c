"""Build a small quasi-metric space by hand and look at its topology.

Run:  python3 demos/finite_walkthrough.py
"""

from fractions import Fraction as F

from quasiuc import (
    Cover,
    FiniteSpace,
    accumulation_points,
    conjugate,
    is_normal,
    isolation,
    lebesgue_number,
    min_neighborhood,
    rho_construct,
    sup_metric,
)
from quasiuc.rational import fmt

h = F(1, 2)
S = FiniteSpace(("a", "b", "c"), [[0, h, 0], [1, 0, 1], [h, h, 0]], "demo")
print("valid:", S.validate().valid)

for x in S.points:
    print(f"U({x}) = {sorted(min_neighborhood(S, x))}   I+({x}) = {isolation(S, x)}")
print("X' =", sorted(accumulation_points(S)))

res = is_normal(S)
print("normal:", res.normal, "witness:", res.witness)

print("conjugate d(a, b) =", fmt(conjugate(S).d("a", "b")))
print("sup metric d(b, c) =", fmt(sup_metric(S).d("b", "c")))

cover = Cover.of([["a", "c"], ["b"]])
print("Lebesgue delta* =", fmt(lebesgue_number(S, cover).delta_star))

rho = rho_construct(S)
print("rho table:")
for x in rho.space.points:
    print("  ", x, [fmt(rho.space.d(x, y)) for y in rho.space.points])
