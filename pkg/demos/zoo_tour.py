"""Tour of the countable catalog: sequences, functionals and a non-UC witness.

Run:  python3 demos/zoo_tour.py
"""

from fractions import Fraction as F

from quasiuc import Indexed, check_convergence, is_T1, isolation, truncation, verify_nonuc_witness, zoo_get, zoo_ids
from pathlib import Path

from quasiuc.io import load_witness

print("catalog:", ", ".join(zoo_ids()))

sorg = zoo_get("sorgenfrey")
recip = Indexed("reciprocals")
# 1/n approaches 0 from above: forward yes, backward no
print("forward :", check_convergence(sorg, recip, 0, "forward", horizon=2000))
# sampling alone cannot refute convergence, so this stays UNKNOWN;
# the S2 claim attaches a lower-bound certificate and gets FAILS
print("backward:", check_convergence(sorg, recip, 0, "backward", horizon=2000))

T = truncation(sorg, 8)
print("first 8 points:", T.points, "T1:", is_T1(T))

iso = zoo_get("isolation-counterexample")
# the bound shrinks as the horizon grows
for H in (100, 1000, 10000):
    print(f"I+(3), H={H}:", isolation(iso, F(3), horizon=H))

wfile = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "recip-conj-sorgenfrey.witness.json"
if wfile.exists():
    print("witness:", verify_nonuc_witness(load_witness(wfile), horizon=2000))
