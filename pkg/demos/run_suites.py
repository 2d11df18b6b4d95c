"""Run the randomized suites at a small size and print the text report.

Run:  python3 demos/run_suites.py [seed]
"""

import sys

from quasiuc.harness import merge_reports, run_finite_suite, run_lebesgue_exactness, run_oracle_suite, run_rho_suite

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
rep = merge_reports(
    "demo",
    [
        run_finite_suite(seed=seed, trials=50, max_size=6),
        run_oracle_suite(seed=seed, normal_trials=50, cluster_trials=50),
        run_lebesgue_exactness(seed=seed, trials=50),
        run_rho_suite(seed=seed, t1_trials=50, non_t1_trials=50),
    ],
)
print(rep.text())
sys.exit(0 if rep.ok else 1)
