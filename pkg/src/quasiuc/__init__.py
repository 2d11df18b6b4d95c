"""Exact-arithmetic toolkit for quasi-metric spaces and uniform continuity.

Finite spaces carry rational distance tables; countable spaces from the
catalog in :mod:`quasiuc.zoo` are evaluated lazily and checked up to a
horizon with three-valued verdicts.
"""

from .rational import INF, Bound, fmt, parse_rational
from .space import (
    FiniteSpace,
    ValidationReport,
    ball,
    conjugate,
    is_T1,
    separation_quotient,
    sup_metric,
    triangle_closure,
    validate_axioms,
)
from .topology import (
    Cover,
    accumulation_points,
    closure,
    is_normal,
    isolated_points,
    lebesgue_number,
    min_neighborhood,
    topology_included,
)
from .sequences import (
    Constant,
    FromList,
    Indexed,
    Interleave,
    Outcome,
    Verdict,
    check_cauchy,
    check_convergence,
    check_parallel,
    cluster_points_finite,
)
from .functionals import discreteness_gap, isolation, parse_set, set_distance
from .realfunctions import NonUCWitness, TableFn, uc_modulus_finite, verify_nonuc_witness
from .zoo import truncation, zoo_get, zoo_ids
from .constructions import rho_construct

__version__ = "0.1.0"

__all__ = [
    "INF", "Bound", "fmt", "parse_rational",
    "FiniteSpace", "ValidationReport", "ball", "conjugate", "is_T1", "separation_quotient",
    "sup_metric", "triangle_closure", "validate_axioms",
    "Cover", "accumulation_points", "closure", "is_normal", "isolated_points", "lebesgue_number",
    "min_neighborhood", "topology_included",
    "Constant", "FromList", "Indexed", "Interleave", "Outcome", "Verdict",
    "check_cauchy", "check_convergence", "check_parallel", "cluster_points_finite",
    "discreteness_gap", "isolation", "parse_set", "set_distance",
    "NonUCWitness", "TableFn", "uc_modulus_finite", "verify_nonuc_witness",
    "truncation", "zoo_get", "zoo_ids", "rho_construct",
]
