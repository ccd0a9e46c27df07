"""Exact enumeration of open square-lattice walks by algebraic area.

Counts walks of fixed length joint with twice the algebraic area swept
after closing the endpoint back to the origin, through three independent
routes: composition-indexed generating-function sums, exhaustive/dynamic
oracles, and traces over a finite reflection-extended quantum torus
representation evaluated at roots of unity.
"""

__version__ = "0.1.0"

from .compositions import (
    binomial,
    cluster_coeff,
    cluster_coeff_alt,
    cluster_coeff_bar,
    compositions,
)
from .enumeration import (
    count_open_even,
    count_open_odd,
    gf_open,
    gf_open_even,
    gf_open_odd,
)
from .laurent import ONE, ZERO, AreaPolynomial, monomial, root_of_unity
from .oracle import (
    DEFAULT_BRUTE_CAP,
    DEFAULT_DP_CAP,
    EndpointHistogram,
    brute_force,
    dp_enumerate,
    radial_double_area,
    walk_positions,
)
from .restricted import (
    count_diagonal,
    gf_diagonal,
    gf_paradiagonal_even,
    gf_paradiagonal_odd,
    sum_over_lines_check,
)
from .torus import (
    TorusRepresentation,
    build_rep_2q,
    build_rep_even_sector,
    build_rep_q,
    hamiltonian,
    matrix_element_paradiagonal,
    split_pm,
    trace_gf,
    verify_even_q_vanishing,
)
from .verification import CheckResult, run_suites

__all__ = [
    "AreaPolynomial",
    "CheckResult",
    "DEFAULT_BRUTE_CAP",
    "DEFAULT_DP_CAP",
    "EndpointHistogram",
    "ONE",
    "TorusRepresentation",
    "ZERO",
    "binomial",
    "brute_force",
    "build_rep_2q",
    "build_rep_even_sector",
    "build_rep_q",
    "cluster_coeff",
    "cluster_coeff_alt",
    "cluster_coeff_bar",
    "compositions",
    "count_diagonal",
    "count_open_even",
    "count_open_odd",
    "dp_enumerate",
    "gf_diagonal",
    "gf_open",
    "gf_open_even",
    "gf_open_odd",
    "gf_paradiagonal_even",
    "gf_paradiagonal_odd",
    "hamiltonian",
    "matrix_element_paradiagonal",
    "monomial",
    "radial_double_area",
    "root_of_unity",
    "run_suites",
    "split_pm",
    "sum_over_lines_check",
    "trace_gf",
    "verify_even_q_vanishing",
    "walk_positions",
]
