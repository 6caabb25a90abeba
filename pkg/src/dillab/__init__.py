"""Certified spectral and dilatation machinery.

Exact rational arithmetic end to end: spectral-radius enclosures for
nonnegative integer matrices, transition-graph path growth, largest roots of
dilatation polynomials with two independent root routes, closed-form bound
families with machine-checked calibration, and Lefschetz numbers of
multitwists. Floating point appears in exactly one place, the winding-number
kernel for local fixed-point indices, and nothing certified depends on it.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .enclosures import (
    LogEnclosure,
    RatInterval,
    decimal_str,
    interval_gap,
    log_enclosure,
    log_interval,
    nth_root_enclosure,
)
from .errors import (
    AlphaOutOfRange,
    DegreePreconditionViolated,
    DillabError,
    DomainError,
    FixedPointOnCircle,
    GenusMismatch,
    IncrementTooLarge,
    NoDiagonalEntry,
    NoSignChange,
    NotIrreducible,
    NotPairwiseOrthogonal,
    RangeError,
    ValidationFailed,
    VertexOutOfRange,
)
from .intmatrix import (
    IntMatrix,
    PFEnclosure,
    is_irreducible,
    is_positive,
    load_matrix,
    mat_power,
    parse_matrix_json,
    parse_matrix_text,
    pf_enclosure,
    render_matrix_json,
    render_matrix_text,
    verify_diagonal_bound,
)
from .transgraph import (
    TransGraph,
    dilatation_limit_check,
    from_matrix,
    path_count,
    path_count_series,
    subdivide_out_edge,
    to_matrix,
)
from .dilpoly import (
    IntPoly,
    RootEnclosure,
    build_T,
    build_Tm,
    char_poly,
    compare_largest_roots,
    count_real_roots_above,
    isolate_largest_real_root,
    largest_root,
    mu_compare,
    verify_lroot,
)
from .families import (
    CoverBoundReport,
    CoverFamilySpec,
    TorusMatrixSpec,
    cover_upper_bound,
    penner_hk_reference_bounds,
    torus_matrix,
    verify_torus_bounds,
)
from .bounds import (
    kappa_upper_constant,
    log_uniform_sample,
    omega_constants,
    sandwich_table,
    theta,
    thm34_lower,
)
from .lefschetz import (
    HomologyClass,
    LinearPlaneMap,
    SectorRotation,
    SympAction,
    linear_index_oracle,
    local_index,
    multitwist_action,
    multitwist_lefschetz,
    symp_form,
    transvection,
)
from .suites import SUITES, run_all, run_suite
