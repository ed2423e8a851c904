"""Compact Hilbert transform, Dirichlet and remainder operators on the circle."""
from .catalog import CatalogEntry, catalog_entries, get_entry, tail_sum_oracle
from .dirichlet import (
    ConvergenceReport,
    conjugate_dirichlet_kernel,
    convergence_sweep,
    dirichlet_kernel,
    kernel_dr_double,
    kernel_dr_reduced,
    partial_sum_dirichlet,
    remainder_operator,
    remainder_via_conjugate,
)
from .errors import (
    AliasingError,
    CompactHilbertError,
    EvaluationError,
    GridSizeError,
    PreconditionError,
    QuadratureError,
    SingularityError,
    TruncationError,
)
from .fourier import (
    FourierCoefficients,
    InnerAnalyticPoint,
    TaylorCoefficients,
    compute_coefficients,
    conjugate_coefficients,
    eval_partial_sum_disk,
    partial_sum_series,
    taylor_from_fourier,
)
from .grid import PeriodicGrid, SampledFunction, make_grid, project_zero_average, sample
from .hilbert import (
    OFFSET_GRID,
    SUBTRACTION,
    PvStrategy,
    hilbert_function,
    hilbert_pv,
    hilbert_spectral,
    inverse_hilbert_pv,
    kernel_hc,
)

__version__ = "0.1.0"
