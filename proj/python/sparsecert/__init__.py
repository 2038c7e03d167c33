"""Greedy sparse recovery (OMP, Subspace Pursuit) and RIP certification."""

from ._sparsecert import (
    SparsecertError,
    __version__,
    cancel,
    check_recovery_guarantee,
    condition_angle,
    effective_ric,
    exact_ric,
    gaussian_matrix,
    omp,
    omp_threshold,
    recover_after_cancellation,
    ric_bound,
    sparse_signal,
    sp_constants,
    subspace_pursuit,
    tight_frame_matrix,
)

__all__ = [
    "SparsecertError",
    "__version__",
    "cancel",
    "check_recovery_guarantee",
    "condition_angle",
    "effective_ric",
    "exact_ric",
    "gaussian_matrix",
    "omp",
    "omp_threshold",
    "recover_after_cancellation",
    "ric_bound",
    "sparse_signal",
    "sp_constants",
    "subspace_pursuit",
    "tight_frame_matrix",
]
