"""specbound: gap-aware spectral perturbation bounds, certified.

Given a Hermitian matrix split into two diagonal blocks plus coupling,
this package computes how far the assembled matrix's eigenvalues can sit
from the block eigenvalues — via the classical coupling-norm and
gap-quadratic bounds and a sharper gap-aware bound that dominates both —
and the analogous machinery for singular values of 2x2-blocked
rectangular matrices.  The same bound, fed with residual norms, turns
into a-posteriori certificates for Ritz values of approximate invariant
subspaces (e.g. from the bundled Lanczos iteration).  Everything
spectral runs on a self-contained cyclic Jacobi kernel (compiled, with a
pure-Python fallback) so the whole chain can be validated against
closed forms and brute-force oracles.
"""

from ._kernel import active_kernel, available_kernels, set_kernel
from ._version import __version__
from .bounds import (
    BlockHermitian,
    EigenBoundReport,
    GapProfile,
    SingularBoundReport,
    eigen_bound_report,
    exact_2x2,
    main_bound,
    merge_spectra,
    per_index_gaps,
    quadratic_bound,
    shifted_schur_complement,
    spectral_gap,
    split_hermitian,
    sv_bound_report,
    sv_degenerate_bound,
    weyl_bound,
)
from .certification import (
    CertificationError,
    CertificationReport,
    SubspaceApproximation,
    certify,
    column_residuals,
    coupling_block,
    rayleigh_quotient,
    residual_matrix,
    rotate_to_diagonal,
    struck_gap,
)
from .ensembles import (
    CLUSTERED,
    ENSEMBLES,
    GAUSSIAN,
    SHARED,
    GeneratorSpec,
    complex_gaussian,
    gaussian_hermitian,
    generate,
    mix_seed,
    random_unitary,
    rng_from_seed,
)
from .fuzz import (
    FuzzResult,
    approximate_subspace_instance,
    random_subspace_instance,
    run_fuzz,
)
from .krylov import LanczosState, lanczos, ritz_subspace
from .linalg import (
    BLOCK1,
    BLOCK2,
    JacobiConvergenceError,
    OrthonormalityError,
    SingularShiftError,
    Spectrum,
    check_unitary,
    frobenius,
    hermitian_eigen,
    hermitianize,
    jordan_wielandt,
    orthonormal_completion,
    orthonormalize,
    spectral_norm,
    strike,
    svd,
)
from .mmio import MatrixMarketError, read_matrix_market, write_matrix_market
from .report import (
    SCHEMA_VERSION,
    document,
    from_json,
    render,
    render_csv,
    render_json,
    render_table,
)

__all__ = [
    "__version__",
    # kernel selection
    "active_kernel", "available_kernels", "set_kernel",
    # linear algebra core
    "BLOCK1", "BLOCK2", "JacobiConvergenceError", "OrthonormalityError",
    "SingularShiftError", "Spectrum", "check_unitary", "frobenius",
    "hermitian_eigen", "hermitianize", "jordan_wielandt",
    "orthonormal_completion", "orthonormalize", "spectral_norm", "strike",
    "svd",
    # bounds
    "BlockHermitian", "EigenBoundReport", "GapProfile",
    "SingularBoundReport", "eigen_bound_report", "exact_2x2", "main_bound",
    "merge_spectra", "per_index_gaps", "quadratic_bound",
    "shifted_schur_complement", "spectral_gap", "split_hermitian",
    "sv_bound_report", "sv_degenerate_bound", "weyl_bound",
    # certification
    "CertificationError", "CertificationReport", "SubspaceApproximation",
    "certify", "column_residuals", "coupling_block", "rayleigh_quotient",
    "residual_matrix", "rotate_to_diagonal", "struck_gap",
    # Lanczos
    "LanczosState", "lanczos", "ritz_subspace",
    # ensembles and fuzzing
    "CLUSTERED", "ENSEMBLES", "GAUSSIAN", "SHARED", "GeneratorSpec",
    "complex_gaussian", "gaussian_hermitian", "generate", "mix_seed",
    "random_unitary", "rng_from_seed",
    "FuzzResult", "approximate_subspace_instance",
    "random_subspace_instance", "run_fuzz",
    # I/O and reports
    "MatrixMarketError", "read_matrix_market", "write_matrix_market",
    "SCHEMA_VERSION", "document", "from_json", "render", "render_csv",
    "render_json", "render_table",
]
