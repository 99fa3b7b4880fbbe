"""pcmkit: inconsistency indices for pairwise comparison matrices.

The package has three layers: matrix construction and transformations
(:mod:`pcmkit.pcm`), nine inconsistency indices with a shared registry
(:mod:`pcmkit.indices`), and an empirical harness that hunts for
counterexamples to six published properties of those indices
(:mod:`pcmkit.harness`). File formats, reports, figures, and the CLI sit
on top.
"""

__version__ = "0.1.0"

from .errors import (
    ConfigError,
    DiagonalEntryError,
    InconsistentBaseError,
    MatrixParseError,
    NonPositiveEntryError,
    NonSquareError,
    OrderMismatchError,
    OrderTooSmallError,
    PcmError,
    ReciprocityViolationError,
    UnitEntryError,
    ZeroDenominatorError,
)
from .pcm import (
    CONSISTENCY_REL_TOL,
    MIN_ORDER,
    RECIPROCITY_REL_TOL,
    Pcm,
    consistent_from_chain,
    consistent_from_weights,
    intensify,
    is_consistent,
    permute,
    perturb_entry,
    transpose,
)
from .indices import (
    AmbiguityMatrix,
    IndexDescriptor,
    IndexId,
    Orientation,
    ambiguity_sets,
    consistent_approximation,
    descriptor,
    evaluate,
    index_ai,
    index_ai_star,
    index_cci,
    index_ci_h,
    index_i_not6,
    index_i_star,
    index_k,
    index_re,
    index_re_star,
    registry,
)
from .generators import (
    derive_seed,
    random_consistent,
    random_pcm,
    random_permutation,
    random_weights,
    rng_from_seed,
)
from .harness import (
    AxiomReport,
    CurveSeries,
    PropertyVerdict,
    SuiteConfig,
    VerdictStatus,
    Witness,
    check_p1,
    check_p2,
    check_p3,
    check_p4,
    check_p5,
    check_p6,
    curve_intensification,
    curve_perturbation,
    recheck_witness,
    run_suite,
)
from .matrixfile import load_matrix, parse_matrix, render_matrix, save_matrix
from .report import (
    doc_to_report,
    dumps_doc,
    load_doc,
    render_table,
    report_to_doc,
    write_doc,
)
from .plotting import save_curve_figure, save_verdict_figure

__all__ = [name for name in dir() if not name.startswith("_")]
