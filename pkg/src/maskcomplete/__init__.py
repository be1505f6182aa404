"""maskcomplete: robust completion of binary patch masks.

Given a partial or corrupted observation of a square adversarial patch,
compute the minimal mask guaranteed to cover any ground-truth placement
within a bounded relative Hamming distance, in time linear in the image
area.  Ships with a brute-force oracle, seeded corruption models for
guarantee testing, parametric shape generators, PBM mask I/O, and a
scaling benchmark.
"""

from .bench import run_benchmark
from .completion import (
    CandidateField,
    CompletionReport,
    GammaSchedule,
    apply_mask,
    candidate_field,
    complete_fixed_gamma,
    complete_multi_size,
    complete_single_size,
    distance_cutoff,
    final_mask,
    gamma_search,
    normalize_sizes,
)
from .corruption import (
    DEFAULT_SEED,
    CorruptionKind,
    CorruptionModel,
    CorruptionOutcome,
    TrialRecord,
    corrupt,
    corrupt_outcome,
    guarantee_trial,
)
from .masks import (
    PatchCandidate,
    as_mask,
    hamming_to_candidate,
    integral_image,
    intersection,
    popcount,
    union,
    window_sum,
)
from .oracle import oracle_complete_multi, oracle_complete_single, oracle_min_distance
from .pbm import PBMFormatError, decode_pbm, encode_pbm, read_pbm, write_pbm
from .shapes import ShapeKind, generate_shape_mask

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PatchCandidate",
    "as_mask",
    "popcount",
    "union",
    "intersection",
    "integral_image",
    "window_sum",
    "hamming_to_candidate",
    "ShapeKind",
    "generate_shape_mask",
    "GammaSchedule",
    "CandidateField",
    "CompletionReport",
    "normalize_sizes",
    "distance_cutoff",
    "candidate_field",
    "complete_single_size",
    "complete_multi_size",
    "complete_fixed_gamma",
    "gamma_search",
    "final_mask",
    "apply_mask",
    "oracle_complete_single",
    "oracle_complete_multi",
    "oracle_min_distance",
    "DEFAULT_SEED",
    "CorruptionKind",
    "CorruptionModel",
    "CorruptionOutcome",
    "TrialRecord",
    "corrupt",
    "corrupt_outcome",
    "guarantee_trial",
    "PBMFormatError",
    "encode_pbm",
    "decode_pbm",
    "read_pbm",
    "write_pbm",
    "run_benchmark",
]
