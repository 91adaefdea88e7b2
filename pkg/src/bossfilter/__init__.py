"""Syllable-count fingerprints for near-duplicate subject-line spam filtering."""

from .bench import BenchReport, generate_subjects, run_bench
from .classifier import (
    DEFAULT_LEARNING_RATE,
    DEFAULT_WIDTH,
    PerceptronModel,
    Prediction,
    make_verdicts,
)
from .hashstore import (
    DEFAULT_CAPACITY,
    MatchResult,
    StoreConfig,
    StoreFormatError,
    SubjectEntry,
    SubjectStore,
)
from .labels import Label
from .pipeline import (
    Decision,
    ScanStats,
    format_summary,
    process_subject,
    scan_corpus,
    split_label_column,
)
from .proximity import (
    DEFAULT_PARAMS,
    DEFAULT_T_COS,
    DEFAULT_T_EUC,
    DistancePair,
    ProximityParams,
    cosine,
    distances,
    euclidean,
    proximity_flag,
)
from .server import FilterServer, FilterService, serve
from .syllabifier import (
    MAX_INPUT_BYTES,
    SERIAL_MAX,
    VECTOR_LEN,
    MalformedHashError,
    build_hash,
    hash_text,
    parse_hash,
    serialize_hash,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "DEFAULT_CAPACITY",
    "DEFAULT_LEARNING_RATE",
    "DEFAULT_PARAMS",
    "DEFAULT_T_COS",
    "DEFAULT_T_EUC",
    "DEFAULT_WIDTH",
    "Decision",
    "DistancePair",
    "FilterServer",
    "FilterService",
    "Label",
    "MAX_INPUT_BYTES",
    "MalformedHashError",
    "MatchResult",
    "PerceptronModel",
    "Prediction",
    "ProximityParams",
    "SERIAL_MAX",
    "ScanStats",
    "StoreConfig",
    "StoreFormatError",
    "SubjectEntry",
    "SubjectStore",
    "VECTOR_LEN",
    "build_hash",
    "cosine",
    "distances",
    "euclidean",
    "format_summary",
    "generate_subjects",
    "hash_text",
    "make_verdicts",
    "parse_hash",
    "process_subject",
    "proximity_flag",
    "run_bench",
    "scan_corpus",
    "serialize_hash",
    "serve",
    "split_label_column",
    "__version__",
]
