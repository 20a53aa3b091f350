"""Levelled decision diagrams enumerating five unlabeled graph classes.

Each class module contributes string machines whose accepted languages are
in bijection with (or, where documented, cover) the unlabeled graphs of the
class; bdd turns any machine into a counted, sampleable, enumerable
diagram; oracle provides brute-force ground truth; cli is the command-line
front end.
"""

from .bdd import (
    BuildStats,
    LevelledBdd,
    StateMachine,
    build,
    count,
    enumerate_strings,
    export_dot,
    sample,
    stats,
)
from .bitstring import inverse_alternate
from .classes import (
    BIPARTITE_PERMUTATION,
    CHAIN,
    CLASS_IDS,
    COCHAIN,
    PROPER_INTERVAL,
    THRESHOLD,
    EnumerationSpec,
    decode,
    encoded_length,
    machine,
)
from .errors import (
    EmptyLanguageError,
    GraphDDError,
    InconsistencyError,
    InvalidArgumentError,
    ResourceLimitError,
    UndefinedBicliqueError,
)
from .graphs import Graph

__version__ = "1.0.0"

__all__ = [
    "BIPARTITE_PERMUTATION",
    "BuildStats",
    "CHAIN",
    "CLASS_IDS",
    "COCHAIN",
    "EmptyLanguageError",
    "EnumerationSpec",
    "Graph",
    "GraphDDError",
    "InconsistencyError",
    "InvalidArgumentError",
    "LevelledBdd",
    "PROPER_INTERVAL",
    "ResourceLimitError",
    "StateMachine",
    "THRESHOLD",
    "UndefinedBicliqueError",
    "build",
    "count",
    "decode",
    "encoded_length",
    "enumerate_strings",
    "export_dot",
    "inverse_alternate",
    "machine",
    "sample",
    "stats",
]
