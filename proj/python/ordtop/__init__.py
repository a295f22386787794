"""Finite topological preordered spaces: property checks, quasi-pseudo-metrics,
cube embeddings, and theorem suites.

Instances are plain dicts: ``{"n": 2, "opens": [[1]], "leq": [[0, 1]]}``.
Opens are completed to the topology they generate and ``leq`` to its
reflexive-transitive closure. Matrices are ``{"n": ..., "m": [[...]]}``
with exact rational entries written as strings like ``"3/4"``.
"""

from ._ordtop import (
    NotAdmissibleError,
    NotAntisymmetricError,
    NotCompletelyRegularError,
    __version__,
    embed,
    is_admissible,
    known_implications,
    known_suites,
    metrize,
    product,
    property_report,
    quniform_check,
    run_suite,
    search,
    separating_family,
    strict_embed,
)

__all__ = [
    "NotAdmissibleError",
    "NotAntisymmetricError",
    "NotCompletelyRegularError",
    "__version__",
    "embed",
    "is_admissible",
    "known_implications",
    "known_suites",
    "metrize",
    "product",
    "property_report",
    "quniform_check",
    "run_suite",
    "search",
    "separating_family",
    "strict_embed",
]
