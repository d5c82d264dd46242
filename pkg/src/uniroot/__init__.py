"""Unique roots of reduction systems.

Finite reduction graphs with complexity functions and edge equivalence,
root computation, a handle-graph cutting calculus and orbifold colour rules.
"""

from .colors import pair_admissible, profile_admissible, triple_admissible
from .errors import (
    BoundExceeded,
    CycleDetected,
    CyclicSystem,
    DanglingEndpoint,
    InvalidCut,
    MissingVertex,
    MultipleRoots,
    NotGreen,
    ParseError,
    ProfileTooLarge,
    SelfLoop,
    SourceMismatch,
    UnknownVertex,
)
from .generate import gen_factor_system, gen_random_dag
from .handles import (
    CutMove,
    HandleGraph,
    admits_cutting,
    canonical_form,
    cut,
    edge_classes_at,
    full_cut,
    to_reduction_system,
)
from .roots import (
    RootReport,
    RootSet,
    check_EE,
    edge_equivalence,
    elementary_equivalent,
    find_counterexample,
    roots,
    unique_root,
    verify_theorem,
)
from .system import (
    Edge,
    ReductionSystem,
    build_system,
    check_complexity,
    successors,
    synthesize_complexity,
)

__version__ = "0.1.0"
