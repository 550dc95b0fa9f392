"""Coxeter tournaments: random tournaments on signed graphs of types B, C and D."""
from .birkhoff import (
    SignedDecomposition,
    SignedPermutation,
    birkhoff_decompose,
    mixture_tournament,
    strassen_construct,
    vertex_tournament,
)
from .btfit import bt_fit, bt_forward, bt_jacobian
from .errors import (
    BoundaryError,
    ComplexityError,
    ConvergenceError,
    CoxtourError,
    InfeasibleError,
    PreconditionError,
    UnsupportedTypeError,
)
from .hh import hh_construct
from .landau import random_only_points, realize_deterministic
from .roots import AdmissibleSubset, RootType
from .score import (
    Tournament,
    is_mean_score,
    is_mean_score_complete,
    mean_score,
    violated_subset,
)
from .sgraph import Edge, SignedGraph, complete_graph, is_balanced

__version__ = "0.1.0"
