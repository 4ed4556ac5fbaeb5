"""Perfect crystals B^{1,L} for D_4^(3) and the Demazure crystals B_{w^(k)}(l Lambda_2)."""

from .cartan import (
    AffineWeight, DELTA, LAMBDA, SIMPLE_ROOTS, apply_word, bruhat_increases, level, pair,
    reflect, root_coefficients, wk_word,
)
from .crystal import (
    BudgetExceeded, CrystalGraph, TensorCrystal, axiom_check, build_graph, export_dot,
    graphs_equal, induced_graph, is_connected,
)
from .demazure import ba_j, chain, predicate_ba, verify_theorem
from .paths import LambdaPath, PathCrystal, demazure_paths, ground_state, path_e, path_f, pk_set
from .perfect import PCElement, PerfectCrystal, enumerate_b1l, minimal_elements, perfect_axioms
from .report import Report

__version__ = "0.1.0"
