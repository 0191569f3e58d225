"""Conformal levels and finite decompositions for maximal equal-rank subalgebras of simple Lie algebras."""

from .conformal import (
    central_charge,
    chain_conformal,
    conformal_levels,
    deligne_cubic_roots,
    solve_levels,
    verify_numcheck,
)
from .decomp import BranchingTable, GradedBranching, finite_decomposition, graded_decomposition
from .findec import FinitenessVerdict, Justification, Verdict, classify
from .repthy import freudenthal, tensor_decompose, weyl_dim
from .rootsys import LieType, build_root_datum
from .subalg import EqualRankSubalgebra, build_subalgebra, enumerate_maximal, find_subalgebra

__version__ = "0.1.0"

__all__ = [
    "BranchingTable",
    "EqualRankSubalgebra",
    "FinitenessVerdict",
    "GradedBranching",
    "Justification",
    "LieType",
    "Verdict",
    "build_root_datum",
    "build_subalgebra",
    "central_charge",
    "chain_conformal",
    "classify",
    "conformal_levels",
    "deligne_cubic_roots",
    "enumerate_maximal",
    "finite_decomposition",
    "find_subalgebra",
    "freudenthal",
    "graded_decomposition",
    "solve_levels",
    "tensor_decompose",
    "verify_numcheck",
    "weyl_dim",
]
