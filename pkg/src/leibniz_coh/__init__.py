"""Exact cohomology of left Leibniz algebras with bimodule coefficients."""
from .exactla import GF, QQ, ExactMatrix, PrimeField, Subspace
from .algebra import LeibnizAlgebra, LeibnizIdentityError, Supersolvability
from .bimodule import Bimodule, BimoduleAxiomError, adjoint, trivial
from .cohomology import LeibnizComplex, ResourceGuardError, hl, hl_dims
from .fitting import fitting_set
from .theorems import TheoremReport, Verdict, check

__all__ = [
    "GF", "QQ", "ExactMatrix", "PrimeField", "Subspace",
    "LeibnizAlgebra", "LeibnizIdentityError", "Supersolvability",
    "Bimodule", "BimoduleAxiomError", "adjoint", "trivial",
    "LeibnizComplex", "ResourceGuardError", "hl", "hl_dims",
    "fitting_set", "TheoremReport", "Verdict", "check",
]
