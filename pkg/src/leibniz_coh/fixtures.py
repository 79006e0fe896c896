"""Built-in algebras and bimodules used by the test-suite and the CLI."""
from __future__ import annotations

from .algebra import LeibnizAlgebra, abelian, hemisemidirect_2d, nilpotent_2d, one_dim_lie
from .bimodule import Bimodule, antisymmetric_from_left, symmetric_from_left
from .exactla import QQ, ExactMatrix, Field

SHIFT_3 = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
CORNER_3 = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
NILPOTENT_2 = [[0, 1], [0, 0]]
IDENTITY_2 = [[1, 0], [0, 1]]


def commuting_pair_bimodule(field: Field = QQ) -> Bimodule:
    """Three-dimensional bimodule over ``F e`` with left action the shift
    matrix and right action the corner matrix.

    The invariants and the anti-symmetric kernel agree here even though a
    trivial sub-bimodule exists.
    """
    alg = one_dim_lie(field)
    return Bimodule(alg, 3, [SHIFT_3], [CORNER_3], name="A-mod")


def jordan_identity_module(field: Field = QQ, symmetric: bool = True) -> Bimodule:
    """``F^2`` over the abelian Lie algebra spanned by a nilpotent Jordan block
    ``E`` and the identity ``I`` (basis order ``E, I``)."""
    alg = abelian(field, 2)
    lam = [ExactMatrix.from_dense(field, NILPOTENT_2), ExactMatrix.from_dense(field, IDENTITY_2)]
    if symmetric:
        return symmetric_from_left(alg, lam)
    return antisymmetric_from_left(alg, lam)


EXAMPLES = {
    "A-alg": lambda field: one_dim_lie(field),
    "one-dim": lambda field: one_dim_lie(field),
    "N": lambda field: nilpotent_2d(field),
    "D": lambda field: hemisemidirect_2d(field),
}

MODULE_EXAMPLES = {
    "A-mod": commuting_pair_bimodule,
    "B": jordan_identity_module,
}


def example_algebra(name: str, field: Field = QQ) -> LeibnizAlgebra:
    if name in EXAMPLES:
        return EXAMPLES[name](field)
    if name in MODULE_EXAMPLES:
        return MODULE_EXAMPLES[name](field).algebra
    raise KeyError(name)


def example_bimodule(name: str, field: Field = QQ):
    return MODULE_EXAMPLES[name](field) if name in MODULE_EXAMPLES else None
