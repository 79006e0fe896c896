"""Fitting decompositions of operators and of bimodules."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bimodule import Bimodule
from .exactla import ExactMatrix, Subspace


class NotLeftNilpotent(ValueError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"left multiplication by {list(element)} is not nilpotent")


@dataclass(frozen=True)
class FittingPair:
    zero_part: Subspace
    one_part: Subspace

    def is_direct_sum(self) -> bool:
        z, o = self.zero_part, self.one_part
        return (z & o).is_zero() and z.dim + o.dim == z.ambient_dim


def stable_power(t: ExactMatrix) -> int:
    """Smallest ``r`` with ``Ker t^r = Ker t^(r+1)`` (equivalently for images)."""
    r = 0
    power = ExactMatrix.identity(t.field, t.nrows)
    rank = t.nrows
    while True:
        power = power @ t
        new_rank = power.rank()
        if new_rank == rank:
            return r
        rank = new_rank
        r += 1


def fitting_operator(t: ExactMatrix) -> FittingPair:
    """Stabilized kernel and image of a square matrix."""
    if not t.is_square():
        raise ValueError("Fitting decomposition needs a square matrix")
    r = max(stable_power(t), 1) if t.nrows else 0
    tr = t**r
    return FittingPair(tr.kernel(), tr.image())


def fitting_set(m: Bimodule, s) -> FittingPair:
    """``(intersection of M_0(lam_s), sum of M_1(lam_s))`` over the elements ``s``.

    ``s`` is a subspace of the algebra (its echelon basis is used) or a list
    of elements.  Each element must have nilpotent left multiplication on
    the algebra.
    """
    a = m.algebra
    elems = s.basis if isinstance(s, Subspace) else [a.element(v) for v in s]
    for x in elems:
        if not a.left_mult(x).is_nilpotent():
            raise NotLeftNilpotent(x)
    zero = Subspace.full(m.field, m.dim)
    one = Subspace.zero(m.field, m.dim)
    for x in elems:
        pair = fitting_operator(m.left_action(x))
        zero = zero & pair.zero_part
        one = one + pair.one_part
    return FittingPair(zero, one)


@dataclass(frozen=True)
class FittingCheck:
    zero_is_sub: bool
    left_nilpotent_on_zero: bool
    right_nilpotent_on_zero: bool
    one_is_sub: bool
    direct_sum: bool

    @property
    def ok(self) -> bool:
        return all((self.zero_is_sub, self.left_nilpotent_on_zero, self.right_nilpotent_on_zero,
                    self.one_is_sub, self.direct_sum))


def check_fitting_theorem(m: Bimodule, s) -> FittingCheck:
    """Evaluate the four conclusions of the Fitting lemma for bimodules."""
    a = m.algebra
    pair = fitting_set(m, s)
    elems = s.basis if isinstance(s, Subspace) else [a.element(v) for v in s]
    z = pair.zero_part
    zero_sub = m.is_sub_bimodule(z)
    left_nil = right_nil = True
    if zero_sub and z.dim:
        sub = m.submodule(z)
        k = z.dim + 1
        for x in elems:
            left_nil &= (sub.left_action(x) ** k).is_zero()
            right_nil &= (sub.right_action(x) ** k).is_zero()
    return FittingCheck(
        zero_is_sub=zero_sub,
        left_nilpotent_on_zero=left_nil,
        right_nilpotent_on_zero=right_nil,
        one_is_sub=m.is_sub_bimodule(pair.one_part),
        direct_sum=pair.is_direct_sum(),
    )


@dataclass(frozen=True)
class IdentityCounterexample:
    identity: str
    y_index: int
    n: int


def verify_nilpotency_identities(m: Bimodule, x, n: int):
    """Check the four binomial identities relating powers of ``lam_x`` to the actions.

    For every basis element ``y`` and exponent ``n``::

        lam_x^n lam_y = sum_k C(n,k) lam_{L_x^k y} lam_x^(n-k)
        lam_x^n rho_y = sum_k C(n,k) rho_{L_x^k y} lam_x^(n-k)
        lam_y lam_x^n = sum_k (-1)^(n-k) C(n,k) lam_x^k lam_{L_x^(n-k) y}
        rho_y lam_x^n = sum_k (-1)^(n-k) C(n,k) lam_x^k rho_{L_x^(n-k) y}

    Returns ``None`` when all hold, else the first counterexample.
    """
    if n < 1:
        raise ValueError("exponent must be positive")
    a = m.algebra
    lx = m.left_action(x)
    big_lx = a.left_mult(x)
    lpow = [ExactMatrix.identity(m.field, m.dim)]
    for _ in range(n):
        lpow.append(lpow[-1] @ lx)
    for j in range(a.dim):
        iterates = [a.basis_vector(j)]
        for _ in range(n):
            iterates.append(tuple(big_lx.apply(list(iterates[-1]))))
        ly, ry = m.left_action(j), m.right_action(j)
        sums = {name: ExactMatrix.zeros(m.field, m.dim, m.dim) for name in ("ll", "lr", "rl", "rr")}
        for k in range(n + 1):
            c = comb(n, k)
            sgn = c if (n - k) % 2 == 0 else -c
            sums["ll"] = sums["ll"] + (m.left_action(iterates[k]) @ lpow[n - k]).scale(c)
            sums["lr"] = sums["lr"] + (m.right_action(iterates[k]) @ lpow[n - k]).scale(c)
            sums["rl"] = sums["rl"] + (lpow[k] @ m.left_action(iterates[n - k])).scale(sgn)
            sums["rr"] = sums["rr"] + (lpow[k] @ m.right_action(iterates[n - k])).scale(sgn)
        if lpow[n] @ ly != sums["ll"]:
            return IdentityCounterexample("left-left", j, n)
        if lpow[n] @ ry != sums["lr"]:
            return IdentityCounterexample("left-right", j, n)
        if ly @ lpow[n] != sums["rl"]:
            return IdentityCounterexample("right-left", j, n)
        if ry @ lpow[n] != sums["rr"]:
            return IdentityCounterexample("right-right", j, n)
    return None
