"""Seeded random algebras and bimodules over prime fields."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .algebra import (
    LeibnizAlgebra,
    LeibnizIdentityError,
    abelian,
    direct_sum,
    hemi_semidirect,
    one_dim_lie,
    semidirect_lie,
    sl2,
)
from .bimodule import Bimodule, BimoduleAxiomError, direct_sum as module_sum
from .exactla import GF, ExactMatrix, Field, PrimeField, Subspace


class AlgebraClass(enum.Enum):
    NILPOTENT = "Nilpotent"
    SOLVABLE = "Solvable"
    SUPERSOLVABLE = "Supersolvable"
    ANY = "Any"


class GenerationFailed(RuntimeError):
    def __init__(self, what: str, seed):
        self.seed = seed
        super().__init__(f"could not generate {what} (seed {seed})")


@dataclass(frozen=True)
class RandomAlgebraSpec:
    field: Field
    dim: int
    kind: AlgebraClass = AlgebraClass.ANY
    seed: int = 0
    lie: bool = False


ATTEMPTS = 400


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _rand_scalar(rng: random.Random, field: PrimeField, density: float):
    if rng.random() >= density:
        return 0
    return rng.randrange(1, field.p)


def random_matrix(rng: random.Random, field: PrimeField, n: int, m: int | None = None,
                  density: float = 0.6) -> ExactMatrix:
    m = n if m is None else m
    data = [[_rand_scalar(rng, field, density) for _ in range(m)] for _ in range(n)]
    return ExactMatrix.from_dense(field, data, ncols=m) if n else ExactMatrix.zeros(field, 0, m)


def random_invertible(rng: random.Random, field: PrimeField, n: int) -> ExactMatrix:
    while True:
        m = random_matrix(rng, field, n, density=0.7)
        if m.is_invertible():
            return m


def _triangular_algebra(rng, field, n, strict: bool, lie: bool, density: float):
    prods = {}
    for i in range(n):
        for j in range(n):
            if lie and j < i:
                continue
            if lie and i == j:
                continue
            lo = max(i, j) + 1 if strict else max(i, j)
            vec = [0] * n
            for k in range(lo, n):
                vec[k] = _rand_scalar(rng, field, density)
            prods[(i, j)] = vec
            if lie:
                prods[(j, i)] = [(-v) % field.p for v in vec]
    return prods


def _try(field, n, prods):
    try:
        return LeibnizAlgebra(field, n, prods)
    except LeibnizIdentityError:
        return None


def _disguise(rng, alg: LeibnizAlgebra) -> LeibnizAlgebra:
    if alg.dim and rng.random() < 0.5:
        p = random_invertible(rng, alg.field, alg.dim)
        return alg.change_basis([p.column(j) for j in range(alg.dim)])
    return alg


def _random_triangular(rng, field, n, strict, lie):
    for attempt in range(ATTEMPTS):
        density = max(0.05, 0.7 - attempt * 0.02)
        alg = _try(field, n, _triangular_algebra(rng, field, n, strict, lie, density))
        if alg is not None:
            return alg
    return abelian(field, n)


def random_nilpotent(rng, field, n, lie=False) -> LeibnizAlgebra:
    return _disguise(rng, _random_triangular(rng, field, n, True, lie))


def random_supersolvable(rng, field, n, lie=False) -> LeibnizAlgebra:
    return _disguise(rng, _random_triangular(rng, field, n, False, lie))


def random_extension(rng, field, n, lie=None) -> LeibnizAlgebra:
    """``F x`` acting on an abelian ``F^(n-1)`` by a random matrix, Lie or hemi-semidirect."""
    if n == 1:
        return one_dim_lie(field)
    d = random_matrix(rng, field, n - 1, density=0.8)
    base = one_dim_lie(field)
    use_lie = rng.random() < 0.5 if lie is None else lie
    alg = semidirect_lie(base, [d]) if use_lie else hemi_semidirect(base, [d])
    return _disguise(rng, alg)


def random_solvable(rng, field, n, lie=False) -> LeibnizAlgebra:
    r = rng.random()
    if r < 0.4 or n == 1:
        return random_supersolvable(rng, field, n, lie)
    if r < 0.8:
        return random_extension(rng, field, n, True if lie else None)
    # direct sum of smaller solvable pieces
    k = rng.randrange(1, n)
    return _disguise(rng, direct_sum(random_solvable(rng, field, k, lie), random_solvable(rng, field, n - k, lie)))


def random_any(rng, field, n, lie=False) -> LeibnizAlgebra:
    r = rng.random()
    if n == 3 and field.p != 2 and r < 0.2:
        return _disguise(rng, sl2(field))
    if n >= 4 and field.p != 2 and r < 0.2:
        return _disguise(rng, direct_sum(sl2(field), random_solvable(rng, field, n - 3, lie)))
    if r < 0.5:
        return random_solvable(rng, field, n, lie)
    return random_nilpotent(rng, field, n, lie) if r < 0.75 else random_supersolvable(rng, field, n, lie)


def random_algebra(spec: RandomAlgebraSpec) -> LeibnizAlgebra:
    """Random validated algebra of the requested class (deterministic per seed)."""
    rng = _rng(spec.seed)
    field, n = spec.field, spec.dim
    if not field.is_finite:
        raise ValueError("random algebras are generated over prime fields")
    if n == 0:
        return abelian(field, 0)
    if n == 1:
        # the only one-dimensional left Leibniz algebra is abelian
        return one_dim_lie(field)
    gen = {
        AlgebraClass.NILPOTENT: random_nilpotent,
        AlgebraClass.SUPERSOLVABLE: random_supersolvable,
        AlgebraClass.SOLVABLE: random_solvable,
        AlgebraClass.ANY: random_any,
    }[spec.kind]
    alg = gen(rng, field, n, spec.lie)
    if spec.kind is AlgebraClass.NILPOTENT and not alg.is_nilpotent():
        raise GenerationFailed("nilpotent algebra", spec.seed)
    if spec.kind in (AlgebraClass.SOLVABLE, AlgebraClass.SUPERSOLVABLE) and not alg.is_solvable():
        raise GenerationFailed("solvable algebra", spec.seed)
    return alg


# --------------------------------------------------------------------------
# left modules
# --------------------------------------------------------------------------


def _character(rng, alg: LeibnizAlgebra, nonzero: bool = False) -> list:
    """Values on the basis of a linear form vanishing on the derived subalgebra."""
    f = alg.field
    dd = alg.derived_subalgebra()
    # linear forms vanishing on dd = kernel of (basis of dd as rows)^T
    if dd.dim:
        forms = ExactMatrix.from_dense(f, dd.basis).kernel()
    else:
        forms = Subspace.full(f, alg.dim)
    if forms.is_zero():
        return [0] * alg.dim
    for _ in range(50):
        coeffs = [rng.randrange(f.p) for _ in range(forms.dim)]
        mu = [0] * alg.dim
        for c, b in zip(coeffs, forms.basis):
            for k in range(alg.dim):
                mu[k] = (mu[k] + c * b[k]) % f.p
        if not nonzero or any(mu):
            return mu
    return mu


def scalar_module(alg, mu, d) -> list:
    f = alg.field
    return [ExactMatrix.scalar(f, d, m) for m in mu]


def twisted_adjoint(alg, mu) -> list:
    """``x -> mu(x) I + L_x``: a left module whenever ``mu`` vanishes on ``LL``."""
    f = alg.field
    return [ExactMatrix.scalar(f, alg.dim, m) + l for m, l in zip(mu, alg.left_mult_basis())]


def conjugate(mats, p: ExactMatrix) -> list:
    pinv = p.inverse()
    return [p @ m @ pinv for m in mats]


def dual(mats) -> list:
    return [-(m.T) for m in mats]


def block_sum(a: list, b: list) -> list:
    out = []
    for x, y in zip(a, b):
        f = x.field
        top = ExactMatrix.hstack([x, ExactMatrix.zeros(f, x.nrows, y.ncols)])
        bot = ExactMatrix.hstack([ExactMatrix.zeros(f, y.nrows, x.ncols), y])
        out.append(ExactMatrix.vstack([top, bot]))
    return out


def tensor(a: list, b: list) -> list:
    f = a[0].field
    ia = ExactMatrix.identity(f, a[0].nrows)
    ib = ExactMatrix.identity(f, b[0].nrows)
    return [x.kron(ib) + ia.kron(y) for x, y in zip(a, b)]


def random_left_module(rng, alg: LeibnizAlgebra, d: int) -> list:
    """A random left module structure of dimension ``d`` (list of matrices)."""
    f = alg.field
    n = alg.dim
    if d == 0 or n == 0:
        return [ExactMatrix.zeros(f, d, d) for _ in range(n)]
    pieces = []
    left = d
    while left:
        r = rng.random()
        if r < 0.35 and left >= n:
            piece = twisted_adjoint(alg, _character(rng, alg))
            if rng.random() < 0.3:
                piece = dual(piece)
        elif r < 0.45 and left >= 2 * n and n:
            piece = tensor(twisted_adjoint(alg, _character(rng, alg)), scalar_module(alg, _character(rng, alg), 1))
        else:
            k = rng.randrange(1, left + 1)
            piece = scalar_module(alg, _character(rng, alg), k)
        pieces.append(piece)
        left -= piece[0].nrows
    mats = pieces[0]
    for piece in pieces[1:]:
        mats = block_sum(mats, piece)
    if rng.random() < 0.6:
        mats = conjugate(mats, random_invertible(rng, f, d))
    return mats


def right_action_space(alg: LeibnizAlgebra, lam: list) -> tuple:
    """Basis of all ``rho`` solving ``rho(xy) = lam(x) rho(y) - rho(y) lam(x)``.

    Unknowns are the entries of ``rho(e_0), ..., rho(e_{n-1})`` in row-major order.
    """
    f = alg.field
    n = alg.dim
    d = lam[0].nrows
    nv = n * d * d
    rows = []
    for i in range(n):
        for j in range(n):
            prod = alg.basis_product(i, j)
            li = lam[i].to_dense()
            for r in range(d):
                for c in range(d):
                    row = {}

                    def add(k, a, b, v):
                        if v:
                            key = k * d * d + a * d + b
                            row[key] = row.get(key, 0) + v

                    for k, ck in enumerate(prod):
                        add(k, r, c, ck)
                    # - (lam_i rho_j)[r][c] + (rho_j lam_i)[r][c]
                    for t in range(d):
                        add(j, t, c, -li[r][t])
                        add(j, r, t, li[t][c])
                    rows.append(row)
    sol = ExactMatrix(f, len(rows), nv, rows).kernel()
    return sol, d


def _rho_from_vector(f, n, d, vec) -> list:
    mats = []
    for k in range(n):
        data = [[vec[k * d * d + a * d + b] for b in range(d)] for a in range(d)]
        mats.append(ExactMatrix.from_dense(f, data))
    return mats


def random_bimodule(alg: LeibnizAlgebra, dim: int, seed=0) -> Bimodule:
    """Random bimodule: a random left module completed by a random admissible right action."""
    rng = _rng(seed)
    f = alg.field
    n = alg.dim
    lam = random_left_module(rng, alg, dim)
    if n == 0 or dim == 0:
        return Bimodule(alg, dim, lam, lam)
    r = rng.random()
    if r < 0.2:
        return Bimodule(alg, dim, lam, [-m for m in lam])
    if r < 0.35:
        return Bimodule(alg, dim, lam, [ExactMatrix.zeros(f, dim, dim)] * n)
    space, d = right_action_space(alg, lam)
    basis = space.basis
    for _ in range(12):
        if not basis:
            break
        vec = [0] * (n * d * d)
        for b in basis:
            c = rng.randrange(f.p)
            if c:
                vec = [(x + c * y) % f.p for x, y in zip(vec, b)]
        rho = _rho_from_vector(f, n, d, vec)
        try:
            return Bimodule(alg, dim, lam, rho)
        except BimoduleAxiomError:
            continue
    # mixed fallback: symmetric on a leading block when lam is block diagonal is not
    # guaranteed, so fall back to the always-valid extremes
    if rng.random() < 0.5:
        return Bimodule(alg, dim, lam, [-m for m in lam])
    return Bimodule(alg, dim, lam, [ExactMatrix.zeros(f, dim, dim)] * n)


def random_one_dim_bimodule(field: PrimeField, dim: int, seed=0) -> Bimodule:
    """Uniform-ish bimodule over ``F e``: ``B`` random, ``C`` with ``BC = CB = 0``, ``A = C - B``.

    Every pair with ``AB = BA`` and ``B^2 = -BA`` arises this way (``C = A + B``).
    """
    rng = _rng(seed)
    alg = one_dim_lie(field)
    b = random_matrix(rng, field, dim, density=rng.choice([0.2, 0.5, 0.9]))
    if rng.random() < 0.3:
        # bias towards nilpotent right actions
        b = ExactMatrix.from_dense(field, [[v if c > r else 0 for c, v in enumerate(row)]
                                           for r, row in enumerate(b.to_dense())]) if dim else b
    # C ranges over {C : BC = 0 and CB = 0}
    eye = ExactMatrix.identity(field, dim)
    if dim:
        system = ExactMatrix.vstack([b.kron(eye), eye.kron(b.T)])
        space = system.kernel()
        vec = [0] * (dim * dim)
        for basis_vec in space.basis:
            c = rng.randrange(field.p)
            if c:
                vec = [(x + c * y) % field.p for x, y in zip(vec, basis_vec)]
        cm = ExactMatrix.from_dense(field, [vec[r * dim:(r + 1) * dim] for r in range(dim)])
    else:
        cm = ExactMatrix.zeros(field, 0, 0)
    a = cm - b
    if dim and rng.random() < 0.5:
        p = random_invertible(rng, field, dim)
        a, b = conjugate([a, b], p)
    return Bimodule(alg, dim, [a], [b])


# --------------------------------------------------------------------------
# structured families
# --------------------------------------------------------------------------


def cyclic_shift(field: PrimeField, k: int = 1) -> ExactMatrix:
    """``e_j -> e_{j+k mod p}`` on ``F^p``."""
    p = field.p
    return ExactMatrix.from_columns(field, p, [{(j + k) % p: 1} for j in range(p)])


def counting_diagonal(field: PrimeField) -> ExactMatrix:
    p = field.p
    return ExactMatrix.from_dense(field, [[j if r == j else 0 for j in range(p)] for r in range(p)])


def diagonal_semidirect(field: PrimeField, weights) -> LeibnizAlgebra:
    """Lie algebra ``F x |x F^k`` with ``[x, v_i] = w_i v_i``."""
    k = len(weights)
    d = ExactMatrix.from_dense(field, [[weights[r] if r == c else 0 for c in range(k)] for r in range(k)])
    return semidirect_lie(one_dim_lie(field), [d])


def shift_module(alg: LeibnizAlgebra, weights, coeffs) -> list:
    """Left module of dimension ``p`` for ``diagonal_semidirect(weights)``.

    ``x`` acts by ``diag(0, 1, ..., p-1)`` and ``v_i`` by ``c_i S^{w_i}`` with
    ``S`` the cyclic shift; the ``v_i`` act invertibly when ``c_i != 0``.
    """
    f = alg.field
    mats = [counting_diagonal(f)]
    for w, c in zip(weights, coeffs):
        mats.append(cyclic_shift(f, w).scale(c))
    return mats


def random_shift_instance(rng, field: PrimeField, kdim: int):
    """``(algebra, left-module matrices)`` with an irreducible ``p``-dimensional module."""
    weights = [rng.randrange(1, field.p) for _ in range(kdim)]
    coeffs = [rng.randrange(0 if i else 1, field.p) for i in range(kdim)]
    alg = diagonal_semidirect(field, weights)
    return alg, shift_module(alg, weights, coeffs)


def targeted_module(rng, alg: LeibnizAlgebra, dim: int, kind: str) -> Bimodule:
    """Bimodules built to satisfy common hypotheses.

    ``kind``: ``"nontrivial-symmetric"``, ``"nontrivial-antisymmetric"``,
    ``"nontrivial-mixed"`` (character twists with a nonzero character) or
    ``"random"``.
    """
    f = alg.field
    if kind == "random":
        return random_bimodule(alg, dim, rng)
    mu = _character(rng, alg, nonzero=True)
    if not any(mu):
        return random_bimodule(alg, dim, rng)
    if dim >= alg.dim and rng.random() < 0.5:
        lam = twisted_adjoint(alg, mu)
        if dim > alg.dim:
            lam = block_sum(lam, scalar_module(alg, _character(rng, alg, nonzero=True), dim - alg.dim))
    else:
        lam = scalar_module(alg, mu, dim)
    if rng.random() < 0.5:
        lam = conjugate(lam, random_invertible(rng, f, dim))
    n = alg.dim
    if kind == "nontrivial-symmetric":
        return Bimodule(alg, dim, lam, [-m for m in lam])
    if kind == "nontrivial-antisymmetric":
        return Bimodule(alg, dim, lam, [ExactMatrix.zeros(f, dim, dim)] * n)
    space, d = right_action_space(alg, lam)
    basis = space.basis
    for _ in range(8):
        vec = [0] * (n * d * d)
        for b in basis:
            c = rng.randrange(f.p)
            if c:
                vec = [(x + c * y) % f.p for x, y in zip(vec, b)]
        try:
            return Bimodule(alg, dim, lam, _rho_from_vector(f, n, d, vec))
        except BimoduleAxiomError:
            continue
    return Bimodule(alg, dim, lam, [-m for m in lam])
