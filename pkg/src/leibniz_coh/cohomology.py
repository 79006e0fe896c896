"""Leibniz cochain complexes, their cohomology, and exact sequences.

Cochain layout: a cochain of degree ``n`` is a vector of length
``dim M * dim L ** n``.  Coordinate ``t * dim M + b`` is the ``b``-th
coordinate of ``f(e_{i_1} (x) ... (x) e_{i_n})`` where ``t`` is the index of
``(i_1, ..., i_n)`` in lexicographic order with ``i_1`` most significant.
Degree 0 has the single empty tensor, so degree-0 cochains are elements of M.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .algebra import LeibnizAlgebra, NotAnIdeal
from .bimodule import Bimodule
from .exactla import ExactMatrix, Field, Subspace, _clean_row

DEFAULT_MEMORY_MB = 1024
DEFAULT_MAX_DEGREE = 6
BYTES_PER_ENTRY = 120


class ResourceGuardError(RuntimeError):
    def __init__(self, degree: int, estimate_mb: float, limit_mb: float):
        self.degree = degree
        self.estimate_mb = estimate_mb
        self.limit_mb = limit_mb
        super().__init__(
            f"coboundary in degree {degree} needs about {estimate_mb:.1f} MB "
            f"(limit {limit_mb:.0f} MB; set LEIBNIZ_COH_MEMORY_MB to raise it)"
        )


def memory_limit_mb() -> float:
    raw = os.environ.get("LEIBNIZ_COH_MEMORY_MB")
    if raw is None:
        return DEFAULT_MEMORY_MB
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"LEIBNIZ_COH_MEMORY_MB must be a number, got {raw!r}")


def coboundary_size_estimate_mb(alg_dim: int, mod_dim: int, n: int) -> float:
    rows = mod_dim * alg_dim ** (n + 1)
    per_row = (n + 1) * mod_dim + (n * (n + 1) // 2) * alg_dim
    return rows * per_row * BYTES_PER_ENTRY / 2**20


def tensor_index(t: Sequence[int], d: int) -> int:
    idx = 0
    for i in t:
        idx = idx * d + i
    return idx


def tensors(d: int, n: int):
    return itertools.product(range(d), repeat=n)


# --------------------------------------------------------------------------
# generic complexes and their cohomology
# --------------------------------------------------------------------------


class CochainComplex:
    """A cochain complex ``C^0 -> C^1 -> ...`` given by a differential callback.

    ``differential(n)`` is the matrix ``C^n -> C^(n+1)``; ``C^(-1) = 0``.
    """

    def __init__(self, field: Field, dims: Callable[[int], int], differential: Callable[[int], ExactMatrix]):
        self.field = field
        self._dims = dims
        self._diff = differential
        self._cache: dict = {}
        self._spaces: dict = {}

    def dim(self, n: int) -> int:
        return 0 if n < 0 else self._dims(n)

    def differential(self, n: int) -> ExactMatrix:
        if n not in self._cache:
            if n < 0:
                self._cache[n] = ExactMatrix.zeros(self.field, self.dim(n + 1), 0)
            else:
                self._cache[n] = self._diff(n)
        return self._cache[n]

    def rank(self, n: int) -> int:
        key = ("rank", n)
        if key not in self._spaces:
            self._spaces[key] = 0 if n < 0 else self.differential(n).rank()
        return self._spaces[key]

    def cocycles(self, n: int) -> Subspace:
        key = ("Z", n)
        if key not in self._spaces:
            self._spaces[key] = self.differential(n).kernel()
        return self._spaces[key]

    def coboundaries(self, n: int) -> Subspace:
        key = ("B", n)
        if key not in self._spaces:
            if n <= 0:
                self._spaces[key] = Subspace.zero(self.field, self.dim(n))
            else:
                self._spaces[key] = self.differential(n - 1).image()
        return self._spaces[key]

    def cohomology_dim(self, n: int) -> int:
        return self.dim(n) - self.rank(n) - self.rank(n - 1)

    def cohomology(self, n: int) -> "CohomologySpace":
        key = ("H", n)
        if key not in self._spaces:
            self._spaces[key] = CohomologySpace(self.cocycles(n), self.coboundaries(n), n)
        return self._spaces[key]


class CohomologySpace:
    """``Z / B`` with representatives and class coordinates.

    Reduction modulo the echelon basis of ``B`` is a linear projection whose
    kernel is ``B``; the reduced cocycles form a canonical complement whose
    echelon basis serves as the list of representatives.
    """

    def __init__(self, cocycles: Subspace, coboundaries: Subspace, degree: int = 0):
        self.degree = degree
        self.cocycles = cocycles
        self.coboundaries = coboundaries
        self.field = cocycles.field
        residues = [coboundaries.reduce(z) for z in cocycles.sparse_basis]
        self.reps_space = Subspace.span(self.field, cocycles.ambient_dim, residues)

    @property
    def dim(self) -> int:
        return self.reps_space.dim

    @property
    def representatives(self) -> list:
        return self.reps_space.basis

    def class_coordinates(self, z) -> list:
        if z not in self.cocycles:
            raise ValueError("vector is not a cocycle")
        return self.reps_space.coordinates(self.coboundaries.reduce(z))

    def is_coboundary(self, z) -> bool:
        return z in self.coboundaries


def induced_map(source: CohomologySpace, target: CohomologySpace, chain_map: ExactMatrix) -> ExactMatrix:
    """Matrix of the map on cohomology induced by a chain map, in class coordinates."""
    cols = [target.class_coordinates(chain_map.apply(list(r))) for r in source.representatives]
    return ExactMatrix.from_columns(source.field, target.dim, cols)


def _kernel(m: ExactMatrix) -> Subspace:
    return m.kernel()


def _image(m: ExactMatrix) -> Subspace:
    return m.image()


@dataclass
class NodeCheck:
    node: str
    degree: int
    exact: bool


@dataclass
class ExactnessReport:
    levelwise_exact: bool
    chain_maps_commute: bool
    nodes: list = dc_field(default_factory=list)
    dims: dict = dc_field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.levelwise_exact and self.chain_maps_commute and all(n.exact for n in self.nodes)

    def failures(self) -> list:
        return [n for n in self.nodes if not n.exact]


class ShortExactSequence:
    """``0 -> A --i--> B --p--> C -> 0`` of cochain complexes.

    ``inc(n)`` and ``proj(n)`` return the chain-map matrices in degree ``n``.
    """

    def __init__(self, a: CochainComplex, b: CochainComplex, c: CochainComplex,
                 inc: Callable[[int], ExactMatrix], proj: Callable[[int], ExactMatrix]):
        self.a, self.b, self.c = a, b, c
        self._inc = inc
        self._proj = proj
        self._cache: dict = {}

    def inc(self, n: int) -> ExactMatrix:
        key = ("i", n)
        if key not in self._cache:
            self._cache[key] = self._inc(n)
        return self._cache[key]

    def proj(self, n: int) -> ExactMatrix:
        key = ("p", n)
        if key not in self._cache:
            self._cache[key] = self._proj(n)
        return self._cache[key]

    def levelwise_exact(self, n: int) -> bool:
        i, p = self.inc(n), self.proj(n)
        if i.rank() != self.a.dim(n):
            return False
        if p.rank() != self.c.dim(n):
            return False
        return i.image() == p.kernel()

    def commutes(self, n: int) -> bool:
        da, db, dc = self.a.differential(n), self.b.differential(n), self.c.differential(n)
        return (db @ self.inc(n) == self.inc(n + 1) @ da) and (dc @ self.proj(n) == self.proj(n + 1) @ db)

    def lift(self, n: int, c_vec) -> list:
        x = self.proj(n).solve(list(c_vec))
        if x is None:
            raise ValueError("projection is not surjective")
        return x

    def connecting_cochain(self, n: int, c_vec) -> list:
        """Cocycle of ``A^(n+1)`` representing the connecting image of ``c_vec``."""
        b = self.lift(n, c_vec)
        db = self.b.differential(n).apply(b)
        a = self.inc(n + 1).solve(db)
        if a is None:
            raise ValueError("d(lift) does not come from the subcomplex")
        return a

    def connecting_map(self, n: int) -> ExactMatrix:
        hc = self.c.cohomology(n)
        ha = self.a.cohomology(n + 1)
        cols = [ha.class_coordinates(self.connecting_cochain(n, r)) for r in hc.representatives]
        return ExactMatrix.from_columns(self.a.field, ha.dim, cols)

    def induced_inc(self, n: int) -> ExactMatrix:
        return induced_map(self.a.cohomology(n), self.b.cohomology(n), self.inc(n))

    def induced_proj(self, n: int) -> ExactMatrix:
        return induced_map(self.b.cohomology(n), self.c.cohomology(n), self.proj(n))

    def verify(self, n_max: int) -> ExactnessReport:
        """Check the long exact cohomology sequence at every node up to degree ``n_max``."""
        level = all(self.levelwise_exact(n) for n in range(n_max + 2))
        comm = all(self.commutes(n) for n in range(n_max + 1))
        report = ExactnessReport(level, comm)
        if not (level and comm):
            return report
        for n in range(n_max + 2):
            report.dims[n] = (self.a.cohomology(n).dim, self.b.cohomology(n).dim, self.c.cohomology(n).dim)
        i0 = self.induced_inc(0)
        report.nodes.append(NodeCheck("H(A) start", 0, _kernel(i0).is_zero()))
        for n in range(n_max + 1):
            i_n = self.induced_inc(n)
            p_n = self.induced_proj(n)
            delta = self.connecting_map(n)
            i_next = self.induced_inc(n + 1)
            report.nodes.append(NodeCheck("H(B)", n, _image(i_n) == _kernel(p_n)))
            report.nodes.append(NodeCheck("H(C)", n, _image(p_n) == _kernel(delta)))
            report.nodes.append(NodeCheck("H(A)", n + 1, _image(delta) == _kernel(i_next)))
        return report


# --------------------------------------------------------------------------
# the Leibniz complex
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_z: int
    dim_b: int
    dim_h: int
    representatives: tuple | None = None


class LeibnizComplex(CochainComplex):
    """``CL^n(L, M) = Hom(L^{(x) n}, M)`` with the Leibniz coboundary."""

    def __init__(self, module: Bimodule, *, memory_mb: float | None = None):
        self.module = module
        self.algebra = module.algebra
        self.memory_mb = memory_mb
        d, dm = self.algebra.dim, module.dim
        super().__init__(module.field, lambda n: dm * d**n, self._build_coboundary)

    def check_guard(self, n: int) -> None:
        limit = self.memory_mb if self.memory_mb is not None else memory_limit_mb()
        est = coboundary_size_estimate_mb(self.algebra.dim, self.module.dim, n)
        if est > limit:
            raise ResourceGuardError(n, est, limit)

    def coboundary(self, n: int) -> ExactMatrix:
        return self.differential(n)

    def _build_coboundary(self, n: int) -> ExactMatrix:
        self.check_guard(n)
        m = self.module
        alg = self.algebra
        f = self.field
        d, dm = alg.dim, m.dim
        lam = [t.rows() for t in m.lam]
        rho = [t.rows() for t in m.rho]
        c = alg.structure_constants
        nrows = dm * d ** (n + 1)
        ncols = dm * d**n
        rows = [dict() for _ in range(nrows)]
        rsign = 1 if (n + 1) % 2 == 0 else -1

        def add_block(base_row, base_col, block_rows, sign):
            for a, brow in enumerate(block_rows):
                target = rows[base_row + a]
                for b, v in brow.items():
                    k = base_col + b
                    target[k] = target.get(k, 0) + sign * v

        for t in tensors(d, n + 1):
            base_row = tensor_index(t, d) * dm
            # left actions of x_j on f with x_j omitted, j = 1..n
            for j0 in range(n):
                s = t[:j0] + t[j0 + 1:]
                add_block(base_row, tensor_index(s, d) * dm, lam[t[j0]], 1 if j0 % 2 == 0 else -1)
            # right action of x_{n+1}
            add_block(base_row, tensor_index(t[:n], d) * dm, rho[t[n]], rsign)
            # x_i removed, x_j replaced by x_i x_j
            for i0 in range(n + 1):
                sign = -1 if i0 % 2 == 0 else 1
                rest = t[:i0] + t[i0 + 1:]
                for j0 in range(i0 + 1, n + 1):
                    prod = c[t[i0]][t[j0]]
                    pos = j0 - 1
                    for k, ck in enumerate(prod):
                        if not ck:
                            continue
                        s = rest[:pos] + (k,) + rest[pos + 1:]
                        base_col = tensor_index(s, d) * dm
                        coef = sign * ck
                        for b in range(dm):
                            target = rows[base_row + b]
                            target[base_col + b] = target.get(base_col + b, 0) + coef
        clean = [_clean_row(f, r) for r in rows]
        return ExactMatrix(f, nrows, ncols, clean, _trusted=True)

    # operators ------------------------------------------------------------
    def tau(self, a, n: int) -> ExactMatrix:
        """``x_1 (x) ... (x) x_n -> sum_j x_1 (x) .. (x) a x_j (x) .. (x) x_n``."""
        return tensor_derivation(self.algebra, a, n)

    def theta(self, a, n: int) -> ExactMatrix:
        """``theta_a(f)(x) = a . f(x) - f(tau_a x)``."""
        f = self.field
        d = self.algebra.dim
        eye_t = ExactMatrix.identity(f, d**n)
        eye_m = ExactMatrix.identity(f, self.module.dim)
        return eye_t.kron(self.module.left_action(a)) - self.tau(a, n).T.kron(eye_m)

    def theta_direct(self, a, n: int) -> ExactMatrix:
        """``theta_a`` assembled entrywise from its defining formula."""
        f = self.field
        alg = self.algebra
        d, dm = alg.dim, self.module.dim
        la = self.module.left_action(a).rows()
        amul = [alg.multiply(a, j) for j in range(d)]
        rows = [dict() for _ in range(dm * d**n)]
        for t in tensors(d, n):
            base = tensor_index(t, d) * dm
            for r, lrow in enumerate(la):
                for b, v in lrow.items():
                    rows[base + r][base + b] = rows[base + r].get(base + b, 0) + v
            for j0 in range(n):
                for k, ck in enumerate(amul[t[j0]]):
                    if not ck:
                        continue
                    s = t[:j0] + (k,) + t[j0 + 1:]
                    col = tensor_index(s, d) * dm
                    for b in range(dm):
                        rows[base + b][col + b] = rows[base + b].get(col + b, 0) - ck
        return ExactMatrix(f, dm * d**n, dm * d**n, [_clean_row(f, r) for r in rows], _trusted=True)

    def iota(self, a, n: int) -> ExactMatrix:
        """``iota_a(f)(x_1 .. x_{n-1}) = f(a (x) x_1 .. x_{n-1})``, for ``n >= 1``."""
        if n < 1:
            raise ValueError("insertion needs degree at least 1")
        f = self.field
        d, dm = self.algebra.dim, self.module.dim
        a = self.algebra.element(a)
        block = d ** (n - 1) * dm
        rows = []
        for r in range(block):
            row = {}
            for k, ak in enumerate(a):
                if ak:
                    row[k * block + r] = ak
            rows.append(row)
        return ExactMatrix(f, block, d * block, rows, _trusted=True)

    # cohomology -------------------------------------------------------------
    def hl(self, n: int, representatives: bool = False) -> CohomologyResult:
        dim_c = self.dim(n)
        rk = self.rank(n)
        rk_prev = self.rank(n - 1)
        dim_z = dim_c - rk
        reps = None
        if representatives:
            reps = tuple(self.cohomology(n).representatives)
        return CohomologyResult(n, dim_z, rk_prev, dim_z - rk_prev, reps)

    def hl_dims(self, n_max: int) -> list:
        return [self.hl(n).dim_h for n in range(n_max + 1)]


def tensor_derivation(alg: LeibnizAlgebra, a, n: int) -> ExactMatrix:
    f = alg.field
    d = alg.dim
    if n == 0:
        return ExactMatrix.zeros(f, 1, 1)
    la = alg.left_mult(a)
    eye = ExactMatrix.identity(f, d)
    total = ExactMatrix.zeros(f, d**n, d**n)
    for j in range(n):
        term = ExactMatrix.identity(f, d**j).kron(la).kron(ExactMatrix.identity(f, d ** (n - 1 - j)))
        total = total + term
    del eye
    return total


def hl(module: Bimodule, n: int, representatives: bool = False) -> CohomologyResult:
    return LeibnizComplex(module).hl(n, representatives)


def hl_dims(module: Bimodule, n_max: int) -> list:
    return LeibnizComplex(module).hl_dims(n_max)


# --------------------------------------------------------------------------
# identity checks
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityFailure:
    identity: str
    degree: int


def verify_square_zero(cx: LeibnizComplex, n_max: int):
    for n in range(n_max + 1):
        if not (cx.differential(n + 1) @ cx.differential(n)).is_zero():
            return IdentityFailure("d d = 0", n)
    return None


def verify_cartan(cx: LeibnizComplex, a, n_max: int):
    """Check both Cartan identities for the element ``a`` up to degree ``n_max``.

    ``d iota + iota d = theta`` for ``1 <= n <= n_max`` and
    ``theta d = d theta`` for ``0 <= n <= n_max``.
    """
    for n in range(n_max + 1):
        th = cx.theta(a, n)
        if n >= 1:
            lhs = cx.differential(n - 1) @ cx.iota(a, n) + cx.iota(a, n + 1) @ cx.differential(n)
            if lhs != th:
                return IdentityFailure("homotopy", n)
        if cx.theta(a, n + 1) @ cx.differential(n) != cx.differential(n) @ th:
            return IdentityFailure("commutation", n)
    return None


def theta_acts_trivially(cx: LeibnizComplex, a, n: int) -> bool:
    """For ``n >= 1`` every ``theta_a`` maps cocycles to coboundaries."""
    th = cx.theta(a, n)
    b = cx.coboundaries(n)
    return all(th.apply_sparse(z) in b for z in cx.cocycles(n).sparse_basis)


# --------------------------------------------------------------------------
# bimodule short exact sequences
# --------------------------------------------------------------------------


def bimodule_ses(module: Bimodule, sub: Subspace) -> ShortExactSequence:
    """``0 -> CL(L, N) -> CL(L, M) -> CL(L, M/N) -> 0`` for a sub-bimodule ``N``."""
    if not module.is_sub_bimodule(sub):
        raise ValueError("subspace is not a sub-bimodule")
    f = module.field
    d = module.algebra.dim
    ca = LeibnizComplex(module.submodule(sub))
    cb = LeibnizComplex(module)
    cc = LeibnizComplex(module.quotient(sub))
    inc = sub.inclusion_map()
    proj = sub.quotient_map()
    return ShortExactSequence(
        ca, cb, cc,
        lambda n: ExactMatrix.identity(f, d**n).kron(inc),
        lambda n: ExactMatrix.identity(f, d**n).kron(proj),
    )


def les_of_bimodule_ses(module: Bimodule, sub: Subspace, n_max: int) -> ExactnessReport:
    return bimodule_ses(module, sub).verify(n_max)


# --------------------------------------------------------------------------
# one-dimensional Lie algebra closed forms
# --------------------------------------------------------------------------


def periodicity_dims(module: Bimodule, n_max: int) -> list:
    """Cohomology dimensions over ``F e`` from the invariant subspaces alone.

    Degree 0: ``dim ker rho``; odd degrees: ``dim ker(lam + rho) - dim im rho``;
    even positive degrees: ``dim ker rho - dim im(lam + rho)``.
    """
    if module.algebra.dim != 1 or not module.algebra.is_abelian():
        raise ValueError("closed forms apply to the one-dimensional Lie algebra")
    lam, rho = module.lam[0], module.rho[0]
    s = lam + rho
    ker_rho = rho.kernel().dim
    ker_s = s.kernel().dim
    im_rho = rho.rank()
    im_s = s.rank()
    out = []
    for n in range(n_max + 1):
        if n == 0:
            out.append(ker_rho)
        elif n % 2:
            out.append(ker_s - im_rho)
        else:
            out.append(ker_rho - im_s)
    return out


# --------------------------------------------------------------------------
# restriction to a codimension-one ideal
# --------------------------------------------------------------------------


@dataclass
class DixmierReport:
    ses_exact: bool
    anticommutes: bool
    connecting_matches: bool
    les: ExactnessReport
    ideal_dims: list
    kernel_dims: list
    ambient_dims: list
    details: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.ses_exact and self.anticommutes and self.connecting_matches and self.les.exact


class DixmierSequence:
    """Restriction of cochains to a codimension-one ideal.

    The basis of the algebra is rechosen as (echelon basis of the ideal, x),
    so the ideal is spanned by the first ``k`` basis vectors and ``x`` is the
    last one.  The kernel of restriction is the coordinate subcomplex on the
    tensors that contain ``x`` at least once.
    """

    def __init__(self, module: Bimodule, ideal: Subspace, x):
        alg = module.algebra
        if not alg.is_ideal(ideal):
            raise NotAnIdeal("restriction sequence needs a two-sided ideal")
        if ideal.dim != alg.dim - 1:
            raise ValueError("ideal must have codimension one")
        x = alg.element(x)
        if x in ideal:
            raise ValueError("x must lie outside the ideal")
        columns = list(ideal.basis) + [x]
        self.algebra = alg.change_basis(columns)
        self.module = module.change_algebra_basis(self.algebra, columns)
        self.k = ideal.dim
        self.x_index = self.k
        self.field = module.field
        f = self.field
        d, k = self.algebra.dim, self.k
        dm = self.module.dim
        self.ideal_space = Subspace.coordinate(f, d, range(k))
        self.ideal_module = self.module.restrict_to_subalgebra(self.ideal_space)
        self.full = LeibnizComplex(self.module)
        self.ideal_complex = LeibnizComplex(self.ideal_module)
        self._dl_index: dict = {}
        self.kernel_complex = CochainComplex(f, lambda n: len(self.dl_indices(n)), self._dl_differential)
        self.ses = ShortExactSequence(
            self.kernel_complex, self.full, self.ideal_complex,
            self._dl_inclusion, self.restriction,
        )
        self.dm = dm

    # coordinate bookkeeping ------------------------------------------------
    def _cochain_indices(self, n: int, pred) -> list:
        d, dm = self.algebra.dim, self.module.dim
        out = []
        for t in tensors(d, n):
            if pred(t):
                base = tensor_index(t, d) * dm
                out.extend(range(base, base + dm))
        return out

    def dl_indices(self, n: int) -> list:
        if n not in self._dl_index:
            self._dl_index[n] = self._cochain_indices(n, lambda t: self.x_index in t)
        return self._dl_index[n]

    def ideal_indices(self, n: int) -> list:
        return self._cochain_indices(n, lambda t: self.x_index not in t)

    def dl1_indices(self, n: int) -> list:
        """Cochains supported on ``x (x) I (x) ... (x) I``."""
        return self._cochain_indices(
            n, lambda t: n >= 1 and t[0] == self.x_index and self.x_index not in t[1:])

    def _selector(self, n: int, indices: list) -> ExactMatrix:
        f = self.field
        total = self.full.dim(n)
        rows = [{i: f.one} for i in indices]
        return ExactMatrix(f, len(indices), total, rows, _trusted=True)

    def restriction(self, n: int) -> ExactMatrix:
        """``CL^n(L, M) -> CL^n(I, M)``; ideal tensors keep their relative order."""
        return self._selector(n, self.ideal_indices(n))

    def _dl_inclusion(self, n: int) -> ExactMatrix:
        return self._selector(n, self.dl_indices(n)).T

    def _dl_differential(self, n: int) -> ExactMatrix:
        d = self.full.differential(n)
        return d.submatrix(self.dl_indices(n + 1), self.dl_indices(n))

    def phi(self, n: int) -> ExactMatrix:
        """``res^(n-1) o iota_x^n`` on all of ``CL^n(L, M)``."""
        return self.restriction(n - 1) @ self.full.iota(self.algebra.basis_vector(self.x_index), n)

    def dl1_inclusion(self, n: int) -> ExactMatrix:
        return self._selector(n, self.dl1_indices(n)).T

    # checks ------------------------------------------------------------------
    def check_ses(self, n_max: int) -> bool:
        ok = True
        for n in range(n_max + 1):
            res = self.restriction(n)
            ok &= res.rank() == self.ideal_complex.dim(n)
            ok &= res.kernel() == Subspace.coordinate(self.field, self.full.dim(n), self.dl_indices(n))
            dfull = self.full.differential(n)
            # DL is a subcomplex: d maps DL into DL
            outside = [i for i in range(self.full.dim(n + 1)) if i not in set(self.dl_indices(n + 1))]
            ok &= dfull.submatrix(outside, self.dl_indices(n)).is_zero()
        return ok

    def check_anticommutation(self, n_max: int) -> bool:
        """``phi^(n+1) d^n = -d_I^(n-1) phi^n`` on the distinguished summand, ``1 <= n <= n_max``."""
        for n in range(1, n_max + 1):
            inc = self.dl1_inclusion(n)
            lhs = self.phi(n + 1) @ self.full.differential(n) @ inc
            rhs = -(self.ideal_complex.differential(n - 1) @ self.phi(n) @ inc)
            if lhs != rhs:
                return False
        return True

    def check_connecting(self, n_max: int) -> bool:
        """``phi^(n+1)(d lift(c))`` and ``res theta_x lift(c)`` agree modulo coboundaries.

        Checked for every cocycle basis vector of ``CL^n(I, M)``, ``1 <= n <= n_max``.
        """
        x = self.algebra.basis_vector(self.x_index)
        for n in range(1, n_max + 1):
            lift = self.restriction(n).T
            left = self.phi(n + 1) @ self.full.differential(n) @ lift
            right = self.restriction(n) @ self.full.theta(x, n) @ lift
            diff = left - right
            bnd = self.ideal_complex.coboundaries(n)
            for z in self.ideal_complex.cocycles(n).sparse_basis:
                if diff.apply_sparse(z) not in bnd:
                    return False
        return True

    def verify(self, n_max: int) -> DixmierReport:
        les = self.ses.verify(n_max)
        return DixmierReport(
            ses_exact=self.check_ses(n_max + 1),
            anticommutes=self.check_anticommutation(n_max),
            connecting_matches=self.check_connecting(n_max),
            les=les,
            ideal_dims=[self.ideal_complex.cohomology_dim(n) for n in range(n_max + 1)],
            kernel_dims=[self.kernel_complex.cohomology_dim(n) for n in range(n_max + 1)],
            ambient_dims=[self.full.cohomology_dim(n) for n in range(n_max + 1)],
        )


def dixmier_sequence(module: Bimodule, ideal: Subspace, x, n_max: int):
    seq = DixmierSequence(module, ideal, x)
    return seq, seq.verify(n_max)
