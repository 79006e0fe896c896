"""Finite-dimensional left Leibniz algebras given by structure constants.

An algebra of dimension ``n`` is stored as ``c[i][j]``, the coordinate vector
of the product ``e_i e_j``.  The left Leibniz identity

    x(yz) = (xy)z + y(xz)

is checked on all basis triples when an algebra is constructed.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactla import (
    BudgetExceeded,
    ExactMatrix,
    Field,
    Subspace,
    _axpy,
    all_subspaces,
)

DEFAULT_BUDGET = 10**6


class LeibnizIdentityError(ValueError):
    """Structure constants violate the left Leibniz identity."""

    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"left Leibniz identity fails at basis triple {triple}")


class NotAnIdeal(ValueError):
    pass


class NilpotencyError(ValueError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    triple: tuple | None = None
    message: str = ""
    violations: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class IdealChain:
    """A chain of subspaces of an algebra with a tag saying what each term is.

    ``terms`` are listed from the largest to the smallest term.
    """

    terms: tuple
    tag: str = "ideal"

    @property
    def codimensions(self) -> tuple:
        return tuple(a.dim - b.dim for a, b in zip(self.terms, self.terms[1:]))

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, k):
        return self.terms[k]


@dataclass(frozen=True)
class Series:
    """Result of iterating a series to stabilization.

    ``chain`` holds the strictly decreasing terms; ``limit`` is the term the
    series stabilizes at (the last entry of ``chain``).
    """

    kind: str
    chain: IdealChain

    @property
    def terms(self) -> tuple:
        return self.chain.terms

    @property
    def limit(self) -> Subspace:
        return self.chain.terms[-1]


class Supersolvability(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SupersolvableResult:
    status: Supersolvability
    chain: IdealChain | None = None

    @property
    def is_yes(self) -> bool:
        return self.status is Supersolvability.YES


class LeibnizAlgebra:
    """Left Leibniz algebra over Q or GF(p)."""

    def __init__(self, field: Field, dim: int, products, *, validate: bool = True, name: str | None = None):
        self.field = field
        self.dim = dim
        self.name = name
        zero = (field.zero,) * dim
        c = [[zero] * dim for _ in range(dim)]
        if isinstance(products, dict):
            items = products.items()
        else:
            if len(products) != dim or any(len(row) != dim for row in products):
                raise ValueError(f"structure constants must be a {dim}x{dim} array of vectors")
            items = (((i, j), products[i][j]) for i in range(dim) for j in range(dim))
        for (i, j), vec in items:
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index ({i}, {j}) out of range")
            if len(vec) != dim:
                raise ValueError(f"product e{i}e{j} must have {dim} coordinates")
            c[i][j] = tuple(field(v) for v in vec)
        self._c = tuple(tuple(row) for row in c)
        self._left = None
        self._right = None
        if validate:
            report = self.validate()
            if not report.ok:
                raise LeibnizIdentityError(report.triple)

    # ------------------------------------------------------------------
    # structure constants and multiplication
    # ------------------------------------------------------------------
    @property
    def structure_constants(self) -> tuple:
        return self._c

    def basis_product(self, i: int, j: int) -> tuple:
        return self._c[i][j]

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    def element(self, coords) -> tuple:
        if isinstance(coords, int):
            return self.basis_vector(coords)
        if len(coords) != self.dim:
            raise ValueError(f"element needs {self.dim} coordinates")
        return tuple(self.field(v) for v in coords)

    def multiply(self, x, y) -> tuple:
        f = self.field
        x = self.element(x)
        y = self.element(y)
        acc = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                s = xi * yj
                for k, v in enumerate(self._c[i][j]):
                    if v:
                        acc[k] += s * v
        return tuple(f(a) for a in acc)

    def left_mult_basis(self) -> list:
        """``L_{e_i}`` for every basis vector, as matrices."""
        if self._left is None:
            n = self.dim
            self._left = [
                ExactMatrix.from_columns(self.field, n, [self._c[i][j] for j in range(n)])
                for i in range(n)
            ]
        return self._left

    def right_mult_basis(self) -> list:
        """``R_{e_j}: x -> x e_j`` for every basis vector."""
        if self._right is None:
            n = self.dim
            self._right = [
                ExactMatrix.from_columns(self.field, n, [self._c[i][j] for i in range(n)])
                for j in range(n)
            ]
        return self._right

    def _combine(self, mats, x) -> ExactMatrix:
        x = self.element(x)
        out = ExactMatrix.zeros(self.field, self.dim, self.dim)
        for xi, m in zip(x, mats):
            if xi:
                out = out + m.scale(xi)
        return out

    def left_mult(self, x) -> ExactMatrix:
        return self._combine(self.left_mult_basis(), x)

    def right_mult(self, x) -> ExactMatrix:
        return self._combine(self.right_mult_basis(), x)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"LeibnizAlgebra{label}(dim={self.dim}, field={self.field!r})"

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash((self.field, self._c))

    # ------------------------------------------------------------------
    # validation
    # ------------------------------------------------------------------
    def validate(self) -> ValidationReport:
        """Check ``e_i(e_j e_k) = (e_i e_j)e_k + e_j(e_i e_k)`` on all triples."""
        n = self.dim
        f = self.field
        bad = []
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = self.multiply(i, self._c[j][k])
            r1 = self.multiply(self._c[i][j], k)
            r2 = self.multiply(j, self._c[i][k])
            if any(f(a - b - c) for a, b, c in zip(lhs, r1, r2)):
                bad.append((i, j, k))
        if not bad:
            return ValidationReport(True)
        i, j, k = bad[0]
        return ValidationReport(False, bad[0], f"identity fails at (e{i}, e{j}, e{k})", tuple(bad))

    def is_lie(self) -> bool:
        return self.leibniz_kernel().is_zero()

    def is_abelian(self) -> bool:
        return all(not any(v) for row in self._c for v in row)

    # ------------------------------------------------------------------
    # subspaces
    # ------------------------------------------------------------------
    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.element(v) for v in vectors])

    def product_space(self, u: Subspace, v: Subspace) -> Subspace:
        """``span{x y : x in u, y in v}``."""
        vecs = [self.multiply(x, y) for x in u.basis for y in v.basis]
        return Subspace.span(self.field, self.dim, vecs)

    def derived_subalgebra(self) -> Subspace:
        full = self.full_space()
        return self.product_space(full, full)

    def leibniz_kernel(self) -> Subspace:
        """Span of all squares, from the generators ``e_i^2`` and ``e_i e_j + e_j e_i``."""
        n = self.dim
        f = self.field
        gens = [self._c[i][i] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                gens.append(tuple(f(a + b) for a, b in zip(self._c[i][j], self._c[j][i])))
        return Subspace.span(f, n, gens)

    def left_center(self) -> Subspace:
        """``{c : c x = 0 for all x}``."""
        if self.dim == 0:
            return self.zero_space()
        stacked = ExactMatrix.vstack(self.right_mult_basis())
        return stacked.kernel()

    def right_centralizer(self, s) -> Subspace:
        """``{x : s x = 0 for every s in S}``."""
        vecs = s.basis if isinstance(s, Subspace) else [self.element(v) for v in s]
        if not vecs or self.dim == 0:
            return self.full_space()
        stacked = ExactMatrix.vstack([self.left_mult(v) for v in vecs])
        return stacked.kernel()

    def is_left_ideal(self, v: Subspace) -> bool:
        return self.product_space(self.full_space(), v).issubset(v)

    def is_right_ideal(self, v: Subspace) -> bool:
        return self.product_space(v, self.full_space()).issubset(v)

    def is_ideal(self, v: Subspace) -> bool:
        return self.is_left_ideal(v) and self.is_right_ideal(v)

    def is_subalgebra(self, v: Subspace) -> bool:
        return self.product_space(v, v).issubset(v)

    def ideal_closure(self, v: Subspace) -> Subspace:
        """Smallest two-sided ideal containing ``v``."""
        full = self.full_space()
        cur = v
        while True:
            nxt = cur + self.product_space(full, cur) + self.product_space(cur, full)
            if nxt == cur:
                return cur
            cur = nxt

    def subalgebra_closure(self, v: Subspace) -> Subspace:
        cur = v
        while True:
            nxt = cur + self.product_space(cur, cur)
            if nxt == cur:
                return cur
            cur = nxt

    def ideal_tools(self, v: Subspace) -> dict:
        return {
            "is_ideal": self.is_ideal(v),
            "is_left_ideal": self.is_left_ideal(v),
            "is_right_ideal": self.is_right_ideal(v),
            "closure": self.ideal_closure(v),
        }

    # ------------------------------------------------------------------
    # series
    # ------------------------------------------------------------------
    def series(self, kind: str) -> Series:
        """Iterate a series until it stabilizes.

        ``kind`` is ``"left_descending_central"`` (``L^{r+1} = L L^r``) or
        ``"derived"`` (``L^(r+1) = L^(r) L^(r)``).
        """
        kind = kind.lower().replace("-", "_")
        full = self.full_space()
        terms = [full]
        while True:
            cur = terms[-1]
            if kind in ("left_descending_central", "lower_central", "ldc"):
                nxt = self.product_space(full, cur)
            elif kind == "derived":
                nxt = self.product_space(cur, cur)
            else:
                raise ValueError(f"unknown series kind {kind!r}")
            if nxt == cur:
                break
            terms.append(nxt)
        return Series(kind, IdealChain(tuple(terms), "ideal"))

    def lower_central_series(self) -> Series:
        return self.series("left_descending_central")

    def derived_series(self) -> Series:
        return self.series("derived")

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().limit.is_zero()

    def is_solvable(self) -> bool:
        return self.derived_series().limit.is_zero()

    def nilpotency_class(self) -> int | None:
        s = self.lower_central_series()
        return len(s.terms) - 1 if s.limit.is_zero() else None

    # ------------------------------------------------------------------
    # quotients, subalgebras, change of basis
    # ------------------------------------------------------------------
    def quotient(self, ideal: Subspace):
        """Return ``(L/I, projection)`` with ``L/I`` on the echelon complement of ``I``."""
        if not self.is_ideal(ideal):
            raise NotAnIdeal("quotient requires a two-sided ideal")
        comp = ideal.complement_indices()
        prods = {}
        for a, i in enumerate(comp):
            for b, j in enumerate(comp):
                prods[(a, b)] = ideal.quotient_coordinates(dict(enumerate(self._c[i][j])))
        q = LeibnizAlgebra(self.field, len(comp), prods, validate=True)
        return q, ideal.quotient_map()

    def canonical_lie(self) -> "LeibnizAlgebra":
        q, _ = self.quotient(self.leibniz_kernel())
        return q

    def subalgebra(self, v: Subspace):
        """Return ``(K, inclusion)`` for a multiplication-closed subspace ``v``."""
        if not self.is_subalgebra(v):
            raise ValueError("subspace is not closed under multiplication")
        basis = v.basis
        prods = {}
        for a, x in enumerate(basis):
            for b, y in enumerate(basis):
                prods[(a, b)] = v.coordinates(self.multiply(x, y))
        return LeibnizAlgebra(self.field, v.dim, prods), v.inclusion_map()

    def change_basis(self, columns: Sequence) -> "LeibnizAlgebra":
        """Same algebra in the basis whose old coordinates are ``columns``."""
        p = ExactMatrix.from_columns(self.field, self.dim, columns)
        pinv = p.inverse()
        prods = {}
        for a, x in enumerate(columns):
            for b, y in enumerate(columns):
                prods[(a, b)] = pinv.apply(list(self.multiply(x, y)))
        return LeibnizAlgebra(self.field, self.dim, prods)

    # ------------------------------------------------------------------
    # supersolvability
    # ------------------------------------------------------------------
    def _is_one_dim_ideal(self, v) -> bool:
        line = Subspace.span(self.field, self.dim, [v])
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.multiply(e, v) not in line or self.multiply(v, e) not in line:
                return False
        return True

    def _lines(self):
        f = self.field
        n = self.dim
        for lead in range(n):
            for tail in itertools.product(range(f.p), repeat=n - lead - 1):
                yield (0,) * lead + (1,) + tail

    def find_one_dim_ideal(self, budget: int = DEFAULT_BUDGET):
        """A vector spanning a one-dimensional ideal, or ``None``.

        Over GF(p) every line is tested when ``(p^n-1)/(p-1)`` fits the
        budget; otherwise (and over Q) a depth-first search over common
        eigenvectors of all left and right multiplications is used, with
        eigenvalue candidates taken from the field (GF(p)) or from the
        rational roots of characteristic polynomials (Q).
        """
        if self.dim == 0:
            return None
        f = self.field
        if f.is_finite and (f.p**self.dim - 1) // (f.p - 1) <= budget:
            for v in self._lines():
                if self._is_one_dim_ideal(v):
                    return v
            return None
        ops = self.left_mult_basis() + self.right_mult_basis()
        v = _common_eigenvector(f, self.dim, ops)
        return v

    def is_supersolvable(self, budget: int = DEFAULT_BUDGET) -> SupersolvableResult:
        """Decide supersolvability by peeling off one-dimensional ideals.

        Over GF(p) the answer is exact.  Over Q, failure to find a rational
        one-dimensional ideal is reported as ``UNKNOWN``.
        """
        if self.dim == 0:
            return SupersolvableResult(Supersolvability.YES, IdealChain((self.zero_space(),)))
        v = self.find_one_dim_ideal(budget)
        if v is None:
            status = Supersolvability.NO if self.field.is_finite else Supersolvability.UNKNOWN
            return SupersolvableResult(status)
        line = Subspace.span(self.field, self.dim, [v])
        q, proj = self.quotient(line)
        sub = q.is_supersolvable(budget)
        if not sub.is_yes:
            return SupersolvableResult(sub.status)
        lifted = tuple(t.preimage(proj) for t in sub.chain.terms) + (self.zero_space(),)
        return SupersolvableResult(Supersolvability.YES, IdealChain(lifted, "ideal"))

    # ------------------------------------------------------------------
    # enumeration over finite fields
    # ------------------------------------------------------------------
    def subalgebras(self, budget: int = DEFAULT_BUDGET) -> list:
        return [v for v in all_subspaces(self.field, self.dim, budget) if self.is_subalgebra(v)]

    def ideals(self, budget: int = DEFAULT_BUDGET) -> list:
        return [v for v in all_subspaces(self.field, self.dim, budget) if self.is_ideal(v)]

    def maximal_subalgebras(self, budget: int = DEFAULT_BUDGET) -> list:
        """All maximal proper subalgebras (finite fields only)."""
        if not self.field.is_finite:
            raise ValueError("maximal subalgebra enumeration needs a finite field")
        if self.dim == 0:
            return []
        subs = [v for v in self.subalgebras(budget) if v.dim < self.dim]
        return _maximal_elements(subs)

    def frattini(self, budget: int = DEFAULT_BUDGET) -> Subspace:
        """Intersection of all maximal subalgebras (finite fields only)."""
        maxes = self.maximal_subalgebras(budget)
        out = self.full_space() if maxes else self.zero_space()
        for m in maxes:
            out = out & m
        return out

    def maximal_chain_lengths(self, budget: int = DEFAULT_BUDGET) -> set:
        """Lengths of all maximal chains of subalgebras ``L = H_r > ... > H_0 = 0``."""
        subs = self.subalgebras(budget)
        memo: dict = {}

        def lengths(h: Subspace) -> frozenset:
            if h.is_zero():
                return frozenset({0})
            if h in memo:
                return memo[h]
            below = [s for s in subs if s < h]
            out = set()
            for m in _maximal_elements(below):
                out.update(1 + x for x in lengths(m))
            memo[h] = frozenset(out)
            return memo[h]

        return set(lengths(self.full_space()))

    # ------------------------------------------------------------------
    # exponentials
    # ------------------------------------------------------------------
    def exp_left_mult(self, x) -> ExactMatrix:
        """``exp(L_x)`` when ``L_x^2 = 0`` or (char 0 and ``L_x`` nilpotent).

        The result is verified to be an algebra automorphism.
        """
        lx = self.left_mult(x)
        n = self.dim
        sq = lx @ lx
        if sq.is_zero():
            sigma = ExactMatrix.identity(self.field, n) + lx
        elif self.field.characteristic == 0 and lx.is_nilpotent():
            sigma = ExactMatrix.identity(self.field, n)
            power = ExactMatrix.identity(self.field, n)
            for k in range(1, n + 1):
                power = power @ lx
                if power.is_zero():
                    break
                sigma = sigma + power.scale(Fraction(1, factorial(k)))
        else:
            raise NilpotencyError("exp(L_x) needs L_x^2 = 0, or L_x nilpotent in characteristic 0")
        if not self.is_automorphism(sigma):
            raise NilpotencyError("exp(L_x) is not an automorphism of the algebra")
        return sigma

    def is_automorphism(self, sigma: ExactMatrix) -> bool:
        if not sigma.is_invertible():
            return False
        images = [tuple(sigma.column(i)) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = sigma.apply(list(self._c[i][j]))
                if tuple(lhs) != self.multiply(images[i], images[j]):
                    return False
        return True

    def exp_conjugate(self, x, k: Subspace) -> Subspace:
        """Image of ``k`` under ``exp(L_x)``."""
        return k.image_under(self.exp_left_mult(x))


def _maximal_elements(spaces: list) -> list:
    out = []
    for s in spaces:
        if not any(s < t for t in spaces):
            out.append(s)
    return out


# --------------------------------------------------------------------------
# polynomials (characteristic polynomials and rational roots)
# --------------------------------------------------------------------------


def charpoly(m: ExactMatrix) -> list:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(t I - m)`` over Q (Faddeev-LeVerrier)."""
    n = m.nrows
    a = [[Fraction(v) for v in row] for row in m.to_dense()]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # mk <- a @ mk + c_{n-k+1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return coeffs


def _divisors(n: int) -> list:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: Sequence) -> list:
    """Distinct rational roots of ``sum c_k t^k`` by the rational root theorem."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = []
    while coeffs[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) == 1:
        return roots
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    for pnum in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for sgn in (1, -1):
                r = Fraction(sgn * pnum, q)
                if r in roots:
                    continue
                val = sum(c * r**k for k, c in enumerate(ints))
                if val == 0:
                    roots.append(r)
    return sorted(roots)


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def eigenvalue_candidates(field: Field, m: ExactMatrix) -> list:
    if field.is_finite:
        return list(field.elements())
    return rational_roots(charpoly(m))


def _common_eigenvector(field: Field, n: int, ops: list):
    """Nonzero common eigenvector of ``ops`` with eigenvalues in the field, or None."""

    def search(space: Subspace, k: int):
        if space.is_zero():
            return None
        if k == len(ops):
            return space.basis[0]
        t = ops[k]
        for mu in eigenvalue_candidates(field, t):
            shifted = t - ExactMatrix.scalar(field, n, mu)
            sub = space & shifted.kernel()
            hit = search(sub, k + 1)
            if hit is not None:
                return hit
        return None

    return search(Subspace.full(field, n), 0)


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def abelian(field: Field, n: int) -> LeibnizAlgebra:
    return LeibnizAlgebra(field, n, {}, name=f"abelian({n})")


def one_dim_lie(field: Field) -> LeibnizAlgebra:
    """The one-dimensional Lie algebra ``F e``."""
    return LeibnizAlgebra(field, 1, {}, name="Fe")


def nilpotent_2d(field: Field) -> LeibnizAlgebra:
    """Basis ``(e, f)`` with ``ff = e`` and all other products zero."""
    return LeibnizAlgebra(field, 2, {(1, 1): (1, 0)}, name="N")


def hemisemidirect_2d(field: Field) -> LeibnizAlgebra:
    """Basis ``(h, e)`` with ``he = e`` and all other products zero."""
    return LeibnizAlgebra(field, 2, {(0, 1): (0, 1)}, name="A")


def sl2(field: Field) -> LeibnizAlgebra:
    """``sl_2`` in the basis ``(e, h, f)``: [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    prods = {
        (1, 0): (2, 0, 0), (0, 1): (-2, 0, 0),
        (1, 2): (0, 0, -2), (2, 1): (0, 0, 2),
        (0, 2): (0, 1, 0), (2, 0): (0, -1, 0),
    }
    return LeibnizAlgebra(field, 3, prods, name="sl2")


def hemi_semidirect(lie: LeibnizAlgebra, action: Sequence[ExactMatrix]) -> LeibnizAlgebra:
    """``g (+) V`` with product ``(g,u)(h,v) = (gh, g.v)``.

    ``action[i]`` is the matrix of the basis element ``g_i`` on ``V``; it
    must make ``V`` a left module of the Lie algebra ``lie``.
    """
    if not lie.is_lie():
        raise ValueError("hemi-semidirect product needs a Lie algebra")
    f = lie.field
    if len(action) != lie.dim:
        raise ValueError("one action matrix per basis element is required")
    dv = action[0].nrows if action else 0
    for i in range(lie.dim):
        for j in range(lie.dim):
            lhs = ExactMatrix.zeros(f, dv, dv)
            for k, c in enumerate(lie.basis_product(i, j)):
                if c:
                    lhs = lhs + action[k].scale(c)
            rhs = action[i] @ action[j] - action[j] @ action[i]
            if lhs != rhs:
                raise ValueError(f"action is not a left module at ({i}, {j})")
    n = lie.dim + dv
    prods = {}
    for i in range(lie.dim):
        for j in range(lie.dim):
            prods[(i, j)] = tuple(lie.basis_product(i, j)) + (f.zero,) * dv
        for a in range(dv):
            prods[(i, lie.dim + a)] = (f.zero,) * lie.dim + tuple(action[i].column(a))
    return LeibnizAlgebra(f, n, prods, name="hemi-semidirect")


def semidirect_lie(lie: LeibnizAlgebra, action: Sequence[ExactMatrix]) -> LeibnizAlgebra:
    """Lie semidirect product ``g |x V`` with ``V`` abelian: ``[g, v] = g.v = -[v, g]``."""
    f = lie.field
    dv = action[0].nrows if action else 0
    prods = {}
    for i in range(lie.dim):
        for j in range(lie.dim):
            prods[(i, j)] = tuple(lie.basis_product(i, j)) + (f.zero,) * dv
        for a in range(dv):
            col = tuple(action[i].column(a))
            prods[(i, lie.dim + a)] = (f.zero,) * lie.dim + col
            prods[(lie.dim + a, i)] = (f.zero,) * lie.dim + tuple(f(-v) for v in col)
    return LeibnizAlgebra(f, lie.dim + dv, prods, name="semidirect")


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    f = a.field
    n = a.dim + b.dim
    prods = {}
    for i in range(a.dim):
        for j in range(a.dim):
            prods[(i, j)] = tuple(a.basis_product(i, j)) + (f.zero,) * b.dim
    for i in range(b.dim):
        for j in range(b.dim):
            prods[(a.dim + i, a.dim + j)] = (f.zero,) * a.dim + tuple(b.basis_product(i, j))
    return LeibnizAlgebra(f, n, prods)
