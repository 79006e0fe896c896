"""Leibniz bimodules given by matrices of the left and right actions.

A bimodule over an algebra with basis ``e_1..e_n`` is stored as two lists of
square matrices: ``lam[i]`` is ``m -> e_i . m`` and ``rho[i]`` is
``m -> m . e_i``.  The compatibility conditions are checked on basis pairs::

    lam(xy) = lam(x) lam(y) - lam(y) lam(x)
    rho(xy) = lam(x) rho(y) - rho(y) lam(x)
    rho(y) rho(x) = -rho(y) lam(x)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LeibnizAlgebra, ValidationReport, _common_eigenvector
from .exactla import BudgetExceeded, ExactMatrix, Subspace

LINE_BUDGET = 20000


class BimoduleAxiomError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(report.message)


class Bimodule:
    def __init__(self, algebra: LeibnizAlgebra, dim: int, lam: Sequence, rho: Sequence,
                 *, validate: bool = True, name: str | None = None):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.name = name
        if len(lam) != algebra.dim or len(rho) != algebra.dim:
            raise ValueError(f"need {algebra.dim} left and right action matrices")
        self.lam = [self._as_matrix(m) for m in lam]
        self.rho = [self._as_matrix(m) for m in rho]
        if validate:
            report = self.validate()
            if not report.ok:
                raise BimoduleAxiomError(report)

    def _as_matrix(self, m) -> ExactMatrix:
        if isinstance(m, ExactMatrix):
            if m.shape != (self.dim, self.dim) or m.field != self.field:
                raise ValueError(f"action matrix must be {self.dim}x{self.dim} over {self.field!r}")
            return m
        if self.dim == 0:
            return ExactMatrix.zeros(self.field, 0, 0)
        m = ExactMatrix.from_dense(self.field, m)
        if m.shape != (self.dim, self.dim):
            raise ValueError(f"action matrix must be {self.dim}x{self.dim}")
        return m

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Bimodule{label}(dim={self.dim}, algebra_dim={self.algebra.dim}, field={self.field!r})"

    # ------------------------------------------------------------------
    def _combine(self, mats, x) -> ExactMatrix:
        x = self.algebra.element(x)
        out = ExactMatrix.zeros(self.field, self.dim, self.dim)
        for xi, m in zip(x, mats):
            if xi:
                out = out + m.scale(xi)
        return out

    def left_action(self, x) -> ExactMatrix:
        return self._combine(self.lam, x)

    def right_action(self, x) -> ExactMatrix:
        return self._combine(self.rho, x)

    def operators(self) -> list:
        return list(self.lam) + list(self.rho)

    def validate(self) -> ValidationReport:
        """Check the three compatibility identities on all basis pairs.

        Every violation is listed as ``(identity, (i, j))`` with identity one
        of ``"left"``, ``"mixed"``, ``"right"``; the first one located is also
        reported in ``triple``/``message``.
        """
        a = self.algebra
        n = a.dim
        found = []
        for i in range(n):
            for j in range(n):
                xy = a.basis_product(i, j)
                li, lj, ri, rj = self.lam[i], self.lam[j], self.rho[i], self.rho[j]
                if self.left_action(xy) != li @ lj - lj @ li:
                    found.append(("left", (i, j)))
                if self.right_action(xy) != li @ rj - rj @ li:
                    found.append(("mixed", (i, j)))
                if rj @ ri != -(rj @ li):
                    found.append(("right", (i, j)))
        if not found:
            return ValidationReport(True)
        name, pair = found[0]
        return ValidationReport(False, pair, f"{name} identity fails at (e{pair[0]}, e{pair[1]})",
                                tuple(found))

    # ------------------------------------------------------------------
    # predicates
    # ------------------------------------------------------------------
    def is_symmetric(self) -> bool:
        return all(r == -l for l, r in zip(self.lam, self.rho))

    def is_antisymmetric(self) -> bool:
        return all(r.is_zero() for r in self.rho)

    def is_trivial(self) -> bool:
        return all(m.is_zero() for m in self.operators())

    def is_sub_bimodule(self, space: Subspace) -> bool:
        return all(space.is_invariant(t) for t in self.operators())

    # ------------------------------------------------------------------
    # distinguished subspaces of M
    # ------------------------------------------------------------------
    def _common_kernel(self, mats) -> Subspace:
        if not mats or self.dim == 0:
            return Subspace.full(self.field, self.dim)
        return ExactMatrix.vstack(mats).kernel()

    def right_invariants(self, s=None) -> Subspace:
        """``{m : m . s = 0 for every s}``; ``s`` defaults to the whole algebra."""
        if s is None:
            return self._common_kernel(self.rho)
        vecs = s.basis if isinstance(s, Subspace) else list(s)
        return self._common_kernel([self.right_action(v) for v in vecs])

    def left_invariants(self, s=None) -> Subspace:
        if s is None:
            return self._common_kernel(self.lam)
        vecs = s.basis if isinstance(s, Subspace) else list(s)
        return self._common_kernel([self.left_action(v) for v in vecs])

    def trivial_part(self) -> Subspace:
        """Largest trivial sub-bimodule: vectors killed by both actions."""
        return self._common_kernel(self.operators())

    def antisymmetric_kernel(self) -> Subspace:
        """Span of ``x.m + m.x``, the sum of the images of ``lam_i + rho_i``."""
        if self.algebra.dim == 0 or self.dim == 0:
            return Subspace.zero(self.field, self.dim)
        return ExactMatrix.hstack([l + r for l, r in zip(self.lam, self.rho)]).image()

    def right_image(self) -> Subspace:
        """Span of all ``m . x``."""
        if self.algebra.dim == 0 or self.dim == 0:
            return Subspace.zero(self.field, self.dim)
        return ExactMatrix.hstack(self.rho).image()

    # ------------------------------------------------------------------
    # annihilators (subspaces of the algebra)
    # ------------------------------------------------------------------
    def _annihilator(self, mats) -> Subspace:
        n = self.algebra.dim
        if self.dim == 0 or n == 0:
            return Subspace.full(self.field, n)
        cols = []
        for m in mats:
            col = {}
            for r, row in enumerate(m.rows()):
                for c, v in row.items():
                    col[r * self.dim + c] = v
            cols.append(col)
        return ExactMatrix.from_columns(self.field, self.dim * self.dim, cols).kernel()

    def left_annihilator(self) -> Subspace:
        return self._annihilator(self.lam)

    def right_annihilator(self) -> Subspace:
        return self._annihilator(self.rho)

    def annihilator(self) -> Subspace:
        return self.left_annihilator() & self.right_annihilator()

    def annihilators(self) -> dict:
        left = self.left_annihilator()
        right = self.right_annihilator()
        return {"left": left, "right": right, "both": left & right}

    def is_right_faithful(self) -> bool:
        return self.right_annihilator().is_zero()

    # ------------------------------------------------------------------
    # sub-bimodules and quotients
    # ------------------------------------------------------------------
    def generated(self, vectors) -> Subspace:
        """Smallest sub-bimodule containing ``vectors`` (spinning)."""
        cur = Subspace.span(self.field, self.dim, list(vectors))
        ops = self.operators()
        frontier = list(cur.sparse_basis)
        while frontier:
            new = []
            for v in frontier:
                for t in ops:
                    w = t.apply_sparse(v)
                    if w and cur.reduce(w):
                        new.append(w)
            if not new:
                break
            grown = Subspace.span(self.field, self.dim, list(cur.sparse_basis) + new)
            frontier = new
            cur = grown
        return cur

    def submodule(self, space: Subspace) -> "Bimodule":
        """The sub-bimodule on ``space``, in its echelon basis."""
        if not self.is_sub_bimodule(space):
            raise ValueError("subspace is not invariant under both actions")
        return Bimodule(self.algebra, space.dim, [space.restrict(t) for t in self.lam],
                        [space.restrict(t) for t in self.rho], validate=False)

    def quotient(self, space: Subspace) -> "Bimodule":
        """``M / space`` on the echelon complement of ``space``."""
        if not self.is_sub_bimodule(space):
            raise ValueError("subspace is not invariant under both actions")
        k = self.dim - space.dim
        return Bimodule(self.algebra, k, [space.induced_on_quotient(t) for t in self.lam],
                        [space.induced_on_quotient(t) for t in self.rho], validate=False)

    def subquotient(self, upper: Subspace, lower: Subspace) -> "Bimodule":
        sub = self.submodule(upper)
        inner = Subspace.span(self.field, upper.dim, [upper.coordinates(v) for v in lower.basis])
        return sub.quotient(inner)

    def symmetric_quotient(self) -> "Bimodule":
        return self.quotient(self.antisymmetric_kernel())

    # ------------------------------------------------------------------
    # irreducibility and composition series
    # ------------------------------------------------------------------
    def _dual_operators(self) -> list:
        return [t.T for t in self.operators()]

    def find_proper_submodule(self, line_budget: int = LINE_BUDGET):
        """Return ``(W, certain)``.

        ``W`` is a proper nonzero sub-bimodule or ``None``.  When ``W`` is
        ``None``, ``certain`` says whether the search was exhaustive.
        """
        d = self.dim
        f = self.field
        if d <= 1:
            return None, True
        for k in range(d):
            w = self.generated([{k: f.one}])
            if w.dim < d:
                return w, True
        ops = self.operators()
        v = _common_eigenvector(f, d, ops)
        if v is not None:
            return Subspace.span(f, d, [v]), True
        cov = _common_eigenvector(f, d, self._dual_operators())
        if cov is not None:
            hyper = ExactMatrix.from_dense(f, [cov]).kernel()
            return hyper, True
        if d <= 3:
            # any proper submodule has dimension 1 or codimension 1
            return None, True
        if f.is_finite and (f.p**d - 1) // (f.p - 1) <= line_budget:
            for line in _lines(f.p, d):
                w = self.generated([line])
                if w.dim < d:
                    return w, True
            return None, True
        return None, False

    def is_irreducible(self, line_budget: int = LINE_BUDGET):
        """``True``/``False``, or ``None`` when the search was not exhaustive."""
        if self.dim == 0:
            return False
        w, certain = self.find_proper_submodule(line_budget)
        if w is not None:
            return False
        return True if certain else None

    def commutant_dim(self) -> int:
        """Dimension of the space of matrices commuting with both actions."""
        d = self.dim
        if d == 0:
            return 0
        eye = ExactMatrix.identity(self.field, d)
        # X A - A X in row-major vec(X) coordinates: (I (x) A^T) - (A (x) I)
        blocks = [eye.kron(t.T) - t.kron(eye) for t in self.operators()]
        if not blocks:
            return d * d
        return ExactMatrix.vstack(blocks).kernel().dim

    def is_absolutely_irreducible(self, line_budget: int = LINE_BUDGET):
        irr = self.is_irreducible(line_budget)
        if irr is not True:
            return irr
        return self.commutant_dim() == 1

    def _irreducible_submodule(self, line_budget: int):
        """An irreducible sub-bimodule found by descent, with a certainty flag."""
        cur = Subspace.full(self.field, self.dim)
        module = self
        while True:
            w, certain = module.find_proper_submodule(line_budget)
            if w is None:
                return cur, certain
            # map w (coordinates inside cur) back to the ambient space
            inc = cur.inclusion_map()
            cur = w.image_under(inc)
            module = self.submodule(cur)

    def composition_series(self, line_budget: int = LINE_BUDGET) -> "CompositionSeries":
        field = self.field
        chain = [Subspace.zero(field, self.dim)]
        certified = []
        current = chain[0]
        while current.dim < self.dim:
            quot = self.quotient(current)
            w, certain = quot._irreducible_submodule(line_budget)
            lift = w.image_under(current.section_map()) + current
            chain.append(lift)
            certified.append(certain)
            current = lift
        factors = []
        for k in range(1, len(chain)):
            fac = self.subquotient(chain[k], chain[k - 1])
            factors.append(CompositionFactor(fac, certified[k - 1]))
        return CompositionSeries(tuple(chain), tuple(factors))

    # ------------------------------------------------------------------
    # restriction
    # ------------------------------------------------------------------
    def restrict_to_subalgebra(self, s: Subspace) -> "Bimodule":
        """The bimodule over the subalgebra ``s`` (in its echelon basis)."""
        sub, _ = self.algebra.subalgebra(s)
        lam = [self.left_action(v) for v in s.basis]
        rho = [self.right_action(v) for v in s.basis]
        return Bimodule(sub, self.dim, lam, rho)

    def change_algebra_basis(self, algebra: LeibnizAlgebra, columns: Sequence) -> "Bimodule":
        """Re-express over ``algebra``, the same algebra in the basis ``columns``."""
        lam = [self.left_action(v) for v in columns]
        rho = [self.right_action(v) for v in columns]
        return Bimodule(algebra, self.dim, lam, rho)


@dataclass(frozen=True)
class CompositionFactor:
    module: Bimodule
    certified: bool

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def is_trivial(self) -> bool:
        return self.module.is_trivial()


@dataclass(frozen=True)
class CompositionSeries:
    chain: tuple
    factors: tuple

    @property
    def certified(self) -> bool:
        return all(f.certified for f in self.factors)

    def has_trivial_factor(self) -> bool:
        return any(f.is_trivial for f in self.factors)

    def has_one_dim_factor(self) -> bool:
        return any(f.dim == 1 for f in self.factors)

    def all_absolutely_irreducible(self):
        flags = [f.module.is_absolutely_irreducible() for f in self.factors]
        if any(x is None for x in flags):
            return None
        return all(flags)


def _lines(p: int, d: int):
    import itertools

    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def trivial(algebra: LeibnizAlgebra, d: int = 1) -> Bimodule:
    z = ExactMatrix.zeros(algebra.field, d, d)
    return Bimodule(algebra, d, [z] * algebra.dim, [z] * algebra.dim, name="trivial")


def adjoint(algebra: LeibnizAlgebra) -> Bimodule:
    return Bimodule(algebra, algebra.dim, algebra.left_mult_basis(), algebra.right_mult_basis(),
                    name="adjoint")


def _check_left_module(algebra: LeibnizAlgebra, lam: Sequence[ExactMatrix]):
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            lhs = None
            for k, c in enumerate(algebra.basis_product(i, j)):
                if c:
                    term = lam[k].scale(c)
                    lhs = term if lhs is None else lhs + term
            rhs = lam[i] @ lam[j] - lam[j] @ lam[i]
            if (lhs is None and not rhs.is_zero()) or (lhs is not None and lhs != rhs):
                raise BimoduleAxiomError(
                    ValidationReport(False, (i, j), f"not a left module at (e{i}, e{j})"))


def symmetric_from_left(algebra: LeibnizAlgebra, lam: Sequence) -> Bimodule:
    """Symmetric bimodule with right action ``m.x = -x.m``."""
    f = algebra.field
    lam = [m if isinstance(m, ExactMatrix) else ExactMatrix.from_dense(f, m) for m in lam]
    _check_left_module(algebra, lam)
    d = lam[0].nrows if lam else 0
    return Bimodule(algebra, d, lam, [-m for m in lam], name="symmetric")


def antisymmetric_from_left(algebra: LeibnizAlgebra, lam: Sequence) -> Bimodule:
    """Anti-symmetric bimodule with zero right action."""
    f = algebra.field
    lam = [m if isinstance(m, ExactMatrix) else ExactMatrix.from_dense(f, m) for m in lam]
    _check_left_module(algebra, lam)
    d = lam[0].nrows if lam else 0
    z = ExactMatrix.zeros(f, d, d)
    return Bimodule(algebra, d, lam, [z] * len(lam), name="antisymmetric")


def direct_sum(a: Bimodule, b: Bimodule) -> Bimodule:
    def block(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
        top = ExactMatrix.hstack([x, ExactMatrix.zeros(a.field, a.dim, b.dim)]) if b.dim else x
        bot = ExactMatrix.hstack([ExactMatrix.zeros(a.field, b.dim, a.dim), y]) if a.dim else y
        if not a.dim:
            return bot
        if not b.dim:
            return top
        return ExactMatrix.vstack([top, bot])

    lam = [block(x, y) for x, y in zip(a.lam, b.lam)]
    rho = [block(x, y) for x, y in zip(a.rho, b.rho)]
    return Bimodule(a.algebra, a.dim + b.dim, lam, rho)


def hom_symmetric(m: Bimodule) -> Bimodule:
    """``Hom(L, M)`` with left action ``(x.f)(y) = x.f(y) - f(xy)``, made symmetric.

    ``f`` is stored block-wise: coordinate ``j * dim M + b`` is the
    ``b``-th coordinate of ``f(e_j)``.
    """
    a = m.algebra
    f = m.field
    eye_l = ExactMatrix.identity(f, a.dim)
    eye_m = ExactMatrix.identity(f, m.dim)
    lam = [eye_l.kron(m.lam[i]) - a.left_mult_basis()[i].T.kron(eye_m) for i in range(a.dim)]
    return symmetric_from_left(a, lam)
