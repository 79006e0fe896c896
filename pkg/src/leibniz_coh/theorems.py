"""Hypothesis tracking and conclusion checks for the vanishing and structure theorems.

Every check returns a :class:`TheoremReport`.  A hypothesis is recorded as
satisfied, violated, or not checkable (with a reason).  The verdict is

* ``VacuouslyTrue`` if some hypothesis is violated,
* ``NotApplicable`` if some hypothesis cannot be decided,
* ``Pass``/``Fail`` according to the conclusion otherwise.

Theorems that need an algebraically closed ground field are run over GF(p)
with an absolute-irreducibility gate: if the gate fails the instance can
still Pass, but a failed conclusion is downgraded to ``NotApplicable``.
"""
from __future__ import annotations

import enum
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .algebra import LeibnizAlgebra, Supersolvability, _common_eigenvector, hemisemidirect_2d, nilpotent_2d
from .bimodule import Bimodule, adjoint, hom_symmetric, trivial
from .cohomology import LeibnizComplex, periodicity_dims
from .exactla import QQ, GF, BudgetExceeded, ExactMatrix, Subspace, all_subspaces
from .fitting import check_fitting_theorem, fitting_set, verify_nilpotency_identities
from . import generators as gen

ENUMERATION_BUDGET = 2000
COMPLEMENT_BUDGET = 10**5
ELEMENT_BUDGET = 125


class Verdict(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    VACUOUSLY_TRUE = "VacuouslyTrue"
    NOT_APPLICABLE = "NotApplicable"


@dataclass
class Hypothesis:
    name: str
    satisfied: bool | None
    reason: str = ""

    def to_dict(self):
        out = {"name": self.name, "satisfied": self.satisfied}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class TheoremReport:
    theorem_id: str
    hypotheses: list
    conclusion_verified_up_to: int | None
    verdict: Verdict
    notes: list = dc_field(default_factory=list)
    data: dict = dc_field(default_factory=dict)
    paper_anchor: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "paper_anchor": self.paper_anchor,
            "verdict": self.verdict.value,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "conclusion_verified_up_to": self.conclusion_verified_up_to,
            "notes": list(self.notes),
            "data": _jsonable(self.data),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


class UnknownTheorem(KeyError):
    pass


# --------------------------------------------------------------------------
# shared predicates
# --------------------------------------------------------------------------


class _Ctx:
    """Per-check cache of cohomology dimensions and derived subspaces."""

    def __init__(self, algebra: LeibnizAlgebra, module: Bimodule | None, n_max: int):
        self.algebra = algebra
        self.module = module
        self.n_max = n_max
        self._hl = {}

    def hl_dims(self, m: Bimodule | None = None) -> list:
        m = self.module if m is None else m
        key = id(m)
        if key not in self._hl:
            self._hl[key] = (m, LeibnizComplex(m).hl_dims(self.n_max))
        return self._hl[key][1]


def _hl_zero(dims, start: int):
    """``(ok, verified_up_to)`` for ``HL^n = 0`` with ``start <= n``."""
    for n, d in enumerate(dims):
        if n >= start and d:
            return False, n - 1
    return True, len(dims) - 1


def _is_char0(f) -> bool:
    return not f.is_finite


def _subspace_candidates(alg: LeibnizAlgebra, keep) -> list:
    """All subspaces passing ``keep`` (finite fields) or a structural list (Q)."""
    if alg.field.is_finite:
        try:
            return [v for v in all_subspaces(alg.field, alg.dim, ENUMERATION_BUDGET) if keep(v)]
        except BudgetExceeded:
            pass
    cands = [alg.zero_space(), alg.full_space(), alg.leibniz_kernel(), alg.derived_subalgebra(),
             alg.left_center()]
    cands += list(alg.lower_central_series().terms) + list(alg.derived_series().terms)
    cands += [Subspace.span(alg.field, alg.dim, [alg.basis_vector(i)]) for i in range(alg.dim)]
    out = []
    for v in cands:
        if v not in out and keep(v):
            out.append(v)
    return out


def _elements(alg: LeibnizAlgebra) -> list | None:
    f = alg.field
    if f.is_finite and f.p ** alg.dim <= ELEMENT_BUDGET:
        return [tuple(v) for v in itertools.product(range(f.p), repeat=alg.dim)]
    return None


def _small_combinations(alg: LeibnizAlgebra) -> list:
    """Basis elements and all sums of two distinct basis elements."""
    out = [alg.basis_vector(i) for i in range(alg.dim)]
    for i, j in itertools.combinations(range(alg.dim), 2):
        out.append(tuple(alg.field(a + b) for a, b in zip(alg.basis_vector(i), alg.basis_vector(j))))
    return out


def _left_nilpotent(alg, x) -> bool:
    return alg.left_mult(x).is_nilpotent()


def _nilpotent_subsets(alg: LeibnizAlgebra) -> list:
    """Candidate sets ``S`` of elements with nilpotent left multiplication."""
    elems = _elements(alg)
    if elems is None:
        pool = [x for x in _small_combinations(alg) if _left_nilpotent(alg, x)]
        sets = [[x] for x in pool]
        if pool:
            sets.append(pool)
        return sets
    nil = [x for x in elems if any(x) and _left_nilpotent(alg, x)]
    sets = [[x] for x in nil[:4]]
    basis_nil = [alg.basis_vector(i) for i in range(alg.dim) if _left_nilpotent(alg, alg.basis_vector(i))]
    if basis_nil:
        sets.append(basis_nil)
    if nil:
        sets.append(nil)
    return sets


def _nilpotent_right_ideals(alg: LeibnizAlgebra) -> list:
    def keep(v):
        if v.is_zero() or not alg.is_right_ideal(v):
            return False
        sub, _ = alg.subalgebra(v)
        return sub.is_nilpotent()

    return _subspace_candidates(alg, keep)


def _ideal_elements(alg: LeibnizAlgebra, v: Subspace) -> list:
    f = alg.field
    if f.is_finite and f.p ** v.dim <= ELEMENT_BUDGET:
        return [tuple(x) for x in v.elements() if any(x)]
    return [tuple(b) for b in v.basis]


def killing_form(alg: LeibnizAlgebra) -> ExactMatrix:
    ads = alg.left_mult_basis()
    n = alg.dim
    data = [[_trace(ads[i] @ ads[j]) for j in range(n)] for i in range(n)]
    return ExactMatrix.from_dense(alg.field, data, ncols=n)


def _trace(m: ExactMatrix):
    f = m.field
    return f(sum(m[i, i] for i in range(m.nrows)))


def is_semisimple_lie(alg: LeibnizAlgebra) -> bool | None:
    """Lie algebra without nonzero abelian ideals (``None`` if undecidable here)."""
    if not alg.is_lie():
        return False
    if alg.dim == 0:
        return True
    if not alg.field.is_finite:
        # Cartan's criterion in characteristic zero
        return killing_form(alg).is_invertible()
    try:
        ideals = alg.ideals(ENUMERATION_BUDGET)
    except BudgetExceeded:
        return None
    for v in ideals:
        if v.is_zero():
            continue
        if not alg.product_space(v, v).is_zero():
            continue
        return False
    return True


def _composition(m: Bimodule):
    series = m.composition_series()
    return series, series.certified


def _closed_field_gate(m: Bimodule | None, alg: LeibnizAlgebra) -> Hypothesis:
    """Absolute irreducibility of all composition factors as a stand-in for a closed field."""
    name = "closed field (absolutely irreducible composition factors)"
    if not alg.field.is_finite:
        return Hypothesis(name, None, "closed-field caveat: absolute irreducibility is not certified over Q")
    target = adjoint(alg) if m is None else m
    series = target.composition_series()
    if not series.certified:
        return Hypothesis(name, None, "closed-field caveat: composition series not certified")
    flag = series.all_absolutely_irreducible()
    if flag is None:
        return Hypothesis(name, None, "closed-field caveat: irreducibility search inconclusive")
    return Hypothesis(name, flag, "" if flag else "closed-field caveat: a factor splits over the closure")


def _decide(theorem_id, hyps, conclusion, gate: Hypothesis | None = None, notes=None):
    """Combine hypotheses, an optional closed-field gate, and a conclusion thunk.

    ``conclusion`` returns ``(ok, verified_up_to, data)``.
    """
    notes = list(notes or [])
    anchor = ANCHORS.get(theorem_id, theorem_id)
    all_hyps = list(hyps) + ([gate] if gate is not None else [])
    if any(h.satisfied is False for h in hyps):
        return TheoremReport(theorem_id, all_hyps, None, Verdict.VACUOUSLY_TRUE, notes, {}, anchor)
    if any(h.satisfied is None for h in hyps) or (gate is not None and gate.satisfied is None):
        return TheoremReport(theorem_id, all_hyps, None, Verdict.NOT_APPLICABLE, notes, {}, anchor)
    ok, upto, data = conclusion()
    if ok:
        if gate is not None and not gate.satisfied:
            notes.append("closed-field caveat: conclusion holds although a factor splits over the closure")
        return TheoremReport(theorem_id, all_hyps, upto, Verdict.PASS, notes, data, anchor)
    if gate is not None and not gate.satisfied:
        notes.append("closed-field caveat: conclusion fails over a non-closed field; no contradiction claimed")
        return TheoremReport(theorem_id, all_hyps, upto, Verdict.NOT_APPLICABLE, notes, data, anchor)
    return TheoremReport(theorem_id, all_hyps, upto, Verdict.FAIL, notes, data, anchor)


def _require_module(m):
    if m is None:
        raise ValueError("this check needs a bimodule")
    return m


# --------------------------------------------------------------------------
# invariant subspaces
# --------------------------------------------------------------------------


def _check_inv(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    ideals = _subspace_candidates(alg, alg.is_left_ideal)

    def conclusion():
        bad = [v.basis for v in ideals if not m.is_sub_bimodule(m.right_invariants(v))]
        return not bad, None, {"left_ideals_checked": len(ideals), "counterexamples": bad[:1]}

    return _decide("inv", [Hypothesis("left ideal available", bool(ideals))], conclusion)


def _check_sym(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    subsets = _subspace_candidates(alg, lambda v: m.right_invariants(v).is_zero())

    def conclusion():
        leib = alg.leibniz_kernel()
        ann = m.annihilator()
        ok = m.is_symmetric() and leib <= ann
        return ok, None, {"killing_subsets": len(subsets)}

    return _decide("sym", [Hypothesis("some subset has zero right invariants", bool(subsets))], conclusion)


def _check_triv(ctx):
    m = _require_module(ctx.module)

    def conclusion():
        lhs = m.right_invariants().is_zero()
        rhs = m.is_symmetric() and m.trivial_part().is_zero()
        return lhs == rhs, None, {"right_invariants_zero": lhs, "symmetric_without_trivial_sub": rhs}

    return _decide("triv", [], conclusion)


def _one_dim_sub(m: Bimodule):
    return _common_eigenvector(m.field, m.dim, m.operators()) if m.dim else None


def _check_1dim(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    gate = _closed_field_gate(m, alg)
    ll = alg.derived_subalgebra()

    def conclusion():
        lhs = m.right_invariants(ll).is_zero()
        no_line = _one_dim_sub(m) is None
        rhs = m.is_symmetric() and no_line
        # the forward implication holds over every field
        if lhs and not rhs:
            return False, None, {"direction": "forward"}
        if rhs and not lhs:
            return False, None, {"direction": "backward"}
        return True, None, {"invariants_zero": lhs, "symmetric_without_line": rhs}

    return _decide("1dim", [], conclusion, gate=gate)


def _check_nontriv(ctx):
    m = _require_module(ctx.module)
    series, certified = _composition(m)
    hyps = [
        Hypothesis("composition series certified", certified or None,
                   "" if certified else "irreducibility search inconclusive"),
    ]
    if certified:
        hyps.append(Hypothesis("no trivial composition factor", not series.has_trivial_factor()))

    def conclusion():
        inv, m0 = m.right_invariants(), m.antisymmetric_kernel()
        ok = inv == m0 and (not m.is_symmetric() or inv.is_zero())
        return ok, None, {"dim_invariants": inv.dim, "dim_antisymmetric_kernel": m0.dim}

    return _decide("nontriv", hyps, conclusion)


def _check_non1dim(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    series, certified = _composition(m)
    hyps = [Hypothesis("composition series certified", certified or None,
                       "" if certified else "irreducibility search inconclusive")]
    if certified:
        hyps.append(Hypothesis("no one-dimensional composition factor", not series.has_one_dim_factor()))
    gate = _closed_field_gate(m, alg)

    def conclusion():
        inv, m0 = m.right_invariants(alg.derived_subalgebra()), m.antisymmetric_kernel()
        ok = inv == m0 and (not m.is_symmetric() or inv.is_zero())
        return ok, None, {"dim_invariants": inv.dim, "dim_antisymmetric_kernel": m0.dim}

    return _decide("non1dim", hyps, conclusion, gate=gate)


# --------------------------------------------------------------------------
# Fitting decompositions
# --------------------------------------------------------------------------


def _check_fitting(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    subsets = _nilpotent_subsets(alg)

    def conclusion():
        for s in subsets:
            res = check_fitting_theorem(m, s)
            if not res.ok:
                return False, None, {"subset": s, "check": res.__dict__}
        return True, None, {"subsets_checked": len(subsets)}

    return _decide("fitting", [Hypothesis("left-nilpotent subset available", bool(subsets))], conclusion)


def _check_identities(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    elems = _small_combinations(alg)

    def conclusion():
        for x in elems:
            for n in range(1, ctx.n_max + 1):
                bad = verify_nilpotency_identities(m, x, n)
                if bad is not None:
                    return False, n - 1, {"element": x, "identity": bad.identity, "y": bad.y_index}
        return True, ctx.n_max, {"elements": len(elems)}

    return _decide("identities", [], conclusion)


# --------------------------------------------------------------------------
# vanishing theorems
# --------------------------------------------------------------------------


def _vanhh_witness(alg, m):
    def good(x):
        return _left_nilpotent(alg, x) and m.left_action(x).is_invertible()

    for x in _small_combinations(alg):
        if good(x):
            return x, True
    elems = _elements(alg)
    if elems is not None:
        for x in elems:
            if good(x):
                return x, True
        return None, True
    return None, False


def _check_vanhh(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    witness, exhaustive = _vanhh_witness(alg, m)
    if witness is not None:
        hyp = Hypothesis("element with nilpotent left multiplication acting invertibly", True)
    elif exhaustive:
        hyp = Hypothesis("element with nilpotent left multiplication acting invertibly", False)
    else:
        hyp = Hypothesis("element with nilpotent left multiplication acting invertibly", None,
                         "no witness among basis elements and sums of two")

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0 if m.is_symmetric() else 1)
        return ok, upto, {"witness": witness, "hl_dims": dims}

    return _decide("vanhh", [hyp], conclusion)


def _compare_dims(a, b, start):
    for n in range(start, len(a)):
        if a[n] != b[n]:
            return False, n - 1
    return True, len(a) - 1


def _check_fittinghh(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    subsets = _nilpotent_subsets(alg)

    def conclusion():
        dims = ctx.hl_dims()
        start = 0 if m.is_symmetric() else 1
        for s in subsets:
            zero = fitting_set(m, s).zero_part
            sub_dims = ctx.hl_dims(m.submodule(zero))
            ok, upto = _compare_dims(dims, sub_dims, start)
            if not ok:
                return False, upto, {"subset": s, "hl_dims": dims, "fitting_hl_dims": sub_dims}
        return True, ctx.n_max, {"subsets_checked": len(subsets), "hl_dims": dims}

    notes = ["degree one included (finite-dimensional coefficients)"]
    return _decide("fittinghh", [Hypothesis("left-nilpotent subset available", bool(subsets))],
                   conclusion, notes=notes)


def _check_cohfitting(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    ideals = _nilpotent_right_ideals(alg)

    def conclusion():
        dims = ctx.hl_dims()
        start = 0 if m.is_symmetric() else 1
        for v in ideals:
            zero = fitting_set(m, _ideal_elements(alg, v)).zero_part
            sub_dims = ctx.hl_dims(m.submodule(zero))
            ok, upto = _compare_dims(dims, sub_dims, start)
            if not ok:
                return False, upto, {"ideal": v.basis, "hl_dims": dims, "fitting_hl_dims": sub_dims}
        return True, ctx.n_max, {"ideals_checked": len(ideals), "hl_dims": dims}

    return _decide("cohfitting", [Hypothesis("nonzero nilpotent right ideal available", bool(ideals))],
                   conclusion)


def _check_van(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    ideals = [v for v in _nilpotent_right_ideals(alg) if m.right_invariants(v).is_zero()]

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"ideal": ideals[0].basis, "hl_dims": dims}

    return _decide("van", [Hypothesis("nilpotent right ideal with zero right invariants", bool(ideals))],
                   conclusion)


def _irreducible_hyps(m: Bimodule) -> list:
    irr = m.is_irreducible()
    return [
        Hypothesis("right faithful", m.is_right_faithful()),
        Hypothesis("irreducible", irr, "" if irr is not None else "irreducibility search inconclusive"),
    ]


def _check_cohnonsemisim(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    ss = is_semisimple_lie(alg)
    hyps = _irreducible_hyps(m)
    hyps.append(Hypothesis("not a semisimple Lie algebra", None if ss is None else not ss,
                           "semisimplicity undecided" if ss is None else ""))

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"hl_dims": dims, "lie": alg.is_lie()}

    return _decide("cohnonsemisim", hyps, conclusion)


def _check_whitehead(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [Hypothesis("characteristic zero", _is_char0(alg.field))]
    if hyps[0].satisfied:
        hyps += _irreducible_hyps(m)

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"hl_dims": dims}

    return _decide("whitehead", hyps, conclusion)


def _check_farnsteiner(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = _irreducible_hyps(m)
    dims = ctx.hl_dims()
    hyps.append(Hypothesis("some cohomology space nonzero", any(dims),
                           "" if any(dims) else f"all vanish up to degree {ctx.n_max}"))

    def conclusion():
        ss = is_semisimple_lie(alg)
        ok = alg.field.is_finite and ss is True
        return ok, ctx.n_max, {"hl_dims": dims, "semisimple_lie": ss}

    return _decide("farnsteiner", hyps, conclusion)


def _check_vannilp(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [Hypothesis("nilpotent", alg.is_nilpotent()),
            Hypothesis("zero right invariants", m.right_invariants().is_zero())]

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"hl_dims": dims}

    return _decide("vannilp", hyps, conclusion)


def _check_dixmier(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [Hypothesis("nilpotent", alg.is_nilpotent())]
    series, certified = _composition(m)
    hyps.append(Hypothesis("composition series certified", certified or None,
                           "" if certified else "irreducibility search inconclusive"))
    if certified:
        hyps.append(Hypothesis("no trivial composition factor", not series.has_trivial_factor()))

    def conclusion():
        dims = ctx.hl_dims()
        m0 = m.antisymmetric_kernel()
        ok0 = dims[0] == m0.dim and m.right_invariants() == m0
        ok, upto = _hl_zero(dims, 1)
        if not ok0:
            ok, upto = False, -1
        return ok, upto, {"hl_dims": dims, "dim_antisymmetric_kernel": m0.dim}

    return _decide("dixmier", hyps, conclusion)


def _check_ab(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [Hypothesis("one-dimensional algebra", alg.dim == 1 and alg.is_abelian())]

    def conclusion():
        dims = ctx.hl_dims()
        closed = periodicity_dims(m, ctx.n_max)
        inv = m.right_invariants()
        m0 = m.antisymmetric_kernel()
        e = alg.basis_vector(0)
        sum_kernel = (m.left_action(e) + m.right_action(e)).kernel()
        ratio_ok = sum_kernel.dim - m.right_image().dim == inv.dim - m0.dim
        ok, upto = _compare_dims(dims, closed, 0)
        return ok and ratio_ok, upto, {"hl_dims": dims, "closed_form": closed, "quotients_agree": ratio_ok}

    return _decide("ab", hyps, conclusion)


def _nonvanishing(dims):
    for n, d in enumerate(dims):
        if d == 0:
            return False, n - 1
    return True, len(dims) - 1


def _check_nonvannilp(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    differs = m.right_invariants() != m.antisymmetric_kernel()
    hyps = [Hypothesis("nonzero nilpotent", alg.dim > 0 and alg.is_nilpotent()),
            Hypothesis("right invariants differ from antisymmetric kernel", differs)]
    notes = []
    if hyps[0].satisfied and not differs:
        dims = ctx.hl_dims()
        if any(dims[1:]):
            notes.append("hypothesis not necessary: cohomology is nonzero although the invariants "
                         "equal the antisymmetric kernel")

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _nonvanishing(dims)
        return ok, upto, {"hl_dims": dims}

    return _decide("nonvannilp", hyps, conclusion, notes=notes)


def _check_nonvantriv(ctx):
    alg = ctx.algebra
    m = ctx.module if ctx.module is not None else trivial(alg, 1)
    hyps = [Hypothesis("nonzero nilpotent", alg.dim > 0 and alg.is_nilpotent()),
            Hypothesis("trivial one-dimensional coefficients", m.dim == 1 and m.is_trivial())]

    def conclusion():
        dims = ctx.hl_dims(m)
        ok, upto = _nonvanishing(dims)
        return ok, upto, {"hl_dims": dims}

    return _decide("nonvantriv", hyps, conclusion)


def _check_adj(ctx):
    alg = ctx.algebra
    m = adjoint(alg)
    hyps = [Hypothesis("nilpotent", alg.is_nilpotent()),
            Hypothesis("left center differs from Leibniz kernel", alg.left_center() != alg.leibniz_kernel())]

    def conclusion():
        dims = ctx.hl_dims(m)
        ok, upto = _nonvanishing(dims)
        return ok, upto, {"hl_dims": dims}

    return _decide("adj", hyps, conclusion)


def _check_adjlie(ctx):
    alg = ctx.algebra
    m = adjoint(alg)
    hyps = [Hypothesis("nonzero nilpotent", alg.dim > 0 and alg.is_nilpotent()),
            Hypothesis("Lie algebra", alg.is_lie())]

    def conclusion():
        dims = ctx.hl_dims(m)
        ok, upto = _nonvanishing(dims)
        return ok, upto, {"hl_dims": dims}

    return _decide("adjlie", hyps, conclusion)


def _supersolvable_hyp(alg) -> Hypothesis:
    res = alg.is_supersolvable()
    if res.status is Supersolvability.UNKNOWN:
        return Hypothesis("supersolvable", None, "no rational one-dimensional ideal found")
    return Hypothesis("supersolvable", res.status is Supersolvability.YES)


def _check_vansupsolv(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [_supersolvable_hyp(alg),
            Hypothesis("zero invariants of the derived subalgebra",
                       m.right_invariants(alg.derived_subalgebra()).is_zero())]

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"hl_dims": dims}

    return _decide("vansupsolv", hyps, conclusion)


def _check_barnes(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    gate = _closed_field_gate(m, alg)
    hyps = [_supersolvable_hyp(alg)]
    if gate.satisfied is not None:
        series, certified = _composition(m)
        hyps.append(Hypothesis("composition series certified", certified or None))
        if certified:
            hyps.append(Hypothesis("no one-dimensional composition factor", not series.has_one_dim_factor()))

    def conclusion():
        dims = ctx.hl_dims()
        m0 = m.antisymmetric_kernel()
        ok0 = dims[0] == m0.dim and m.right_invariants() == m0
        ok, upto = _hl_zero(dims, 1)
        if not ok0:
            ok, upto = False, -1
        return ok, upto, {"hl_dims": dims, "dim_antisymmetric_kernel": m0.dim}

    if gate.satisfied is None:
        # over Q the closed-field gate is decisive
        return _decide("barnes", [], conclusion, gate=gate)
    return _decide("barnes", hyps, conclusion, gate=gate)


def _check_vansolv(ctx):
    alg, m = ctx.algebra, _require_module(ctx.module)
    hyps = [Hypothesis("solvable", alg.is_solvable())] + _irreducible_hyps(m)

    def conclusion():
        dims = ctx.hl_dims()
        ok, upto = _hl_zero(dims, 0)
        return ok, upto, {"hl_dims": dims}

    return _decide("vansolv", hyps, conclusion)


# --------------------------------------------------------------------------
# structure theory of (super)solvable algebras
# --------------------------------------------------------------------------


def _finite_hyp(alg) -> Hypothesis:
    return Hypothesis("finite ground field (exhaustive subalgebra enumeration)", alg.field.is_finite)


def _check_frattini(ctx):
    alg = ctx.algebra
    hyps = [_finite_hyp(alg)]
    if not alg.field.is_finite:
        return _decide("frattini", hyps, lambda: (True, None, {}))
    frat = alg.frattini(ENUMERATION_BUDGET)
    candidates = [v for v in alg.ideals(ENUMERATION_BUDGET) if v <= frat]
    usable = []
    for v in candidates:
        q, _ = alg.quotient(v)
        if q.is_supersolvable().is_yes:
            usable.append(v)
    hyps.append(Hypothesis("ideal inside the Frattini subalgebra with supersolvable quotient", bool(usable)))
    gate = _closed_field_gate(None, alg)

    def conclusion():
        ok = alg.is_supersolvable().is_yes
        return ok, None, {"frattini_dim": frat.dim, "ideals": len(usable)}

    return _decide("frattini", hyps, conclusion, gate=gate)


def _check_max(ctx):
    alg = ctx.algebra
    hyps = [_finite_hyp(alg)]
    if alg.field.is_finite:
        hyps.append(Hypothesis("solvable", alg.is_solvable()))
    gate = _closed_field_gate(None, alg) if alg.field.is_finite else None

    def conclusion():
        maxes = alg.maximal_subalgebras(ENUMERATION_BUDGET)
        codim_one = all(alg.dim - v.dim == 1 for v in maxes)
        ss = alg.is_supersolvable().is_yes
        return codim_one == ss, None, {"supersolvable": ss, "maximal_codims": sorted(alg.dim - v.dim for v in maxes)}

    return _decide("max", hyps, conclusion, gate=gate)


def _check_maxchain(ctx):
    alg = ctx.algebra
    hyps = [_finite_hyp(alg)]
    if alg.field.is_finite:
        hyps.append(Hypothesis("solvable", alg.is_solvable()))
    gate = _closed_field_gate(None, alg) if alg.field.is_finite else None

    def conclusion():
        lengths = alg.maximal_chain_lengths(ENUMERATION_BUDGET)
        ss = alg.is_supersolvable().is_yes
        return (len(lengths) == 1) == ss, None, {"supersolvable": ss, "chain_lengths": lengths}

    return _decide("maxchain", hyps, conclusion, gate=gate)


def quotient_bimodule(alg: LeibnizAlgebra, ideal: Subspace) -> Bimodule:
    """An abelian ideal ``A`` as a bimodule over ``L/A`` via left and right multiplication."""
    q, _ = alg.quotient(ideal)
    section = ideal.section_map()
    lam, rho = [], []
    for j in range(q.dim):
        x = tuple(section.column(j))
        lam.append(ideal.restrict(alg.left_mult(x)))
        rho.append(ideal.restrict(alg.right_mult(x)))
    return Bimodule(q, ideal.dim, lam, rho)


def minimal_ideals(alg: LeibnizAlgebra) -> list:
    ideals = [v for v in alg.ideals(ENUMERATION_BUDGET) if not v.is_zero()]
    return [v for v in ideals if not any(w < v for w in ideals)]


def complements(alg: LeibnizAlgebra, ideal: Subspace) -> list:
    """All subalgebras ``K`` with ``L = ideal (+) K``."""
    k = alg.dim - ideal.dim
    out = []
    for v in all_subspaces(alg.field, alg.dim, COMPLEMENT_BUDGET, dims=[k]):
        if (v & ideal).is_zero() and alg.is_subalgebra(v):
            out.append(v)
    return out


def conjugacy_witness(alg: LeibnizAlgebra, ideal: Subspace, k1: Subspace, k2: Subspace):
    """An ``a`` in the ideal with ``exp(L_a) K1 = K2``, or ``None``."""
    for a in ideal.elements():
        if alg.exp_conjugate(a, k1) == k2:
            return tuple(a)
    return None


def _check_splitsolv(ctx):
    alg = ctx.algebra
    hyps = [_finite_hyp(alg)]
    if not alg.field.is_finite:
        return _decide("splitsolv", hyps, lambda: (True, None, {}))
    hyps.append(Hypothesis("solvable", alg.is_solvable()))
    chosen = None
    if hyps[-1].satisfied:
        for a in minimal_ideals(alg):
            if alg.right_centralizer(a) == a:
                chosen = a
                break
    hyps.append(Hypothesis("minimal ideal equal to its right centralizer", chosen is not None))

    def conclusion():
        mod = quotient_bimodule(alg, chosen)
        cx = LeibnizComplex(mod)
        h1, h2 = cx.hl(1).dim_h, cx.hl(2).dim_h
        comps = complements(alg, chosen)
        witnesses = []
        conj_ok = True
        for k2 in comps[1:]:
            w = conjugacy_witness(alg, chosen, comps[0], k2)
            witnesses.append(w)
            conj_ok &= w is not None
        ok = h1 == 0 and h2 == 0 and bool(comps) and conj_ok
        return ok, 2, {"hl1": h1, "hl2": h2, "complements": len(comps), "witnesses": witnesses}

    return _decide("splitsolv", hyps, conclusion)


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

_CHECKS = {
    "inv": (_check_inv, "Lemma inv"),
    "sym": (_check_sym, "Lemma sym"),
    "triv": (_check_triv, "Lemma triv"),
    "1dim": (_check_1dim, "Lemma 1dim"),
    "nontriv": (_check_nontriv, "Proposition nontriv"),
    "non1dim": (_check_non1dim, "Proposition non1dim"),
    "fitting": (_check_fitting, "Theorem Fitting"),
    "identities": (_check_identities, "Lemma nilpotency identities"),
    "vanhh": (_check_vanhh, "Theorem vanhh"),
    "fittinghh": (_check_fittinghh, "Theorem fittinghh"),
    "cohfitting": (_check_cohfitting, "Corollary cohfitting"),
    "van": (_check_van, "Corollary van"),
    "cohnonsemisim": (_check_cohnonsemisim, "Corollary cohnonsemisim"),
    "whitehead": (_check_whitehead, "Corollary whitehead"),
    "farnsteiner": (_check_farnsteiner, "Corollary farnsteiner"),
    "vannilp": (_check_vannilp, "Theorem vannilp"),
    "dixmier": (_check_dixmier, "Theorem dixmier"),
    "ab": (_check_ab, "Theorem ab"),
    "nonvannilp": (_check_nonvannilp, "Theorem nonvannilp"),
    "nonvantriv": (_check_nonvantriv, "Corollary nonvantriv"),
    "adj": (_check_adj, "Corollary adj"),
    "adjlie": (_check_adjlie, "Corollary adjlie"),
    "vansupsolv": (_check_vansupsolv, "Theorem vansupsolv"),
    "barnes": (_check_barnes, "Theorem barnes"),
    "vansolv": (_check_vansolv, "Theorem vansolv"),
    "frattini": (_check_frattini, "Theorem frattini"),
    "max": (_check_max, "Corollary max"),
    "maxchain": (_check_maxchain, "Corollary maxchain"),
    "splitsolv": (_check_splitsolv, "Theorem splitsolv"),
}

THEOREM_IDS = tuple(_CHECKS)
ANCHORS = {k: v[1] for k, v in _CHECKS.items()}
ALGEBRA_ONLY = frozenset({"nonvantriv", "adj", "adjlie", "frattini", "max", "maxchain", "splitsolv"})


def check(theorem_id: str, algebra: LeibnizAlgebra, bimodule: Bimodule | None = None,
          n_max: int = 3) -> TheoremReport:
    """Check one result on one instance, verifying cohomological conclusions up to ``n_max``."""
    if theorem_id not in _CHECKS:
        raise UnknownTheorem(theorem_id)
    if bimodule is not None and bimodule.algebra != algebra:
        raise ValueError("bimodule is over a different algebra")
    fn = _CHECKS[theorem_id][0]
    return fn(_Ctx(algebra, bimodule, n_max))


# --------------------------------------------------------------------------
# Hom shift
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HomShiftReport:
    dims: tuple
    shifted_dims: tuple

    @property
    def ok(self) -> bool:
        return self.dims[1:] == self.shifted_dims[:-1]


def hom_shift_check(m: Bimodule, n_max: int) -> HomShiftReport:
    """Compare ``HL^n(L, M)`` with ``HL^(n-1)(L, Hom(L, M)_s)`` for ``1 <= n <= n_max``."""
    if not m.is_antisymmetric():
        raise ValueError("the degree shift needs an antisymmetric bimodule")
    dims = LeibnizComplex(m).hl_dims(n_max)
    shifted = LeibnizComplex(hom_symmetric(m)).hl_dims(n_max - 1) if n_max >= 1 else []
    return HomShiftReport(tuple(dims), tuple(shifted) + (None,))


# --------------------------------------------------------------------------
# random sweeps
# --------------------------------------------------------------------------


def _module_kind(rng):
    return rng.choice(["nontrivial-symmetric", "nontrivial-antisymmetric", "nontrivial-mixed", "random", "random"])


def _shift_instance(rng, symmetric=True):
    field = GF(rng.choice([2, 3]))
    alg, lam = gen.random_shift_instance(rng, field, rng.randint(1, 2))
    rho = [-t for t in lam] if symmetric else [ExactMatrix.zeros(field, field.p, field.p)] * alg.dim
    return alg, Bimodule(alg, field.p, lam, rho)


def _rational_irreducible(rng):
    """Small right faithful bimodules over Q with certified irreducibility."""
    from .algebra import one_dim_lie, sl2

    r = rng.random()
    if r < 0.25:
        alg = sl2(QQ)
        return alg, adjoint(alg)
    alg = one_dim_lie(QQ)
    if r < 0.6:
        # a nonzero scalar, made symmetric so that the right action is faithful
        c = rng.choice([1, -1, 2, 3, -5])
        return alg, Bimodule(alg, 1, [ExactMatrix.scalar(QQ, 1, c)], [ExactMatrix.scalar(QQ, 1, -c)])
    a, b = rng.choice([1, 2, -3]), rng.choice([1, 2, 3])
    rot = ExactMatrix.from_dense(QQ, [[a, -b], [b, a]])
    return alg, Bimodule(alg, 2, [rot], [-rot])


def random_instance(theorem_id: str, seed, index: int):
    """Deterministic ``(algebra, bimodule)`` for sweep slot ``index``."""
    rng = random.Random(f"{theorem_id}/{seed}/{index}")
    p = rng.choice([2, 3, 5])
    f = GF(p)
    n = rng.randint(1, 3)
    d = rng.randint(1, 3)
    C = gen.AlgebraClass

    def alg_of(kind, lie=False, dim=None):
        return gen.random_algebra(gen.RandomAlgebraSpec(f, dim or n, kind, rng.randrange(2**31), lie))

    tid = theorem_id
    if tid in ("vannilp", "dixmier", "nonvannilp"):
        a = alg_of(C.NILPOTENT)
        return a, gen.targeted_module(rng, a, d, _module_kind(rng))
    if tid == "nonvantriv":
        a = alg_of(C.NILPOTENT)
        return a, trivial(a, 1)
    if tid == "adj":
        return alg_of(C.NILPOTENT), None
    if tid == "adjlie":
        return alg_of(C.NILPOTENT, lie=True), None
    if tid == "ab":
        m = gen.random_one_dim_bimodule(f, rng.randint(1, 4), rng)
        return m.algebra, m
    if tid in ("vansupsolv", "barnes", "non1dim", "1dim"):
        if rng.random() < 0.5:
            return _shift_instance(rng, symmetric=rng.random() < 0.6)
        a = alg_of(C.SUPERSOLVABLE)
        return a, gen.targeted_module(rng, a, d, _module_kind(rng))
    if tid in ("vansolv", "cohnonsemisim", "farnsteiner"):
        if rng.random() < 0.5:
            return _shift_instance(rng, symmetric=True)
        a = alg_of(C.SOLVABLE if tid == "vansolv" else C.ANY)
        return a, gen.targeted_module(rng, a, d, _module_kind(rng))
    if tid == "whitehead":
        if rng.random() < 0.6:
            return _rational_irreducible(rng)
        a = alg_of(C.ANY)
        return a, gen.random_bimodule(a, d, rng)
    if tid in ("frattini", "max", "maxchain", "splitsolv"):
        f = GF(rng.choice([2, 3]))
        if tid == "splitsolv" and rng.random() < 0.5:
            return gen.random_extension(rng, f, rng.randint(2, 3), lie=True), None
        return gen.random_algebra(gen.RandomAlgebraSpec(f, n, C.SOLVABLE, rng.randrange(2**31))), None
    a = alg_of(C.ANY)
    kind = _module_kind(rng)
    return a, gen.targeted_module(rng, a, d, kind)


@dataclass
class SweepSummary:
    theorem_id: str
    counts: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_slot(args):
    theorem_id, seed, index, n_max = args
    alg, m = random_instance(theorem_id, seed, index)
    rep = check(theorem_id, alg, m, n_max)
    return index, rep.verdict.value, (rep.to_dict() if rep.failed else None)


def sweep(theorem_id: str, instances: int = 100, seed: int = 0, n_max: int = 3,
          workers: int | None = None) -> SweepSummary:
    """Run ``check`` on ``instances`` generated instances; parallel when ``workers > 1``."""
    jobs = [(theorem_id, seed, i, n_max) for i in range(instances)]
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_slot, jobs, chunksize=4))
    else:
        results = [_run_slot(j) for j in jobs]
    results.sort()
    counts = {v.value: 0 for v in Verdict}
    failures = []
    for index, verdict, payload in results:
        counts[verdict] += 1
        if payload is not None:
            failures.append({"index": index, "report": payload})
    return SweepSummary(theorem_id, counts, failures)


# --------------------------------------------------------------------------
# reporting modes without verdicts
# --------------------------------------------------------------------------


def conjecture_dims(which: str, max_degree: int = 5, field=QQ) -> dict:
    """Adjoint cohomology dimensions of the two-dimensional examples; data only."""
    which = which.upper()
    if which == "C":
        alg = nilpotent_2d(field)
    elif which == "D":
        alg = hemisemidirect_2d(field)
    else:
        raise ValueError("conjecture must be C or D")
    dims = LeibnizComplex(adjoint(alg)).hl_dims(max_degree)
    return {"conjecture": which, "paper_anchor": f"Example {which}", "field": repr(field),
            "hl_dims": dims, "verdict": None}


def hemisemidirect_sweep(instances: int = 20, seed: int = 0, max_degree: int = 3) -> list:
    """Adjoint cohomology of random hemi-semidirect products; data only."""
    from .algebra import hemi_semidirect, one_dim_lie

    out = []
    for i in range(instances):
        rng = random.Random(f"hemi/{seed}/{i}")
        f = GF(rng.choice([2, 3, 5]))
        k = rng.randint(1, 2)
        alg = hemi_semidirect(one_dim_lie(f), [gen.random_matrix(rng, f, k)])
        dims = LeibnizComplex(adjoint(alg)).hl_dims(max_degree)
        out.append({"index": i, "field": repr(f), "structure": _jsonable(alg.structure_constants),
                    "hl_dims": dims, "positive_degrees_vanish": not any(dims[1:])})
    return out


def scan_periodicity(instances: int = 20, seed: int = 0, max_degree: int = 4, coeffs: str = "trivial") -> list:
    """Random algebras whose computed dims repeat with period two; heuristic only."""
    out = []
    for i in range(instances):
        rng = random.Random(f"period/{seed}/{i}")
        f = GF(rng.choice([2, 3, 5]))
        alg = gen.random_algebra(gen.RandomAlgebraSpec(f, rng.randint(1, 3), gen.AlgebraClass.ANY,
                                                       rng.randrange(2**31)))
        m = trivial(alg, 1) if coeffs == "trivial" else adjoint(alg)
        dims = LeibnizComplex(m).hl_dims(max_degree)
        periodic = all(dims[n] == dims[n + 2] for n in range(1, max_degree - 1))
        out.append({"index": i, "field": repr(f), "dim": alg.dim, "hl_dims": dims, "period_two": periodic})
    return out
