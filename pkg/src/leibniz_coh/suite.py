"""Named checks on the worked examples, each with expected and computed values."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import hemisemidirect_2d, nilpotent_2d, one_dim_lie
from .bimodule import adjoint, trivial
from .cohomology import DixmierSequence, LeibnizComplex, periodicity_dims, tensor_index
from .exactla import QQ, GF, Subspace
from .fitting import fitting_set
from .fixtures import commuting_pair_bimodule, jordan_identity_module


@dataclass
class SuiteLine:
    paper_anchor: str
    check: str
    expected: object
    computed: object
    ok: bool

    def to_dict(self) -> dict:
        return {"paper_anchor": self.paper_anchor, "check": self.check,
                "expected": _plain(self.expected), "computed": _plain(self.computed), "ok": self.ok}


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _line(anchor, what, expected, computed):
    return SuiteLine(anchor, what, expected, computed, expected == computed)


def _span_basis(space: Subspace) -> list:
    return [[space.field.to_json(c) for c in v] for v in space.basis]


def cochain_span(field, d: int, mod_dim: int, tensors) -> Subspace:
    """Span of the cochains ``e_{i1}* (x) ... (x) e_{in}*`` with values ``1`` in a 1-dim module."""
    n = len(tensors[0]) if tensors else 0
    size = d**n * mod_dim
    vecs = []
    for t in tensors:
        v = [0] * size
        v[tensor_index(t, d) * mod_dim] = 1
        vecs.append(v)
    return Subspace.span(field, size, vecs)


def example_a_lines() -> list:
    m = commuting_pair_bimodule(QQ)
    out = []
    e12 = Subspace.span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    e1 = Subspace.span(QQ, 3, [[1, 0, 0]])
    out.append(_line("Example A", "right invariants", _span_basis(e12), _span_basis(m.right_invariants())))
    out.append(_line("Example A", "antisymmetric kernel", _span_basis(e12), _span_basis(m.antisymmetric_kernel())))
    out.append(_line("Example A", "trivial sub-bimodule", _span_basis(e1), _span_basis(m.trivial_part())))
    dims = LeibnizComplex(m).hl_dims(5)
    out.append(_line("Example A", "HL^n for 1 <= n <= 5 (complex)", [0] * 5, dims[1:]))
    out.append(_line("Theorem ab", "HL^n for 1 <= n <= 5 (closed form)", [0] * 5, periodicity_dims(m, 5)[1:]))
    return out


def example_b_lines() -> list:
    m = jordan_identity_module(QQ)
    pair = fitting_set(m, [(1, 0), (0, 1)])
    return [
        _line("Example B", "Fitting null component dimension", 0, pair.zero_part.dim),
        _line("Example B", "Fitting one component dimension", 2, pair.one_part.dim),
    ]


def example_c_lines(max_degree: int = 6) -> list:
    out = []
    for field in (QQ, GF(5)):
        alg = nilpotent_2d(field)
        dims = LeibnizComplex(trivial(alg, 1)).hl_dims(max_degree)
        out.append(_line("Example C", f"dim HL^n(N, F) over {field!r}, n <= {max_degree}", [1] * (max_degree + 1), dims))
    alg = nilpotent_2d(QQ)
    cx = LeibnizComplex(trivial(alg, 1))
    # basis order (e, f): index 0 is e, index 1 is f
    expected = {1: [(1,)], 2: [(1, 0)], 3: [(1, 0, 1)]}
    names = {1: "f*", 2: "f* (x) e*", 3: "f* (x) e* (x) f*"}
    for n, tensors in expected.items():
        h = cx.cohomology(n)
        want = cochain_span(QQ, 2, 1, tensors)
        out.append(_line("Example C", f"HL^{n} representative span = span{{{names[n]}}}",
                         _span_basis(want), _span_basis(h.reps_space)))
    adj = LeibnizComplex(adjoint(alg)).hl_dims(2)
    out.append(_line("Example C", "dim HL^n(N, N_ad), n <= 2", [1, 1, 1], adj))
    return out


def example_d_lines() -> list:
    alg = hemisemidirect_2d(QQ)
    out = [_line("Example D", "dim HL^n(A, F), n <= 5", [1] * 6, LeibnizComplex(trivial(alg, 1)).hl_dims(5))]
    cx = LeibnizComplex(adjoint(alg))
    out.append(_line("Example D", "dim HL^1, HL^2 (A, A_ad)", [0, 0], [cx.hl(1).dim_h, cx.hl(2).dim_h]))
    h0 = cx.cohomology(0)
    out.append(_line("Example D", "HL^0(A, A_ad) = span{e}", _span_basis(Subspace.span(QQ, 2, [[0, 1]])),
                     _span_basis(h0.reps_space)))
    return out


def one_dim_lines() -> list:
    alg = one_dim_lie(QQ)
    return [_line("Example one-dim", "dim HL^n(Fe, F), n <= 4", [1] * 5, LeibnizComplex(trivial(alg, 1)).hl_dims(4))]


def dixmier_lines(n_max: int = 3) -> list:
    out = []
    for label, alg_fn, coeffs in (("N, F", nilpotent_2d, "trivial"), ("N, N_ad", nilpotent_2d, "adjoint"),
                                  ("A, F", hemisemidirect_2d, "trivial")):
        alg = alg_fn(QQ)
        m = trivial(alg, 1) if coeffs == "trivial" else adjoint(alg)
        ideal = Subspace.span(QQ, 2, [[1, 0]] if alg_fn is nilpotent_2d else [[0, 1]])
        x = (0, 1) if alg_fn is nilpotent_2d else (1, 0)
        report = DixmierSequence(m, ideal, x).verify(n_max)
        computed = [report.ses_exact, report.anticommutes, report.connecting_matches, report.les.exact]
        out.append(_line("Theorem nonvannilp", f"restriction sequence for ({label}) exact, n <= {n_max}",
                         [True] * 4, computed))
    return out


def paper_suite() -> list:
    lines = []
    for fn in (example_a_lines, example_b_lines, example_c_lines, example_d_lines, one_dim_lines, dixmier_lines):
        lines.extend(fn())
    return lines
