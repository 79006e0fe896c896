import pytest
from hypothesis import given, strategies as st

from leibniz_coh.algebra import (
    LeibnizAlgebra, LeibnizIdentityError, NilpotencyError, NotAnIdeal, Supersolvability,
    abelian, direct_sum, hemi_semidirect, hemisemidirect_2d, nilpotent_2d, one_dim_lie, semidirect_lie, sl2,
)
from leibniz_coh.exactla import GF, QQ, ExactMatrix, Subspace
from leibniz_coh.generators import AlgebraClass, RandomAlgebraSpec, random_algebra
from oracles import brute_leibniz_kernel_dim, brute_subspaces, product

# nilpotent example basis is (e, f); hemi-semidirect example basis is (h, e)
E = [1, 0]
E_H = [0, 1]


def span(field, n, *vs):
    return Subspace.span(field, n, list(vs))


def nested(alg):
    """Structure constants as nested int lists, for the oracles."""
    return [[[int(c) for c in alg.basis_product(i, j)] for j in range(alg.dim)] for i in range(alg.dim)]


@st.composite
def small_algebra(draw, fields=(2, 3)):
    p = draw(st.sampled_from(fields))
    dim = draw(st.integers(1, 3))
    kind = draw(st.sampled_from(list(AlgebraClass)))
    seed = draw(st.integers(0, 10**6))
    return random_algebra(RandomAlgebraSpec(GF(p), dim, kind, seed))


# validation -----------------------------------------------------------------

def test_examples_validate():
    assert nilpotent_2d(QQ).validate().ok
    assert hemisemidirect_2d(QQ).validate().ok


def test_bad_structure_constants_are_located():
    # basis (e, f) with ff = e and ef = f
    bad = {(1, 1): [1, 0], (0, 1): [0, 1]}
    rep = LeibnizAlgebra(QQ, 2, bad, validate=False).validate()
    assert not rep.ok
    assert (1, 1, 1) in rep.violations
    assert rep.triple == rep.violations[0]
    with pytest.raises(LeibnizIdentityError):
        LeibnizAlgebra(QQ, 2, bad)


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        LeibnizAlgebra(QQ, 2, {(0, 0): [1, 0, 0]})


# Leibniz kernel and canonical Lie algebra -----------------------------------

def test_leibniz_kernel_examples():
    assert sl2(QQ).leibniz_kernel().is_zero()
    assert nilpotent_2d(QQ).leibniz_kernel() == span(QQ, 2, E)
    assert hemisemidirect_2d(QQ).leibniz_kernel() == span(QQ, 2, E_H)


def test_leibniz_kernel_of_nilpotent_over_gf3_by_enumeration():
    alg = nilpotent_2d(GF(3))
    assert brute_leibniz_kernel_dim(nested(alg), 3) == alg.leibniz_kernel().dim == 1


@given(small_algebra())
def test_leibniz_kernel_matches_brute_force(alg):
    assert alg.leibniz_kernel().dim == brute_leibniz_kernel_dim(nested(alg), alg.field.p)


@given(small_algebra(fields=(2, 3, 5)))
def test_leibniz_kernel_structure(alg):
    leib = alg.leibniz_kernel()
    assert alg.is_ideal(leib)
    assert alg.product_space(leib, leib).is_zero()
    assert leib <= alg.left_center()
    assert leib != alg.full_space()
    lie = alg.canonical_lie()
    assert lie.validate().ok
    assert lie.leibniz_kernel().is_zero()
    assert lie.dim == alg.dim - leib.dim


def test_canonical_lie_examples():
    assert sl2(QQ).canonical_lie().dim == 3
    for alg in (nilpotent_2d(QQ), hemisemidirect_2d(QQ)):
        lie = alg.canonical_lie()
        assert lie.dim == 1 and lie.is_abelian()


# series ----------------------------------------------------------------------

def test_lower_central_series():
    n = nilpotent_2d(QQ)
    assert [t.dim for t in n.lower_central_series().terms] == [2, 1, 0]
    a = hemisemidirect_2d(QQ)
    s = a.lower_central_series()
    assert [t.dim for t in s.terms] == [2, 1]
    assert s.limit == span(QQ, 2, E_H)
    for kind in ("left_descending_central", "derived"):
        assert [t.dim for t in abelian(QQ, 3).series(kind).terms] == [3, 0]


def test_derived_subalgebra_is_second_term():
    a = hemisemidirect_2d(QQ)
    assert a.derived_series().terms[1] == a.derived_subalgebra()


def test_nilpotent_and_solvable():
    assert nilpotent_2d(QQ).is_nilpotent()
    a = hemisemidirect_2d(QQ)
    assert not a.is_nilpotent() and a.is_solvable()
    e = one_dim_lie(QQ)
    assert e.is_nilpotent() and e.is_solvable()
    assert not sl2(QQ).is_solvable()


def test_zero_dimensional_algebra():
    z = abelian(QQ, 0)
    assert z.is_nilpotent() and z.is_solvable()
    assert z.is_supersolvable().is_yes


# centres, centralizers, ideals ----------------------------------------------

def test_left_center():
    assert nilpotent_2d(QQ).left_center() == span(QQ, 2, E)
    assert hemisemidirect_2d(QQ).left_center() == span(QQ, 2, E_H)
    assert abelian(QQ, 2).left_center() == Subspace.full(QQ, 2)


def test_right_centralizer():
    # basis (h, e) for the hemi-semidirect example
    a = hemisemidirect_2d(QQ)
    assert a.right_centralizer(Subspace.zero(QQ, 2)) == a.full_space()
    assert a.right_centralizer(span(QQ, 2, [0, 1])) == a.full_space()
    assert a.right_centralizer(span(QQ, 2, [1, 0])) == span(QQ, 2, [1, 0])


def test_ideal_tools():
    n = nilpotent_2d(QQ)
    assert n.ideal_tools(n.leibniz_kernel())["is_ideal"]
    a = hemisemidirect_2d(QQ)
    tools = a.ideal_tools(span(QQ, 2, [1, 0]))
    assert not tools["is_ideal"]
    assert tools["closure"] == a.full_space()
    for v in (a.zero_space(), a.full_space()):
        assert a.ideal_tools(v)["is_ideal"]


def test_quotient():
    n = nilpotent_2d(QQ)
    q, proj = n.quotient(n.zero_space())
    assert q.dim == 2 and q.structure_constants == n.structure_constants
    for alg, e in ((nilpotent_2d(QQ), E), (hemisemidirect_2d(QQ), E_H)):
        q, proj = alg.quotient(span(QQ, 2, e))
        assert q.dim == 1 and q.is_abelian()
        assert proj.kernel() == span(QQ, 2, e)
        assert proj.rank() == 1
    with pytest.raises(NotAnIdeal):
        hemisemidirect_2d(QQ).quotient(span(QQ, 2, [1, 0]))


# supersolvability -----------------------------------------------------------

def test_supersolvable_examples():
    res = hemisemidirect_2d(GF(5)).is_supersolvable()
    assert res.is_yes
    assert [t.dim for t in res.chain.terms] == [2, 1, 0]
    assert res.chain.terms[1] == span(GF(5), 2, [0, 1])
    assert nilpotent_2d(GF(5)).is_supersolvable().is_yes
    assert sl2(GF(7)).is_supersolvable().status is Supersolvability.NO
    assert sl2(QQ).is_supersolvable().status is Supersolvability.UNKNOWN


@given(small_algebra(fields=(2, 3, 5)))
def test_supersolvable_chain_is_a_chain_of_ideals(alg):
    res = alg.is_supersolvable()
    if alg.is_nilpotent():
        assert res.is_yes
    if res.is_yes:
        assert alg.is_solvable()
        assert all(alg.is_ideal(t) for t in res.chain.terms)
        assert set(res.chain.codimensions) <= {1}
        dd, _ = alg.subalgebra(alg.derived_subalgebra())
        assert dd.is_nilpotent()


# subalgebras and the Frattini subalgebra ------------------------------------

def brute_subalgebras(alg):
    p, n = alg.field.p, alg.dim
    c = nested(alg)
    out = []
    for s in brute_subspaces(p, n):
        if all(tuple(product(c, list(x), list(y), p)) in s for x in s for y in s):
            out.append(s)
    return out


def brute_maximal(alg):
    subs = [s for s in brute_subalgebras(alg) if len(s) < alg.field.p ** alg.dim]
    return {s for s in subs if not any(s < t for t in subs)}


def as_sets(spaces, p):
    return {frozenset(tuple(v) for v in s.elements()) for s in spaces}


def test_maximal_subalgebras_of_one_dim():
    assert [m.dim for m in one_dim_lie(GF(2)).maximal_subalgebras()] == [0]


@pytest.mark.parametrize("build,p", [(nilpotent_2d, 2), (hemisemidirect_2d, 2), (nilpotent_2d, 3), (sl2, 3)])
def test_maximal_subalgebras_match_brute_force(build, p):
    alg = build(GF(p))
    assert as_sets(alg.maximal_subalgebras(), p) == brute_maximal(alg)


def test_supersolvable_maximal_subalgebras_have_codim_one():
    alg = hemisemidirect_2d(GF(2))
    assert {m.dim for m in alg.maximal_subalgebras()} == {1}


@given(small_algebra())
def test_maximal_subalgebras_random(alg):
    assert as_sets(alg.maximal_subalgebras(), alg.field.p) == brute_maximal(alg)


def test_frattini():
    assert one_dim_lie(GF(3)).frattini().is_zero()
    assert abelian(GF(3), 2).frattini().is_zero()
    assert direct_sum(one_dim_lie(GF(2)), one_dim_lie(GF(2))).frattini().is_zero()
    n = nilpotent_2d(GF(3))
    phi = n.frattini()
    assert n.is_ideal(phi)
    sub, _ = n.subalgebra(phi)
    assert sub.is_nilpotent()


def test_maximal_subalgebras_need_finite_field():
    with pytest.raises(ValueError):
        nilpotent_2d(QQ).maximal_subalgebras()


# exponentials ---------------------------------------------------------------

def test_exp_conjugate_trivial_cases():
    a = hemisemidirect_2d(QQ)
    k = span(QQ, 2, [1, 0])
    assert a.exp_conjugate((0, 0), k) == k
    assert a.exp_conjugate((0, 1), k) == k


def test_exp_conjugate_moves_complements():
    # Lie algebra F x + F^2 with x acting as the identity; v1 x = -v1 and L_{v1}^2 = 0
    field = GF(5)
    alg = semidirect_lie(one_dim_lie(field), [ExactMatrix.from_dense(field, [[1, 0], [0, 1]])])
    k = span(field, 3, [1, 0, 0])
    moved = alg.exp_conjugate((0, 1, 0), k)
    assert alg.is_subalgebra(moved)
    assert moved != k
    assert moved == span(field, 3, [1, 4, 0])


def test_exp_needs_square_zero():
    a = hemisemidirect_2d(GF(5))
    with pytest.raises(NilpotencyError):
        a.exp_left_mult((1, 0))


@given(small_algebra(fields=(2, 3, 5)), st.data())
def test_exp_conjugate_is_automorphism_when_defined(alg, data):
    x = data.draw(st.lists(st.integers(0, alg.field.p - 1), min_size=alg.dim, max_size=alg.dim))
    lx = alg.left_mult(x)
    if not (lx @ lx).is_zero():
        return
    sigma = alg.exp_left_mult(x)
    assert alg.is_automorphism(sigma)
    for s in alg.subalgebras():
        assert alg.is_subalgebra(alg.exp_conjugate(x, s))


# constructors ---------------------------------------------------------------

def test_hemi_semidirect_examples():
    f = QQ
    h = one_dim_lie(f)
    a = hemi_semidirect(h, [ExactMatrix.from_dense(f, [[1]])])
    assert a.structure_constants == hemisemidirect_2d(f).structure_constants
    assert hemi_semidirect(h, [ExactMatrix.zeros(f, 1, 1)]).is_abelian()
    # h.(e1, e2) = (e2, 0), i.e. h e1 = 0, h e2 = e1 in column convention
    b = hemi_semidirect(h, [ExactMatrix.from_dense(f, [[0, 1], [0, 0]])])
    assert b.validate().ok and b.is_nilpotent() and not b.is_lie()


def test_hemi_semidirect_rejects_non_lie_input():
    with pytest.raises(ValueError):
        hemi_semidirect(nilpotent_2d(QQ), [ExactMatrix.identity(QQ, 1)] * 2)


def test_change_basis_preserves_identity():
    a = hemisemidirect_2d(QQ)
    b = a.change_basis([[1, 1], [0, 1]])
    assert b.validate().ok
    assert b.leibniz_kernel().dim == 1
