import pytest
from hypothesis import given, strategies as st

from leibniz_coh.algebra import hemisemidirect_2d, nilpotent_2d, one_dim_lie
from leibniz_coh.bimodule import (
    Bimodule, BimoduleAxiomError, adjoint, antisymmetric_from_left, direct_sum,
    symmetric_from_left, trivial,
)
from leibniz_coh.exactla import GF, QQ, ExactMatrix, Subspace
from leibniz_coh.fixtures import SHIFT_3, commuting_pair_bimodule
from leibniz_coh.generators import AlgebraClass, RandomAlgebraSpec, random_algebra, random_bimodule
from oracles import brute_invariant_subspaces


def span(field, n, *vs):
    return Subspace.span(field, n, list(vs))


@st.composite
def small_bimodule(draw, fields=(2, 3), max_alg=3, max_mod=3):
    p = draw(st.sampled_from(fields))
    adim = draw(st.integers(1, max_alg))
    kind = draw(st.sampled_from(list(AlgebraClass)))
    seed = draw(st.integers(0, 10**6))
    alg = random_algebra(RandomAlgebraSpec(GF(p), adim, kind, seed))
    return random_bimodule(alg, draw(st.integers(1, max_mod)), seed)


def as_list(m: ExactMatrix):
    return [[int(x) for x in row] for row in m.to_dense()]


# validation -----------------------------------------------------------------

def test_commuting_pair_validates():
    m = commuting_pair_bimodule(QQ)
    assert m.validate().ok


def test_adjoint_always_validates():
    for alg in (nilpotent_2d(QQ), hemisemidirect_2d(QQ), one_dim_lie(GF(2))):
        assert adjoint(alg).validate().ok


def test_transposed_right_action_is_rejected():
    alg = one_dim_lie(QQ)
    shift = ExactMatrix.from_dense(QQ, SHIFT_3)
    m = Bimodule(alg, 3, [shift], [shift.T], validate=False)
    rep = m.validate()
    assert not rep.ok
    kinds = {name for name, _ in rep.violations}
    assert "right" in kinds
    with pytest.raises(BimoduleAxiomError):
        Bimodule(alg, 3, [shift], [shift.T])


def test_shape_mismatch():
    with pytest.raises(ValueError):
        Bimodule(one_dim_lie(QQ), 2, [[[1]]], [[[0]]])


# constructors ---------------------------------------------------------------

def test_trivial_module():
    m = trivial(nilpotent_2d(QQ), 1)
    assert m.is_trivial() and m.is_symmetric() and m.is_antisymmetric()


def test_adjoint_of_hemisemidirect():
    # basis (h, e): h e = e
    m = adjoint(hemisemidirect_2d(QQ))
    assert m.lam[0].to_dense() == [[0, 0], [0, 1]]


def test_symmetrize_and_antisymmetrize():
    alg = one_dim_lie(QQ)
    s = symmetric_from_left(alg, [SHIFT_3])
    assert s.validate().ok and s.is_symmetric()
    a = antisymmetric_from_left(alg, [SHIFT_3])
    assert a.validate().ok and a.is_antisymmetric()


def test_symmetrize_rejects_non_module():
    # on the nilpotent algebra lam_f lam_f - lam_f lam_f = 0 must equal lam_e
    alg = nilpotent_2d(QQ)
    with pytest.raises(BimoduleAxiomError):
        symmetric_from_left(alg, [[[1]], [[0]]])


def test_restrict_to_ideal():
    m = adjoint(hemisemidirect_2d(QQ))
    r = m.restrict_to_subalgebra(span(QQ, 2, [0, 1]))
    assert r.algebra.dim == 1 and r.validate().ok


# distinguished subspaces ----------------------------------------------------

def test_commuting_pair_subspaces():
    m = commuting_pair_bimodule(QQ)
    e12 = span(QQ, 3, [1, 0, 0], [0, 1, 0])
    assert m.right_invariants() == e12
    assert m.antisymmetric_kernel() == span(QQ, 3, [1, 0, 0], [1, 1, 0]) == e12
    assert m.trivial_part() == span(QQ, 3, [1, 0, 0])
    assert not (m.is_symmetric() or m.is_antisymmetric() or m.is_trivial())
    assert m.right_annihilator().is_zero()


def test_invariants_of_simple_cases():
    alg = one_dim_lie(QQ)
    a = antisymmetric_from_left(alg, [SHIFT_3])
    assert a.right_invariants() == Subspace.full(QQ, 3)
    s = symmetric_from_left(alg, [SHIFT_3])
    assert s.antisymmetric_kernel().is_zero()


def test_adjoint_nilpotent_invariants():
    n = nilpotent_2d(QQ)
    m = adjoint(n)
    assert m.right_invariants(n.full_space()) == span(QQ, 2, [1, 0])
    assert m.antisymmetric_kernel() <= n.leibniz_kernel()


def test_annihilators():
    alg = nilpotent_2d(QQ)
    ann = trivial(alg, 2).annihilators()
    assert ann["left"] == ann["right"] == ann["both"] == alg.full_space()
    a = hemisemidirect_2d(QQ)
    assert adjoint(a).right_annihilator() == span(QQ, 2, [1, 0])


def test_generated_submodules():
    m = commuting_pair_bimodule(QQ)
    assert m.generated([]).is_zero()
    assert m.generated([[0, 0, 1]]) == Subspace.full(QQ, 3)
    assert m.generated([[1, 0, 0]]) == span(QQ, 3, [1, 0, 0])


# composition series ---------------------------------------------------------

def test_composition_series_examples():
    cs = commuting_pair_bimodule(QQ).composition_series()
    assert [f.dim for f in cs.factors] == [1, 1, 1]
    assert all(f.is_trivial for f in cs.factors)
    cs = adjoint(nilpotent_2d(QQ)).composition_series()
    assert cs.chain[1] == span(QQ, 2, [1, 0])
    assert [f.is_trivial for f in cs.factors] == [True, True]


def test_irreducible_module_is_its_own_series():
    # rotation by a quarter turn has no rational eigenvector
    alg = one_dim_lie(QQ)
    m = symmetric_from_left(alg, [[[0, -1], [1, 0]]])
    assert m.is_irreducible() is True
    cs = m.composition_series()
    assert len(cs.factors) == 1 and cs.factors[0].dim == 2
    # over Q the commutant is the Gaussian rationals, so not absolutely irreducible
    assert m.is_absolutely_irreducible() is False


@given(small_bimodule())
def test_irreducibility_matches_brute_force(m):
    p = m.field.p
    ops = [as_list(t) for t in m.operators()]
    invariant = brute_invariant_subspaces(ops, p, m.dim)
    assert m.is_irreducible() == (len(invariant) == 2)


@given(small_bimodule(fields=(2, 3, 5)))
def test_composition_factors_are_irreducible(m):
    cs = m.composition_series()
    assert cs.chain[0].is_zero() and cs.chain[-1].dim == m.dim
    assert all(a < b for a, b in zip(cs.chain, cs.chain[1:]))
    for w in cs.chain:
        assert m.is_sub_bimodule(w)
    for f in cs.factors:
        assert f.module.is_irreducible() is True


# structural properties ------------------------------------------------------

@given(small_bimodule(fields=(2, 3, 5)))
def test_random_bimodules_validate(m):
    assert m.validate().ok


@given(small_bimodule(fields=(2, 3, 5)))
def test_antisymmetric_kernel_properties(m):
    m0 = m.antisymmetric_kernel()
    assert m.is_sub_bimodule(m0)
    assert m.submodule(m0).is_antisymmetric()
    assert m.quotient(m0).is_symmetric()


@given(small_bimodule(fields=(2, 3, 5)))
def test_right_invariants_of_left_ideals_are_submodules(m):
    alg = m.algebra
    for ideal in alg.subalgebras():
        if alg.is_left_ideal(ideal):
            assert m.is_sub_bimodule(m.right_invariants(ideal))


@given(small_bimodule(fields=(2, 3)), small_bimodule(fields=(2, 3)))
def test_direct_sum(a, b):
    if a.algebra is not b.algebra:
        b = random_bimodule(a.algebra, b.dim, 0)
    s = direct_sum(a, b)
    assert s.validate().ok
    assert s.right_invariants().dim == a.right_invariants().dim + b.right_invariants().dim
