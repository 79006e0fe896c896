import pytest
from hypothesis import given, strategies as st

from leibniz_coh.algebra import NotAnIdeal, hemisemidirect_2d, nilpotent_2d, one_dim_lie
from leibniz_coh.bimodule import adjoint, direct_sum, trivial
from leibniz_coh.cohomology import (
    DixmierSequence, LeibnizComplex, ResourceGuardError, bimodule_ses, les_of_bimodule_ses,
    periodicity_dims, tensor_index, theta_acts_trivially, verify_cartan, verify_square_zero,
)
from leibniz_coh.exactla import GF, QQ, ExactMatrix, Subspace
from leibniz_coh.fixtures import commuting_pair_bimodule
from leibniz_coh.generators import (
    AlgebraClass, RandomAlgebraSpec, random_algebra, random_bimodule, random_one_dim_bimodule,
)
from leibniz_coh.suite import cochain_span
from oracles import naive_coboundary, naive_hl_dims

# basis orders: nilpotent example (e, f); hemi-semidirect example (h, e)
N_IDEAL = [1, 0]
A_IDEAL = [0, 1]


def dense(m: ExactMatrix):
    return m.to_dense()


def ints(m: ExactMatrix):
    return [[int(x) for x in row] for row in m.to_dense()]


def nested(alg):
    return [[[int(c) for c in alg.basis_product(i, j)] for j in range(alg.dim)] for i in range(alg.dim)]


@st.composite
def small_pair(draw, fields=(2, 3, 5)):
    p = draw(st.sampled_from(fields))
    seed = draw(st.integers(0, 10**6))
    kind = draw(st.sampled_from(list(AlgebraClass)))
    alg = random_algebra(RandomAlgebraSpec(GF(p), draw(st.integers(1, 3)), kind, seed))
    return random_bimodule(alg, draw(st.integers(1, 3)), seed)


# layout ---------------------------------------------------------------------

def test_tensor_index_is_lexicographic():
    assert tensor_index((), 3) == 0
    assert tensor_index((1, 0), 2) == 2
    assert tensor_index((0, 1, 1), 2) == 3


def test_degree_zero_cochains_are_module_elements():
    cx = LeibnizComplex(commuting_pair_bimodule(QQ))
    assert cx.dim(0) == 3
    assert cx.hl(0).dim_b == 0


# the coboundary ---------------------------------------------------------------

def test_one_dim_coboundary_closed_form():
    m = commuting_pair_bimodule(QQ)
    cx = LeibnizComplex(m)
    lam, rho = m.lam[0], m.rho[0]
    for n in range(5):
        want = -rho if n % 2 == 0 else lam + rho
        assert cx.coboundary(n) == want


def test_dual_of_f_is_a_cocycle():
    cx = LeibnizComplex(trivial(nilpotent_2d(QQ), 1))
    fstar = [0, 1]
    assert not any(cx.coboundary(1).apply(fstar))


@given(small_pair())
def test_coboundary_matches_naive_formula(m):
    alg = m.algebra
    p = m.field.p
    cx = LeibnizComplex(m)
    lam = [ints(t) for t in m.lam]
    rho = [ints(t) for t in m.rho]
    for n in range(3):
        assert dense(cx.coboundary(n)) == naive_coboundary(nested(alg), lam, rho, n, p)


@given(small_pair())
def test_square_zero(m):
    assert verify_square_zero(LeibnizComplex(m), 3) is None


# theta, iota, tau -------------------------------------------------------------

def test_operators_vanish_at_zero():
    cx = LeibnizComplex(adjoint(nilpotent_2d(QQ)))
    for n in range(1, 3):
        assert cx.theta((0, 0), n).is_zero()
        assert cx.iota((0, 0), n).is_zero()
        assert cx.tau((0, 0), n).is_zero()


def test_theta_on_one_dim_algebra():
    m = commuting_pair_bimodule(QQ)
    cx = LeibnizComplex(m)
    assert cx.theta((1,), 1) == m.lam[0]


def test_theta_on_nilpotent_trivial_coefficients():
    cx = LeibnizComplex(trivial(nilpotent_2d(QQ), 1))
    th = cx.theta((0, 1), 1)
    # theta_f(f*)(f) = 0 and theta_f(e*)(f) = -1
    assert th.apply([0, 1])[1] == 0
    assert th.apply([1, 0])[1] == -1


@given(small_pair(), st.data())
def test_theta_two_routes_agree(m, data):
    a = data.draw(st.lists(st.integers(0, m.field.p - 1), min_size=m.algebra.dim, max_size=m.algebra.dim))
    cx = LeibnizComplex(m)
    for n in range(3):
        assert cx.theta(a, n) == cx.theta_direct(a, n)


@pytest.mark.parametrize("build", [one_dim_lie, nilpotent_2d, hemisemidirect_2d])
def test_cartan_identities_examples(build):
    alg = build(QQ)
    for m in (trivial(alg, 1), adjoint(alg)):
        cx = LeibnizComplex(m)
        for v in alg.full_space().basis:
            assert verify_cartan(cx, v, 3) is None


@given(small_pair(), st.data())
def test_cartan_identities_random(m, data):
    a = data.draw(st.lists(st.integers(0, m.field.p - 1), min_size=m.algebra.dim, max_size=m.algebra.dim))
    assert verify_cartan(LeibnizComplex(m), a, 3) is None


@given(small_pair(), st.data())
def test_theta_is_trivial_on_cohomology(m, data):
    a = data.draw(st.lists(st.integers(0, m.field.p - 1), min_size=m.algebra.dim, max_size=m.algebra.dim))
    cx = LeibnizComplex(m)
    for n in range(1, 3):
        assert theta_acts_trivially(cx, a, n)


# cohomology dimensions ----------------------------------------------------------

def test_one_dim_trivial_coefficients():
    assert LeibnizComplex(trivial(one_dim_lie(QQ), 1)).hl_dims(6) == [1] * 7


@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_nilpotent_trivial_coefficients(field):
    assert LeibnizComplex(trivial(nilpotent_2d(field), 1)).hl_dims(3) == [1, 1, 1, 1]


def test_nilpotent_trivial_matches_naive_oracle():
    triv = ([[[0]], [[0]]], [[[0]], [[0]]])
    alg = nilpotent_2d(QQ)
    assert naive_hl_dims(nested(alg), *triv, 4) == LeibnizComplex(trivial(alg, 1)).hl_dims(4)


def test_hemisemidirect_adjoint():
    cx = LeibnizComplex(adjoint(hemisemidirect_2d(QQ)))
    assert cx.hl(1).dim_h == 0 and cx.hl(2).dim_h == 0
    assert cx.cohomology(0).reps_space == Subspace.span(QQ, 2, [A_IDEAL])


def test_nilpotent_adjoint():
    assert LeibnizComplex(adjoint(nilpotent_2d(QQ))).hl_dims(2) == [1, 1, 1]


def test_nilpotent_representatives():
    cx = LeibnizComplex(trivial(nilpotent_2d(QQ), 1))
    expected = {1: [(1,)], 2: [(1, 0)], 3: [(1, 0, 1)]}
    for n, tensors in expected.items():
        assert cx.cohomology(n).reps_space == cochain_span(QQ, 2, 1, tensors)


def test_result_fields_are_consistent():
    cx = LeibnizComplex(adjoint(nilpotent_2d(QQ)))
    for n in range(4):
        r = cx.hl(n, representatives=True)
        assert r.dim_h == r.dim_z - r.dim_b >= 0
        assert len(r.representatives) == r.dim_h
        for v in r.representatives:
            assert not any(cx.coboundary(n).apply(list(v)))


# the mutation check ---------------------------------------------------------------

def test_sign_mutation_is_detected():
    # dropping the alternating signs must break either d o d = 0 or the known dims
    alg = nilpotent_2d(QQ)
    triv = ([[[0]], [[0]]], [[[0]], [[0]]])
    good = naive_hl_dims(nested(alg), *triv, 4)
    bad = naive_hl_dims(nested(alg), *triv, 4, constant_signs=True)
    assert good == [1] * 5
    assert bad != good


# closed forms over the one-dimensional Lie algebra ----------------------------------

def test_commuting_pair_closed_form():
    m = commuting_pair_bimodule(QQ)
    assert LeibnizComplex(m).hl_dims(5)[1:] == [0] * 5 == periodicity_dims(m, 5)[1:]


@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(0, 10**6))
def test_periodicity(p, dim, seed):
    m = random_one_dim_bimodule(GF(p), dim, seed)
    assert LeibnizComplex(m).hl_dims(5) == periodicity_dims(m, 5)
    rho, s = m.rho[0], m.lam[0] + m.rho[0]
    # M_0 inside M^L and ML inside M^0
    assert s.image() <= rho.kernel()
    assert rho.image() <= s.kernel()
    assert s.kernel().dim - rho.rank() == rho.kernel().dim - s.rank()


def test_periodicity_needs_one_dim_algebra():
    with pytest.raises(ValueError):
        periodicity_dims(trivial(nilpotent_2d(QQ), 1), 2)


# long exact sequences -------------------------------------------------------------

def test_les_for_antisymmetric_kernel():
    m = commuting_pair_bimodule(QQ)
    assert les_of_bimodule_ses(m, m.antisymmetric_kernel(), 3).exact


def test_les_for_nilpotent_adjoint():
    m = adjoint(nilpotent_2d(QQ))
    assert les_of_bimodule_ses(m, Subspace.span(QQ, 2, [N_IDEAL]), 2).exact


def test_split_sum_has_zero_connecting_maps():
    alg = nilpotent_2d(QQ)
    m = direct_sum(trivial(alg, 1), adjoint(alg))
    ses = bimodule_ses(m, Subspace.span(QQ, 3, [[1, 0, 0]]))
    assert ses.verify(2).exact
    for n in range(3):
        assert ses.connecting_map(n).is_zero()


@given(small_pair(fields=(2, 3)))
def test_les_random(m):
    cs = m.composition_series()
    if len(cs.chain) > 2:
        assert les_of_bimodule_ses(m, cs.chain[1], 2).exact


# the restriction sequence ---------------------------------------------------------

@pytest.mark.parametrize("build,coeffs,ideal,x", [
    (nilpotent_2d, "trivial", N_IDEAL, (0, 1)),
    (nilpotent_2d, "adjoint", N_IDEAL, (0, 1)),
    (hemisemidirect_2d, "trivial", A_IDEAL, (1, 0)),
])
def test_restriction_sequence(build, coeffs, ideal, x):
    alg = build(QQ)
    m = trivial(alg, 1) if coeffs == "trivial" else adjoint(alg)
    report = DixmierSequence(m, Subspace.span(QQ, 2, [ideal]), x).verify(3)
    assert report.ses_exact and report.anticommutes and report.connecting_matches
    assert report.les.exact


def test_restriction_sequence_ideal_cohomology():
    alg = nilpotent_2d(QQ)
    seq = DixmierSequence(trivial(alg, 1), Subspace.span(QQ, 2, [N_IDEAL]), (0, 1))
    assert seq.verify(3).ideal_dims == [1, 1, 1, 1]
    # degree one kernel cochains are Hom(F x, M)
    assert len(seq.dl_indices(1)) == 1


def test_restriction_sequence_rejects_bad_input():
    a = hemisemidirect_2d(QQ)
    with pytest.raises(NotAnIdeal):
        DixmierSequence(trivial(a, 1), Subspace.span(QQ, 2, [[1, 0]]), (0, 1))
    with pytest.raises(ValueError):
        DixmierSequence(trivial(a, 1), Subspace.span(QQ, 2, [A_IDEAL]), (0, 1))


# resource guard ---------------------------------------------------------------------

def test_guard_refuses_with_estimate():
    cx = LeibnizComplex(adjoint(nilpotent_2d(QQ)), memory_mb=0.001)
    with pytest.raises(ResourceGuardError) as info:
        cx.hl(6)
    assert info.value.estimate_mb > info.value.limit_mb


def test_guard_reads_environment(monkeypatch):
    monkeypatch.setenv("LEIBNIZ_COH_MEMORY_MB", "0.0001")
    with pytest.raises(ResourceGuardError):
        LeibnizComplex(adjoint(nilpotent_2d(QQ))).hl(5)
