import pytest
from hypothesis import given, settings, strategies as st

from dimfilter.errors import ContractError
from dimfilter.modules import Presentation, PrimeIdeal, dim_module, is_zero
from dimfilter.poly import Ring
from dimfilter.randomized import random_monomial_module, random_ring, rng_for
from dimfilter.serre import (
    INFINITY, check_hypotheses, depth_graded, depth_profile, is_equidimensional,
    is_sn, local_depth_at, local_dim_at,
)


def P(ring, *idx):
    return PrimeIdeal.from_variables(ring, idx)


def test_depth_examples(two_planes, column):
    S = Ring(["x", "y", "z"])
    assert depth_graded(Presentation.quotient_ring(list(S.gens()))) == 0
    assert depth_graded(two_planes) == 1
    assert depth_graded(column) == 2
    assert depth_graded(Presentation.zero(S)) == INFINITY


def test_depth_rejects_non_graded():
    R = Ring(["x", "y"])
    x, y = R.gens()
    with pytest.raises(ContractError):
        depth_graded(Presentation.quotient_ring([x ** 2 - y]))


def test_depth_profile(two_planes):
    prof = depth_profile(two_planes)
    assert (prof.depth, prof.projective_dimension) == (1, 3)
    assert prof.ext_table[2] == (True, 2) and prof.ext_table[4] == (False, -1)


def test_local_dim_examples(two_planes, r4):
    assert local_dim_at(two_planes, P(r4, 0, 1, 2)) == 1
    assert local_dim_at(two_planes, P(r4, 0, 1, 2, 3)) == 2
    F = Presentation.free(r4, 2)
    assert local_dim_at(F, P(r4, 0, 2)) == 2
    # outside the support
    R = Ring(["x", "y"])
    x, y = R.gens()
    assert local_dim_at(Presentation.quotient_ring([x]), PrimeIdeal(R, [y])) == -1


def test_local_dim_requires_equidimensional(r4):
    x, y, z, w = r4.gens()
    B = Presentation.quotient_ring([x * y, x * z])
    with pytest.raises(ContractError):
        local_dim_at(B, P(r4, 0, 1, 2, 3))


def test_local_depth_examples(two_planes, r4):
    assert local_depth_at(two_planes, P(r4, 0, 1, 2, 3)) == 1
    assert local_depth_at(two_planes, P(r4, 0, 1, 2)) == 1
    F = Presentation.free(r4, 1)
    assert local_depth_at(F, P(r4, 1, 3)) == 2
    with pytest.raises(ContractError):
        local_depth_at(two_planes, P(r4, 0))


def test_sn_examples(two_planes, column, r4):
    assert is_sn(two_planes, 1)
    v = is_sn(two_planes, 2)
    assert not v
    assert v.witness["j"] == 3 and v.witness["dim_ext"] == 0 and v.witness["bound"] == -1
    assert is_sn(column, 2) and not is_sn(column, 3)
    F = Presentation.free(r4, 2)
    assert all(is_sn(F, n) for n in range(1, 5))


def test_sn_contract_errors(two_planes, r4):
    with pytest.raises(ContractError):
        is_sn(two_planes, 0)
    with pytest.raises(ContractError):
        is_sn(Presentation.zero(r4), 1)


def test_equidimensional_examples(two_planes, r4):
    assert is_equidimensional(two_planes)
    x, y, z, w = r4.gens()
    assert not is_equidimensional(Presentation.quotient_ring([x * y, x * z]))
    assert is_equidimensional(Presentation.quotient_ring([x ** 2 + y * z]))
    with pytest.raises(ContractError):
        is_equidimensional(Presentation.zero(r4))


def test_hypotheses_examples(two_planes, r4):
    rep = check_hypotheses(two_planes)
    assert rep.ok and rep.height_condition is True
    x, y, z, w = r4.gens()
    bad = check_hypotheses(Presentation.quotient_ring([x * y, x * z]))
    assert not bad.ok
    assert bad.equidimensional is False and bad.height_condition is None
    assert check_hypotheses(Presentation(r4, 1, [])).ok
    with pytest.raises(ContractError):
        check_hypotheses(Presentation.quotient_ring([r4.one()]))


@st.composite
def equidim_modules(draw):
    rng = rng_for(draw(st.integers(0, 10**6)))
    ring = random_ring(rng, 2, 4)
    M, _ = random_monomial_module(rng, ring)
    return M


@settings(max_examples=30, deadline=None)
@given(equidim_modules())
def test_sn_monotone(M):
    if is_zero(M) or not is_equidimensional(M):
        return
    prev = True
    for n in range(1, dim_module(M) + 2):
        cur = bool(is_sn(M, n))
        assert prev or not cur
        prev = cur


@settings(max_examples=30, deadline=None)
@given(equidim_modules())
def test_auslander_buchsbaum(M):
    depth = depth_graded(M)
    pd = M.resolution(minimal=True).length
    assert depth + pd == M.ring.nvars
