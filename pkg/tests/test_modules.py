import pytest
from hypothesis import given, settings, strategies as st

from dimfilter.errors import ContractError
from dimfilter.modules import (
    Presentation, PrimeIdeal, Submodule, annihilator, colon_saturate, dim_module,
    ext_module, ideal, intersect, is_zero, radical_member,
    support_contains, unit_ideal,
)
from dimfilter.poly import FreeElem, Ring
from dimfilter.randomized import (
    random_monomial_module, random_ring, random_submodule, rng_for,
)


def test_annihilator_examples(column):
    R = Ring(["x", "y"])
    x, y = R.gens()
    I = [x ** 2, x * y]
    assert annihilator(Presentation.quotient_ring(I)) == ideal(R, I)
    assert annihilator(column).is_zero()
    M = Presentation.direct_sum(Presentation.quotient_ring([x]),
                                Presentation.quotient_ring([x, y]))
    assert annihilator(M) == ideal(R, [x])


def test_annihilator_of_zero_module_is_unit():
    R = Ring(["x"])
    assert annihilator(Presentation.zero(R)).is_unit()


def test_saturation_examples(embedded):
    R = embedded.ring
    x, y = R.gens()
    sat = colon_saturate(Submodule.zero(embedded), ideal(R, [x, y]))
    assert sat == Submodule(embedded, [FreeElem(R, [x])])
    assert colon_saturate(Submodule.zero(embedded), unit_ideal(R)).is_zero()
    assert colon_saturate(Submodule.zero(embedded), ideal(R, [])) == Submodule.whole(embedded)


def test_intersection_examples():
    R = Ring(["x", "y"])
    x, y = R.gens()
    F = Presentation.free(R, 1)
    a = intersect(Submodule(F, [FreeElem(R, [x])]), Submodule(F, [FreeElem(R, [y])]))
    assert a == Submodule(F, [FreeElem(R, [x * y])])
    S = Ring(["x", "y", "z", "w"])
    x, y, z, w = S.gens()
    F = Presentation.free(S, 1)
    b = intersect(Submodule(F, [FreeElem(S, [x]), FreeElem(S, [y])]),
                  Submodule(F, [FreeElem(S, [z]), FreeElem(S, [w])]))
    assert b == Submodule(F, [FreeElem(S, [m]) for m in (x * z, x * w, y * z, y * w)])
    R2 = Ring(["x", "y"])
    x, y = R2.gens()
    F2 = Presentation.free(R2, 2)
    c = intersect(Submodule(F2, [FreeElem(R2, [x, R2.zero()])]),
                  Submodule(F2, [FreeElem(R2, [R2.zero(), y])]))
    assert c.is_zero()


def test_intersect_ambient_mismatch():
    R = Ring(["x"])
    with pytest.raises(ContractError):
        intersect(Submodule.whole(Presentation.free(R, 1)),
                  Submodule.whole(Presentation.free(R, 2)))


def test_ext_examples(two_planes):
    R = Ring(["x", "y"])
    x, y = R.gens()
    H = Presentation.quotient_ring([x ** 2 - y ** 2])
    E1 = ext_module(1, H)
    assert annihilator(E1) == ideal(R, [x ** 2 - y ** 2]) and E1.rank == 1
    assert is_zero(ext_module(0, H)) and is_zero(ext_module(2, H))
    S = Ring(["x", "y", "z"])
    K = Presentation.quotient_ring(list(S.gens()))
    assert annihilator(ext_module(3, K)) == ideal(S, list(S.gens()))
    assert all(is_zero(ext_module(j, K)) for j in range(3))
    assert dim_module(ext_module(2, two_planes)) == 2
    assert dim_module(ext_module(3, two_planes)) == 0
    assert is_zero(ext_module(4, two_planes))
    with pytest.raises(ContractError):
        ext_module(5, two_planes)


def test_is_zero_examples():
    R = Ring(["x", "y"])
    x, y = R.gens()
    ident = Presentation.from_matrix(R, [[R.one(), R.zero()], [R.zero(), R.one()]])
    assert is_zero(ident)
    assert not is_zero(Presentation.quotient_ring([x]))


def test_radical_member_examples(r4):
    R = Ring(["x", "y"])
    x, y = R.gens()
    assert radical_member(x, ideal(R, [x ** 2]))
    assert radical_member(x + y, ideal(R, [x, y]))
    a, b, c, d = r4.gens()
    assert not radical_member(c, ideal(r4, [a * c, a * d, b * c, b * d]))


def test_support_examples(two_planes):
    R = Ring(["x", "y"])
    x, y = R.gens()
    M = Presentation.quotient_ring([x])
    assert support_contains(PrimeIdeal(R, [x, y]), M)
    assert not support_contains(PrimeIdeal(R, [y]), M)
    S = two_planes.ring
    E3 = ext_module(3, two_planes)
    assert not support_contains(PrimeIdeal.from_variables(S, [0, 1, 2]), E3)
    assert support_contains(PrimeIdeal.from_variables(S, [0, 1, 2, 3]), E3)


def test_dim_module_examples(embedded, column):
    assert dim_module(embedded) == 1
    assert dim_module(column) == 3
    assert dim_module(Presentation.zero(column.ring)) == -1


def test_prime_certificates():
    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    assert PrimeIdeal(R, [x, z]).certificate == "monomial"
    p = PrimeIdeal(R, [x + y, x - y])
    assert p.certificate == "linear" and p.height == 2 and p.dim == 1
    with pytest.raises(ContractError):
        PrimeIdeal(R, [x * y])
    with pytest.raises(ContractError):
        PrimeIdeal(R, [x + y, 2 * x + 2 * y])
    q = PrimeIdeal(R, [x ** 2 + y ** 2], "declared")
    assert q.certificate == "declared"


@st.composite
def monomial_modules(draw):
    rng = rng_for(draw(st.integers(0, 10**6)))
    ring = random_ring(rng, 2, 3)
    M, _ = random_monomial_module(rng, ring)
    return M, rng


@settings(max_examples=30, deadline=None)
@given(monomial_modules())
def test_annihilator_kills(case):
    M, _ = case
    R = M.ring
    for a in annihilator(M).gens:
        for i in range(M.rank):
            v = FreeElem.basis(R, M.rank, i).scale(a)
            assert Submodule(M, [v]).is_zero()


@settings(max_examples=30, deadline=None)
@given(monomial_modules())
def test_saturation_idempotent(case):
    M, rng = case
    R = M.ring
    b = ideal(R, [R.gens()[rng.randrange(R.nvars)]])
    N = random_submodule(rng, M)
    once = colon_saturate(N, b)
    assert colon_saturate(once, b) == once
    assert N <= once


@settings(max_examples=30, deadline=None)
@given(monomial_modules())
def test_intersect_laws(case):
    M, rng = case
    A, B, C = (random_submodule(rng, M) for _ in range(3))
    ab = intersect(A, B)
    assert ab == intersect(B, A)
    assert ab <= A and ab <= B
    assert intersect(ab, C) == intersect(A, intersect(B, C))


@settings(max_examples=30, deadline=None)
@given(monomial_modules())
def test_ext_window_and_dim_bound(case):
    M, _ = case
    d = M.ring.nvars
    c = d - dim_module(M)
    pd = M.resolution().length
    for j in range(d + 1):
        E = ext_module(j, M)
        assert dim_module(E) <= d - j
        if j < c or j > pd:
            assert is_zero(E)
    assert not is_zero(ext_module(c, M))
