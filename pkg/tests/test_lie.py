import pytest
from hypothesis import given, settings, strategies as st

from commvar import linalg
from commvar.errors import InputError
from commvar.lie import (MIN_RANK, LieAlgebraBasis, LieType, adjoint, algebra, bracket,
                         construct_algebra, defining_form, regular_nilpotent, root_vector,
                         select_subalgebra, structure_check, w_block, w_representative)
from commvar.orbits import centralizer_dim

TYPES = [LieType(f, l) for f in "ABCD" for l in range(MIN_RANK[f], 5)]


def test_parse_labels():
    assert LieType.parse("C2") == LieType("C", 2)
    assert LieType.parse("sl4") == LieType("A", 3)
    assert LieType.parse("sp4") == LieType("C", 2)
    assert LieType.parse("so7") == LieType("B", 3)
    assert LieType.parse("so8") == LieType("D", 4)
    for bad in ("E6", "sp5", "D2", "B1", "x"):
        with pytest.raises(InputError):
            LieType.parse(bad)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_metadata(t):
    n = {"A": t.rank + 1, "B": 2 * t.rank + 1}.get(t.family, 2 * t.rank)
    h = {"A": t.rank + 1, "B": 2 * t.rank, "C": 2 * t.rank, "D": 2 * t.rank - 2}[t.family]
    assert t.n == n and t.coxeter_number == h


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_subalgebra_dims(t):
    g = construct_algebra(t)
    b, u, tor = (select_subalgebra(g, s) for s in "but")
    assert b.dim == u.dim + tor.dim
    assert tor.dim == t.rank
    assert 2 * u.dim + t.rank == g.dim


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_w_is_abelian_square_zero(t):
    g = construct_algebra(t)
    w = select_subalgebra(g, "w").basis
    for x in w:
        assert linalg.is_zero(linalg.matmul(x, x))
        for y in w:
            assert linalg.is_zero(linalg.matmul(x, y))


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_coordinates_round_trip(t):
    g = construct_algebra(t)
    coeffs = [(k % 5) - 2 for k in range(g.dim)]
    x = linalg.linear_combination(coeffs, g.basis)
    assert g.coordinates(x) == coeffs


def test_coordinates_reject_outside():
    g = algebra("C2")
    with pytest.raises(InputError):
        g.coordinates(linalg.elementary(4, 0, 1))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([LieType("B", 2), LieType("C", 2), LieType("D", 3), LieType("C", 3)]),
       st.lists(st.integers(-3, 3), min_size=49, max_size=49))
def test_m_minus_adjoint_lies_in_g(t, entries):
    n = t.n
    m = linalg.as_matrix([entries[i * 7:i * 7 + n] for i in range(n)])
    x = linalg.sub(m, adjoint(m, defining_form(t)))
    assert construct_algebra(t).contains(x)


def test_c2_u_matches_displayed_matrix():
    # u of sp4 is [[0,x,y,z],[0,0,t,y],[0,0,0,-x],[0,0,0,0]]
    g = algebra("C2")
    u = select_subalgebra(g, "u")
    leaders = [g.leaders[k] for k in u.indices]
    assert leaders == [(0, 1), (0, 2), (0, 3), (1, 2)]
    x, y, z, t = u.basis
    assert x[0][1] == 1 and x[2][3] == -1
    assert y[0][2] == 1 and y[1][3] == 1
    assert linalg.support(z) == [(0, 3)]
    assert linalg.support(t) == [(1, 2)]


def test_bracket_closure_detects_a_non_algebra():
    t = LieType("A", 1)
    fake = LieAlgebraBasis(t, (linalg.elementary(2, 0, 1), linalg.elementary(2, 1, 0)),
                           None, ((0, 1), (1, 0)))
    assert structure_check(fake) == (False, True)


def test_bracket_dimension_check():
    with pytest.raises(InputError):
        bracket(linalg.identity(2), linalg.identity(3))


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_regular_nilpotent_centralizer(t):
    g = construct_algebra(t)
    x = regular_nilpotent(g)
    assert g.contains(x)
    assert centralizer_dim(g, x) == t.rank


def test_forbidden_root_vectors():
    # type D has no entry on the anti-diagonal; type A roots are off-diagonal
    assert root_vector(LieType("D", 3), 0, 5) is None
    assert root_vector(LieType("A", 2), 1, 1) is None
    assert root_vector(LieType("C", 2), 0, 3) is not None


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_w_representative_in_w(t):
    g = construct_algebra(t)
    x = w_representative(g)
    rows, cols = w_block(t)
    assert all(i in rows and j in cols for i, j in linalg.support(x))
    assert g.contains(x)
