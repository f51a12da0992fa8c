from hypothesis import given, settings, strategies as st

from commvar.poly import Polynomial, degrevlex_key

NV = 3
monos = st.tuples(*[st.integers(0, 3)] * NV)
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=5).map(lambda d: Polynomial(d, NV))
points = st.tuples(*[st.integers(-4, 4)] * NV)


@settings(max_examples=80)
@given(polys, polys, points)
def test_ring_operations_commute_with_evaluation(f, g, pt):
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f - g).evaluate(pt) == f.evaluate(pt) - g.evaluate(pt)


@settings(max_examples=80)
@given(polys)
def test_normalized(f):
    if f.is_zero():
        return
    c, prim = f.normalized()
    assert prim.content() == 1
    assert prim.leading_coefficient() > 0
    assert prim * c == f or prim * (-c) == f


@settings(max_examples=50)
@given(polys)
def test_json_round_trip(f):
    assert Polynomial.from_json(f.to_json(), NV) == f


def test_degrevlex_order():
    # x > y > z; x*z < y^2 in degrevlex
    x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert degrevlex_key(x) > degrevlex_key(y) > degrevlex_key(z)
    assert degrevlex_key((0, 2, 0)) > degrevlex_key((1, 0, 1))
    assert degrevlex_key((0, 0, 2)) > degrevlex_key(x)


def test_text_export():
    f = Polynomial({(2, 0): 3, (1, 1): -1, (0, 0): 1}, 2)
    assert f.to_text(["a", "b"]) == "3*a^2 - a*b + 1"
    assert Polynomial({}, 2).to_text(["a", "b"]) == "0"


def test_rename():
    f = Polynomial({(1, 2, 0): 1}, 3)
    assert f.rename([2, 0, 1]).terms == {(2, 0, 1): 1}
