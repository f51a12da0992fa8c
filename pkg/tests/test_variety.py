import itertools

import pytest

from commvar import linalg
from commvar.errors import InputError, UnsupportedLocusError
from commvar.lie import LieType, construct_algebra, regular_nilpotent
from commvar.poly import Polynomial
from commvar.variety import (Locus, compile_instance, determinantal_relaxation, load_json,
                             permuted_generators, tuple_permute)

C2 = LieType("C", 2)


def primitive_set(polys):
    return {f.normalized()[1] for f in polys}


@pytest.mark.parametrize("r", [2, 3, 4])
def test_c2_u_generators_are_the_two_minor_families(r):
    inst = compile_instance(Locus("u", C2), r)
    d = 4     # block coordinates: x, y, z, t
    var = lambda i, k: Polynomial.variable(i * d + k, inst.nvars)
    x, y, t = 0, 1, 3
    expected = []
    for i, j in itertools.combinations(range(r), 2):
        expected.append(var(i, x) * var(j, t) - var(j, x) * var(i, t))
        expected.append(var(i, x) * var(j, y) - var(j, x) * var(i, y))
    assert set(inst.generators) == primitive_set(expected)


def test_contents_track_factor_two():
    inst = compile_instance(Locus("u", C2), 2)
    assert sorted(inst.contents) == [1, 2]
    assert len(inst.generators_mod(2)) == 1
    assert len(inst.generators_mod(3)) == 2


@pytest.mark.parametrize("label,locus,r", [("C2", "u", 3), ("A2", "O2", 2), ("A2", "N", 2),
                                           ("A1", "N", 3), ("C2", "O2_cap_u", 3)])
def test_tuple_permutations_preserve_ideal(label, locus, r):
    inst = compile_instance(Locus.parse(locus, LieType.parse(label)), r)
    base = set(inst.generators)
    for sigma in itertools.permutations(range(1, r + 1)):
        assert primitive_set(permuted_generators(inst, sigma)) == base


def test_tuple_permute_rejects_non_permutation():
    inst = compile_instance(Locus("u", C2), 2)
    with pytest.raises(InputError):
        tuple_permute(inst, [1, 1])


@pytest.mark.parametrize("label,power", [("A2", 2), ("C2", 3), ("A3", 2)])
def test_commuting_nilpotent_pair_is_a_zero(label, power):
    # (x, x^k) with x regular nilpotent lies on C_2(N)
    t = LieType.parse(label)
    g = construct_algebra(t)
    x = regular_nilpotent(g)
    y = linalg.power(x, power)
    inst = compile_instance(Locus("N", t), 2)
    pt = [int(c) for c in g.coordinates(x) + g.coordinates(y)]
    assert all(f.evaluate(pt) == 0 for f in inst.generators)
    # a non-nilpotent point is not
    h = [int(c) for c in g.coordinates(linalg.sub(linalg.elementary(t.n, 0, 0),
                                                  linalg.elementary(t.n, t.n - 1, t.n - 1)))]
    assert any(f.evaluate(h + [0] * g.dim) != 0 for f in inst.generators)


def test_w_locus_has_no_equations():
    inst = compile_instance(Locus("w", LieType("C", 3)), 3)
    assert inst.generators == () and inst.nvars == 18


def test_locus_errors():
    with pytest.raises(UnsupportedLocusError):
        Locus("O2", LieType("B", 2))
    with pytest.raises(InputError):
        Locus("N1", C2, 4)
    with pytest.raises(InputError):
        Locus("bogus", C2)
    with pytest.raises(InputError):
        compile_instance(Locus("u", C2), 0)


def test_n1_below_coxeter_uses_p_th_power():
    assert Locus.parse("N1(3)", C2).nilpotency_exponent == 3
    assert Locus.parse("N1(5)", C2).nilpotency_exponent == 4
    assert Locus.parse("N1(2)", LieType("A", 2)).nilpotency_exponent == 2


def test_exports():
    inst = compile_instance(Locus("u", C2), 2)
    assert inst.to_text().splitlines() == ["x_1_4*x_2_1 - x_1_1*x_2_4",
                                           "x_1_2*x_2_1 - x_1_1*x_2_2"]
    names, gens = load_json(inst.to_json())
    assert names == inst.variables and tuple(gens) == inst.generators


def test_determinantal_relaxation():
    inst = determinantal_relaxation(compile_instance(Locus("u", C2), 3))
    assert len(inst.generators) == 3
    assert inst.relaxation == "determinantal"
    with pytest.raises(InputError):
        determinantal_relaxation(compile_instance(Locus("u", LieType("A", 2)), 2))
