import itertools

import pytest
import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from commvar.errors import InputError, ResourceError
from commvar.groebner import (GroebnerConfig, MonomialCodec, buchberger_criterion_holds,
                              dimension_from_leading_monomials, groebner, ideal_dimension)
from commvar.lie import LieType
from commvar.poly import Polynomial
from commvar.variety import Locus, compile_instance, determinantal_relaxation

X = sympy.symbols("a b c d")


def to_poly(expr, nvars, p):
    P = sympy.Poly(expr, *X[:nvars])
    return Polynomial({m: int(c) % p for m, c in P.terms()}, nvars)


def sympy_reduced_basis(polys, nvars, p):
    exprs = [sum(c * sympy.prod(v ** e for v, e in zip(X, m)) for m, c in f.terms.items())
             for f in polys]
    G = sympy.groebner(exprs, *X[:nvars], modulus=p, order="grevlex")
    out = set()
    for g in G.exprs:
        f = to_poly(g, nvars, p)
        lc = f.terms[f.leading_monomial()]
        inv = pow(lc, p - 2, p)
        out.add(Polynomial({m: c * inv % p for m, c in f.terms.items()}, nvars))
    return out


def homogeneous(nvars, degree):
    monos = [m for m in itertools.product(range(degree + 1), repeat=nvars) if sum(m) == degree]
    return st.dictionaries(st.sampled_from(monos), st.integers(-3, 3), min_size=1, max_size=4) \
        .map(lambda d: Polynomial(d, nvars))


ideals = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(1, 3).flatmap(lambda d: homogeneous(n, d)), min_size=1, max_size=4))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals, st.sampled_from([2, 3, 7, 101]))
def test_reduced_basis_matches_sympy(gens, p):
    gens = [f for f in gens if any(c % p for c in f.terms.values())]
    if not gens:
        return
    nvars = gens[0].nvars
    ours = groebner(gens, p, nvars=nvars)
    assert set(ours.polynomials()) == sympy_reduced_basis(gens, nvars, p)


@settings(max_examples=30, deadline=None)
@given(ideals)
def test_exhaustive_criterion_and_membership(gens):
    p = 7
    gens = [f for f in gens if any(c % p for c in f.terms.values())]
    if not gens:
        return
    gb = groebner(gens, p, nvars=gens[0].nvars)
    assert buchberger_criterion_holds(list(gb.polys), p, gb.codec, exhaustive=True)
    assert all(gb.contains(f) for f in gens)


def test_single_square():
    gb = groebner([Polynomial({(2,): 1}, 1)], 5)
    assert gb.polynomials() == [Polynomial({(2,): 1}, 1)]


def test_hand_example_over_f5():
    # {xy, x^2 - x}: leading terms xy and x^2
    gens = [Polynomial({(1, 1): 1}, 2), Polynomial({(2, 0): 1, (1, 0): -1}, 2)]
    gb = groebner(gens, 5)
    assert sorted(gb.leading_monomials) == [(1, 1), (2, 0)]


def test_c2_minors_r2_dimension_7():
    inst = determinantal_relaxation(compile_instance(Locus("u", LieType("C", 2)), 2))
    gb = groebner(inst.generators_mod(32003), 32003, nvars=inst.nvars)
    assert ideal_dimension(gb, inst.nvars) == 7


def test_c2_u_r2_dimension_6():
    inst = compile_instance(Locus("u", LieType("C", 2)), 2)
    gb = groebner(inst.generators_mod(32003), 32003, nvars=inst.nvars)
    assert ideal_dimension(gb, inst.nvars) == 6


def test_dimension_conventions():
    assert dimension_from_leading_monomials([], 5) == 5
    lin = [tuple(int(i == k) for i in range(6)) for k in range(4)]
    assert dimension_from_leading_monomials(lin, 6) == 2
    gb = groebner([Polynomial({(0, 0): 3}, 2)], 7)
    assert gb.is_unit_ideal() and ideal_dimension(gb) == -1


@settings(max_examples=80)
@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(0, 2)] * n), max_size=6))))
def test_dimension_matches_brute_force(case):
    n, lms = case
    lms = [m for m in lms if any(m)]
    best = max(len(S) for k in range(n + 1) for S in itertools.combinations(range(n), k)
               if not any(all(m[i] == 0 or i in S for i in range(n)) for m in lms))
    assert dimension_from_leading_monomials(lms, n) == best


def test_work_limits():
    inst = compile_instance(Locus("O2", LieType("A", 2)), 2)
    with pytest.raises(ResourceError) as exc:
        groebner(inst.generators_mod(32003), 32003, GroebnerConfig(max_pairs=10), inst.nvars)
    assert exc.value.limit == "max_pairs"
    with pytest.raises(ResourceError) as exc:
        groebner(inst.generators_mod(32003), 32003, GroebnerConfig(max_degree=2), inst.nvars)
    assert exc.value.limit == "max_degree"


def test_non_prime_rejected():
    with pytest.raises(InputError):
        groebner([Polynomial({(1,): 1}, 1)], 4)


def test_deterministic():
    inst = compile_instance(Locus("O2", LieType("A", 2)), 2)
    a = groebner(inst.generators_mod(101), 101, nvars=inst.nvars)
    b = groebner(list(reversed(inst.generators_mod(101))), 101, nvars=inst.nvars)
    assert a.polys == b.polys


def test_codec_order_and_divisibility():
    codec = MonomialCodec(3)
    ms = list(itertools.product(range(3), repeat=3))
    keys = {m: codec.key(m) for m in ms}
    ref = sorted(ms, key=lambda m: (sum(m), tuple(-e for e in reversed(m))))
    assert sorted(ms, key=keys.get) == ref
    for a in ms:
        assert codec.exps(keys[a]) == a
        for b in ms:
            assert codec.divides(keys[a], keys[b]) == all(x <= y for x, y in zip(a, b))
            lcm = tuple(max(x, y) for x, y in zip(a, b))
            assert codec.lcm_packed(codec.packed(keys[a]), codec.packed(keys[b])) == \
                codec.packed(codec.key(lcm))
