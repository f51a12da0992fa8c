import itertools
from dataclasses import dataclass

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from commvar import counting
from commvar.counting import count_points, finite_field, prime_power, slope_fit
from commvar.errors import InputError, ResourceError
from commvar.lie import LieType
from commvar.poly import Polynomial
from commvar.variety import Locus, compile_instance


@dataclass
class Ideal:
    nvars: int
    gens: list
    description: str = "test ideal"

    def generators_mod(self, p):
        return [f for f in self.gens if any(c % p for c in f.terms.values())]

    @property
    def generators(self):
        return self.gens


def sl2_nilcone_pairs():
    return compile_instance(Locus("N", LieType("A", 1)), 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_sl2_commuting_nilpotent_pairs(q):
    # closed form for commuting pairs in the nilpotent cone of sl_2
    assert count_points(sl2_nilcone_pairs(), q).count == q ** 3 + q ** 2 - q


def test_a2_u_pairs_over_f2():
    inst = compile_instance(Locus("u", LieType("A", 2)), 1)
    assert count_points(inst, 2).count == 8


def test_zero_ideal_counts_everything():
    assert count_points(Ideal(4, []), 3).count == 81


@pytest.mark.parametrize("q", [4, 8, 9, 25])
def test_extension_field_axioms(q):
    F = finite_field(q)
    assert (F.p, F.k) == prime_power(q)
    els = np.arange(q)
    assert (F.add[0] == els).all() and (F.mul[1] == els).all()
    assert (F.add == F.add.T).all() and (F.mul == F.mul.T).all()
    for a in range(1, q):
        assert sorted(F.mul[a]) == list(range(q))         # no zero divisors
    a, b, c = np.meshgrid(els, els, els, indexing="ij")
    assert (F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]).all()
    assert (F.mul[F.mul[a, b], c] == F.mul[a, F.mul[b, c]]).all()
    # characteristic p
    x = np.zeros(q, dtype=np.int64)
    for _ in range(F.p):
        x = F.add[x, els]
    assert (x == 0).all()


def test_prime_power_rejects():
    for bad in (1, 6, 12):
        with pytest.raises(InputError):
            prime_power(bad)


small_polys = st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.dictionaries(st.tuples(*[st.integers(0, 2)] * n), st.integers(-2, 2), min_size=1, max_size=3),
    max_size=3)))


@settings(max_examples=40, deadline=None)
@given(small_polys, st.sampled_from([2, 3, 5]))
def test_enumeration_matches_itertools(case, q):
    n, dicts = case
    gens = [Polynomial(d, n) for d in dicts]
    def value(f, pt):
        return sum(c * np.prod([x ** e for x, e in zip(pt, m)]) for m, c in f.terms.items()) % q
    brute = sum(all(value(f, pt) == 0 for f in gens) for pt in itertools.product(range(q), repeat=n))
    assert count_points(Ideal(n, gens), q).count == brute


def test_budget_is_enforced():
    with pytest.raises(ResourceError) as exc:
        count_points(sl2_nilcone_pairs(), 7, budget=1000)
    assert exc.value.limit == "budget"
    assert str(exc.value).startswith("enumeration")


def test_chunking_and_workers_do_not_change_count(monkeypatch):
    inst = sl2_nilcone_pairs()
    ref = count_points(inst, 5).count
    monkeypatch.setattr(counting, "CHUNK", 97)
    assert count_points(inst, 5).count == ref
    assert count_points(inst, 5, workers=2).count == ref


def test_sampling_is_seeded_and_reasonable():
    inst = sl2_nilcone_pairs()
    a = count_points(inst, 5, mode="sample", samples=50_000, seed=3)
    b = count_points(inst, 5, mode="sample", samples=50_000, seed=3)
    assert a == b
    exact = 5 ** 3 + 5 ** 2 - 5
    assert abs(a.count - exact) < 5 * a.stderr
    assert a.count == pytest.approx(5 ** 6 * a.hits / a.samples)
    with pytest.raises(InputError):
        count_points(inst, 5, mode="sample", samples=0)
    with pytest.raises(InputError):
        count_points(inst, 5, mode="guess")


def test_slope_fit_exact_power():
    qs = (2, 3, 5, 7)
    fit = slope_fit(qs, [4 * q ** 3 for q in qs])
    assert fit.slope == pytest.approx(3)
    assert fit.estimate == 3 and fit.contains(3) and not fit.contains(4)
    assert fit.residual == pytest.approx(0, abs=1e-9)
    with pytest.raises(InputError):
        slope_fit((2,), (4,))
    with pytest.raises(InputError):
        slope_fit((2, 3), (0, 1))
