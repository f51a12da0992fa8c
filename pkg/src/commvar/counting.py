"""Point counts of commuting varieties over finite fields.

Counting is the independent check on Groebner dimensions: a variety of
dimension d has about q^d points over F_q, so the slope of log #V(F_q) against
log q estimates d.  Prime fields use plain modular arithmetic; for q = p^k the
field is built from an irreducible polynomial and arithmetic goes through
addition / multiplication tables.

Work is split into chunks of consecutive point indices (or batches of random
points) that are counted independently and summed, so the answer does not
depend on how chunks are scheduled.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from .errors import InputError, ResourceError
from .variety import is_prime

DEFAULT_BUDGET = 20_000_000     # max points enumerated
CHUNK = 1 << 16


def prime_power(q: int) -> tuple:
    """``(p, k)`` with q = p^k, or InputError."""
    if q < 2:
        raise InputError(f"field size must be a prime power, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1 or not is_prime(p):
        raise InputError(f"field size must be a prime power, got {q}")
    return p, k


def _polymulmod(a, b, modulus, p):
    """Product of coefficient lists (low degree first) modulo a monic polynomial."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    k = len(modulus) - 1
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    return (prod + [0] * k)[:k]


def _is_irreducible(f, p):
    """Brute-force check: no monic factor of degree <= deg/2 (small fields only)."""
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            # long division of f by g
            rem = list(f)
            for s in range(len(rem) - 1, d - 1, -1):
                c = rem[s]
                if c:
                    for i in range(d + 1):
                        rem[s - d + i] = (rem[s - d + i] - c * g[i]) % p
            if not any(rem[:d]):
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    """GF(q) with elements 0..q-1; for q = p^k, element sum a_i p^i is sum a_i t^i."""
    q: int
    p: int
    k: int
    add: np.ndarray = field(repr=False, compare=False, default=None)
    mul: np.ndarray = field(repr=False, compare=False, default=None)

    @property
    def is_prime(self):
        return self.k == 1


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    p, k = prime_power(q)
    if k == 1:
        return FiniteField(q, p, 1)
    modulus = next(list(t) + [1] for t in itertools.product(range(p), repeat=k)
                   if t[0] and _is_irreducible(list(t) + [1], p))
    digits = [[(e // p ** i) % p for i in range(k)] for e in range(q)]
    encode = lambda v: sum(c * p ** i for i, c in enumerate(v))
    add = np.array([[encode([(x + y) % p for x, y in zip(a, b)]) for b in digits]
                    for a in digits], dtype=np.int64)
    mul = np.array([[encode(_polymulmod(a, b, modulus, p)) for b in digits]
                    for a in digits], dtype=np.int64)
    return FiniteField(q, p, k, add, mul)


class _Kernel:
    """Vectorised test 'all generators vanish' for a batch of points."""

    def __init__(self, generators, nvars, F: FiniteField):
        self.F = F
        self.nvars = nvars
        # (exponent tuple, coefficient reduced into the prime field)
        self.gens = [[(m, c % F.p) for m, c in f.terms.items() if c % F.p] for f in generators]
        self.gens = [g for g in self.gens if g]
        self.max_exp = max((e for g in self.gens for m, _ in g for e in m), default=1)
        q = F.q
        if F.is_prime:
            base = np.arange(q, dtype=np.int64)
            self.powers = [np.ones(q, dtype=np.int64)]
            for _ in range(self.max_exp):
                self.powers.append(self.powers[-1] * base % q)
        else:
            self.powers = [np.ones(q, dtype=np.int64), np.arange(q, dtype=np.int64)]
            for _ in range(self.max_exp - 1):
                self.powers.append(F.mul[self.powers[-1], np.arange(q)])

    def _mul(self, a, b):
        return a * b % self.F.q if self.F.is_prime else self.F.mul[a, b]

    def _add(self, a, b):
        return (a + b) % self.F.q if self.F.is_prime else self.F.add[a, b]

    def evaluate(self, g, pts):
        total = np.zeros(len(pts), dtype=np.int64)
        for m, c in g:
            term = np.full(len(pts), c, dtype=np.int64)
            for k, e in enumerate(m):
                if e:
                    term = self._mul(term, self.powers[e][pts[:, k]])
            total = self._add(total, term)
        return total

    def hits(self, pts) -> int:
        alive = pts
        for g in self.gens:
            if not len(alive):
                break
            alive = alive[self.evaluate(g, alive) == 0]
        return len(alive)

    def count_range(self, start, stop) -> int:
        idx = np.arange(start, stop, dtype=np.int64)
        q = self.F.q
        pts = np.empty((len(idx), self.nvars), dtype=np.int64)
        for k in range(self.nvars):
            pts[:, k] = idx % q
            idx = idx // q
        return self.hits(pts)


@dataclass(frozen=True)
class PointCount:
    q: int
    nvars: int
    mode: str                   # "enumerate" or "sample"
    count: float                # exact count, or the estimate q^m * hits / samples
    stderr: float = 0.0
    samples: int = 0
    hits: int = 0

    @property
    def exact(self) -> bool:
        return self.mode == "enumerate"


def _count_chunk(args):
    kernel, start, stop = args
    return kernel.count_range(start, stop)


def count_points(instance, q: int, mode: str = "enumerate", budget: int = DEFAULT_BUDGET,
                 samples: int = 100_000, seed: int = 0, workers: int = 1) -> PointCount:
    """Number of F_q-points of the instance's variety.

    ``instance`` is anything with ``nvars`` and ``generators_mod(p)``.  In
    ``sample`` mode the estimate is unbiased with binomial standard error.
    """
    F = finite_field(q)
    m = instance.nvars
    kernel = _Kernel(instance.generators_mod(F.p), m, F)
    if mode == "enumerate":
        total = q ** m
        if total > budget:
            raise ResourceError(
                f"enumeration: {q}^{m} = {total} points exceeds budget {budget}", limit="budget")
        if not kernel.gens:
            return PointCount(q, m, mode, total)
        chunks = [(kernel, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
        if workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                count = sum(pool.map(_count_chunk, chunks))
        else:
            count = sum(map(_count_chunk, chunks))
        return PointCount(q, m, mode, count)
    if mode == "sample":
        if samples < 1:
            raise InputError("sample mode needs at least one sample")
        if samples > budget:
            raise ResourceError(f"sampling: {samples} samples exceeds budget {budget}",
                                limit="budget")
        rng = np.random.default_rng(seed)
        hits = 0
        for s in range(0, samples, CHUNK):
            pts = rng.integers(0, q, size=(min(CHUNK, samples - s), m), dtype=np.int64)
            hits += kernel.hits(pts)
        frac = hits / samples
        scale = float(q) ** m
        return PointCount(q, m, mode, scale * frac,
                          scale * math.sqrt(frac * (1 - frac) / samples), samples, hits)
    raise InputError(f"unknown counting mode {mode!r}")


@dataclass(frozen=True)
class SlopeFit:
    qs: tuple
    counts: tuple
    slope: float
    intercept: float
    residual: float             # root-mean-square residual of the log-log fit

    @property
    def estimate(self) -> int:
        return round(self.slope)

    def interval(self, halfwidth=0.5) -> tuple:
        return (self.slope - halfwidth, self.slope + halfwidth)

    def contains(self, d, halfwidth=0.5) -> bool:
        lo, hi = self.interval(halfwidth)
        return lo <= d <= hi


def slope_fit(qs, counts) -> SlopeFit:
    """Least-squares fit of log(count) = slope * log(q) + intercept."""
    if len(qs) != len(counts) or len(qs) < 2:
        raise InputError("slope fit needs at least two (q, count) pairs")
    if any(c <= 0 for c in counts):
        raise InputError("slope fit needs positive counts")
    x = np.log(np.asarray(qs, dtype=float))
    y = np.log(np.asarray(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return SlopeFit(tuple(qs), tuple(counts), float(slope), float(intercept),
                    float(np.sqrt(np.mean(resid ** 2))))
