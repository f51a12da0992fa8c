"""Nilpotent orbits of the classical algebras, labelled by partitions.

Orbit dimensions come from the closed formulas in terms of the dual partition;
:func:`centralizer_dim` computes the same numbers from scratch as the kernel of
``ad x`` so the two routes can be checked against each other.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import linalg
from .errors import InputError, UnsupportedLocusError
from .lie import LieAlgebraBasis, LieType, adjoint, bracket, construct_algebra


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or any(x <= 0 for x in parts):
            raise InputError(f"partition needs positive parts, got {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"partition must be weakly decreasing, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts) -> "Partition":
        """Build from parts in any order; ``Partition.of(1, 2, 2)`` is [2, 2, 1]."""
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls.of(*[int(x) for x in text.replace(" ", "").split(",") if x])
        except ValueError as exc:
            raise InputError(f"cannot parse partition {text!r}") from exc

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class OrbitDescriptor:
    lie_type: LieType
    partition: Partition
    dim: int
    valid: bool
    very_even: bool = False     # type D: labels two orbits of the same dimension


def dual_partition(p: Partition) -> Partition:
    parts = p.parts
    return Partition(tuple(sum(1 for x in parts if x > k) for k in range(parts[0])))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest
    for parts in gen(n, n):
        yield Partition(parts)


def is_valid(t: LieType, p: Partition) -> bool:
    if p.total != t.n:
        return False
    if t.family == "A":
        return True
    bad_parity = 0 if t.family in ("B", "D") else 1
    return all(m % 2 == 0 for part, m in p.multiplicities().items() if part % 2 == bad_parity)


def valid_partitions(t: LieType) -> list:
    return [p for p in partitions(t.n) if is_valid(t, p)]


def is_very_even(t: LieType, p: Partition) -> bool:
    return t.family == "D" and all(x % 2 == 0 for x in p.parts)


def dominates(p: Partition, q: Partition) -> bool:
    """True if every partial sum of p is >= the matching partial sum of q."""
    sp = sq = 0
    for k in range(max(len(p), len(q))):
        sp += p.parts[k] if k < len(p) else 0
        sq += q.parts[k] if k < len(q) else 0
        if sp < sq:
            return False
    return True


def orbit_dim(t: LieType, p: Partition) -> int:
    if not is_valid(t, p):
        raise InputError(f"{p} is not a nilpotent orbit label for {t}")
    d2 = sum(x * x for x in dual_partition(p).parts)
    odd = sum(1 for x in p.parts if x % 2)
    n = t.n
    if t.family == "A":
        return n * n - d2
    if t.family == "C":
        return t.dim - (d2 + odd) // 2
    return (n * n - n) // 2 - (d2 - odd) // 2


def describe(t: LieType, p: Partition) -> OrbitDescriptor:
    valid = is_valid(t, p)
    return OrbitDescriptor(t, p, orbit_dim(t, p) if valid else -1, valid, is_very_even(t, p))


def centralizer_dim(g: LieAlgebraBasis, x) -> int:
    """dim of {y in g : [x, y] = 0}, by exact rank of ``ad x`` on the basis."""
    if not g.contains(x):
        raise InputError("element does not lie in the algebra")
    images = [linalg.flatten(bracket(x, b)) for b in g.basis]
    return g.dim - linalg.rank(images)


def square_zero_max_orbit(t: LieType) -> OrbitDescriptor:
    """The dense orbit in the square-zero locus, partition [2^s, 1^t]."""
    if t.family == "A":
        ones = t.n % 2
        parts = (2,) * ((t.n - ones) // 2) + (1,) * ones
    elif t.family == "C":
        parts = (2,) * (t.n // 2)
    else:
        raise UnsupportedLocusError(
            f"the square-zero orbit is only handled for types A and C, not {t.family}")
    return describe(t, Partition(parts))


# -- representatives --------------------------------------------------------

class _Builder:
    """Accumulates a matrix M column by column; the representative is M - M*."""

    def __init__(self, t: LieType):
        self.t = t
        self.n = t.n
        self.cols = [[Fraction(0)] * self.n for _ in range(self.n)]
        self._next_low = 0

    def lows(self, k):
        out = list(range(self._next_low, self._next_low + k))
        self._next_low += k
        if self._next_low > self.n // 2:
            raise InputError("partition does not fit the natural module")
        return out

    def star(self, i):
        return self.n - 1 - i

    def vec(self, *terms):
        v = [Fraction(0)] * self.n
        for idx, c in terms:
            v[idx] += Fraction(c)
        return v

    def edge(self, src, target):
        for i, c in enumerate(target):
            self.cols[src][i] += c

    def matrix(self):
        return tuple(tuple(self.cols[j][i] for j in range(self.n)) for i in range(self.n))

    def paired(self, size):
        """Two dual Jordan blocks of ``size`` on a totally isotropic chain."""
        p = self.lows(size)
        if size == 1:
            return
        self.edge(self.star(p[-1]), self.vec((p[-2], 1)))
        for k in range(size - 2, 0, -1):
            self.edge(p[k], self.vec((p[k - 1], 1)))

    def half_chain(self, m, end):
        """v_{p1*} -> ... -> v_{pm*} -> end; the adjoint supplies the way back."""
        p = self.lows(m)
        for k in range(m - 1):
            self.edge(self.star(p[k]), self.vec((self.star(p[k + 1]), 1)))
        if m:
            self.edge(self.star(p[-1]), end(p[-1]))


def partition_representative(t: LieType, p: Partition):
    """A nilpotent element of g with Jordan type ``p`` in the natural module."""
    if not is_valid(t, p):
        raise InputError(f"{p} is not a nilpotent orbit label for {t}")
    n = t.n
    if t.family == "A":
        rows = [[0] * n for _ in range(n)]
        start = 0
        for part in p.parts:
            for k in range(start, start + part - 1):
                rows[k][k + 1] = 1
            start += part
        return linalg.as_matrix(rows)

    b = _Builder(t)
    singles = []
    for part, mult in sorted(p.multiplicities().items(), reverse=True):
        for _ in range(mult // 2):
            b.paired(part)
        if mult % 2:
            singles.append(part)

    if t.family == "C":
        for part in singles:
            b.half_chain(part // 2, lambda last: b.vec((last, 1)))
    else:
        middles = []
        if t.family == "B":
            middles.append(b.vec((t.rank, 1)))
        while len(middles) < len(singles):
            (j,) = b.lows(1)
            half = Fraction(1, 2)
            middles += [b.vec((j, 1), (b.star(j), half)), b.vec((j, 1), (b.star(j), -half))]
        for part, z in zip(singles, middles):
            b.half_chain(part // 2, lambda last, z=z: z)

    m = b.matrix()
    x = linalg.sub(m, adjoint(m, construct_algebra(t).form))
    assert construct_algebra(t).contains(x)
    return x
