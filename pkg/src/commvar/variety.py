"""Commuting varieties C_r(V) compiled to polynomial ideals.

A tuple (X_1, ..., X_r) is parametrised by r blocks of coordinates on the
linear span of V; the ideal is generated by the entries of the commutators
[X_i, X_j] (i < j) together with the equations cutting V out of its span.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InputError, UnsupportedLocusError
from .lie import LieType, construct_algebra, select_subalgebra
from .poly import Polynomial, matmul

LOCUS_TAGS = ("u", "w", "N", "N1", "O2", "O2_cap_u")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class Locus:
    tag: str
    lie_type: LieType
    p: int = None       # characteristic, only for N1

    def __post_init__(self):
        if self.tag not in LOCUS_TAGS:
            raise InputError(f"unknown locus {self.tag!r}; expected one of {LOCUS_TAGS}")
        if self.tag == "N1":
            if self.p is None or not is_prime(self.p):
                raise InputError(f"N1 needs a prime characteristic, got {self.p!r}")
        elif self.p is not None:
            raise InputError(f"locus {self.tag} takes no characteristic")
        if self.tag in ("O2", "O2_cap_u") and self.lie_type.family not in ("A", "C"):
            raise UnsupportedLocusError(
                f"{self.tag} is only supported for types A and C, not {self.lie_type}")

    @classmethod
    def parse(cls, text: str, lie_type: LieType) -> "Locus":
        """``"u"``, ``"N"``, ``"O2"``, ``"N1(3)"`` or ``"N1:3"``."""
        m = re.fullmatch(r"N1[(:](\d+)\)?", text.strip())
        if m:
            return cls("N1", lie_type, int(m.group(1)))
        return cls(text.strip(), lie_type)

    @property
    def label(self) -> str:
        return f"N1({self.p})" if self.tag == "N1" else self.tag

    @property
    def ambient_tag(self) -> str:
        return {"u": "u", "O2_cap_u": "u", "w": "w"}.get(self.tag, "g")

    @property
    def nilpotency_exponent(self):
        """k such that V = {x in span : i(x)^k = 0}, or None for a linear locus."""
        if self.tag in ("u", "w"):
            return None
        if self.tag in ("O2", "O2_cap_u"):
            return 2
        if self.tag == "N1" and self.p < self.lie_type.coxeter_number:
            return self.p
        return self.lie_type.n

    def ambient_basis(self) -> tuple:
        g = construct_algebra(self.lie_type)
        if self.ambient_tag == "g":
            return g.basis
        return select_subalgebra(g, self.ambient_tag).basis


@dataclass(frozen=True)
class CommutingVarietyInstance:
    locus: Locus
    r: int
    variables: tuple
    generators: tuple           # primitive Polynomials
    contents: tuple             # integer content removed from each generator
    ambient: tuple = field(repr=False, default=())
    relaxation: str = None      # set for derived instances such as the minors superset

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def block_size(self) -> int:
        return self.nvars // self.r

    @property
    def description(self) -> str:
        base = f"C_{self.r}({self.locus.label}) of {self.locus.lie_type}"
        return f"{self.relaxation} relaxation of {base}" if self.relaxation else base

    def generators_mod(self, p: int) -> list:
        """Generators as a prime-``p`` ideal; ones whose content p divides vanish."""
        return [f for f, c in zip(self.generators, self.contents) if c % p]

    def generic_matrix(self, block: int) -> list:
        """The matrix X_block (1-based) with polynomial entries."""
        return _generic_matrix(self.ambient, block - 1, self.nvars)

    def to_text(self) -> str:
        return "\n".join(f.to_text(self.variables) for f in self.generators) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "description": self.description,
            "variables": list(self.variables),
            "generators": [f.to_json() for f in self.generators],
            "contents": list(self.contents),
        }, indent=1)


def _int_matrix(m):
    if any(Fraction(x).denominator != 1 for row in m for x in row):
        raise AssertionError("ambient basis is expected to be integral")
    return [[int(x) for x in row] for row in m]


def _generic_matrix(ambient, block, nvars):
    dim = len(ambient)
    n = len(ambient[0])
    out = [[Polynomial({}, nvars) for _ in range(n)] for _ in range(n)]
    for j, b in enumerate(ambient):
        var = block * dim + j
        for (a, c) in linalg.support(b):
            out[a][c] = out[a][c] + Polynomial.variable(var, nvars, int(b[a][c]))
    return out


def _power(x, k, nvars):
    result = x
    for _ in range(k - 1):
        result = matmul(result, x, nvars)
    return result


def _dedupe(polys) -> tuple:
    """Drop zeros, normalise content and sign, merge duplicates (gcd of contents)."""
    order, contents = [], {}
    for f in polys:
        if f.is_zero():
            continue
        c, prim = f.normalized()
        if prim in contents:
            contents[prim] = _gcd(contents[prim], c)
        else:
            order.append(prim)
            contents[prim] = c
    return tuple(order), tuple(contents[f] for f in order)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def variable_names(r: int, dim: int) -> tuple:
    return tuple(f"x_{i}_{j}" for i in range(1, r + 1) for j in range(1, dim + 1))


def compile_instance(locus: Locus, r: int) -> CommutingVarietyInstance:
    """Build the ideal of C_r(locus)."""
    if not isinstance(r, int) or r < 1:
        raise InputError(f"tuple length r must be a positive integer, got {r!r}")
    ambient = tuple(linalg.as_matrix(_int_matrix(b)) for b in locus.ambient_basis())
    dim = len(ambient)
    nvars = r * dim
    mats = [_generic_matrix(ambient, i, nvars) for i in range(r)]
    raw = []
    for i in range(r):
        for j in range(i + 1, r):
            xy = matmul(mats[i], mats[j], nvars)
            yx = matmul(mats[j], mats[i], nvars)
            raw += [a - b for ra, rb in zip(xy, yx) for a, b in zip(ra, rb)]
    k = locus.nilpotency_exponent
    if k is not None:
        for i in range(r):
            raw += [e for row in _power(mats[i], k, nvars) for e in row]
    gens, contents = _dedupe(raw)
    return CommutingVarietyInstance(locus, r, variable_names(r, dim), gens, contents, ambient)


def compile(locus: Locus, r: int) -> CommutingVarietyInstance:  # noqa: A001 - public name
    return compile_instance(locus, r)


def determinantal_relaxation(instance: CommutingVarietyInstance) -> CommutingVarietyInstance:
    """Superset of C_r(u) for C2 cut out only by the 2x2 minors x_i t_j - x_j t_i.

    ``x`` and ``t`` are the coordinates at matrix positions (1,2) and (2,3).
    """
    loc = instance.locus
    if loc.tag != "u" or loc.lie_type != LieType("C", 2) or instance.relaxation:
        raise InputError("the determinantal relaxation is defined for C_r(u) of C2 only")
    g = construct_algebra(loc.lie_type)
    u = select_subalgebra(g, "u")
    leaders = [g.leaders[k] for k in u.indices]
    xi, ti = leaders.index((0, 1)), leaders.index((1, 2))
    dim, r, nvars = u.dim, instance.r, instance.nvars
    raw = []
    for i in range(r):
        for j in range(i + 1, r):
            x_i = Polynomial.variable(i * dim + xi, nvars)
            x_j = Polynomial.variable(j * dim + xi, nvars)
            t_i = Polynomial.variable(i * dim + ti, nvars)
            t_j = Polynomial.variable(j * dim + ti, nvars)
            raw.append(x_i * t_j - x_j * t_i)
    gens, contents = _dedupe(raw)
    return CommutingVarietyInstance(loc, r, instance.variables, gens, contents,
                                    instance.ambient, relaxation="determinantal")


def tuple_permute(instance: CommutingVarietyInstance, sigma: Sequence[int]) -> list:
    """Variable renaming induced by sending block i to block sigma[i-1] (1-based).

    Returns ``perm`` with variable k mapped to ``perm[k]``.
    """
    r = instance.r
    if sorted(sigma) != list(range(1, r + 1)):
        raise InputError(f"{sigma!r} is not a permutation of 1..{r}")
    d = instance.block_size
    return [(sigma[k // d] - 1) * d + k % d for k in range(instance.nvars)]


def permuted_generators(instance: CommutingVarietyInstance, sigma: Sequence[int]) -> list:
    perm = tuple_permute(instance, sigma)
    return [f.rename(perm) for f in instance.generators]


def load_json(text: str) -> tuple:
    """Inverse of :meth:`CommutingVarietyInstance.to_json`: ``(variables, generators)``."""
    data = json.loads(text)
    variables = tuple(data["variables"])
    gens = [Polynomial.from_json(g, len(variables)) for g in data["generators"]]
    return variables, gens
