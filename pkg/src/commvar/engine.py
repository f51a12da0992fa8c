"""Dimension of a compiled instance, by Groebner basis and/or point counting."""

import json
import os
from dataclasses import asdict, dataclass, field

from .counting import DEFAULT_BUDGET, count_points, slope_fit
from .errors import InputError, ResourceError
from .groebner import GroebnerConfig, groebner, ideal_dimension
from .variety import is_prime

DEFAULT_CHAR = 32003
METHODS = ("groebner", "count", "both")


def default_characteristic() -> int:
    """32003 unless the ``COMMVAR_CHAR`` environment variable says otherwise."""
    raw = os.environ.get("COMMVAR_CHAR")
    if raw is None or raw.strip() == "":
        return DEFAULT_CHAR
    try:
        p = int(raw)
    except ValueError:
        raise InputError(f"COMMVAR_CHAR must be a prime, got {raw!r}") from None
    if not is_prime(p):
        raise InputError(f"COMMVAR_CHAR must be a prime, got {p}")
    return p


@dataclass(frozen=True)
class EngineConfig:
    method: str = "groebner"
    char: int = None                    # None: COMMVAR_CHAR or 32003
    qs: tuple = (2, 3, 5)               # field sizes for point counting
    count_mode: str = "enumerate"       # or "sample"
    samples: int = 100_000
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    groebner: GroebnerConfig = field(default_factory=GroebnerConfig)

    def __post_init__(self):
        if self.method not in METHODS:
            raise InputError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.char is not None and not is_prime(self.char):
            raise InputError(f"characteristic must be prime, got {self.char}")

    @property
    def characteristic(self) -> int:
        return self.char if self.char is not None else default_characteristic()


@dataclass
class DimensionReport:
    instance: str
    method: str                 # groebner, enumeration, sampling, or groebner+<count method>
    characteristics: list
    dimension: int              # None if counting alone could not give an integer
    expected: int = None
    verdict: str = "no-expectation"
    inconsistent: bool = False
    details: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1)


def verdict_for(dimension, expected) -> str:
    if expected is None:
        return "no-expectation"
    return "match" if dimension == expected else "mismatch"


def groebner_dimension(instance, p: int, config: GroebnerConfig = None) -> tuple:
    """``(dimension, basis)`` of the instance's ideal over GF(p)."""
    try:
        gb = groebner(instance.generators_mod(p), p, config, nvars=instance.nvars)
    except ResourceError as exc:
        raise ResourceError(f"groebner: {exc}", limit=exc.limit) from exc
    return ideal_dimension(gb, instance.nvars), gb


def _count(instance, config: EngineConfig) -> dict:
    counts = []
    for q in config.qs:
        try:
            pc = count_points(instance, q, config.count_mode, config.budget,
                              config.samples, config.seed, config.workers)
        except ResourceError as exc:
            label = "enumeration" if config.count_mode == "enumerate" else "sampling"
            msg = str(exc) if str(exc).startswith(label) else f"{label}: {exc}"
            raise ResourceError(msg, limit=exc.limit) from exc
        counts.append(pc)
    out = {"qs": list(config.qs), "counts": [pc.count for pc in counts]}
    if config.count_mode == "sample":
        out["stderr"] = [pc.stderr for pc in counts]
        out["seed"] = config.seed
        out["samples"] = config.samples
    if len(counts) >= 2 and all(pc.count > 0 for pc in counts):
        fit = slope_fit(config.qs, [pc.count for pc in counts])
        out.update(slope=fit.slope, fit_residual=fit.residual,
                   interval=list(fit.interval()))
        # an integer estimate only from three or more field sizes
        out["estimate"] = fit.estimate if len(counts) >= 3 else None
    else:
        out["estimate"] = None
    return out


def dimension(instance, config: EngineConfig = None, expected: int = None) -> DimensionReport:
    """Compute dim V(instance) and compare with ``expected`` if given.

    With ``method="both"`` the Groebner value is authoritative; the report is
    flagged ``inconsistent`` if it falls outside the slope-fit interval.
    """
    config = config or EngineConfig()
    details = {"nvars": instance.nvars, "generators": len(instance.generators)}
    chars = []
    dim = None
    method = []
    if config.method in ("groebner", "both"):
        p = config.characteristic
        dim, gb = groebner_dimension(instance, p, config.groebner)
        chars.append(p)
        method.append("groebner")
        details["groebner"] = {"basis_size": len(gb.polys), "pairs_reduced": gb.pairs_reduced}
    inconsistent = False
    if config.method in ("count", "both"):
        info = _count(instance, config)
        details["count"] = info
        chars += sorted({q for q in config.qs})
        method.append("enumeration" if config.count_mode == "enumerate" else "sampling")
        if dim is None:
            dim = info["estimate"]
        elif "interval" in info:
            lo, hi = info["interval"]
            inconsistent = not (lo <= dim <= hi)
    return DimensionReport(instance.description, "+".join(method), chars, dim, expected,
                           verdict_for(dim, expected), inconsistent, details)
