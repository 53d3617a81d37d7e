"""Analytic benchmark objectives and the search-domain / objective interface.

All objectives are minimization, evaluated in 64-bit floating point, and
deterministic: the same input vector always produces the same output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ConfigurationError

BENCHMARK_NAMES = ("sphere", "elliptic", "rastrigin", "ackley", "rosenbrock", "schwefel12")


@dataclass(frozen=True)
class SearchDomain:
    """Axis-aligned box of feasible positions."""

    dim: int
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if self.dim < 1:
            raise ConfigurationError(f"dim must be >= 1, got {self.dim}")
        if lower.shape != (self.dim,) or upper.shape != (self.dim,):
            raise ConfigurationError("lower/upper must have length dim")
        if not np.all(lower < upper):
            raise ConfigurationError("lower[d] < upper[d] must hold for every dimension")

    @classmethod
    def box(cls, dim: int, lo: float, hi: float) -> "SearchDomain":
        return cls(dim, np.full(dim, float(lo)), np.full(dim, float(hi)))


@dataclass(frozen=True)
class Objective:
    """A named minimization objective over a search domain.

    ``eval`` must be pure and finite everywhere inside ``domain``.
    ``known_optimum`` is diagnostic only and never read by any algorithm.
    """

    name: str
    domain: SearchDomain
    eval: Callable[[np.ndarray], float]
    known_optimum: Optional[float] = field(default=None)


def clamp_check(domain: SearchDomain, x: np.ndarray) -> bool:
    """True iff every coordinate of x lies inside the (inclusive) bounds."""
    x = np.asarray(x, dtype=float)
    if x.shape != (domain.dim,):
        raise ValueError(f"position has length {x.shape}, domain dim is {domain.dim}")
    return bool(np.all(x >= domain.lower) and np.all(x <= domain.upper))


def _sphere(x: np.ndarray) -> float:
    return float(np.dot(x, x))


def _elliptic_weights(dim: int) -> np.ndarray:
    if dim == 1:
        return np.ones(1)
    return np.power(1e6, np.arange(dim) / (dim - 1))


def _rastrigin(x: np.ndarray) -> float:
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def _ackley(x: np.ndarray) -> float:
    d = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.dot(x, x) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d)
        + 20.0
        + np.e
    )


def _rosenbrock(x: np.ndarray) -> float:
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def _schwefel12(x: np.ndarray) -> float:
    c = np.cumsum(x)
    return float(np.dot(c, c))


def make_benchmark(name: str, dim: int) -> Objective:
    """Build one of the six analytic benchmarks on its conventional domain.

    sphere / elliptic / schwefel12 live on [-100, 100]^dim, rastrigin on
    [-5.12, 5.12]^dim, ackley on [-32, 32]^dim, rosenbrock on [-30, 30]^dim.
    Every function has known optimum value 0.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ConfigurationError(f"dim must be a positive integer, got {dim!r}")
    if name == "sphere":
        fn, box = _sphere, (-100.0, 100.0)
    elif name == "elliptic":
        w = _elliptic_weights(dim)

        def fn(x, _w=w):
            return float(np.dot(_w, x * x))

        box = (-100.0, 100.0)
    elif name == "rastrigin":
        fn, box = _rastrigin, (-5.12, 5.12)
    elif name == "ackley":
        fn, box = _ackley, (-32.0, 32.0)
    elif name == "rosenbrock":
        if dim < 2:
            raise ConfigurationError("rosenbrock requires dim >= 2")
        fn, box = _rosenbrock, (-30.0, 30.0)
    elif name == "schwefel12":
        fn, box = _schwefel12, (-100.0, 100.0)
    else:
        raise ConfigurationError(
            f"unknown benchmark {name!r}; expected one of {', '.join(BENCHMARK_NAMES)}"
        )
    domain = SearchDomain.box(dim, *box)

    def evaluate(x, _fn=fn, _dim=dim):
        x = np.asarray(x, dtype=float)
        if x.shape != (_dim,):
            raise ValueError(f"position has shape {x.shape}, expected ({_dim},)")
        return _fn(x)

    return Objective(name=name, domain=domain, eval=evaluate, known_optimum=0.0)
