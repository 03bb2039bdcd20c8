"""RIS population model: element counts -> non-central chi-square SNR parameters.

A population is a finite set of P distinct RIS designs ("groups"), each with
an element count N_i and a multiplicity R_i (how many surfaces of that design
exist). The per-link SNR parameters follow from N alone:

    lambda = (N pi / 4)^2        noncentrality
    sigma^2 = N (1 - pi^2 / 16)  scale

All value types are immutable after construction and freely shareable
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class RisGroupSpec:
    """One RIS design: element count and how many times it occurs."""

    n_elements: int
    multiplicity: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_elements, (int,)) or self.n_elements < 1:
            raise ValueError(f"n_elements must be a positive integer, got {self.n_elements!r}")
        if not isinstance(self.multiplicity, (int,)) or self.multiplicity < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {self.multiplicity!r}")


@dataclass(frozen=True)
class NccsParams:
    """(lambda, sigma^2) of a single link's SNR distribution."""

    lam: float
    sigma_sq: float

    def __post_init__(self) -> None:
        if not (self.lam > 0 and self.sigma_sq > 0):
            raise ValueError("lambda and sigma_sq must be positive")

    @property
    def sigma(self) -> float:
        return math.sqrt(self.sigma_sq)


@dataclass(frozen=True)
class RisPopulation:
    """Ordered groups of (spec, params) plus the total link count R = sum R_i."""

    groups: tuple[tuple[RisGroupSpec, NccsParams], ...]
    total_r: int

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    def expand_links(self) -> list[NccsParams]:
        """Per-link parameter list of length total_r, groups in order."""
        out: list[NccsParams] = []
        for spec, params in self.groups:
            out.extend([params] * spec.multiplicity)
        return out


def params_from_elements(n: int) -> NccsParams:
    """SNR parameters of a RIS with n reflecting elements."""
    if not isinstance(n, (int,)) or n < 1:
        raise ValueError(f"element count must be a positive integer, got {n!r}")
    lam = (n * math.pi / 4.0) ** 2
    sigma_sq = n * (1.0 - math.pi ** 2 / 16.0)
    return NccsParams(lam=lam, sigma_sq=sigma_sq)


def build_population(groups: list[RisGroupSpec] | list[tuple[int, int]]) -> RisPopulation:
    """Attach NCCS parameters to each group and total the multiplicities.

    Groups are keyed by element count; duplicates are rejected rather than
    merged (merge them in the experiment config instead). Accepts either
    RisGroupSpec instances or bare (n_elements, multiplicity) pairs.
    """
    if not groups:
        raise ValueError("population needs at least one group")
    specs = [g if isinstance(g, RisGroupSpec) else RisGroupSpec(*g) for g in groups]
    counts = [s.n_elements for s in specs]
    if len(set(counts)) != len(counts):
        raise ValueError(f"duplicate n_elements in population: {sorted(counts)}; merge multiplicities first")
    pairs = tuple((s, params_from_elements(s.n_elements)) for s in specs)
    return RisPopulation(groups=pairs, total_r=sum(s.multiplicity for s in specs))
