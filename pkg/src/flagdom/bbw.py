"""Bott-Borel-Weil machinery on K-flag manifolds.

Cohomology of a homogeneous line bundle concentrates in a single degree given
by the rho-shifted dot action; on a product of simple factors the degrees add
and the dimensions multiply (Kunneth), and central torus charges ride along
untouched.  The vanishing criterion used by the certificates is the one-sided
line-filtration bound over the Borel of K.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import DegreeMismatchError, DominanceError, RankMismatchError
from .realform import KGroupData, KWeight
from .rootsys import (
    RootSystem,
    Weight,
    dominant_normalize,
    pair_with_coroot,
    rho,
    root_to_weight,
)
from .schubert import flag_manifold

__all__ = [
    "KFlagManifold",
    "k_flag",
    "simple_flag",
    "borel_flag",
    "BBWResult",
    "WeightMultiset",
    "VanishingStatus",
    "bbw_line",
    "weyl_dim",
    "exterior_power_weights",
    "vanishing_check",
    "canonical_character",
    "DerivedFiber",
    "derived_fiber",
]


@dataclass(frozen=True)
class KFlagManifold:
    """Product flag manifold over the simple factors of K."""

    k_group: KGroupData
    levis: tuple[frozenset[int], ...]
    dim: int

    def __repr__(self):
        factors = "x".join(f.family + str(f.rank) for f in self.k_group.factors) or "torus"
        return f"KFlagManifold({factors}, dim={self.dim})"


def k_flag(k_group: KGroupData, levis) -> KFlagManifold:
    levis = tuple(frozenset(s) for s in levis)
    if len(levis) != len(k_group.factors):
        raise RankMismatchError("one Levi subset per simple factor required")
    dim = sum(flag_manifold(f, s).dim for f, s in zip(k_group.factors, levis))
    return KFlagManifold(k_group, levis, dim)


def simple_flag(rs: RootSystem, levi=()) -> KFlagManifold:
    """Single-factor flag, no torus: the plain G/Q of a simple type."""
    return k_flag(KGroupData((rs,), 0), (frozenset(levi),))


def borel_flag(flag: KFlagManifold) -> KFlagManifold:
    return k_flag(flag.k_group, ((),) * len(flag.k_group.factors))


@dataclass(frozen=True)
class BBWResult:
    """Zero, or cohomology in one degree with its highest weight and dimension."""

    zero: bool
    degree: int | None = None
    highest_weight: KWeight | None = None
    dim: int = 0

    @staticmethod
    def vanishing() -> "BBWResult":
        return BBWResult(zero=True)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula, exact integer arithmetic over the coroots."""
    if lam.rank != rs.rank:
        raise RankMismatchError("weight rank does not match root system")
    if not lam.is_dominant():
        raise DominanceError(f"weyl_dim needs a dominant weight, got {lam.coords}")
    shifted = lam + rho(rs)
    num = den = 1
    for coroot in rs.positive_coroots:
        num *= pair_with_coroot(shifted, coroot)
        den *= sum(coroot)  # <rho, beta^vee> = coroot height
    assert num % den == 0
    return num // den


def bbw_line(flag: KFlagManifold, lam: KWeight) -> BBWResult:
    """Cohomology of the line bundle with parabolic character ``lam``.

    ``lam`` must be dominant on the Levi of each factor's parabolic; torus
    charges are carried into the highest weight verbatim.
    """
    kg = flag.k_group
    if tuple(len(p) for p in lam.parts) != tuple(f.rank for f in kg.factors) \
            or len(lam.torus) != kg.torus_rank:
        raise RankMismatchError("K-weight shape does not match the flag's group")
    for part, levi in zip(lam.parts, flag.levis):
        if any(part[i - 1] < 0 for i in levi):
            raise DominanceError(
                f"character {part} is not dominant on Levi {sorted(levi)}")
    degree = 0
    dim = 1
    hw_parts = []
    for rs_f, part in zip(kg.factors, lam.parts):
        res = dominant_normalize(rs_f, Weight(part) + rho(rs_f))
        if res.singular:
            return BBWResult.vanishing()
        hw = res.weight - rho(rs_f)
        degree += res.w.length
        dim *= weyl_dim(rs_f, hw)
        hw_parts.append(hw.coords)
    return BBWResult(zero=False, degree=degree,
                     highest_weight=KWeight(tuple(hw_parts), lam.torus), dim=dim)


class WeightMultiset:
    """Finite multiset of weights (entries: weight -> multiplicity >= 1)."""

    def __init__(self, entries: Mapping | Iterable[tuple] = ()):
        data = dict(entries)
        for w, m in data.items():
            if m < 1:
                raise DegreeMismatchError("multiplicities must be >= 1")
        self._entries = data

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    @property
    def total(self) -> int:
        return sum(self._entries.values())

    def __iter__(self):
        return iter(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"WeightMultiset({self._entries!r})"

    def dual(self) -> "WeightMultiset":
        """Sign-flip of every weight (tangent <-> cotangent)."""
        return WeightMultiset({-w: m for w, m in self._entries.items()})


def exterior_power_weights(m: WeightMultiset, r: int) -> WeightMultiset:
    """Weights of the r-th exterior power: sums over size-r sub-multisets.

    Computed by a generating-function pass over distinct weights, so repeated
    weights collapse into binomial multiplicities instead of being enumerated.
    """
    if r < 0 or r > m.total:
        raise DegreeMismatchError(f"exterior power r={r} out of range 0..{m.total}")
    if not len(m):
        return WeightMultiset({})
    zero = next(iter(m))[0] * 0
    layers: list[Counter] = [Counter({zero: 1})] + [Counter() for _ in range(r)]
    for w, mult in m:
        for t in range(min(r, m.total), -1, -1):
            if not layers[t]:
                continue
            src = layers[t]
            for j in range(1, min(mult, r - t) + 1):
                coeff = math.comb(mult, j)
                shift = j * w
                dst = layers[t + j]
                for v, c in src.items():
                    dst[v + shift] += c * coeff
    return WeightMultiset(layers[r])


class VanishingStatus(str, Enum):
    PROVED = "proved"
    INCONCLUSIVE = "inconclusive"


def vanishing_check(flag: KFlagManifold, pieces: WeightMultiset, lam: KWeight,
                    p_max: int) -> VanishingStatus:
    """One-sided vanishing bound for H^p, p <= p_max, of a homogeneous bundle.

    The bundle is replaced by its line filtration over the Borel of K: if
    every graded piece mu+lam has Zero cohomology or concentrates strictly
    above p_max, the bundle's cohomology vanishes through degree p_max.
    Never returns a "disproved": the criterion is sufficient only.
    """
    borel = borel_flag(flag)
    for w, _ in pieces:
        res = bbw_line(borel, w + lam)
        if not res.zero and res.degree <= p_max:
            return VanishingStatus.INCONCLUSIVE
    return VanishingStatus.PROVED


def canonical_character(rs: RootSystem, levi=()) -> Weight:
    """Character of the canonical bundle of G/Q: minus the nilradical root sum."""
    levi = frozenset(levi)
    total = Weight.zero(rs.rank)
    for root in rs.positive_roots:
        if not all(c == 0 or (j + 1) in levi for j, c in enumerate(root)):
            total = total + root_to_weight(rs, root)
    return -total


@dataclass(frozen=True)
class DerivedFiber:
    """Fiber data of the derived bundle: cohomology of E restricted to C0."""

    q: int
    bbw: BBWResult
    fiber_dim: int      # dim H^q; zero when the concentration degree differs

    @property
    def at_expected_degree(self) -> bool:
        return (not self.bbw.zero) and self.bbw.degree == self.q


def derived_fiber(orbit, lam: Weight) -> DerivedFiber:
    """H^*(C0; O(E|_C0)) for the bundle with G-character ``lam``.

    ``lam`` must be a character of the parabolic defining the flag manifold
    (zero on its Levi nodes).  By homogeneity the restrictions to all cycles
    are equivalent, so the fiber of the derived bundle is computed once, on
    the base cycle, with the character transported to the cycle's base point.
    """
    from .orbits import base_cycle, orbit_character

    bad = [i for i in orbit.flag.q_parab.levi_simples if lam.coords[i - 1] != 0]
    if bad:
        raise DominanceError(
            f"{lam.coords} is not a character of the parabolic: nonzero on "
            f"Levi nodes {sorted(bad)}")
    cycle = base_cycle(orbit)
    lam_k = orbit_character(orbit, lam)
    res = bbw_line(cycle.k_flag, lam_k)
    fiber = res.dim if (not res.zero and res.degree == cycle.q) else 0
    return DerivedFiber(cycle.q, res, fiber)
