"""Flag manifolds Z = G/Q, Schubert varieties, Bruhat order and the
homology pairing.

Schubert cells are indexed by minimal-length representatives of the cosets
w*W_Q; the representative of dimension d closes to a Schubert variety of
complex dimension d.  Poincare duality pairs the representative u with the
minimal representative of w0*u*W_Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import kernels
from .errors import CapExceededError, DegreeMismatchError, RankMismatchError
from .rootsys import (
    DEFAULT_WEYL_CAP,
    RootSystem,
    Weight,
    WeylElement,
    chamber_orbit_vectors,
    longest_element,
    multiply,
    orbit_words,
    weyl_order,
)

__all__ = [
    "Parabolic",
    "FlagManifold",
    "SchubertVariety",
    "CycleClass",
    "flag_manifold",
    "minimal_coset_reps",
    "levi_weyl_order",
    "bruhat_leq",
    "poincare_dual",
    "poincare_pairing",
    "intersection_number",
    "betti_numbers",
]


@dataclass(frozen=True)
class Parabolic:
    """Standard parabolic, named by the simple roots of its Levi factor."""

    levi_simples: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "levi_simples", frozenset(int(i) for i in self.levi_simples))

    @property
    def is_borel(self) -> bool:
        return not self.levi_simples


@dataclass(frozen=True)
class FlagManifold:
    rs: RootSystem
    q_parab: Parabolic
    dim: int

    def __repr__(self):
        levi = ",".join(str(i) for i in sorted(self.q_parab.levi_simples)) or "-"
        return f"FlagManifold({self.rs.family}{self.rs.rank}, levi={{{levi}}}, dim={self.dim})"


@dataclass(frozen=True)
class SchubertVariety:
    flag: FlagManifold = field(repr=False)
    rep: WeylElement
    dim: int
    codim: int


@dataclass(frozen=True)
class CycleClass:
    """Effective cycle class: nonnegative combination of same-dimension
    Schubert classes, keyed by their W^Q representatives."""

    degree: int
    items: tuple[tuple[WeylElement, int], ...]

    def __post_init__(self):
        for rep, coeff in self.items:
            if coeff < 0:
                raise DegreeMismatchError("cycle coefficients must be nonnegative")
            if rep.length != self.degree:
                raise DegreeMismatchError("cycle class keyed by a rep of the wrong dimension")
        ordered = tuple(sorted(self.items, key=lambda it: it[0].word))
        object.__setattr__(self, "items", ordered)

    @property
    def coeffs(self) -> Mapping[WeylElement, int]:
        return dict(self.items)

    def is_zero(self) -> bool:
        return all(c == 0 for _, c in self.items)

    @staticmethod
    def from_dict(degree: int, coeffs: Mapping[WeylElement, int]) -> "CycleClass":
        return CycleClass(degree, tuple(coeffs.items()))


def _support_in_levi(root: tuple[int, ...], levi: frozenset[int]) -> bool:
    return all(c == 0 or (j + 1) in levi for j, c in enumerate(root))


def flag_manifold(rs: RootSystem, levi_simples) -> FlagManifold:
    """Z = G/Q for the standard parabolic with the given Levi simple roots."""
    levi = frozenset(int(i) for i in levi_simples)
    if not levi <= set(range(1, rs.rank + 1)):
        raise RankMismatchError(f"Levi subset {sorted(levi)} not within 1..{rs.rank}")
    dim = sum(1 for root in rs.positive_roots if not _support_in_levi(root, levi))
    return FlagManifold(rs, Parabolic(levi), dim)


def _coset_weight(flag: FlagManifold) -> Weight:
    # Dominant weight with stabilizer exactly W_Q: zero on Levi nodes, one elsewhere.
    levi = flag.q_parab.levi_simples
    return Weight(tuple(0 if (i + 1) in levi else 1 for i in range(flag.rs.rank)))


def levi_weyl_order(flag: FlagManifold) -> int:
    """|W_Q|, by enumerating the Levi subsystem's chamber orbit."""
    levi = sorted(flag.q_parab.levi_simples)
    if not levi:
        return 1
    rs = flag.rs
    sub = np.array([[rs.cartan[i - 1][j - 1] for j in levi] for i in levi], dtype=np.int64)
    start = np.ones(len(levi), dtype=np.int64)
    bound = max(sum(d) for d in rs.positive_coroots)
    vectors, _ = kernels.chamber_orbit(sub, start, bound, weyl_order(rs.family, rs.rank))
    return len(vectors)


def minimal_coset_reps(flag: FlagManifold, cap: int = DEFAULT_WEYL_CAP) -> tuple[SchubertVariety, ...]:
    """One Schubert variety per coset of W_Q, ordered by (dim, word).

    The conservative precheck requires |W| <= cap (|W_Q| has no closed form
    before enumeration).
    """
    rs = flag.rs
    order = weyl_order(rs.family, rs.rank)
    if order > cap:
        raise CapExceededError(f"|W({rs.family}{rs.rank})| = {order} exceeds cap {cap}")
    vectors, levels = chamber_orbit_vectors(rs, _coset_weight(flag), order)
    words = orbit_words(rs, vectors)
    return tuple(
        SchubertVariety(flag, WeylElement(rs, word), dim=int(level), codim=flag.dim - int(level))
        for word, level in zip(words, levels)
    )


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the lifting property, equivalent to the subword test."""
    if u.rs != w.rs:
        raise RankMismatchError("elements of different Weyl groups")
    rs = u.rs
    while True:
        if not u.word:
            return True
        if u.length > w.length:
            return False
        i = w.word[0]  # a left descent of w
        sw = multiply(WeylElement(rs, (i,)), w)
        su = multiply(WeylElement(rs, (i,)), u)
        if su.length < u.length:
            u = su
        w = sw


def _min_rep_of_coset(flag: FlagManifold, x: WeylElement) -> WeylElement:
    from .rootsys import _element_from_chamber, act

    chamber = act(x, _coset_weight(flag))
    return _element_from_chamber(flag.rs, chamber.coords)


def poincare_dual(sv: SchubertVariety) -> SchubertVariety:
    """Dual basis element: minimal representative of w0 * rep * W_Q."""
    flag = sv.flag
    rep = _min_rep_of_coset(flag, multiply(longest_element(flag.rs), sv.rep))
    return SchubertVariety(flag, rep, dim=flag.dim - sv.dim, codim=sv.dim)


def poincare_pairing(u: SchubertVariety, v: SchubertVariety) -> int:
    """1 iff v is the Poincare-dual representative of u; 0 otherwise."""
    if u.flag != v.flag:
        raise RankMismatchError("Schubert varieties on different flag manifolds")
    if u.dim + v.dim != u.flag.dim:
        raise DegreeMismatchError(
            f"pairing needs complementary dimensions: {u.dim} + {v.dim} != {u.flag.dim}")
    return 1 if poincare_dual(u).rep == v.rep else 0


def intersection_number(c: CycleClass, s: SchubertVariety) -> int:
    """[c].[S] = coefficient of the dual of S in c (count of intersection points)."""
    if s.codim != c.degree:
        raise DegreeMismatchError(f"codim(S) = {s.codim} != degree(c) = {c.degree}")
    dual_rep = poincare_dual(s).rep
    return sum(coeff for rep, coeff in c.items if rep == dual_rep)


def betti_numbers(flag: FlagManifold, cap: int = DEFAULT_WEYL_CAP) -> tuple[int, ...]:
    """Cell count per complex dimension (coefficients of the Poincare polynomial)."""
    counts = [0] * (flag.dim + 1)
    for sv in minimal_coset_reps(flag, cap):
        counts[sv.dim] += 1
    return tuple(counts)
