"""Root systems, weights and Weyl groups for the simple types A-G, rank <= 8.

Conventions (fixed throughout the package):

* Bourbaki numbering of simple roots, 1-based in words and Levi subsets.
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``; column j is the j-th simple root
  written in fundamental-weight coordinates.
* Weights are integer vectors in the fundamental-weight basis; roots are
  integer vectors in the simple-root basis; coroots in the simple-coroot
  basis.  All arithmetic is exact.
* A Weyl element is stored as its lexicographically smallest reduced word,
  so words compare and hash as group elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import (
    CapExceededError,
    ConsistencyError,
    DominanceError,
    InvalidTypeError,
    RankMismatchError,
)

__all__ = [
    "DEFAULT_WEYL_CAP",
    "RootSystem",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "DominantizeResult",
    "build_root_system",
    "weyl_order",
    "rho",
    "root_to_weight",
    "act",
    "act_on_root",
    "weyl_element",
    "identity",
    "simple_reflection",
    "multiply",
    "inverse",
    "longest_element",
    "inversions",
    "enumerate_weyl_group",
    "dominant_normalize",
]

DEFAULT_WEYL_CAP = 10**6

_FAMILIES = "ABCDEFG"
_MAX_RANK = 8


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum of a simple type."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]

    # Root systems are canonical per (family, rank); identity is enough.
    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return self.family == other.family and self.rank == other.rank

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"RootSystem({self.family}{self.rank})"

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)


@dataclass(frozen=True)
class Weight:
    """Integer weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise RankMismatchError("weights of different rank")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "Weight":
        return Weight(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_regular_dominant(self) -> bool:
        return all(c > 0 for c in self.coords)

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight((0,) * rank)


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element in canonical (lex-smallest) reduced-word form."""

    rs: RootSystem = field(repr=False)
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __repr__(self):
        name = "e" if not self.word else "*".join(f"s{i}" for i in self.word)
        return f"WeylElement({self.rs.family}{self.rs.rank}, {name})"


@dataclass(frozen=True)
class WeylGroup:
    """Full Weyl group: elements in (length, word)-sorted order."""

    rs: RootSystem
    elements: tuple[WeylElement, ...]
    longest: WeylElement

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class DominantizeResult:
    """Outcome of moving a weight to the dominant chamber."""

    w: WeylElement
    weight: Weight
    singular: bool


def _validate_type(family: str, rank: int) -> str:
    family = family.upper()
    if family not in _FAMILIES:
        raise InvalidTypeError(f"unknown family {family!r}; expected one of A-G")
    if not isinstance(rank, int) or rank < 1:
        raise InvalidTypeError(f"rank must be a positive integer, got {rank!r}")
    if rank > _MAX_RANK:
        raise InvalidTypeError(f"rank {rank} exceeds the desk-scale bound {_MAX_RANK}")
    low = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}[family]
    high = {"E": 8, "F": 4, "G": 2}.get(family, _MAX_RANK)
    if not (low <= rank <= high):
        raise InvalidTypeError(f"{family}{rank} is not a valid simple type here "
                               f"(need {low} <= rank <= {high})")
    return family


def _cartan_matrix(family: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, aij=-1, aji=-1):
        # a[i][j] = <alpha_j, alpha_i^vee>
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C", "F"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if family == "B":
            a[rank - 1][rank - 2] = -2  # alpha_rank short
        elif family == "C":
            a[rank - 2][rank - 1] = -2  # alpha_rank long
        elif family == "F":
            a[2][1] = -2  # alpha_3 short
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    elif family == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _positive_roots_with_coroots(cartan):
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = {simple[i]: simple[i] for i in range(rank)}  # root -> coroot
    frontier = list(roots)
    while frontier:
        nxt = []
        for c in frontier:
            d = roots[c]
            for i in range(rank):
                p = sum(cartan[i][j] * c[j] for j in range(rank))
                nc = tuple(v - (p if j == i else 0) for j, v in enumerate(c))
                if any(v < 0 for v in nc) or nc in roots:
                    continue
                pc = sum(cartan[j][i] * d[j] for j in range(rank))
                nd = tuple(v - (pc if j == i else 0) for j, v in enumerate(d))
                roots[nc] = nd
                nxt.append(nc)
        frontier = nxt
    ordered = sorted(roots, key=lambda c: (sum(c), c))
    return tuple(ordered), tuple(roots[c] for c in ordered)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Build the root system of a simple type, positive roots in graded-lex order."""
    family = _validate_type(family, rank)
    cartan = tuple(tuple(row) for row in _cartan_matrix(family, rank))
    roots, coroots = _positive_roots_with_coroots(cartan)
    return RootSystem(family, rank, cartan, roots, coroots)


def weyl_order(family: str, rank: int) -> int:
    """Order of the Weyl group, by the classical closed forms."""
    family = _validate_type(family, rank)
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if family == "F":
        return 1152
    return 12  # G2


def rho(rs: RootSystem) -> Weight:
    """Half the sum of positive roots: the all-ones fundamental vector."""
    return Weight((1,) * rs.rank)


def root_to_weight(rs: RootSystem, root: tuple[int, ...]) -> Weight:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    if len(root) != rs.rank:
        raise RankMismatchError("root coordinate length does not match rank")
    return Weight(tuple(sum(rs.cartan[i][j] * root[j] for j in range(rs.rank))
                        for i in range(rs.rank)))


def pair_with_coroot(weight: Weight, coroot: tuple[int, ...]) -> int:
    """<weight, coroot> for a coroot in simple-coroot coordinates."""
    return sum(a * b for a, b in zip(weight.coords, coroot))


# -- elementary reflections on coordinate tuples (0-based index) --------------

def _reflect_weight(cartan, coords, i):
    c = coords[i]
    if c == 0:
        return coords
    return tuple(coords[j] - c * cartan[j][i] for j in range(len(coords)))


def _reflect_root(cartan, coords, i):
    p = sum(cartan[i][j] * coords[j] for j in range(len(coords)))
    if p == 0:
        return coords
    return tuple(v - (p if j == i else 0) for j, v in enumerate(coords))


def _apply_word_weight(rs, word, coords):
    for i in reversed(word):
        coords = _reflect_weight(rs.cartan, coords, i - 1)
    return coords


def _canonical_word_from_chamber(rs, coords):
    # Greedy minimal left descent: i is a left descent of w iff (w.rho)_i < 0.
    word = []
    coords = list(coords)
    while True:
        for i, c in enumerate(coords):
            if c < 0:
                word.append(i + 1)
                for j in range(rs.rank):
                    coords[j] -= c * rs.cartan[j][i]
                break
        else:
            return tuple(word)


def _element_from_chamber(rs, coords) -> WeylElement:
    return WeylElement(rs, _canonical_word_from_chamber(rs, coords))


def _check_word(rs, word):
    for i in word:
        if not 1 <= int(i) <= rs.rank:
            raise RankMismatchError(f"reflection index {i} out of range 1..{rs.rank}")
    return tuple(int(i) for i in word)


def weyl_element(rs: RootSystem, word) -> WeylElement:
    """Element of W from any word in simple reflections (canonicalized)."""
    word = _check_word(rs, word)
    chamber = _apply_word_weight(rs, word, rho(rs).coords)
    return _element_from_chamber(rs, chamber)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return weyl_element(rs, (i,))


def _same_group(u: WeylElement, w: WeylElement) -> RootSystem:
    if u.rs != w.rs:
        raise RankMismatchError("elements of different Weyl groups")
    return u.rs


def multiply(u: WeylElement, w: WeylElement) -> WeylElement:
    rs = _same_group(u, w)
    chamber = _apply_word_weight(rs, u.word + w.word, rho(rs).coords)
    return _element_from_chamber(rs, chamber)


def inverse(w: WeylElement) -> WeylElement:
    chamber = _apply_word_weight(w.rs, tuple(reversed(w.word)), rho(w.rs).coords)
    return _element_from_chamber(w.rs, chamber)


def act(w: WeylElement, weight: Weight) -> Weight:
    """Left action of w on a weight (rightmost letter applied first)."""
    if weight.rank != w.rs.rank:
        raise RankMismatchError("weight rank does not match the Weyl group")
    return Weight(_apply_word_weight(w.rs, w.word, weight.coords))


def act_on_root(w: WeylElement, root: tuple[int, ...]) -> tuple[int, ...]:
    """Action on a vector in simple-root coordinates."""
    if len(root) != w.rs.rank:
        raise RankMismatchError("root coordinate length does not match rank")
    coords = tuple(root)
    for i in reversed(w.word):
        coords = _reflect_root(w.rs.cartan, coords, i - 1)
    return coords


def inversions(w: WeylElement) -> int:
    """#{positive roots sent to negative roots}; equals length(w)."""
    count = 0
    for root in w.rs.positive_roots:
        image = act_on_root(w, root)
        if any(v < 0 for v in image):
            count += 1
    return count


def longest_element(rs: RootSystem) -> WeylElement:
    """The longest element, via its antidominant chamber vector w0.rho = -rho."""
    return _element_from_chamber(rs, tuple(-1 for _ in range(rs.rank)))


def _kernel_bound(rs: RootSystem, start: Weight) -> int:
    bound = max((pair_with_coroot(start, d) for d in rs.positive_coroots), default=0)
    bound = max(bound, 1)
    if rs.rank * math.log2(2 * bound + 1) > 62:
        raise CapExceededError("orbit coordinates do not fit the packed encoding")
    return bound


def chamber_orbit_vectors(rs: RootSystem, start: Weight, limit: int):
    """Kernel wrapper: the W-orbit of a dominant weight, with BFS levels."""
    if not start.is_dominant():
        raise DominanceError("chamber orbit must start from a dominant weight")
    cartan = rs.cartan_array()
    vec = np.array(start.coords, dtype=np.int64)
    try:
        return kernels.chamber_orbit(cartan, vec, _kernel_bound(rs, start), limit)
    except ValueError as exc:
        if "cap" in str(exc):
            raise CapExceededError(str(exc)) from None
        raise ConsistencyError(str(exc)) from None


def orbit_words(rs: RootSystem, vectors) -> list[tuple[int, ...]]:
    """Canonical words (1-based letters) for chamber-orbit vectors."""
    letters, offsets = kernels.canonical_words(rs.cartan_array(), vectors)
    letters = [int(x) + 1 for x in letters]
    return [tuple(letters[offsets[k]:offsets[k + 1]]) for k in range(len(vectors))]


def enumerate_weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    """All Weyl group elements in canonical reduced-word form.

    The closed-form group order is checked against ``cap`` before any
    enumeration happens.
    """
    order = weyl_order(rs.family, rs.rank)
    if order > cap:
        raise CapExceededError(f"|W({rs.family}{rs.rank})| = {order} exceeds cap {cap}")
    vectors, levels = chamber_orbit_vectors(rs, rho(rs), order)
    if len(vectors) != order or levels[-1] != rs.num_positive_roots:
        raise ConsistencyError("Weyl enumeration did not close at the classical order")
    words = orbit_words(rs, vectors)
    elements = tuple(WeylElement(rs, word) for word in words)
    return WeylGroup(rs, elements, longest=elements[-1])


def dominant_normalize(rs: RootSystem, weight: Weight) -> DominantizeResult:
    """(w, mu) with mu = w(weight) dominant; flags mu singular (on a wall).

    For regular weights w is the unique such element; for singular weights the
    returned w is the canonical representative produced by the minimal-descent
    walk, and ``singular`` is set.
    """
    if weight.rank != rs.rank:
        raise RankMismatchError("weight rank does not match root system")
    coords = list(weight.coords)
    picked = []
    while True:
        for i, c in enumerate(coords):
            if c < 0:
                picked.append(i + 1)
                for j in range(rs.rank):
                    coords[j] -= c * rs.cartan[j][i]
                break
        else:
            break
    w = weyl_element(rs, tuple(reversed(picked)))
    mu = Weight(tuple(coords))
    return DominantizeResult(w, mu, singular=not mu.is_regular_dominant())
