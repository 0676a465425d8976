"""Supported real forms su(p,q) and sl(n,R): Cartan involution data, compact
roots, weight restriction to K, restricted root systems and the universal-
domain polytope V.

The involution/restriction data is shipped as a reviewed, checksummed
plain-text table (``data/realforms.tbl``, format ``flagdom-realforms/1``);
see the file header for the field layout.  Restricted roots and the polytope
are computed here, exactly over the rationals, with the pi/2 bound kept
symbolic (coordinates and bounds are rational multiples of pi).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import (
    RankMismatchError,
    TableFormatError,
    UnsupportedFamilyError,
)
from .rootsys import RootSystem, Weight, build_root_system

__all__ = [
    "RealFormSpec",
    "real_form",
    "parse_form",
    "KWeight",
    "KGroupData",
    "InvolutionData",
    "RestrictedRoot",
    "RestrictedRootSystem",
    "PolytopeU",
    "involution_data",
    "restricted_roots",
    "restricted_cartan",
    "restricted_reflection",
    "polytope_U",
    "membership",
    "iwasawa_dims",
    "fund_to_epsilon",
    "restrict_weight",
    "restrict_epsilon",
]

_TABLE_FORMAT = "flagdom-realforms/1"
_MAX_COMPLEX_RANK = 8


@dataclass(frozen=True)
class RealFormSpec:
    """A supported real form: su(p,q) or sl(n,R)."""

    family: str            # 'su' or 'sl_r'
    params: tuple[int, ...]

    @property
    def name(self) -> str:
        inner = ",".join(str(v) for v in self.params)
        return f"{self.family}({inner})"

    @property
    def n(self) -> int:
        """Size of the defining matrices (p+q for su(p,q), n for sl(n,R))."""
        return sum(self.params) if self.family == "su" else self.params[0]

    @property
    def complex_rank(self) -> int:
        return self.n - 1

    def complex_root_system(self) -> RootSystem:
        return build_root_system("A", self.complex_rank)


def real_form(family: str, *params: int) -> RealFormSpec:
    """Validated RealFormSpec; raises UnsupportedFamilyError otherwise."""
    family = family.lower()
    if family == "su":
        if len(params) != 2:
            raise UnsupportedFamilyError("su takes two parameters p, q")
        p, q = params
        if p < 1 or q < 1:
            raise UnsupportedFamilyError("su(p,q) needs p, q >= 1")
        if p + q - 1 > _MAX_COMPLEX_RANK:
            raise UnsupportedFamilyError(
                f"su({p},{q}) complexifies beyond the desk-scale rank {_MAX_COMPLEX_RANK}")
        return RealFormSpec("su", (p, q))
    if family == "sl_r":
        if len(params) != 1:
            raise UnsupportedFamilyError("sl_r takes one parameter n")
        (n,) = params
        if n < 2:
            raise UnsupportedFamilyError("sl(n,R) needs n >= 2")
        if n - 1 > _MAX_COMPLEX_RANK:
            raise UnsupportedFamilyError(
                f"sl({n},R) complexifies beyond the desk-scale rank {_MAX_COMPLEX_RANK}")
        return RealFormSpec("sl_r", (n,))
    raise UnsupportedFamilyError(
        f"unsupported real form family {family!r}; supported: su(p,q), sl_r(n)")


def parse_form(text: str) -> RealFormSpec:
    """Parse CLI syntax like ``su,2,1`` or ``sl_r,3``."""
    parts = [s.strip() for s in text.split(",") if s.strip()]
    if not parts:
        raise UnsupportedFamilyError("empty real-form specification")
    try:
        params = tuple(int(v) for v in parts[1:])
    except ValueError:
        raise UnsupportedFamilyError(f"malformed real-form parameters in {text!r}") from None
    return real_form(parts[0], *params)


# -- K-side weight bookkeeping -------------------------------------------------

@dataclass(frozen=True)
class KWeight:
    """Weight of K: fundamental coordinates per simple factor plus central
    torus charges (su(p,q) carries one integer central charge)."""

    parts: tuple[tuple[int, ...], ...]
    torus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(int(c) for c in p) for p in self.parts))
        object.__setattr__(self, "torus", tuple(int(c) for c in self.torus))

    def _check(self, other: "KWeight") -> None:
        if tuple(len(p) for p in self.parts) != tuple(len(p) for p in other.parts) \
                or len(self.torus) != len(other.torus):
            raise RankMismatchError("K-weights of different shape")

    def __add__(self, other: "KWeight") -> "KWeight":
        self._check(other)
        return KWeight(
            tuple(tuple(a + b for a, b in zip(p, q)) for p, q in zip(self.parts, other.parts)),
            tuple(a + b for a, b in zip(self.torus, other.torus)))

    def __neg__(self) -> "KWeight":
        return KWeight(tuple(tuple(-a for a in p) for p in self.parts),
                       tuple(-a for a in self.torus))

    def __mul__(self, k: int) -> "KWeight":
        return KWeight(tuple(tuple(k * a for a in p) for p in self.parts),
                       tuple(k * a for a in self.torus))

    __rmul__ = __mul__

    def flat(self) -> tuple[int, ...]:
        out: list[int] = []
        for p in self.parts:
            out.extend(p)
        out.extend(self.torus)
        return tuple(out)


@dataclass(frozen=True)
class KGroupData:
    """Reductive structure of K: simple factors plus a central torus."""

    factors: tuple[RootSystem, ...]
    torus_rank: int

    @property
    def coord_len(self) -> int:
        return sum(f.rank for f in self.factors) + self.torus_rank

    @property
    def dim(self) -> int:
        return self.torus_rank + sum(f.rank + 2 * f.num_positive_roots for f in self.factors)

    def zero_weight(self) -> KWeight:
        return KWeight(tuple((0,) * f.rank for f in self.factors), (0,) * self.torus_rank)

    def weight_from_flat(self, flat) -> KWeight:
        flat = tuple(int(v) for v in flat)
        if len(flat) != self.coord_len:
            raise RankMismatchError("flat coordinate length does not match K")
        parts = []
        pos = 0
        for f in self.factors:
            parts.append(flat[pos:pos + f.rank])
            pos += f.rank
        return KWeight(tuple(parts), flat[pos:])


@dataclass(frozen=True)
class InvolutionData:
    """Table-backed involution/restriction data of a real form."""

    spec: RealFormSpec
    theta_on_weights: tuple[tuple[int, ...], ...]
    compact_root_flags: tuple[bool, ...]
    k_group: KGroupData
    restrict_matrix: tuple[tuple[int, ...], ...]

    @property
    def dim_g(self) -> int:
        rs = self.spec.complex_root_system()
        return rs.rank + 2 * rs.num_positive_roots

    @property
    def dim_k(self) -> int:
        return self.k_group.dim

    @property
    def num_compact_positive(self) -> int:
        return sum(self.compact_root_flags)

    @property
    def num_noncompact_positive(self) -> int:
        return len(self.compact_root_flags) - self.num_compact_positive


# -- bundled table -------------------------------------------------------------

def _parse_int_row(line: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in line.split())

def _load_table_text() -> str:
    return resources.files("flagdom").joinpath("data/realforms.tbl").read_text("utf-8")


@lru_cache(maxsize=1)
def _load_records() -> dict[tuple[str, tuple[int, ...]], InvolutionData]:
    text = _load_table_text()
    lines = text.splitlines()
    body_at = None
    digest = None
    for idx, line in enumerate(lines):
        if line.startswith("sha256 "):
            digest = line.split()[1]
            body_at = idx + 1
            break
        if idx == 0 and line.strip() != _TABLE_FORMAT:
            raise TableFormatError(f"unexpected table format line {line!r}")
    if body_at is None:
        raise TableFormatError("real-form table carries no checksum line")
    body = "\n".join(lines[body_at:]) + "\n"
    actual = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if actual != digest:
        raise TableFormatError("real-form table failed its sha256 checksum")

    records: dict[tuple[str, tuple[int, ...]], InvolutionData] = {}
    content = lines[body_at:]
    pos = 0

    def next_line():
        nonlocal pos
        while pos < len(content) and (not content[pos].strip() or content[pos].startswith("#")):
            pos += 1
        if pos >= len(content):
            return None
        line = content[pos]
        pos += 1
        return line

    while True:
        line = next_line()
        if line is None:
            break
        if not line.startswith("form "):
            raise TableFormatError(f"expected 'form', got {line!r}")
        toks = line.split()
        family, params = toks[1], tuple(int(v) for v in toks[2:])
        spec = real_form(family, *params)
        rank = spec.complex_rank
        rs = spec.complex_root_system()

        line = next_line()
        if line != f"complex A {rank}":
            raise TableFormatError(f"{spec.name}: bad complex-type line {line!r}")
        if next_line() != "theta":
            raise TableFormatError(f"{spec.name}: expected theta block")
        theta = tuple(_parse_int_row(next_line()) for _ in range(rank))
        line = next_line()
        if not line.startswith("compact "):
            raise TableFormatError(f"{spec.name}: expected compact flags")
        bits = line.split()[1]
        if len(bits) != rs.num_positive_roots or set(bits) - {"0", "1"}:
            raise TableFormatError(f"{spec.name}: compact flag string has wrong shape")
        flags = tuple(b == "1" for b in bits)

        factors = []
        while True:
            line = next_line()
            if line.startswith("kfactor "):
                _, fam, frank = line.split()
                factors.append(build_root_system(fam, int(frank)))
            else:
                break
        if not line.startswith("torus "):
            raise TableFormatError(f"{spec.name}: expected torus line")
        torus_rank = int(line.split()[1])
        k_group = KGroupData(tuple(factors), torus_rank)

        line = next_line()
        if not line.startswith("restrict "):
            raise TableFormatError(f"{spec.name}: expected restrict block")
        nrows, ncols = (int(v) for v in line.split()[1:])
        if nrows != k_group.coord_len or ncols != rank:
            raise TableFormatError(f"{spec.name}: restriction matrix has wrong shape")
        matrix = tuple(_parse_int_row(next_line()) for _ in range(nrows))
        if any(len(row) != ncols for row in matrix):
            raise TableFormatError(f"{spec.name}: ragged restriction matrix")
        if next_line() != "endform":
            raise TableFormatError(f"{spec.name}: missing endform")

        # theta must be an involution of the weight lattice
        for i in range(rank):
            for j in range(rank):
                acc = sum(theta[i][k] * theta[k][j] for k in range(rank))
                if acc != (1 if i == j else 0):
                    raise TableFormatError(f"{spec.name}: theta is not an involution")
        records[(spec.family, spec.params)] = InvolutionData(
            spec, theta, flags, k_group, matrix)
    return records


def involution_data(spec: RealFormSpec) -> InvolutionData:
    """Cartan involution, compact-root flags, K structure and restriction map."""
    records = _load_records()
    key = (spec.family, spec.params)
    if key not in records:
        raise UnsupportedFamilyError(f"{spec.name} is not in the bundled data table")
    return records[key]


# -- weight restriction --------------------------------------------------------

def fund_to_epsilon(spec: RealFormSpec, weight: Weight) -> tuple[int, ...]:
    """Fundamental coordinates -> epsilon coordinates of gl(n), with c_n = 0."""
    rank = spec.complex_rank
    if weight.rank != rank:
        raise RankMismatchError("weight rank does not match the complexified group")
    lam = weight.coords
    return tuple(sum(lam[k] for k in range(i, rank)) for i in range(rank)) + (0,)


def restrict_weight(spec: RealFormSpec, weight: Weight) -> KWeight:
    """Restrict a G-weight to K via the shipped restriction matrix."""
    data = involution_data(spec)
    if weight.rank != spec.complex_rank:
        raise RankMismatchError("weight rank does not match the complexified group")
    flat = tuple(sum(row[j] * weight.coords[j] for j in range(weight.rank))
                 for row in data.restrict_matrix)
    return data.k_group.weight_from_flat(flat)


def restrict_epsilon(spec: RealFormSpec, eps) -> KWeight:
    """Restrict a weight given in epsilon coordinates (length n) to K.

    For su(p,q) the diagonal Cartan is shared with K; for sl(n,R) the epsilon
    coordinates refer to the theta-adapted basis ordered (u_1..u_m, v_1..v_m,
    [e]) in which the compact Cartan is diag(t, -t, [0]).
    """
    eps = tuple(int(v) for v in eps)
    n = spec.n
    if len(eps) != n:
        raise RankMismatchError("epsilon coordinate length does not match n")
    data = involution_data(spec)
    if spec.family == "su":
        p, q = spec.params
        parts = []
        if p >= 2:
            parts.append(tuple(eps[i] - eps[i + 1] for i in range(p - 1)))
        if q >= 2:
            parts.append(tuple(eps[p + j] - eps[p + j + 1] for j in range(q - 1)))
        charge = q * sum(eps[:p]) - p * sum(eps[p:])
        return KWeight(tuple(parts), (charge,))
    m = n // 2
    f = [eps[j] - eps[m + j] for j in range(m)]
    if n == 2:
        return KWeight((), (f[0],))
    if n == 3:
        return KWeight(((2 * f[0],),), ())
    if n == 4:
        return KWeight(((f[0] - f[1],), (f[0] + f[1],)), ())
    chain = [f[j] - f[j + 1] for j in range(m - 1)]
    if n % 2 == 1:
        coords = chain + [2 * f[m - 1]]          # B_m
    else:
        coords = chain + [f[m - 2] + f[m - 1]]   # D_m
    return data.k_group.weight_from_flat(tuple(coords))


# -- restricted roots and the polytope V ---------------------------------------

@dataclass(frozen=True)
class RestrictedRoot:
    """A restricted root: ambient orthonormal coordinates of a0*, its integer
    expansion in the simple restricted roots, and its multiplicity."""

    ambient: tuple[Fraction, ...]
    simple_coords: tuple[int, ...]
    multiplicity: int

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords) and any(self.simple_coords)


@dataclass(frozen=True)
class RestrictedRootSystem:
    spec: RealFormSpec
    a_rank: int
    ambient_dim: int
    simple_roots: tuple[tuple[Fraction, ...], ...]
    roots: tuple[RestrictedRoot, ...]

    @property
    def positive_roots(self) -> tuple[RestrictedRoot, ...]:
        return tuple(r for r in self.roots if r.positive)


def _solve_in_basis(basis, target):
    """Exact coordinates of target in the given independent spanning set."""
    m = len(basis[0])
    k = len(basis)
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])]
            for i in range(m)]
    piv = 0
    for col in range(k):
        row = next(r for r in range(piv, m) if rows[r][col] != 0)  # basis is independent
        rows[piv], rows[row] = rows[row], rows[piv]
        inv = rows[piv][col]
        rows[piv] = [v / inv for v in rows[piv]]
        for r in range(m):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
        piv += 1
    for r in range(k, m):
        if rows[r][k] != 0:
            raise RankMismatchError("vector outside the span of the basis")
    return tuple(rows[i][k] for i in range(k))


def _restricted_root_data(spec: RealFormSpec):
    """(ambient_dim, simples, [(ambient vector, multiplicity), ...] both signs)."""
    if spec.family == "su":
        p, q = spec.params
        m, diff = min(p, q), abs(p - q)

        def e(i):
            return tuple(Fraction(1 if j == i else 0) for j in range(m))

        entries: list[tuple[tuple[Fraction, ...], int]] = []
        for i in range(m):
            for j in range(i + 1, m):
                for si in (1, -1):
                    for sj in (1, -1):
                        vec = tuple(si * a + sj * b for a, b in zip(e(i), e(j)))
                        entries.append((vec, 2))
        if diff:
            for i in range(m):
                for s in (1, -1):
                    entries.append((tuple(s * a for a in e(i)), 2 * diff))
        for i in range(m):
            for s in (1, -1):
                entries.append((tuple(2 * s * a for a in e(i)), 1))
        simples = [tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(m - 1)]
        simples.append(e(m - 1) if diff else tuple(2 * a for a in e(m - 1)))
        return m, m, tuple(simples), entries
    n = spec.params[0]

    def en(i):
        return tuple(Fraction(1 if j == i else 0) for j in range(n))

    entries = [(tuple(a - b for a, b in zip(en(i), en(j))), 1)
               for i in range(n) for j in range(n) if i != j]
    simples = tuple(tuple(a - b for a, b in zip(en(i), en(i + 1))) for i in range(n - 1))
    return n - 1, n, simples, entries


@lru_cache(maxsize=None)
def restricted_roots(spec: RealFormSpec) -> RestrictedRootSystem:
    """Restricted root system with multiplicities.

    su(p,q): type BC_min(p,q) (C when p = q) with the classical multiplicities;
    sl(n,R): the full A_{n-1} system, all multiplicities 1.
    """
    involution_data(spec)  # validates support
    a_rank, ambient_dim, simples, entries = _restricted_root_data(spec)
    roots = []
    for vec, mult in entries:
        coords = _solve_in_basis(simples, vec)
        if any(c.denominator != 1 for c in coords):
            raise RankMismatchError(f"{spec.name}: non-integral restricted expansion")
        roots.append(RestrictedRoot(vec, tuple(int(c) for c in coords), mult))
    roots.sort(key=lambda r: (sum(r.simple_coords), r.simple_coords))
    return RestrictedRootSystem(spec, a_rank, ambient_dim, tuple(simples), tuple(roots))


def _dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


def restricted_cartan(rrs: RestrictedRootSystem) -> tuple[tuple[int, ...], ...]:
    """cartan[i][j] = 2(sigma_i, sigma_j)/(sigma_i, sigma_i) over the simples."""
    s = rrs.simple_roots
    out = []
    for i in range(len(s)):
        row = []
        for j in range(len(s)):
            val = 2 * _dot(s[i], s[j]) / _dot(s[i], s[i])
            if val.denominator != 1:
                raise RankMismatchError("non-integral restricted Cartan pairing")
            row.append(int(val))
        out.append(tuple(row))
    return tuple(out)


def restricted_reflection(rrs: RestrictedRootSystem, i: int, xi):
    """Simple restricted reflection acting on value coordinates of a0.

    Points of a0 are given by the values of the simple restricted roots
    (as rational multiples of pi); the reflection s_i sends the value vector
    xi to xi' with xi'_j = xi_j - cartan[i][j] * xi_i.
    """
    cartan = restricted_cartan(rrs)
    xi = [Fraction(v) for v in xi]
    if len(xi) != rrs.a_rank:
        raise RankMismatchError("point has wrong number of coordinates")
    c = xi[i]
    return tuple(xi[j] - cartan[i][j] * c for j in range(len(xi)))


@dataclass(frozen=True)
class PolytopeU:
    """H-representation of V = {xi : |alpha(xi)| < pi/2 for all restricted
    roots alpha}; the bound is the exact rational 1/2 in units of pi."""

    spec: RealFormSpec
    a_rank: int
    facet_normals: tuple[tuple[int, ...], ...]
    bound: Fraction

    def __post_init__(self):
        object.__setattr__(self, "bound", Fraction(self.bound))


@lru_cache(maxsize=None)
def polytope_U(spec: RealFormSpec) -> PolytopeU:
    """The a0-slice V of the universal domain, facets from all restricted roots."""
    rrs = restricted_roots(spec)
    return PolytopeU(spec, rrs.a_rank,
                     tuple(r.simple_coords for r in rrs.roots), Fraction(1, 2))


def membership(poly: PolytopeU, xi, scale=Fraction(1)) -> bool:
    """Strict test scale*xi in V; coordinates are values of the simple
    restricted roots, in units of pi."""
    xi = [Fraction(v) for v in xi]
    if len(xi) != poly.a_rank:
        raise RankMismatchError(
            f"point has {len(xi)} coordinates, expected {poly.a_rank}")
    scale = Fraction(scale)
    for normal in poly.facet_normals:
        value = scale * sum(c * x for c, x in zip(normal, xi))
        if not (-poly.bound < value < poly.bound):
            return False
    return True


def facet_values(poly: PolytopeU, xi, scale=Fraction(1)) -> tuple[Fraction, ...]:
    """alpha(scale*xi)/pi for every facet normal (for reporting)."""
    xi = [Fraction(v) for v in xi]
    scale = Fraction(scale)
    return tuple(scale * sum(c * x for c, x in zip(normal, xi))
                 for normal in poly.facet_normals)


def iwasawa_dims(spec: RealFormSpec) -> tuple[int, int]:
    """(dim A0, dim N0): the split rank and the positive-multiplicity sum."""
    rrs = restricted_roots(spec)
    return rrs.a_rank, sum(r.multiplicity for r in rrs.positive_roots)
