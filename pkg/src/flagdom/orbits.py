"""Open orbits D of the supported real forms on flag manifolds, their base
cycles C0 and Schubert-slice bookkeeping.

Orbit models are family-specific combinatorial tags, not point-set data:
su(p,q) orbits on a partial flag of C^(p+q) are chains of nondegenerate
signatures, sl(n,R) on P^(n-1) has the single open orbit complementing the
real points (two half-plane orbits when n = 2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .bbw import KFlagManifold, k_flag
from .errors import ConsistencyError, UnsupportedFamilyError
from .realform import (
    KWeight,
    RealFormSpec,
    fund_to_epsilon,
    involution_data,
    restrict_epsilon,
)
from .rootsys import Weight
from .schubert import (
    CycleClass,
    FlagManifold,
    SchubertVariety,
    flag_manifold,
    intersection_number,
    minimal_coset_reps,
)

__all__ = [
    "OpenOrbitModel",
    "BaseCycle",
    "SchubertSliceData",
    "OrbitClass",
    "projective_space",
    "grassmannian",
    "partial_flag",
    "enumerate_open_orbits",
    "base_cycle",
    "classify_exception",
    "schubert_slice_data",
]


class OrbitClass(str, Enum):
    GENERIC = "generic"
    HERMITIAN_HOLOMORPHIC = "hermitian-holomorphic-type"
    TRANSITIVE = "transitive"


@dataclass(frozen=True)
class OpenOrbitModel:
    """An open G0-orbit: the ambient flag manifold plus a signature tag.

    su(p,q): tuple of per-step signatures ((a_1,b_1), ...); sl(n,R): 'open'
    for n >= 3, 'plus'/'minus' for the two half-plane orbits of n = 2.
    """

    spec: RealFormSpec
    flag: FlagManifold
    signature: tuple[tuple[int, int], ...] | str

    @property
    def steps(self) -> tuple[int, ...]:
        rank = self.flag.rs.rank
        return tuple(sorted(set(range(1, rank + 1)) - self.flag.q_parab.levi_simples))

    def describe(self) -> str:
        if isinstance(self.signature, str):
            return self.signature
        return ";".join(f"({a},{b})" for a, b in self.signature)


@dataclass(frozen=True)
class BaseCycle:
    """The unique complex K0-orbit in D, as a flag manifold over K."""

    k_flag: KFlagManifold
    q: int
    description: str


@dataclass(frozen=True)
class SchubertSliceData:
    """Codimension-q Schubert bookkeeping: candidate varieties, the base-cycle
    class where a shipped expansion exists, and intersection numbers d."""

    orbit: OpenOrbitModel
    codim_q_reps: tuple[SchubertVariety, ...]
    base_class: CycleClass | None
    d_values: tuple[int | None, ...]
    note: str


def projective_space(spec: RealFormSpec) -> FlagManifold:
    """P^(n-1) = lines in C^n: the node-1 maximal parabolic."""
    rs = spec.complex_root_system()
    return flag_manifold(rs, set(range(2, rs.rank + 1)))


def grassmannian(spec: RealFormSpec, k: int) -> FlagManifold:
    return partial_flag(spec, (k,))


def partial_flag(spec: RealFormSpec, steps) -> FlagManifold:
    """Flags of subspace dimensions ``steps`` in C^n."""
    rs = spec.complex_root_system()
    steps = tuple(sorted(set(int(k) for k in steps)))
    if not steps or steps[0] < 1 or steps[-1] > rs.rank:
        raise UnsupportedFamilyError(f"flag steps {steps} not within 1..{rs.rank}")
    return flag_manifold(rs, set(range(1, rs.rank + 1)) - set(steps))


def _signature_chains(p: int, q: int, steps):
    chains = []
    for combo in itertools.product(*[range(0, min(p, k) + 1) for k in steps]):
        sig = tuple((a, k - a) for a, k in zip(combo, steps))
        if any(b < 0 or b > q for _, b in sig):
            continue
        ok = all(a2 >= a1 and b2 >= b1
                 for (a1, b1), (a2, b2) in zip(sig, sig[1:]))
        if ok:
            chains.append(sig)
    return chains


def enumerate_open_orbits(spec: RealFormSpec, flag: FlagManifold) -> tuple[OpenOrbitModel, ...]:
    """All open orbits of the real form on the given flag manifold."""
    rs = spec.complex_root_system()
    if flag.rs != rs:
        raise UnsupportedFamilyError(
            f"flag manifold over {flag.rs.family}{flag.rs.rank} does not match {spec.name}")
    steps = tuple(sorted(set(range(1, rs.rank + 1)) - flag.q_parab.levi_simples))
    if spec.family == "su":
        p, q = spec.params
        chains = _signature_chains(p, q, steps)
        return tuple(OpenOrbitModel(spec, flag, sig) for sig in sorted(chains))
    # sl(n,R): only the projective space is supported
    if steps != (1,):
        raise UnsupportedFamilyError(
            f"{spec.name} is supported on P^(n-1) only, got steps {steps}")
    n = spec.n
    if n == 2:
        return (OpenOrbitModel(spec, flag, "plus"), OpenOrbitModel(spec, flag, "minus"))
    return (OpenOrbitModel(spec, flag, "open"),)


def _chain_factor(levels: tuple[int, ...], size: int) -> tuple[frozenset[int], str]:
    """Levi subset and a display name for Fl(levels; C^size)."""
    proper = tuple(sorted({v for v in levels if 0 < v < size}))
    levi = frozenset(range(1, size)) - set(proper)
    if not proper:
        return levi, "pt"
    if len(proper) == 1:
        k = proper[0]
        return levi, f"P^{size - 1}" if k in (1, size - 1) and size > 1 else f"Gr({k},{size})"
    inner = ",".join(str(v) for v in proper)
    return levi, f"Fl({inner};{size})"


def base_cycle(orbit: OpenOrbitModel) -> BaseCycle:
    """C0 with q = dim C0; su products of flags of the blocks, sl quadrics."""
    spec = orbit.spec
    data = involution_data(spec)
    kg = data.k_group
    if spec.family == "su":
        p, q = spec.params
        a_levels = tuple(a for a, _ in orbit.signature)
        b_levels = tuple(b for _, b in orbit.signature)
        levis = []
        names = []
        if p >= 2:
            levi, name = _chain_factor(a_levels, p)
            levis.append(levi)
            names.append(name)
        else:
            names.append("pt")
        if q >= 2:
            levi, name = _chain_factor(b_levels, q)
            levis.append(levi)
            names.append(name)
        else:
            names.append("pt")
        flag = k_flag(kg, tuple(levis))
        desc = " x ".join(names)
        return BaseCycle(flag, flag.dim, desc if flag.dim else "pt")
    n = spec.n
    if n == 2:
        flag = k_flag(kg, ())
        return BaseCycle(flag, 0, "pt (isolated point of the quadric {z0^2+z1^2=0})")
    if n == 3:
        flag = k_flag(kg, (frozenset(),))
    elif n == 4:
        flag = k_flag(kg, (frozenset(), frozenset()))
    else:
        m = n // 2
        flag = k_flag(kg, (frozenset(range(2, m + 1)),))
    desc = f"quadric {{sum z_i^2 = 0}} in P^{n - 1}" + (" (a conic, = P^1)" if n == 3 else "")
    if flag.dim != n - 2:
        raise ConsistencyError(f"quadric dimension bookkeeping failed for {spec.name}")
    return BaseCycle(flag, flag.dim, desc)


def orbit_character(orbit: OpenOrbitModel, lam: Weight) -> KWeight:
    """K-character of the fiber of O(lam) at the orbit's base point z0.

    The parabolic character lam is given at the standard coordinate flag; for
    su(p,q) the base point of C0 is the signature-adapted coordinate flag, so
    the character is transported there (each epsilon coordinate takes the
    value of the first flag step containing its basis vector) before
    restricting.  For sl(n,R) the theta-adapted basis already puts the base
    point first and no transport is needed.
    """
    spec = orbit.spec
    eps = fund_to_epsilon(spec, lam)
    if spec.family == "su":
        p, _ = spec.params
        steps = orbit.steps
        index_sets = [set(range(1, a + 1)) | set(range(p + 1, p + b + 1))
                      for a, b in orbit.signature]
        values = [eps[k - 1] for k in steps]  # lam is constant on step intervals
        moved = []
        for x in range(1, spec.n + 1):
            hit = next((i for i, iset in enumerate(index_sets) if x in iset), None)
            moved.append(0 if hit is None else values[hit])
        eps = tuple(moved)
    return restrict_epsilon(spec, eps)


def classify_exception(orbit: OpenOrbitModel, force_holomorphic_type: bool = False) -> OrbitClass:
    """Generic vs the Hermitian holomorphic-type exception.

    The q = 0 heuristic covers the bounded-domain cases; holomorphic-type
    orbits with q > 0 are not detected intrinsically and can be forced with
    the override flag.  Transitive actions never occur for the supported
    families (the closed orbit is always proper); this is asserted.
    """
    if force_holomorphic_type:
        return OrbitClass.HERMITIAN_HOLOMORPHIC
    cycle = base_cycle(orbit)
    if cycle.q >= orbit.flag.dim:
        raise ConsistencyError("base cycle fills the flag manifold; supported "
                               "families never act transitively")
    if cycle.q == 0:
        return OrbitClass.HERMITIAN_HOLOMORPHIC
    return OrbitClass.GENERIC


def schubert_slice_data(orbit: OpenOrbitModel) -> SchubertSliceData:
    """Codim-q Schubert varieties, with d = [C0].[S] where [C0] is shipped.

    The base-cycle class expansion is shipped for the projective-space family
    (the quadric is twice a linear subvariety) and for point cycles (q = 0);
    elsewhere d is left unfilled: the varieties exist by homology generation.
    """
    cycle = base_cycle(orbit)
    flag = orbit.flag
    reps = minimal_coset_reps(flag)
    codim_q = tuple(sv for sv in reps if sv.codim == cycle.q)
    base_class = None
    if cycle.q == 0:
        point = next(sv for sv in reps if sv.dim == 0)
        base_class = CycleClass.from_dict(0, {point.rep: 1})
    elif orbit.spec.family == "sl_r":
        hyper = next(sv for sv in reps if sv.dim == cycle.q)
        base_class = CycleClass.from_dict(cycle.q, {hyper.rep: 2})
    if base_class is None:
        return SchubertSliceData(orbit, codim_q, None, (None,) * len(codim_q),
                                 "d not computed: [C0] expansion not shipped for this "
                                 "family; slices exist by homology generation")
    d_values = tuple(intersection_number(base_class, sv) for sv in codim_q)
    return SchubertSliceData(orbit, codim_q, base_class, d_values, "")
