"""Injectivity certificates for the double fibration transform.

The certificate records the dimension identities of the Schubert fibration of
the cycle space, the structural facts (Buchdahl conditions, Stein and
contractible cycle space) that hold uniformly for Generic orbits, and the one
computational hypothesis: vanishing of H^p of the twisted relative-form
bundles on the base cycle for p < q.  The verdict is Injective exactly when
the orbit is Generic and every vanishing entry is Proved; Inconclusive never
claims non-injectivity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bbw import (
    BBWResult,
    DerivedFiber,
    VanishingStatus,
    WeightMultiset,
    derived_fiber,
    exterior_power_weights,
    vanishing_check,
)
from .errors import ConsistencyError, ExceptionalOrbitError, RankMismatchError
from .orbits import (
    OpenOrbitModel,
    OrbitClass,
    base_cycle,
    classify_exception,
    enumerate_open_orbits,
    orbit_character,
    partial_flag,
)
from .realform import KWeight, involution_data, parse_form
from .rootsys import Weight

__all__ = [
    "FibrationDims",
    "MuFiberModule",
    "StructuralFact",
    "VanishingEntry",
    "InjectivityCertificate",
    "ScanReport",
    "Verdict",
    "fibration_dims",
    "mu_fiber_module",
    "certify",
    "threshold_scan",
    "to_json_dict",
    "from_json_dict",
    "render_text",
    "parse_text",
    "scan_to_json_dict",
]

CERT_FORMAT = "flagdom.certificate/1"
TEXT_FORMAT = "flagdom-certificate/1"
SCAN_FORMAT = "flagdom.scan/1"


class Verdict:
    INJECTIVE = "injective"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StructuralFact:
    """A hypothesis discharged structurally (holds uniformly, not recomputed)."""

    status: str
    basis: str
    statement: str


BUCHDAHL_FACT = StructuralFact(
    "satisfied", "structural",
    "the mu-fiber F is connected with vanishing reduced cohomology through "
    "degree q-1: the cycle space fibers holomorphically over a contractible "
    "Schubert slice with fiber F, and both total space and slice are "
    "contractible")

STEIN_FACT = StructuralFact(
    "satisfied", "structural",
    "the cycle space of a Generic orbit is biholomorphic to the universal "
    "domain, hence contractible and Stein")

EXCEPTIONAL_NOTE = (
    "hermitian holomorphic-type orbit: the cycle space is the bounded "
    "symmetric domain or its conjugate; the negativity criterion is not "
    "applicable and no injectivity verdict is derived")


@dataclass(frozen=True)
class FibrationDims:
    """Dimensions in M_D = Sigma x F: ambient cycle space, slice and fiber."""

    dim_z: int
    q: int
    dim_mz: int
    dim_sigma: int
    dim_f: int

    def __post_init__(self):
        if self.dim_sigma < 0 or self.dim_f < 0 \
                or self.dim_sigma + self.dim_f != self.dim_mz:
            raise ConsistencyError(f"inconsistent fibration dimensions {self}")


@dataclass(frozen=True)
class MuFiberModule:
    """K-restricted weights of the mu-vertical tangent module at (z0, C0)."""

    weights: WeightMultiset

    @property
    def total_multiplicity(self) -> int:
        return self.weights.total


def _require_generic(orbit: OpenOrbitModel, assume_generic: bool) -> None:
    if assume_generic:
        return
    if classify_exception(orbit) is not OrbitClass.GENERIC:
        raise ExceptionalOrbitError(
            f"orbit {orbit.describe()} of {orbit.spec.name} is not Generic; "
            "see classify_exception (pass assume_generic=True for the "
            "g_C0 = k model bookkeeping)")


def fibration_dims(orbit: OpenOrbitModel, assume_generic: bool = False) -> FibrationDims:
    """dim M_Z = dim G/K, dim Sigma = dim Z - q, dim F = dim M_Z - dim Sigma."""
    _require_generic(orbit, assume_generic)
    data = involution_data(orbit.spec)
    q = base_cycle(orbit).q
    dim_z = orbit.flag.dim
    dim_mz = data.dim_g - data.dim_k
    return FibrationDims(dim_z, q, dim_mz, dim_z - q, dim_mz - dim_z + q)


def _su_stabilizer_pairs(orbit: OpenOrbitModel):
    """Index pairs (x, y), 1-based, of the roots eps_x - eps_y in q_z0 for the
    signature-adapted coordinate flag z0."""
    p, q = orbit.spec.params
    n = p + q
    index_sets = [set(range(1, a + 1)) | set(range(p + 1, p + b + 1))
                  for a, b in orbit.signature]
    pairs = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x == y:
                continue
            if all((y not in iset) or (x in iset) for iset in index_sets):
                pairs.append((x, y))
    return pairs


def _eps_diff(n: int, x: int, y: int) -> tuple[int, ...]:
    return tuple(1 if i == x else (-1 if i == y else 0) for i in range(1, n + 1))


def mu_fiber_module(orbit: OpenOrbitModel, assume_generic: bool = False) -> MuFiberModule:
    """Weights of q_z0 / (q_z0 cap k) restricted to the compact Cartan.

    su(p,q): the Cartan is shared with K, so these are the noncompact roots of
    the stabilizer of the signature-adapted coordinate flag.  sl(n,R): the
    theta-adapted basis pairs the roots of the stabilizer of the isotropic
    line span(u_1); each theta-orbit meeting the stabilizer contributes its
    common restriction once, and the Cartan quotient adds dim a0 zeros.
    Total multiplicity must equal dim F; a mismatch signals a table bug.
    """
    from .realform import restrict_epsilon

    _require_generic(orbit, assume_generic)
    spec = orbit.spec
    data = involution_data(spec)
    n = spec.n
    entries: dict[KWeight, int] = {}

    def put(w: KWeight, mult: int = 1):
        entries[w] = entries.get(w, 0) + mult

    if spec.family == "su":
        rs = spec.complex_root_system()
        compact = {}
        for root, flag in zip(rs.positive_roots, data.compact_root_flags):
            support = [j for j, c in enumerate(root) if c]
            x, y = min(support) + 1, max(support) + 2
            compact[(x, y)] = compact[(y, x)] = flag
        for x, y in _su_stabilizer_pairs(orbit):
            if not compact[(x, y)]:
                put(restrict_epsilon(spec, _eps_diff(n, x, y)))
    else:
        m = n // 2

        def sigma(i):
            if i <= m:
                return i + m
            if i <= 2 * m:
                return i - m
            return i

        seen = set()
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                if x == y or y == 1:
                    continue  # q_z0 = stabilizer of span(u_1): exclude targets u_1
                rep = min((x, y), (sigma(y), sigma(x)))
                if rep in seen:
                    continue
                seen.add(rep)
                put(restrict_epsilon(spec, _eps_diff(n, x, y)))
        zeros = (n - 1) - m  # Cartan of g modulo the compact Cartan
        if zeros:
            put(data.k_group.zero_weight(), zeros)

    module = MuFiberModule(WeightMultiset(entries))
    dims = fibration_dims(orbit, assume_generic=True)
    if module.total_multiplicity != dims.dim_f:
        raise ConsistencyError(
            f"mu-fiber multiplicity {module.total_multiplicity} != dim F "
            f"{dims.dim_f} for {spec.name} orbit {orbit.describe()}")
    return module


@dataclass(frozen=True)
class VanishingEntry:
    p: int
    r: int
    status: VanishingStatus


@dataclass(frozen=True)
class InjectivityCertificate:
    orbit: OpenOrbitModel
    weight: Weight
    q: int
    exceptional: OrbitClass
    fibration: FibrationDims | None
    buchdahl: StructuralFact
    stein_contractible: StructuralFact
    vanishing_table: tuple[VanishingEntry, ...]
    derived_fiber: DerivedFiber
    verdict: str
    notes: tuple[str, ...]


def certify(orbit: OpenOrbitModel, weight: Weight,
            force_holomorphic_type: bool = False) -> InjectivityCertificate:
    """Assemble the injectivity certificate for the transform on (D, E).

    The vanishing table evaluates, for each r, the line-filtration bound for
    the r-th relative-form twist Lambda^r(Omega_mu)|_C0 tensored with E|_C0,
    through cohomological degree q-1.
    """
    if weight.rank != orbit.spec.complex_rank:
        raise RankMismatchError("bundle character rank does not match the group")
    cycle = base_cycle(orbit)
    classification = classify_exception(orbit, force_holomorphic_type)
    fiber = derived_fiber(orbit, weight)
    if classification is not OrbitClass.GENERIC:
        return InjectivityCertificate(
            orbit, weight, cycle.q, classification, None, BUCHDAHL_FACT, STEIN_FACT,
            (), fiber, Verdict.INCONCLUSIVE, (EXCEPTIONAL_NOTE,))
    dims = fibration_dims(orbit)
    module = mu_fiber_module(orbit)
    lam_k = orbit_character(orbit, weight)
    cotangent = module.weights.dual()
    table = []
    for r in range(1, dims.dim_f + 1):
        pieces = exterior_power_weights(cotangent, r)
        status = vanishing_check(cycle.k_flag, pieces, lam_k, p_max=cycle.q - 1)
        for p in range(cycle.q):
            table.append(VanishingEntry(p, r, status))
    verdict = Verdict.INJECTIVE if all(
        e.status is VanishingStatus.PROVED for e in table) else Verdict.INCONCLUSIVE
    return InjectivityCertificate(
        orbit, weight, cycle.q, classification, dims, BUCHDAHL_FACT, STEIN_FACT,
        tuple(table), fiber, verdict, ())


@dataclass(frozen=True)
class ScanReport:
    """Verdicts of certify along k * direction, with the verdict boundary."""

    orbit: OpenOrbitModel
    direction: Weight
    entries: tuple[tuple[int, str], ...]
    boundary: int | None
    contiguous: bool


def threshold_scan(orbit: OpenOrbitModel, direction: Weight, ks,
                   force_holomorphic_type: bool = False) -> ScanReport:
    """certify(orbit, k*direction) for k in ks; flags the Injective boundary."""
    entries = []
    for k in ks:
        cert = certify(orbit, int(k) * direction, force_holomorphic_type)
        entries.append((int(k), cert.verdict))
    boundary = next((k for k, v in entries if v == Verdict.INJECTIVE), None)
    contiguous = boundary is not None and all(
        v == Verdict.INJECTIVE for k, v in entries if k >= boundary)
    return ScanReport(orbit, direction, tuple(entries), boundary, contiguous)


# -- serialization --------------------------------------------------------------

def _kweight_to_json(w: KWeight) -> dict:
    return {"parts": [list(p) for p in w.parts], "torus": list(w.torus)}


def _kweight_from_json(obj) -> KWeight:
    return KWeight(tuple(tuple(p) for p in obj["parts"]), tuple(obj["torus"]))


def _orbit_to_json(orbit: OpenOrbitModel) -> dict:
    sig = orbit.signature if isinstance(orbit.signature, str) \
        else [list(s) for s in orbit.signature]
    return {"form": orbit.spec.name, "flag_steps": list(orbit.steps), "signature": sig}


def _orbit_from_json(obj) -> OpenOrbitModel:
    spec = parse_form(obj["form"].replace("(", ",").replace(")", "").replace(" ", ""))
    flag = partial_flag(spec, obj["flag_steps"])
    sig = obj["signature"]
    signature = sig if isinstance(sig, str) else tuple((int(a), int(b)) for a, b in sig)
    orbit = OpenOrbitModel(spec, flag, signature)
    if orbit not in enumerate_open_orbits(spec, flag):
        raise ConsistencyError(f"{obj['signature']} is not an open orbit of "
                               f"{spec.name} on steps {obj['flag_steps']}")
    return orbit


def _fiber_to_json(fiber: DerivedFiber) -> dict:
    out = {"q": fiber.q, "zero": fiber.bbw.zero, "fiber_dim": fiber.fiber_dim}
    if not fiber.bbw.zero:
        out["degree"] = fiber.bbw.degree
        out["dim"] = fiber.bbw.dim
        out["highest_weight"] = _kweight_to_json(fiber.bbw.highest_weight)
    return out


def _fiber_from_json(obj) -> DerivedFiber:
    if obj["zero"]:
        bbw = BBWResult.vanishing()
    else:
        bbw = BBWResult(False, int(obj["degree"]),
                        _kweight_from_json(obj["highest_weight"]), int(obj["dim"]))
    return DerivedFiber(int(obj["q"]), bbw, int(obj["fiber_dim"]))


def _fact_to_json(fact: StructuralFact) -> dict:
    return {"status": fact.status, "basis": fact.basis, "statement": fact.statement}


def to_json_dict(cert: InjectivityCertificate) -> dict:
    """Stable JSON form; field names are part of the public contract."""
    fib = None
    if cert.fibration is not None:
        d = cert.fibration
        fib = {"dim_z": d.dim_z, "q": d.q, "dim_mz": d.dim_mz,
               "dim_sigma": d.dim_sigma, "dim_f": d.dim_f}
    return {
        "format": CERT_FORMAT,
        "orbit": _orbit_to_json(cert.orbit),
        "weight": list(cert.weight.coords),
        "q": cert.q,
        "exceptional": cert.exceptional.value,
        "fibration": fib,
        "buchdahl": _fact_to_json(cert.buchdahl),
        "stein_contractible": _fact_to_json(cert.stein_contractible),
        "vanishing_table": [{"p": e.p, "r": e.r, "status": e.status.value}
                            for e in cert.vanishing_table],
        "derived_fiber": _fiber_to_json(cert.derived_fiber),
        "verdict": cert.verdict,
        "notes": list(cert.notes),
    }


def from_json_dict(obj: dict) -> InjectivityCertificate:
    if obj.get("format") != CERT_FORMAT:
        raise ConsistencyError(f"unexpected certificate format {obj.get('format')!r}")
    fib = obj["fibration"]
    fibration = None if fib is None else FibrationDims(
        fib["dim_z"], fib["q"], fib["dim_mz"], fib["dim_sigma"], fib["dim_f"])
    return InjectivityCertificate(
        orbit=_orbit_from_json(obj["orbit"]),
        weight=Weight(tuple(obj["weight"])),
        q=int(obj["q"]),
        exceptional=OrbitClass(obj["exceptional"]),
        fibration=fibration,
        buchdahl=StructuralFact(**obj["buchdahl"]),
        stein_contractible=StructuralFact(**obj["stein_contractible"]),
        vanishing_table=tuple(
            VanishingEntry(e["p"], e["r"], VanishingStatus(e["status"]))
            for e in obj["vanishing_table"]),
        derived_fiber=_fiber_from_json(obj["derived_fiber"]),
        verdict=obj["verdict"],
        notes=tuple(obj["notes"]),
    )


def _kweight_to_text(w: KWeight) -> str:
    parts = ";".join(",".join(str(c) for c in p) for p in w.parts)
    torus = ",".join(str(c) for c in w.torus)
    return f"{parts}@{torus}"


def _kweight_from_text(s: str) -> KWeight:
    left, _, right = s.partition("@")
    parts = tuple(tuple(int(v) for v in p.split(",")) for p in left.split(";") if p)
    torus = tuple(int(v) for v in right.split(",") if v)
    return KWeight(parts, torus)


def render_text(cert: InjectivityCertificate) -> str:
    """Versioned plain-text key-value rendering (parse_text inverts it)."""
    lines = [TEXT_FORMAT]
    lines.append(f"form: {cert.orbit.spec.name}")
    lines.append(f"flag-steps: {','.join(str(k) for k in cert.orbit.steps)}")
    lines.append(f"orbit: {cert.orbit.describe()}")
    lines.append(f"weight: {','.join(str(c) for c in cert.weight.coords)}")
    lines.append(f"q: {cert.q}")
    lines.append(f"exceptional: {cert.exceptional.value}")
    if cert.fibration is None:
        lines.append("fibration: none")
    else:
        d = cert.fibration
        lines.append(f"fibration: dim_z={d.dim_z} q={d.q} dim_mz={d.dim_mz} "
                     f"dim_sigma={d.dim_sigma} dim_f={d.dim_f}")
    for key, fact in (("buchdahl", cert.buchdahl),
                      ("stein-contractible", cert.stein_contractible)):
        lines.append(f"{key}: {fact.status} {fact.basis} {fact.statement}")
    for e in cert.vanishing_table:
        lines.append(f"vanishing: p={e.p} r={e.r} {e.status.value}")
    f = cert.derived_fiber
    if f.bbw.zero:
        lines.append(f"derived-fiber: q={f.q} zero fiber_dim={f.fiber_dim}")
    else:
        lines.append(f"derived-fiber: q={f.q} degree={f.bbw.degree} dim={f.bbw.dim} "
                     f"hw={_kweight_to_text(f.bbw.highest_weight)} "
                     f"fiber_dim={f.fiber_dim}")
    lines.append(f"verdict: {cert.verdict}")
    for note in cert.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> InjectivityCertificate:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != TEXT_FORMAT:
        raise ConsistencyError("not a flagdom certificate text rendering")
    fields: dict[str, str] = {}
    vanishing = []
    notes = []
    for ln in lines[1:]:
        key, _, value = ln.partition(": ")
        if key == "vanishing":
            vanishing.append(value)
        elif key == "note":
            notes.append(value)
        else:
            fields[key] = value

    spec = parse_form(fields["form"].replace("(", ",").replace(")", ""))
    flag = partial_flag(spec, [int(v) for v in fields["flag-steps"].split(",")])
    sig_text = fields["orbit"]
    if sig_text and sig_text[0] == "(":
        signature = tuple(
            tuple(int(v) for v in part.strip("()").split(","))
            for part in sig_text.split(";"))
        signature = tuple((a, b) for a, b in signature)
    else:
        signature = sig_text
    orbit = OpenOrbitModel(spec, flag, signature)

    if fields["fibration"] == "none":
        fibration = None
    else:
        kv = dict(tok.split("=") for tok in fields["fibration"].split())
        fibration = FibrationDims(int(kv["dim_z"]), int(kv["q"]), int(kv["dim_mz"]),
                                  int(kv["dim_sigma"]), int(kv["dim_f"]))

    def fact(value: str) -> StructuralFact:
        status, basis, statement = value.split(" ", 2)
        return StructuralFact(status, basis, statement)

    table = []
    for value in vanishing:
        ptok, rtok, status = value.split()
        table.append(VanishingEntry(int(ptok[2:]), int(rtok[2:]), VanishingStatus(status)))

    ftoks = fields["derived-fiber"].split()
    fkv = dict(tok.split("=") for tok in ftoks if "=" in tok)
    if "zero" in ftoks:
        fiber = DerivedFiber(int(fkv["q"]), BBWResult.vanishing(), int(fkv["fiber_dim"]))
    else:
        bbw = BBWResult(False, int(fkv["degree"]), _kweight_from_text(fkv["hw"]),
                        int(fkv["dim"]))
        fiber = DerivedFiber(int(fkv["q"]), bbw, int(fkv["fiber_dim"]))

    return InjectivityCertificate(
        orbit=orbit,
        weight=Weight(tuple(int(v) for v in fields["weight"].split(","))),
        q=int(fields["q"]),
        exceptional=OrbitClass(fields["exceptional"]),
        fibration=fibration,
        buchdahl=fact(fields["buchdahl"]),
        stein_contractible=fact(fields["stein-contractible"]),
        vanishing_table=tuple(table),
        derived_fiber=fiber,
        verdict=fields["verdict"],
        notes=tuple(notes),
    )


def scan_to_json_dict(report: ScanReport) -> dict:
    return {
        "format": SCAN_FORMAT,
        "orbit": _orbit_to_json(report.orbit),
        "direction": list(report.direction.coords),
        "entries": [{"k": k, "verdict": v} for k, v in report.entries],
        "boundary": report.boundary,
        "contiguous": report.contiguous,
    }
