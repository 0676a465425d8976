"""Fibration dimensions, mu-fiber modules, certificates and scans."""

import json
from importlib import resources

import jsonschema
import pytest

from flagdom.bbw import VanishingStatus, WeightMultiset, exterior_power_weights, vanishing_check
from flagdom.cert import (
    FibrationDims,
    Verdict,
    certify,
    fibration_dims,
    from_json_dict,
    mu_fiber_module,
    parse_text,
    render_text,
    scan_to_json_dict,
    threshold_scan,
    to_json_dict,
)
from flagdom.errors import ConsistencyError, ExceptionalOrbitError
from flagdom.orbits import base_cycle, enumerate_open_orbits, grassmannian, partial_flag, projective_space
from flagdom.realform import real_form, restrict_weight
from flagdom.rootsys import Weight


def orbit_of(spec, flag, signature):
    for orbit in enumerate_open_orbits(spec, flag):
        if orbit.signature == signature:
            return orbit
    raise AssertionError


SL3 = real_form("sl_r", 3)
SL3_ORBIT = enumerate_open_orbits(SL3, projective_space(SL3))[0]
SU11 = real_form("su", 1, 1)
SU11_ORBIT = enumerate_open_orbits(SU11, projective_space(SU11))[0]


def regression_orbits():
    su21, su22 = real_form("su", 2, 1), real_form("su", 2, 2)
    orbits = [SL3_ORBIT]
    orbits += list(enumerate_open_orbits(su21, grassmannian(su21, 1)))
    orbits += list(enumerate_open_orbits(su22, grassmannian(su22, 2)))
    return orbits


def test_fibration_dims_sl3():
    dims = fibration_dims(SL3_ORBIT)
    assert (dims.dim_z, dims.q, dims.dim_mz) == (2, 1, 5)  # dim SL3(C)/SO3(C) = 8-3
    assert (dims.dim_sigma, dims.dim_f) == (1, 4)


def test_fibration_dims_exceptional_raises():
    with pytest.raises(ExceptionalOrbitError):
        fibration_dims(SU11_ORBIT)
    dims = fibration_dims(SU11_ORBIT, assume_generic=True)
    assert dims.dim_sigma + dims.dim_f == dims.dim_mz


def test_fibration_dims_validation():
    with pytest.raises(ConsistencyError):
        FibrationDims(2, 1, 5, 1, 3)


def test_mu_fiber_module_sl3():
    module = mu_fiber_module(SL3_ORBIT)
    assert module.total_multiplicity == 4
    flats = sorted(w.flat() for w, m in module.weights for _ in range(m))
    assert flats == [(-2,), (0,), (2,), (4,)]


def test_mu_fiber_matches_dim_f_on_regression_set():
    for orbit in regression_orbits():
        module = mu_fiber_module(orbit, assume_generic=True)
        dims = fibration_dims(orbit, assume_generic=True)
        assert module.total_multiplicity == dims.dim_f, (orbit.spec.name, orbit.signature)


def test_mu_fiber_exceptional_requires_flag():
    with pytest.raises(ExceptionalOrbitError):
        mu_fiber_module(SU11_ORBIT)


def test_certify_sl3_negative_enough():
    cert = certify(SL3_ORBIT, Weight((-2, 0)))
    assert cert.verdict == Verdict.INJECTIVE
    assert cert.exceptional.value == "generic"
    assert len(cert.vanishing_table) == 4  # q=1, dim_F=4: (p,r) for p<1, r=1..4
    assert all(e.status is VanishingStatus.PROVED for e in cert.vanishing_table)
    assert cert.derived_fiber.fiber_dim == 3  # H^1(P^1, O(-4))


def test_certify_sl3_trivial_bundle_inconclusive():
    cert = certify(SL3_ORBIT, Weight((0, 0)))
    assert cert.verdict == Verdict.INCONCLUSIVE
    assert any(e.status is VanishingStatus.INCONCLUSIVE for e in cert.vanishing_table)


def test_certify_exceptional_branch():
    cert = certify(SU11_ORBIT, Weight((-4,)))
    assert cert.verdict == Verdict.INCONCLUSIVE
    assert cert.exceptional.value == "hermitian-holomorphic-type"
    assert cert.fibration is None and cert.vanishing_table == ()
    assert cert.notes and "bounded" in cert.notes[0]
    assert cert.derived_fiber.q == 0 and cert.derived_fiber.fiber_dim == 1


def test_certify_force_holomorphic_override():
    su21 = real_form("su", 2, 1)
    orbit = orbit_of(su21, grassmannian(su21, 1), ((1, 0),))
    assert certify(orbit, Weight((-4, 0))).verdict == Verdict.INJECTIVE
    forced = certify(orbit, Weight((-4, 0)), force_holomorphic_type=True)
    assert forced.verdict == Verdict.INCONCLUSIVE and forced.fibration is None


def test_vanishing_monotone_under_submodules():
    # removing weights from the module keeps entries Proved
    module = mu_fiber_module(SL3_ORBIT)
    lam_k = restrict_weight(SL3, Weight((-2, 0)))
    cycle = base_cycle(SL3_ORBIT)
    dual = module.weights.dual()
    entries = dict(dual.entries)
    for drop in list(entries):
        sub = {w: m for w, m in entries.items() if w != drop}
        if not sub:
            continue
        ms = WeightMultiset(sub)
        for r in range(1, ms.total + 1):
            pieces = exterior_power_weights(ms, r)
            assert vanishing_check(cycle.k_flag, pieces, lam_k, 0) \
                is VanishingStatus.PROVED


def test_threshold_scan_boundary():
    report = threshold_scan(SL3_ORBIT, Weight((-1, 0)), range(0, 13))
    assert report.boundary == 2 and report.contiguous
    verdicts = dict(report.entries)
    assert verdicts[0] == verdicts[1] == Verdict.INCONCLUSIVE
    assert all(verdicts[k] == Verdict.INJECTIVE for k in range(2, 13))


def test_threshold_scan_edges():
    empty = threshold_scan(SL3_ORBIT, Weight((-1, 0)), range(0, 0))
    assert empty.entries == () and empty.boundary is None and not empty.contiguous
    exceptional = threshold_scan(SU11_ORBIT, Weight((-1,)), range(0, 4))
    assert all(v == Verdict.INCONCLUSIVE for _, v in exceptional.entries)
    assert exceptional.boundary is None


def test_json_round_trip_and_schema():
    schema = json.loads(resources.files("flagdom")
                        .joinpath("schema/certificate.schema.json").read_text())
    su21 = real_form("su", 2, 1)
    certs = [
        certify(SL3_ORBIT, Weight((-2, 0))),
        certify(SL3_ORBIT, Weight((0, 0))),
        certify(SU11_ORBIT, Weight((-4,))),
        certify(orbit_of(su21, grassmannian(su21, 1), ((1, 0),)), Weight((-5, 0))),
    ]
    for cert in certs:
        blob = to_json_dict(cert)
        jsonschema.validate(blob, schema)
        assert from_json_dict(json.loads(json.dumps(blob))) == cert


def test_text_round_trip():
    su22 = real_form("su", 2, 2)
    certs = [
        certify(SL3_ORBIT, Weight((-3, 0))),
        certify(SU11_ORBIT, Weight((2,))),
        certify(orbit_of(su22, grassmannian(su22, 2), ((1, 1),)), Weight((0, -4, 0))),
    ]
    for cert in certs:
        text = render_text(cert)
        assert text.startswith("flagdom-certificate/1\n")
        assert parse_text(text) == cert


def test_scan_json_shape():
    report = threshold_scan(SL3_ORBIT, Weight((-1, 0)), range(0, 3))
    blob = scan_to_json_dict(report)
    assert blob["format"] == "flagdom.scan/1"
    assert blob["entries"][0] == {"k": 0, "verdict": "inconclusive"}
    assert blob["boundary"] == 2 and blob["contiguous"] is True


def test_su22_generic_certificate_runs_product_bbw():
    su22 = real_form("su", 2, 2)
    orbit = orbit_of(su22, grassmannian(su22, 2), ((1, 1),))
    cert = certify(orbit, Weight((0, -4, 0)))
    assert cert.q == 2
    assert cert.fibration is not None
    assert cert.fibration.dim_f == 6
    # q = 2: table covers p in {0,1}, r = 1..6
    assert len(cert.vanishing_table) == 12
    assert cert.verdict in (Verdict.INJECTIVE, Verdict.INCONCLUSIVE)


def test_su22_scan_matches_kunneth_oracle():
    # independent verdict on C0 = P^1 x P^1: exterior powers by explicit
    # subset enumeration, piece cohomology by the classical Kunneth table
    import itertools

    su22 = real_form("su", 2, 2)
    orbit = orbit_of(su22, grassmannian(su22, 2), ((1, 1),))
    module = mu_fiber_module(orbit)
    duals = []
    for w, mult in module.weights:
        (x,), (y,) = w.parts
        duals.extend([(-x, -y)] * mult)
    assert len(duals) == 6

    def nonzero_degrees(x, y):
        hx = [max(x + 1, 0), max(-x - 1, 0)]
        hy = [max(y + 1, 0), max(-y - 1, 0)]
        return {p1 + p2 for p1 in (0, 1) for p2 in (0, 1) if hx[p1] and hy[p2]}

    def oracle_injective(k):
        # bundle O(-k) on Gr(2,4) restricts to O(-k,-k) on P^1 x P^1
        for r in range(1, len(duals) + 1):
            for subset in itertools.combinations(range(len(duals)), r):
                x = sum(duals[i][0] for i in subset) - k
                y = sum(duals[i][1] for i in subset) - k
                if any(p < 2 for p in nonzero_degrees(x, y)):
                    return False
        return True

    ks = range(0, 9)
    oracle = {k: oracle_injective(k) for k in ks}
    report = threshold_scan(orbit, Weight((0, -1, 0)), ks)
    for k, verdict in report.entries:
        assert (verdict == Verdict.INJECTIVE) is oracle[k], k
    assert report.boundary == min(k for k, ok in oracle.items() if ok)
    assert report.contiguous


def test_chain_orbit_certificates_and_consistency():
    su22 = real_form("su", 2, 2)
    flag = partial_flag(su22, (1, 3))
    orbits = enumerate_open_orbits(su22, flag)
    assert len(orbits) == 4
    for orbit in orbits:
        module = mu_fiber_module(orbit, assume_generic=True)
        dims = fibration_dims(orbit, assume_generic=True)
        assert module.total_multiplicity == dims.dim_f
        cert = certify(orbit, Weight((-3, 0, -3)))
        assert cert.verdict in (Verdict.INJECTIVE, Verdict.INCONCLUSIVE)
        assert from_json_dict(json.loads(json.dumps(to_json_dict(cert)))) == cert
        assert parse_text(render_text(cert)) == cert


def test_mu_consistency_beyond_regression_set():
    specs_orbits = []
    for n in range(4, 8):
        spec = real_form("sl_r", n)
        specs_orbits += enumerate_open_orbits(spec, projective_space(spec))
    su32 = real_form("su", 3, 2)
    specs_orbits += enumerate_open_orbits(su32, grassmannian(su32, 2))
    su21 = real_form("su", 2, 1)
    specs_orbits += enumerate_open_orbits(su21, partial_flag(su21, (1, 2)))
    for orbit in specs_orbits:
        module = mu_fiber_module(orbit, assume_generic=True)
        dims = fibration_dims(orbit, assume_generic=True)
        assert module.total_multiplicity == dims.dim_f, \
            (orbit.spec.name, orbit.signature)
