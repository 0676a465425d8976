"""Bott-Borel-Weil engine: oracles, dualities, exterior powers, vanishing."""

import itertools
import math
from collections import Counter

import pytest

from flagdom.bbw import (
    VanishingStatus,
    WeightMultiset,
    bbw_line,
    canonical_character,
    derived_fiber,
    exterior_power_weights,
    simple_flag,
    vanishing_check,
    weyl_dim,
)
from flagdom.errors import DegreeMismatchError, DominanceError
from flagdom.orbits import enumerate_open_orbits, projective_space
from flagdom.realform import KWeight, real_form
from flagdom.rootsys import Weight, build_root_system, dominant_normalize, rho

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


def line_a1(k):
    return KWeight(((k,),), ())


def test_p1_oracle():
    # dim H^0(O(k)) = max(k+1, 0), dim H^1(O(k)) = max(-k-1, 0)
    flag = simple_flag(A1)
    for k in range(-10, 11):
        res = bbw_line(flag, line_a1(k))
        h0, h1 = max(k + 1, 0), max(-k - 1, 0)
        if h0 == 0 and h1 == 0:
            assert res.zero
        else:
            assert not res.zero
            assert (res.degree, res.dim) == ((0, h0) if h0 else (1, h1))


def test_trivial_bundle_and_examples():
    flag = simple_flag(A1)
    res = bbw_line(flag, line_a1(0))
    assert (res.degree, res.dim) == (0, 1)
    res = bbw_line(flag, line_a1(-2))
    assert (res.degree, res.dim) == (1, 1)
    assert bbw_line(flag, line_a1(-1)).zero


def test_weyl_dim_examples():
    assert weyl_dim(A2, Weight((0, 0))) == 1
    assert weyl_dim(A1, Weight((7,))) == 8          # weight string of sl2
    assert weyl_dim(A2, Weight((1, 1))) == 8        # the adjoint
    # classical closed form on A2
    for a in range(6):
        for b in range(6):
            assert weyl_dim(A2, Weight((a, b))) == (a + 1) * (b + 1) * (a + b + 2) // 2
    B2 = build_root_system("B", 2)
    assert weyl_dim(B2, Weight((1, 0))) == 5 and weyl_dim(B2, Weight((0, 1))) == 4
    G2 = build_root_system("G", 2)
    assert weyl_dim(G2, Weight((1, 0))) == 7 and weyl_dim(G2, Weight((0, 1))) == 14
    with pytest.raises(DominanceError):
        weyl_dim(A2, Weight((-1, 0)))


def test_weyl_dim_matches_sl2_weight_string_enumeration():
    # brute-force weight enumeration for sl2: V(n) has weights n, n-2, ..., -n
    for n in range(0, 12):
        weights = list(range(-n, n + 1, 2))
        assert weyl_dim(A1, Weight((n,))) == len(weights)


def _levi_flags():
    yield A1, ()
    for levi in [(), (1,), (2,)]:
        yield A2, levi


def test_bbw_euler_identity_and_uniqueness():
    # one surviving degree, matching the rho-shifted normalization data
    for rs, levi in _levi_flags():
        flag = simple_flag(rs, levi)
        for coords in itertools.product(range(-10, 11), repeat=rs.rank):
            if any(coords[i - 1] < 0 for i in levi):
                continue
            lam = Weight(coords)
            res = bbw_line(flag, KWeight((coords,), ()))
            shifted = dominant_normalize(rs, lam + rho(rs))
            if shifted.singular:
                assert res.zero
            else:
                assert not res.zero
                assert res.degree == shifted.w.length
                assert res.degree <= flag.dim
                assert res.dim == weyl_dim(rs, shifted.weight - rho(rs))


def test_serre_duality_dimension_symmetry():
    # dim H^p(lam) = dim H^(dim-p)(kappa - lam), kappa the canonical character
    for rs, levi in _levi_flags():
        flag = simple_flag(rs, levi)
        kappa = canonical_character(rs, levi)
        for coords in itertools.product(range(-6, 7), repeat=rs.rank):
            if any(coords[i - 1] < 0 for i in levi):
                continue
            lam = Weight(coords)
            dual = kappa - lam
            if any(dual.coords[i - 1] < 0 for i in levi):
                continue
            res = bbw_line(flag, KWeight((lam.coords,), ()))
            dres = bbw_line(flag, KWeight((dual.coords,), ()))
            if res.zero:
                assert dres.zero
            else:
                assert not dres.zero
                assert dres.degree == flag.dim - res.degree
                assert dres.dim == res.dim


def test_canonical_character_p1():
    assert canonical_character(A1, ()) == Weight((-2,))  # K_P1 = O(-2)


def test_bbw_on_product_flags():
    from flagdom.bbw import k_flag
    from flagdom.realform import involution_data

    su22 = real_form("su", 2, 2)
    kg = involution_data(su22).k_group
    flag = k_flag(kg, (frozenset(), frozenset()))
    res = bbw_line(flag, KWeight(((2,), (-3,)), (5,)))
    # H^0(O(2)) x H^1(O(-3)): degree adds, dimension multiplies, charge rides
    assert (res.degree, res.dim) == (1, 6)
    assert res.highest_weight.torus == (5,)
    assert bbw_line(flag, KWeight(((2,), (-1,)), (0,))).zero


def test_bbw_point_flag():
    su11 = real_form("su", 1, 1)
    from flagdom.bbw import k_flag
    from flagdom.realform import involution_data
    flag = k_flag(involution_data(su11).k_group, ())
    res = bbw_line(flag, KWeight((), (-4,)))
    assert (res.degree, res.dim) == (0, 1)
    assert res.highest_weight == KWeight((), (-4,))


def test_bbw_levi_dominance_error():
    flag = simple_flag(A2, (1,))
    with pytest.raises(DominanceError):
        bbw_line(flag, KWeight(((-1, 0),), ()))


def _brute_exterior(ms, r):
    items = []
    for w, mult in ms:
        items.extend([w] * mult)
    out = Counter()
    for combo in itertools.combinations(range(len(items)), r):
        total = items[0] * 0
        for i in combo:
            total = total + items[i]
        out[total] += 1
    return dict(out)


def test_exterior_power_edges():
    ms = WeightMultiset({Weight((2,)): 1, Weight((0,)): 2, Weight((-2,)): 1})
    assert exterior_power_weights(ms, 0).entries == {Weight((0,)): 1}
    assert exterior_power_weights(ms, 4).entries == {Weight((0,)): 1}  # full sum
    single = WeightMultiset({Weight((3,)): 1, Weight((5,)): 1})
    assert exterior_power_weights(single, 1).entries == {Weight((3,)): 1, Weight((5,)): 1}
    with pytest.raises(DegreeMismatchError):
        exterior_power_weights(ms, 5)


def test_exterior_power_matches_brute_force():
    cases = [
        WeightMultiset({Weight((2, 1)): 2, Weight((-1, 0)): 3, Weight((0, 3)): 1}),
        WeightMultiset({KWeight(((1,), (0,)), (4,)): 2, KWeight(((0,), (1,)), (-4,)): 1}),
    ]
    for ms in cases:
        for r in range(ms.total + 1):
            got = exterior_power_weights(ms, r)
            assert got.entries == _brute_exterior(ms, r)
            assert got.total == math.comb(ms.total, r)


def test_vanishing_check_examples():
    flag = simple_flag(A1)
    assert vanishing_check(flag, WeightMultiset({}), line_a1(0), 0) \
        is VanishingStatus.PROVED
    tangent = WeightMultiset({line_a1(2): 1})
    assert vanishing_check(flag, tangent, line_a1(-6), 0) is VanishingStatus.PROVED
    assert vanishing_check(flag, tangent, line_a1(0), 0) is VanishingStatus.INCONCLUSIVE
    # Zero pieces count as proved: O(-1) twist
    assert vanishing_check(flag, WeightMultiset({line_a1(1): 1}), line_a1(-2), 0) \
        is VanishingStatus.PROVED


def test_vanishing_check_works_beyond_levi_dominance():
    # pieces may be non-dominant on the Levi: the filtration lives over the Borel
    flag = simple_flag(A2, (1,))
    pieces = WeightMultiset({KWeight(((-3, 1),), ()): 1})
    assert vanishing_check(flag, pieces, KWeight(((0, 0),), ()), 0) in VanishingStatus


def test_derived_fiber_quadric_surface_kunneth():
    # sl(4,R): C0 = P^1 x P^1 in P^3; O(k) restricts to O(k,k)
    sl4 = real_form("sl_r", 4)
    orbit = enumerate_open_orbits(sl4, projective_space(sl4))[0]
    for k in range(-5, 3):
        fiber = derived_fiber(orbit, Weight((k, 0, 0)))
        assert fiber.q == 2
        # independent Kunneth oracle over the classical O(m) dimensions
        h = [max(k + 1, 0), max(-k - 1, 0)]
        table = {p1 + p2: h[p1] * h[p2] for p1 in (0, 1) for p2 in (0, 1)
                 if h[p1] and h[p2]}
        if not table:
            assert fiber.bbw.zero
        else:
            (degree, dim), = table.items()
            assert (fiber.bbw.degree, fiber.bbw.dim) == (degree, dim)
        assert fiber.fiber_dim == table.get(2, 0)


def test_derived_fiber_quadric_threefold_classical_values():
    # sl(5,R): C0 = Q3 in P^4 with K_Q3 = O(-3)
    sl5 = real_form("sl_r", 5)
    orbit = enumerate_open_orbits(sl5, projective_space(sl5))[0]
    expected = {
        1: (0, 5),      # H^0(Q3, O(1)) = restriction of the P^4 sections
        0: (0, 1),
        -1: None,       # acyclic twists between O and the canonical bundle
        -2: None,
        -3: (3, 1),     # Serre dual of the trivial bundle
        -4: (3, 5),
    }
    for k, want in expected.items():
        fiber = derived_fiber(orbit, Weight((k, 0, 0, 0)))
        assert fiber.q == 3
        if want is None:
            assert fiber.bbw.zero
        else:
            assert (fiber.bbw.degree, fiber.bbw.dim) == want
    assert derived_fiber(orbit, Weight((-4, 0, 0, 0))).fiber_dim == 5


def test_derived_fiber_rejects_non_characters():
    sl3 = real_form("sl_r", 3)
    orbit = enumerate_open_orbits(sl3, projective_space(sl3))[0]
    with pytest.raises(DominanceError):
        derived_fiber(orbit, Weight((0, 1)))  # nonzero on the Levi node


def test_derived_fiber_examples():
    sl3 = real_form("sl_r", 3)
    orbit = enumerate_open_orbits(sl3, projective_space(sl3))[0]
    fiber = derived_fiber(orbit, Weight((-4, 0)))
    # O(-4) restricts to O(-8) on the conic: H^1 of dimension 7
    assert fiber.q == 1 and fiber.fiber_dim == 7
    assert not fiber.bbw.zero and fiber.bbw.degree == 1
    assert fiber.at_expected_degree

    fiber = derived_fiber(orbit, Weight((0, 0)))
    # trivial bundle: H^1(P^1, O) = 0, concentration in degree 0
    assert fiber.fiber_dim == 0 and fiber.bbw.degree == 0
    assert not fiber.at_expected_degree

    su11 = real_form("su", 1, 1)
    orbit = enumerate_open_orbits(su11, projective_space(su11))[0]
    fiber = derived_fiber(orbit, Weight((-5,)))
    assert fiber.q == 0 and fiber.fiber_dim == 1 and fiber.bbw.degree == 0
