"""Schubert classes, Bruhat order and the homology pairing."""

import itertools

import numpy as np
import pytest

from flagdom.errors import DegreeMismatchError, RankMismatchError
from flagdom.rootsys import (
    build_root_system,
    enumerate_weyl_group,
    identity,
    simple_reflection,
    weyl_element,
)
from flagdom.schubert import (
    CycleClass,
    betti_numbers,
    bruhat_leq,
    flag_manifold,
    intersection_number,
    levi_weyl_order,
    minimal_coset_reps,
    poincare_dual,
    poincare_pairing,
)

A2 = build_root_system("A", 2)
A3 = build_root_system("A", 3)


def by_dim(reps, d):
    return [sv for sv in reps if sv.dim == d]


def test_projective_plane_cells():
    flag = flag_manifold(A2, {2})
    assert flag.dim == 2
    reps = minimal_coset_reps(flag)
    assert [sv.dim for sv in reps] == [0, 1, 2]
    assert [sv.codim for sv in reps] == [2, 1, 0]


def test_projective_line_cells():
    flag = flag_manifold(build_root_system("A", 1), ())
    reps = minimal_coset_reps(flag)
    assert [(sv.rep.word, sv.dim) for sv in reps] == [((), 0), ((1,), 1)]


def test_grassmannian_2_4_profile():
    flag = flag_manifold(A3, {1, 3})
    assert flag.dim == 4
    reps = minimal_coset_reps(flag)
    assert sorted(sv.dim for sv in reps) == [0, 1, 2, 2, 3, 4]


def test_reps_are_minimal_in_their_cosets():
    flag = flag_manifold(A2, {2})
    group = enumerate_weyl_group(A2)
    wq = [w for w in group.elements
          if w.is_identity() or w.word == (2,)]  # W_Q for levi {2}
    from flagdom.rootsys import multiply
    for sv in minimal_coset_reps(flag):
        lengths = [multiply(sv.rep, w).length for w in wq]
        assert min(lengths) == sv.rep.length


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2)])
def test_index_formula_all_parabolics(family, rank):
    rs = build_root_system(family, rank)
    order = enumerate_weyl_group(rs).order
    for size in range(rank + 1):
        for levi in itertools.combinations(range(1, rank + 1), size):
            flag = flag_manifold(rs, levi)
            reps = minimal_coset_reps(flag)
            assert len(reps) * levi_weyl_order(flag) == order
            assert len({sv.rep for sv in reps}) == len(reps)
            # dim Z from the nilradical root count = maximal representative length
            assert max(sv.dim for sv in reps) == flag.dim


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("G", 2)])
def test_poincare_polynomials_palindromic(family, rank):
    rs = build_root_system(family, rank)
    for size in range(rank + 1):
        for levi in itertools.combinations(range(1, rank + 1), size):
            betti = betti_numbers(flag_manifold(rs, levi))
            assert betti == betti[::-1]
            assert betti[0] == betti[-1] == 1


def test_bruhat_bounds():
    group = enumerate_weyl_group(A2)
    e = identity(A2)
    for w in group.elements:
        assert bruhat_leq(e, w)
        assert bruhat_leq(w, group.longest)
    assert not bruhat_leq(simple_reflection(A2, 1), simple_reflection(A2, 2))


def test_bruhat_matches_subword_property():
    rs = build_root_system("B", 2)
    group = enumerate_weyl_group(rs)

    def subword_leq(u, w):
        # some reduced word of u appears as a subword of w's canonical word
        for positions in itertools.combinations(range(w.length), u.length):
            candidate = tuple(w.word[i] for i in positions)
            cw = weyl_element(rs, candidate)
            if cw.length == u.length and cw == u:
                return True
        return u.length == 0

    for u, w in itertools.product(group.elements, repeat=2):
        assert bruhat_leq(u, w) == subword_leq(u, w), (u.word, w.word)


def test_pairing_projective_plane():
    flag = flag_manifold(A2, {2})
    reps = minimal_coset_reps(flag)
    point, line, full = (by_dim(reps, d)[0] for d in (0, 1, 2))
    assert poincare_pairing(point, full) == 1
    assert poincare_pairing(line, line) == 1  # line.line = 1 in P^2
    with pytest.raises(DegreeMismatchError):
        poincare_pairing(point, line)


def test_pairing_unimodular_diagonal():
    cases = [("A", 2, ()), ("A", 2, (1,)), ("A", 3, (1, 3)), ("A", 3, ()),
             ("B", 2, ()), ("B", 2, (2,)), ("G", 2, (1,))]
    for family, rank, levi in cases:
        flag = flag_manifold(build_root_system(family, rank), levi)
        reps = minimal_coset_reps(flag)
        for d in range(flag.dim + 1):
            rows, cols = by_dim(reps, d), by_dim(reps, flag.dim - d)
            mat = np.array([[poincare_pairing(a, b) for b in cols] for a in rows],
                           dtype=int).reshape(len(rows), len(cols))
            # exactly one dual partner per class
            assert (mat.sum(axis=0) == 1).all() and (mat.sum(axis=1) == 1).all()
        for sv in reps:
            assert poincare_dual(poincare_dual(sv)).rep == sv.rep
            assert poincare_dual(sv).dim == flag.dim - sv.dim


def test_gr24_middle_classes_self_dual():
    flag = flag_manifold(A3, {1, 3})
    mids = by_dim(minimal_coset_reps(flag), 2)
    mat = [[poincare_pairing(a, b) for b in mids] for a in mids]
    assert mat == [[1, 0], [0, 1]]


def test_intersection_numbers():
    flag = flag_manifold(A2, {2})
    reps = minimal_coset_reps(flag)
    point, line, full = (by_dim(reps, d)[0] for d in (0, 1, 2))
    assert intersection_number(CycleClass.from_dict(0, {point.rep: 1}), full) == 1
    quadric = CycleClass.from_dict(1, {line.rep: 2})
    assert intersection_number(quadric, line) == 2  # conic . line, Bezout
    assert intersection_number(CycleClass(1, ()), line) == 0
    with pytest.raises(DegreeMismatchError):
        intersection_number(quadric, full)


def test_cycle_class_validation():
    flag = flag_manifold(A2, {2})
    line = by_dim(minimal_coset_reps(flag), 1)[0]
    with pytest.raises(DegreeMismatchError):
        CycleClass.from_dict(1, {line.rep: -1})
    with pytest.raises(DegreeMismatchError):
        CycleClass.from_dict(2, {line.rep: 1})


def test_levi_validation():
    with pytest.raises(RankMismatchError):
        flag_manifold(A2, {3})
