"""G-sets, fixed points, induced sets, and the inertia skeleton."""

import pytest

from qell.errors import NotSubgroupError, PreconditionError
from qell.groups import Permutation, cyclic
from qell.gsets import (
    FiniteGSet,
    coset_gset,
    fixed_points,
    induced_gset,
    inertia_skeleton,
    orbits_with_stabilizers,
    point_set,
    quotient_set,
    regular_gset,
)


def natural_gset(G):
    return FiniteGSet(G, G.degree, lambda g, x: g(x), name="natural")


def test_action_verification_rejects_bad_table(S3):
    bad = {g: (1, 2, 0) for g in S3.elements}   # identity fails to fix points
    with pytest.raises(PreconditionError):
        FiniteGSet(S3, 3, bad)
    bad2 = {g: tuple((g * g)(x) for x in range(3)) for g in S3.elements}
    with pytest.raises(PreconditionError):
        FiniteGSet(S3, 3, bad2)   # squaring is not compatible with composition


def test_fixed_points_natural(S3):
    X = natural_gset(S3)
    assert fixed_points(X, Permutation([1, 0, 2])) == [2]
    assert fixed_points(X, S3.identity) == [0, 1, 2]
    assert fixed_points(X, Permutation([1, 2, 0])) == []


def test_induced_gset_cosets(S3, c2_in_s3):
    Z = induced_gset(S3, c2_in_s3, point_set(c2_in_s3))
    assert Z.n_points == 3
    orbs = orbits_with_stabilizers(S3, Z)
    assert len(orbs) == 1 and len(orbs[0].points) == 3


def test_induced_gset_size_formula(S3, c3_in_s3):
    X = regular_gset(c3_in_s3)
    Z = induced_gset(S3, c3_in_s3, X)
    assert Z.n_points == S3.order * X.n_points // c3_in_s3.order


def test_induced_rejects_non_subgroup(S3):
    C2 = cyclic(2)
    with pytest.raises(NotSubgroupError):
        induced_gset(S3, C2, point_set(C2))


def test_quotient_free_transitive():
    C2 = cyclic(2)
    X = regular_gset(C2)
    assert len(quotient_set(X, C2)) == 1


def test_orbit_stabilizer_invariant(S3):
    X = natural_gset(S3)
    for orb in orbits_with_stabilizers(S3, X):
        assert len(orb.points) * orb.stabilizer.order == S3.order
        for pt in orb.points:
            assert X.act(orb.transport[pt], orb.rep) == pt


def test_skeleton_s3_point(S3):
    sk = inertia_skeleton(S3, point_set(S3))
    cents = [e.centralizer.order for e in sk.entries]
    assert cents == [6, 2, 3]
    for e in sk.entries:
        assert len(e.orbits) == 1
        assert e.orbits[0].stabilizer == e.centralizer
        assert e.g in e.orbits[0].stabilizer


def test_skeleton_free_action():
    C2 = cyclic(2)
    sk = inertia_skeleton(C2, regular_gset(C2))
    assert len(sk.entries[0].orbits) == 1
    assert sk.entries[0].orbits[0].stabilizer.order == 1
    assert sk.entries[1].fixed == ()


def test_skeleton_s3_on_cosets(S3, c2_in_s3):
    X = induced_gset(S3, c2_in_s3, point_set(c2_in_s3))
    sk = inertia_skeleton(S3, X)
    # brute-force oracle for fixed sets
    for entry in sk.entries:
        oracle = tuple(x for x in X.points() if X.act(entry.g, x) == x)
        assert entry.fixed == oracle
    by_order = {e.g.order(): e for e in sk.entries}
    assert len(by_order[1].orbits) == 1 and by_order[1].orbits[0].stabilizer.order == 2
    assert len(by_order[2].fixed) == 1 and by_order[2].orbits[0].stabilizer.order == 2
    assert by_order[3].fixed == () and by_order[3].orbits == []


def test_coset_gset_matches_induced(S3, c2_in_s3):
    A = coset_gset(S3, c2_in_s3)
    assert A.n_points == 3
    orbs = orbits_with_stabilizers(S3, A)
    assert len(orbs) == 1


def test_restrict_and_via_hom(S3, c3_in_s3):
    from qell.groups import GroupHom
    X = natural_gset(S3)
    XH = X.restrict_group(c3_in_s3)
    assert XH.group == c3_in_s3 and XH.n_points == X.n_points
    inc = GroupHom.inclusion(c3_in_s3, S3)
    assert X.via_hom(inc) == XH
