from __future__ import annotations

import itertools

import pytest

from qhg.group import (GroupError, all_subgroups, catalog, catalog_names, center, derived_subgroup,
                       double_cosets, group_from_generators, group_from_json, group_from_table,
                       is_normal, left_cosets, right_cosets, subgroup_from_elements)


@pytest.mark.parametrize("name,order", [
    ("cyclic(1)", 1), ("cyclic(6)", 6), ("klein4", 4), ("symmetric(3)", 6), ("dihedral(4)", 8),
    ("quaternion8", 8), ("symmetric(4)", 24), ("cyclic(2) x cyclic(3)", 6), ("dihedral(5)", 10),
])
def test_catalog_orders_and_validity(name, order):
    g, subs = catalog(name)
    assert g.order == order
    g.validate()
    for k in subs.values():
        assert g.order % k.order == 0


def _brute_subgroups(g):
    found = set()
    for r in range(1, g.order + 1):
        for t in itertools.combinations(range(g.order), r):
            s = set(t)
            if g.identity in s and all(g.mul(a, b) in s for a in s for b in s):
                found.add(frozenset(s))
    return found


@pytest.mark.parametrize("name,count", [
    ("symmetric(3)", 6), ("klein4", 5), ("quaternion8", 6), ("dihedral(4)", 10), ("cyclic(6)", 4),
])
def test_subgroup_counts(name, count):
    g, _ = catalog(name)
    subs = all_subgroups(g)
    assert len(subs) == count
    if g.order <= 8:
        assert {frozenset(k.elements) for k in subs} == _brute_subgroups(g)


def test_symmetric4_has_thirty_subgroups():
    g, _ = catalog("symmetric(4)")
    assert len(all_subgroups(g)) == 30


def test_double_cosets_s3():
    g, subs = catalog("symmetric(3)")
    assert len(double_cosets(g, subs["C2"]).classes) == 2
    assert len(double_cosets(g, subs["A3"]).classes) == 2
    assert not is_normal(g, subs["C2"])
    assert is_normal(g, subs["A3"])


@pytest.mark.parametrize("name", ["symmetric(3)", "dihedral(4)", "quaternion8", "symmetric(4)"])
def test_coset_counting_identities(name):
    g, _ = catalog(name)
    for k in all_subgroups(g):
        lc, rc, dc = left_cosets(g, k), right_cosets(g, k), double_cosets(g, k)
        assert len(lc.classes) * k.order == g.order == len(rc.classes) * k.order
        assert sum(len(c) for c in dc.classes) == g.order
        for c in lc.classes:
            p = c[0]
            assert set(c) == {g.mul(p, x) for x in k.elements}


def test_conjugate_subgroups_give_equal_double_coset_shapes():
    g, _ = catalog("symmetric(3)")
    twos = [k for k in all_subgroups(g) if k.order == 2]
    shapes = {tuple(sorted(len(c) for c in double_cosets(g, k).classes)) for k in twos}
    assert len(shapes) == 1


def test_center_and_derived():
    g, _ = catalog("dihedral(4)")
    assert center(g).order == 2
    assert derived_subgroup(g).order == 2
    q, _ = catalog("quaternion8")
    assert all(is_normal(q, k) for k in all_subgroups(q))


def test_from_generators_and_table_agree():
    g = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
    assert g.order == 6
    h = group_from_table(g.table)
    assert h.order == 6 and not h.is_abelian()


def test_bad_table_rejected():
    with pytest.raises(GroupError):
        group_from_table([[0, 1], [0, 1]])


def test_non_subgroup_rejected():
    g, _ = catalog("symmetric(3)")
    with pytest.raises(GroupError):
        subgroup_from_elements(g, [0, 1])


def test_group_from_json_variants():
    g, k, k2 = group_from_json({"catalog": "symmetric(3)", "subgroup": "trivial", "second_subgroup": "A3"})
    assert (g.order, k.order, k2.order) == (6, 1, 3)
    g, k, _ = group_from_json({"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
                               "subgroup_generators": [[1, 0, 2]]})
    assert (g.order, k.order) == (6, 2)
    g, k, _ = group_from_json({"table": [[0, 1], [1, 0]], "subgroup": [0, 1]})
    assert (g.order, k.order) == (2, 2)
    with pytest.raises(GroupError):
        group_from_json({"catalog": "symmetric(3)", "subgroup": "A3", "second_subgroup": "C2"})
    with pytest.raises(GroupError):
        group_from_json({"catalog": "symmetric(3)"})


def test_catalog_listing_is_sorted():
    names = catalog_names()
    assert names == sorted(names)
