from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from conftest import CATALOG, algebra, glp_of, group_and_sub, instance_id, pair_of
from qhg.group import all_subgroups, catalog
from qhg.hopf import build_function_algebra, build_group_algebra, compute_modular_data
from qhg.duality import dualize
from qhg.projection import (canonical_projection, centrality_equivalences, fourier_projection,
                            is_below, is_group_like, verify_ordered_pair)
from qhg.scalar import ONE, ZERO, Scalar

ORDER_LE_8 = ["cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)", "cyclic(7)",
              "cyclic(8)", "klein4", "symmetric(3)", "dihedral(4)", "quaternion8", "cyclic(2) x cyclic(4)",
              "cyclic(2) x klein4"]


def _is_subgroup(g, t) -> bool:
    return bool(t) and all(g.mul(x, g.inverse[y]) in t for x in t for y in t)


@pytest.mark.parametrize("name", ORDER_LE_8)
def test_characteristic_functions_exhaustive(name):
    g, subs = catalog(name)
    a = build_function_algebra(g, subs["trivial"])
    hits = 0
    for mask in range(1 << g.order):
        t = {p for p in range(g.order) if mask >> p & 1}
        h = tuple(ONE if p in t else ZERO for p in range(g.order))
        ok, glp, wit = is_group_like(a, h)
        assert ok == _is_subgroup(g, t), (name, sorted(t), wit)
        hits += ok
        if not ok:
            assert wit["failed"].startswith("glp.") and "element" in wit
    assert hits == len(all_subgroups(g))


def test_unit_is_group_like_in_both_models():
    g, subs = catalog("symmetric(3)")
    for build in (build_function_algebra, build_group_algebra):
        a = build(g, subs["trivial"])
        assert is_group_like(a, a.unit)[0]


def test_single_non_identity_element_fails():
    g, subs = catalog("symmetric(3)")
    a = build_function_algebra(g, subs["trivial"])
    ok, glp, wit = is_group_like(a, a.basis(1))
    assert not ok and glp is None
    assert wit["failed"] == "glp.defining_identity"


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_certified_consequences(inst, model):
    glp = glp_of(inst[0], inst[1], model)
    cert = glp.certificate
    assert cert.ok
    for cid in ("glp.counit", "glp.antipode", "glp.h_delta", "glp.sigma_fixed", "glp.nu_trivial",
                "glp.right_identity"):
        assert cert.passed(cid)
    a = glp.parent
    assert a.phi_of(glp.h) == ONE
    assert compute_modular_data(a).nu == ONE


def test_haar_projection_coordinates():
    g, k = group_and_sub("symmetric(4)", "S3")
    glp = glp_of("symmetric(4)", "S3", "group")
    assert glp.h == tuple(Scalar(Fraction(1, 6)) if p in k else ZERO for p in range(24))


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_centrality_dichotomy(inst, model):
    gname, kname, normal = inst
    pair = pair_of(gname, kname, model)
    central, rep = centrality_equivalences(pair, glp_of(gname, kname, model))
    assert rep.ok
    assert central == (model == "function" or normal)


@pytest.mark.parametrize("gname,chain", [
    ("cyclic(4)", ["trivial", "C2", "full"]),
    ("symmetric(3)", ["trivial", "A3", "full"]),
])
@pytest.mark.parametrize("build", [build_function_algebra, build_group_algebra])
def test_ordered_chains(gname, chain, build):
    g, subs = catalog(gname)
    a = build(g, subs["trivial"])
    pair = dualize(a)
    projs = [canonical_projection(a, subs[name]) for name in chain]
    if a.model == "group":
        projs = projs[::-1]  # larger K gives a smaller Haar projection
    for lo, hi in itertools.combinations(projs, 2):
        assert is_below(a, lo.h, hi.h)
        rep = verify_ordered_pair(pair, lo, hi)
        assert rep.ok and rep.passed("order.comparable") and rep.passed("order.dual_reverses")


def test_incomparable_pair_is_a_finding():
    g, subs = catalog("symmetric(3)")
    a = build_function_algebra(g, subs["trivial"])
    pair = dualize(a)
    twos = [k for k in all_subgroups(g) if k.order == 2]
    p1, p2 = (canonical_projection(a, k) for k in twos[:2])
    rep = verify_ordered_pair(pair, p1, p2)
    assert rep.status_of("order.comparable") == "finding"


def test_fourier_projection_of_dual_group_model():
    pair = pair_of("quaternion8", "<i>", "group")
    kp = fourier_projection(pair, glp_of("quaternion8", "<i>", "group"))
    assert kp.certificate.ok
