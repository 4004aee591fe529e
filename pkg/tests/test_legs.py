from __future__ import annotations

import pytest

from conftest import CATALOG, SMALL, algebra, glp_of, group_and_sub, instance_id
from qhg.discrete import verify_leg_monotonicity
from qhg.group import catalog, left_cosets
from qhg.hopf import build_function_algebra, build_group_algebra
from qhg.legs import (coset_orientation, is_left_invariant_subalgebra, legs_of, verify_nondegenerate_local_units,
                      verify_C_membership, verify_C_structure)
from qhg.linalg import Subspace
from qhg.projection import canonical_projection
from qhg.report import VerificationReport
from qhg.scalar import ONE, ZERO, Scalar


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_leg_dimensions_and_structure(inst, model):
    gname, kname, normal = inst
    g, k = group_and_sub(gname, kname)
    a = algebra(gname, kname, model)
    glp = glp_of(gname, kname, model)
    rep = VerificationReport(a.name)
    legs = legs_of(a, glp.h, rep, group_like=True)
    C = legs.right_leg
    rep.extend(verify_C_membership(a, glp, C))
    rep.extend(verify_C_structure(a, C))
    rep.extend(verify_nondegenerate_local_units(a, C))
    assert rep.ok, list(rep.summary_lines())
    assert is_left_invariant_subalgebra(a, C)[0]
    if model == "group":
        assert C == Subspace.span(a.dim, (a.basis(p) for p in k.elements))
        assert legs.left_leg == C
    else:
        assert C.dim == g.order // k.order
        assert (legs.left_leg == C) == normal


def test_function_model_C_is_constant_on_pK():
    g, k = group_and_sub("symmetric(3)", "C2")
    a = algebra("symmetric(3)", "C2", "function")
    glp = glp_of("symmetric(3)", "C2", "function")
    C = legs_of(a, glp.h).right_leg
    want = Subspace.span(a.dim, (tuple(ONE if p in c else ZERO for p in range(a.dim))
                                 for c in left_cosets(g, k).classes))
    assert C == want
    rep = VerificationReport("x")
    assert coset_orientation(a, glp, C, rep) == "f(pk)=f(p)"
    assert rep.status_of("C.coset_orientation") == "finding"


def test_non_closed_subspace_is_rejected_with_witness():
    a = algebra("symmetric(3)", "C2", "function")
    v = tuple(ONE if p == 0 else Scalar(2) if p == 1 else ZERO for p in range(a.dim))
    ok, wit = is_left_invariant_subalgebra(a, Subspace.span(a.dim, [v]))
    assert not ok
    assert wit["reason"] == "not closed under product"
    assert wit["product"]


@pytest.mark.parametrize("gname,lo,hi", [("cyclic(4)", "trivial", "C2"), ("cyclic(4)", "C2", "full"),
                                         ("symmetric(3)", "trivial", "A3"), ("symmetric(3)", "A3", "full")])
@pytest.mark.parametrize("build", [build_function_algebra, build_group_algebra])
def test_monotone_legs(gname, lo, hi, build):
    g, subs = catalog(gname)
    a = build(g, subs["trivial"])
    p_lo, p_hi = canonical_projection(a, subs[lo]), canonical_projection(a, subs[hi])
    small, big = (p_lo, p_hi) if a.model == "function" else (p_hi, p_lo)
    rep = VerificationReport("x")
    verify_leg_monotonicity(a, small, big, rep)
    assert rep.passed("C.monotone")
