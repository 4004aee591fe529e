from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import CATALOG, algebra, glp_of, group_and_sub, instance_id
from qhg.compact import build_central_quotient, build_compact_hypergroup, hecke_structure
from qhg.group import double_cosets
from qhg.report import EngineError
from qhg.scalar import Scalar


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_hypergroup_dimension_and_properties(inst, model):
    gname, kname, normal = inst
    g, k = group_and_sub(gname, kname)
    a = algebra(gname, kname, model)
    hg = build_compact_hypergroup(a, glp_of(gname, kname, model))
    assert hg.report.ok, list(hg.report.summary_lines())
    want = len(double_cosets(g, k).classes) if model == "group" else k.order
    assert hg.dim == want
    assert hg.is_hopf == (model == "function" or normal)


def test_s3_hecke_algebra():
    g, k = group_and_sub("symmetric(3)", "C2")
    a = algebra("symmetric(3)", "C2", "group")
    glp = glp_of("symmetric(3)", "C2", "group")
    hb = hecke_structure(a, glp)
    assert hb.report.ok
    assert len(hb.reps) == 2
    assert hb.pi[hb.reps[0]] == glp.h
    # π(q)π(q) for the non-trivial double coset: (1/2)(h + π(q)) by the convolution formula
    q = hb.reps[1]
    assert hb.structure[q, q] == {hb.reps[0]: Scalar(Fraction(1, 2)), q: Scalar(Fraction(1, 2))}
    assert hb.report.status_of("hecke.antipode_law_fails") == "finding"


@pytest.mark.parametrize("inst", [c for c in CATALOG], ids=instance_id)
def test_hecke_reports(inst):
    gname, kname, _ = inst
    a = algebra(gname, kname, "group")
    hb = hecke_structure(a, glp_of(gname, kname, "group"))
    assert hb.report.ok, list(hb.report.summary_lines())


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_central_quotient(inst, model):
    gname, kname, normal = inst
    g, k = group_and_sub(gname, kname)
    a = algebra(gname, kname, model)
    glp = glp_of(gname, kname, model)
    if model == "group" and not normal:
        with pytest.raises(EngineError):
            build_central_quotient(a, glp)
        return
    sub, rep = build_central_quotient(a, glp)
    assert rep.ok
    want = k.order if model == "function" else g.order // k.order
    assert sub.space.dim == want
