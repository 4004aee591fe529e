from __future__ import annotations

import pytest

from conftest import CATALOG, algebra, glp_of, group_and_sub, instance_id, pair_of
from qhg.discrete import build_C1, build_discrete_hypergroup, build_expectations, discrete_type_gate
from qhg.group import double_cosets


def _all(gname, kname, model, with_pair=False):
    a = algebra(gname, kname, model)
    glp = glp_of(gname, kname, model)
    ex = build_expectations(a, glp)
    c1 = build_C1(a, glp, ex)
    pair = pair_of(gname, kname, model) if with_pair else None
    disc = build_discrete_hypergroup(a, glp, ex, c1, pair)
    return a, glp, ex, c1, disc


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_expectations_C1_and_gate(inst, model):
    gname, kname, normal = inst
    g, k = group_and_sub(gname, kname)
    a, glp, ex, c1, disc = _all(gname, kname, model, with_pair=True)
    for rep in (ex.report, c1.report, disc.report):
        assert rep.ok, list(rep.summary_lines())
    if model == "function":
        assert ex.C.dim == g.order // k.order
        assert c1.space.dim == len(double_cosets(g, k).classes)
        assert ex.report.passed("E.closed_form") and disc.report.passed("disc.closed_form")
    else:
        assert ex.C.dim == k.order == c1.space.dim
    gate = discrete_type_gate(a, glp, ex, disc)
    assert gate.report.ok, list(gate.report.summary_lines())
    legs_equal = model == "group" or normal
    assert gate.legs_equal == legs_equal
    if legs_equal:
        assert gate.verdict == "discrete quantum group"
        assert gate.hopf is not None and gate.hopf.space == ex.C
        assert disc.report.passed("disc.equals_delta_on_C")
    else:
        assert gate.verdict == "hypergroup only"
        assert gate.witness["element"]


def test_s3_function_model_is_hypergroup_only():
    a, glp, ex, c1, disc = _all("symmetric(3)", "C2", "function")
    assert not disc.is_hopf
    gate = discrete_type_gate(a, glp, ex, disc)
    assert gate.report.passed("gate.antipode_law_witness")
    assert gate.report.passed("gate.coproduct_escapes")
