from __future__ import annotations

import json

from conftest import algebra, glp_of
from qhg.compact import hecke_structure
from qhg.discrete import build_C1, build_discrete_hypergroup, build_expectations
from qhg.report import SCHEMA
from qhg.serialize import dump_discrete, dump_hecke, mat_from_json, mat_to_json, vec_from_json, vec_to_json


def test_vec_and_mat_round_trip():
    a = algebra("symmetric(3)", "C2", "group")
    v = glp_of("symmetric(3)", "C2", "group").h
    assert vec_from_json(json.loads(json.dumps(vec_to_json(v)))) == v
    assert mat_from_json(json.loads(json.dumps(mat_to_json(a.antipode)))) == a.antipode


def test_hecke_dump_shape():
    a = algebra("symmetric(3)", "C2", "group")
    hb = hecke_structure(a, glp_of("symmetric(3)", "C2", "group"))
    obj = dump_hecke(a, hb)
    assert obj["schema"] == SCHEMA and obj["dim"] == 2
    assert len(obj["structure"]) == 2 and len(obj["structure"][0]) == 2
    assert obj["structure"][0][0] == {"0": {"re": "1/1", "im": "0/1"}}
    assert obj["structure"][1][1] == {"0": {"re": "1/2", "im": "0/1"}, "1": {"re": "1/2", "im": "0/1"}}


def test_discrete_dump_shape():
    a = algebra("symmetric(3)", "C2", "function")
    glp = glp_of("symmetric(3)", "C2", "function")
    ex = build_expectations(a, glp)
    c1 = build_C1(a, glp, ex)
    disc = build_discrete_hypergroup(a, glp, ex, c1)
    obj = json.loads(json.dumps(dump_discrete(ex, c1, disc)))
    assert obj["C"]["dim"] == 3 and obj["C1"]["dim"] == 2
    assert len(obj["delta1"]) == 2 and obj["is_hopf"] is False
