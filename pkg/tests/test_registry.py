from __future__ import annotations

import re

import pytest

from conftest import CATALOG, suite_report
from qhg.report import REGISTRY, EngineError, VerificationReport
from qhg.suite import parse_spec, run_suite

NUMBERED = re.compile(r"(prop|lemma|thm|theorem|ex|def|eq|sec)[_ .]?\d", re.I)


def test_every_registered_check_is_emitted_by_the_catalog_suite():
    seen = set()
    for gname, kname, _ in CATALOG:
        seen |= suite_report(gname, kname).ids()
    seen |= run_suite(parse_spec({"catalog": "symmetric(3)", "subgroup": "trivial",
                                  "second_subgroup": "A3"}), full=False).ids()
    assert set(REGISTRY) - seen == set()
    assert seen <= set(REGISTRY)


def test_unregistered_ids_are_refused():
    with pytest.raises(EngineError):
        VerificationReport("x").check("made.up", True)


def test_descriptions_are_nonempty_and_ids_descriptive():
    for cid, desc in REGISTRY.items():
        assert desc.strip()
        family, _, name = cid.partition(".")
        assert family and name
        assert not NUMBERED.search(cid), cid
