from __future__ import annotations

import functools

import pytest

from qhg.duality import dualize
from qhg.group import catalog
from qhg.hopf import build_function_algebra, build_group_algebra
from qhg.projection import canonical_projection
from qhg.suite import parse_spec, run_suite

# (group, subgroup name, K normal?)
CATALOG = [
    ("cyclic(6)", "C3", True),
    ("cyclic(4)", "C2", True),
    ("symmetric(3)", "C2", False),
    ("symmetric(3)", "A3", True),
    ("klein4", "<a>", True),
    ("dihedral(4)", "center", True),
    ("dihedral(4)", "C2_reflection", False),
    ("quaternion8", "<i>", True),
    ("symmetric(4)", "S3", False),
    ("symmetric(4)", "V4", True),
]

SMALL = [c for c in CATALOG if not c[0].startswith("symmetric(4)")]
MODELS = ("function", "group")


def instance_id(c) -> str:
    return f"{c[0]}-{c[1]}"


@functools.lru_cache(maxsize=None)
def group_and_sub(gname: str, kname: str):
    g, subs = catalog(gname)
    return g, subs[kname]


@functools.lru_cache(maxsize=None)
def algebra(gname: str, kname: str, model: str):
    g, k = group_and_sub(gname, kname)
    return build_function_algebra(g, k) if model == "function" else build_group_algebra(g, k)


@functools.lru_cache(maxsize=None)
def pair_of(gname: str, kname: str, model: str):
    return dualize(algebra(gname, kname, model))


@functools.lru_cache(maxsize=None)
def glp_of(gname: str, kname: str, model: str):
    g, k = group_and_sub(gname, kname)
    return canonical_projection(algebra(gname, kname, model), k)


@functools.lru_cache(maxsize=None)
def suite_report(gname: str, kname: str):
    return run_suite(parse_spec({"catalog": gname, "subgroup": kname}))


@pytest.fixture(params=SMALL, ids=instance_id)
def small_instance(request):
    return request.param


@pytest.fixture(params=MODELS)
def model(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} [tolerance: exact] {title}"
    if detail:
        line += f" :: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
