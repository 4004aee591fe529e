"""Axioms re-checked on random elements rather than basis elements."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import algebra, glp_of
from qhg.discrete import build_expectations
from qhg.linalg import Tensor2, vec_scale
from qhg.projection import is_group_like
from qhg.scalar import Scalar

INSTANCES = [("symmetric(3)", "C2"), ("quaternion8", "<i>"), ("dihedral(4)", "C2_reflection")]
gauss = st.builds(lambda a, b: Scalar(a, b), st.integers(-3, 3), st.integers(-3, 3))


def elements(d):
    return st.lists(gauss, min_size=d, max_size=d).map(tuple)


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: f"{i[0]}-{i[1]}")
@pytest.mark.parametrize("model", ["function", "group"])
def test_hopf_identities_on_random_elements(inst, model):
    a = algebra(*inst, model)

    @settings(max_examples=15, deadline=None)
    @given(elements(a.dim), elements(a.dim))
    def check(x, y):
        xy = a.multiply(x, y)
        assert a.comultiply(xy) == a.tensor_mul(a.comultiply(x), a.comultiply(y))
        assert a.S(xy) == a.multiply(a.S(y), a.S(x))
        assert a.star_of(xy) == a.multiply(a.star_of(y), a.star_of(x))
        assert a.star_of(a.star_of(x)) == x
        assert a.eps(xy) == a.eps(x) * a.eps(y)
        assert a.comultiply(a.star_of(x)) == a.tensor_star(a.comultiply(x))
        # positivity of φ on x*x
        v = a.phi_of(a.multiply(a.star_of(x), x))
        assert v.is_real() and v.re >= 0

    check()


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: f"{i[0]}-{i[1]}")
@pytest.mark.parametrize("model", ["function", "group"])
def test_expectation_identities_on_random_elements(inst, model):
    a = algebra(*inst, model)
    ex = build_expectations(a, glp_of(*inst, model))
    E, Ep = ex.E, ex.E_prime
    C = ex.C

    @settings(max_examples=15, deadline=None)
    @given(elements(a.dim), elements(C.dim))
    def check(x, cc):
        c = tuple(sum((cc[i] * C.basis[i][j] for i in range(C.dim)), Scalar(0)) for j in range(a.dim))
        assert E.apply(E.apply(x)) == E.apply(x)
        assert E.apply(a.multiply(c, x)) == a.multiply(c, E.apply(x))
        assert E.apply(a.S(x)) == a.S(Ep.apply(x))
        assert a.phi_of(E.apply(x)) == a.phi_of(x)
        pos = a.phi_of(E.apply(a.multiply(a.star_of(x), x)))
        assert pos.is_real() and pos.re >= 0
        d1 = a.comultiply(x).map_legs(E, None)
        assert d1 == a.comultiply(x).map_legs(None, Ep)

    check()


def test_scaled_projection_fails_only_idempotence():
    # the defining identity is homogeneous of degree two, idempotence is not
    a = algebra("symmetric(3)", "C2", "function")
    h = glp_of("symmetric(3)", "C2", "function").h
    two_h = vec_scale(Scalar(2), h)
    assert a.tensor_times(a.comultiply(two_h), None, two_h) == Tensor2.simple(two_h, two_h)
    ok, _, wit = is_group_like(a, two_h)
    assert not ok and wit["failed"] == "glp.idempotent"
