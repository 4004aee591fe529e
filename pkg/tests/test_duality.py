from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, SMALL, algebra, glp_of, group_and_sub, instance_id, pair_of
from qhg.duality import (check_cointegral_unit, fourier, inverse_fourier, verify_double_dual,
                         verify_dual_modular, verify_pairing, verify_plancherel)
from qhg.projection import fourier_projection
from qhg.report import VerificationReport
from qhg.scalar import ONE, ZERO, Scalar


@pytest.mark.parametrize("inst", CATALOG, ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_pairing_suite(inst, model):
    pair = pair_of(inst[0], inst[1], model)
    assert pair.report.ok
    for rep in (verify_pairing(pair), verify_plancherel(pair), verify_dual_modular(pair),
                verify_double_dual(pair)):
        assert rep.ok, list(rep.summary_lines())


def test_dual_of_function_algebra_is_group_algebra():
    # with ⟨f, λ_p⟩ = f(p) the dual basis element of δ_p multiplies like λ_p
    g, _ = group_and_sub("symmetric(3)", "C2")
    b = pair_of("symmetric(3)", "C2", "function").b_side
    ga = algebra("symmetric(3)", "C2", "group")
    assert b.mult == ga.mult
    assert b.comult == ga.comult
    assert b.antipode == ga.antipode and b.star == ga.star
    assert b.counit == ga.counit and b.unit == ga.unit


def test_fourier_of_characteristic_function():
    g, k = group_and_sub("symmetric(3)", "C2")
    pair = pair_of("symmetric(3)", "C2", "function")
    glp = glp_of("symmetric(3)", "C2", "function")
    n = k.order
    want = tuple(Scalar(Fraction(1, n)) if p in k else ZERO for p in range(g.order))
    assert fourier(pair, glp.h) == want
    kp = fourier_projection(pair, glp)
    assert kp.h == want
    # ⟨f, k⟩ = (1/n) Σ_{p∈K} f(p) = φ(f h) for every basis function f
    a = pair.a_side
    for p in range(g.order):
        f = a.basis(p)
        assert sum((f[q] * kp.h[q] for q in range(g.order)), ZERO) == a.phi_of(a.multiply(f, glp.h))


def test_cointegral_transforms_to_the_unit():
    g, k = group_and_sub("symmetric(3)", "C2")
    pair = pair_of("symmetric(3)", "C2", "group")
    a, b = pair.a_side, pair.b_side
    total = tuple(ONE for _ in range(g.order))
    h = tuple(c / a.phi_of(total) for c in total)
    assert a.phi_of(h) == ONE
    assert fourier(pair, h) == b.unit
    rep = VerificationReport("x")
    check_cointegral_unit(pair, h, rep)
    assert rep.passed("dual.cointegral_unit")


def test_modular_pairing_on_s3_pair():
    pair = pair_of("symmetric(3)", "C2", "function")
    rep = verify_dual_modular(pair)
    assert rep.passed("dual.modular_sigma_inv") and rep.passed("dual.modular_sigma")


gauss = st.builds(lambda a, b: Scalar(a, b), st.integers(-5, 5), st.integers(-5, 5))


@pytest.mark.parametrize("inst", SMALL[:4], ids=instance_id)
@pytest.mark.parametrize("model", ["function", "group"])
def test_fourier_round_trip_and_plancherel_random(inst, model):
    pair = pair_of(inst[0], inst[1], model)
    a, b = pair.a_side, pair.b_side

    @settings(max_examples=25, deadline=None)
    @given(st.lists(gauss, min_size=a.dim, max_size=a.dim))
    def check(coords):
        x = tuple(coords)
        y = fourier(pair, x)
        assert inverse_fourier(pair, y) == x
        assert b.phi_of(b.multiply(b.star_of(y), y)) == a.phi_of(a.multiply(a.star_of(x), x))

    check()
