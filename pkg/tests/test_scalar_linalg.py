from __future__ import annotations

import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qhg.linalg import Mat, SingularMatrixError, Subspace, Tensor2, psd_pivots, rref, unit_vec
from qhg.scalar import I, ONE, ZERO, Scalar, as_scalar

small = st.integers(-4, 4)
scalars = st.builds(lambda a, b, c, d: Scalar(Fraction(a, c), Fraction(b, d)),
                    small, small, st.integers(1, 3), st.integers(1, 3))


def mats(rows, cols, elem=scalars):
    return st.lists(st.lists(elem, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(Mat.from_rows)


def to_sympy(m: Mat) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(str(m[i, j].re)) +
                        sympy.I * sympy.Rational(str(m[i, j].im)))


def from_sympy(x) -> Scalar:
    re, im = sympy.re(x), sympy.im(x)
    return Scalar(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


# -- scalars -----------------------------------------------------------------

def test_gaussian_arithmetic_examples():
    a = Scalar(1, 2)
    b = Scalar(Fraction(1, 2), -1)
    assert a * b == Scalar(Fraction(5, 2), 0)
    assert I * I == -ONE
    assert a / a == ONE
    assert a.conjugate() == Scalar(1, -2)
    assert (a * a.conjugate()).is_real()
    assert str(I) == "1i"


def test_scalar_json_is_exact_strings():
    x = Scalar(Fraction(-7, 3), Fraction(2, 9))
    obj = x.to_json()
    assert obj == {"re": "-7/3", "im": "2/9"}
    assert Scalar.from_json(json.loads(json.dumps(obj))) == x


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a:
        assert a * a.inverse() == ONE


# -- matrices ----------------------------------------------------------------

def test_inverse_example():
    m = Mat.from_rows([[1, 2], [3, 4]])
    assert m @ m.inverse() == Mat.identity(2)
    assert m.inverse() == Mat.from_rows([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]])


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrixError):
        Mat.from_rows([[1, 2], [2, 4]]).inverse()


def test_solve_inconsistent_returns_none():
    m = Mat.from_rows([[1, 1], [1, 1]])
    assert m.solve((ONE, ZERO)) is None
    x = m.solve((ONE, ONE))
    assert m.apply(x) == (ONE, ONE)


@settings(max_examples=40, deadline=None)
@given(mats(3, 4))
def test_rank_matches_sympy(m):
    assert m.rank() == to_sympy(m).rank()


@settings(max_examples=40, deadline=None)
@given(mats(3, 3))
def test_inverse_matches_sympy(m):
    sm = to_sympy(m)
    if sm.det() == 0:
        with pytest.raises(SingularMatrixError):
            m.inverse()
        return
    inv = sm.inv()
    got = m.inverse()
    assert all(got[i, j] == from_sympy(sympy.nsimplify(inv[i, j])) for i in range(3) for j in range(3))


@settings(max_examples=40, deadline=None)
@given(mats(3, 5))
def test_rank_nullity_and_kernel(m):
    ker = m.kernel()
    assert m.rank() + len(ker) == m.cols
    assert all(all(not c for c in m.apply(v)) for v in ker)


@settings(max_examples=30, deadline=None)
@given(mats(4, 4))
def test_rref_is_idempotent(m):
    r, rank = rref(m)
    assert rank == m.rank()
    assert rref(r)[0] == r


# -- subspaces ---------------------------------------------------------------

def test_subspace_example():
    u = Subspace.span(3, [(ONE, ONE, ZERO)])
    v = Subspace.span(3, [(ZERO, ONE, ZERO), (ONE, ZERO, ZERO)])
    assert u <= v
    assert u.intersect(v) == u
    assert u.join(v).dim == 2
    assert u.coords((Scalar(2), Scalar(2), ZERO)) == (Scalar(2),)
    assert u.coords(unit_vec(3, 2)) is None


@settings(max_examples=30, deadline=None)
@given(mats(2, 4), mats(2, 4))
def test_grassmann_formula(a, b):
    u = Subspace.span(4, a.entries)
    v = Subspace.span(4, b.entries)
    assert u.join(v).dim + u.intersect(v).dim == u.dim + v.dim
    assert u.intersect(v) <= u and u.intersect(v) <= v


def test_canonical_form_independent_of_spanning_set():
    a = Subspace.span(3, [(ONE, ONE, ZERO), (ZERO, ONE, ONE)])
    b = Subspace.span(3, [(ONE, ZERO, -ONE), (ONE, Scalar(2), ONE)])
    assert a == b
    assert a.basis == b.basis


# -- tensors -----------------------------------------------------------------

def test_map_legs_on_simple_tensor():
    x, y = (ONE, Scalar(2)), (Scalar(3), I)
    L = Mat.from_rows([[0, 1], [1, 0]])
    R = Mat.from_rows([[2, 0], [0, 1]])
    assert Tensor2.simple(x, y).map_legs(L, R) == Tensor2.simple(L.apply(x), R.apply(y))
    assert Tensor2.simple(x, y).flip() == Tensor2.simple(y, x)


# -- positivity --------------------------------------------------------------

def test_psd_pivots_examples():
    assert psd_pivots(Mat.from_rows([[2, 1], [1, 2]]))[0]
    assert psd_pivots(Mat.from_rows([[1, 1], [1, 1]]))[0]
    ok, _, wit = psd_pivots(Mat.from_rows([[1, 2], [2, 1]]))
    assert not ok and wit is not None
    assert not psd_pivots(Mat.from_rows([[0, 1], [1, 0]]))[0]
    assert psd_pivots(Mat.from_rows([[1, I], [-I, 1]]))[0]


@settings(max_examples=30, deadline=None)
@given(mats(3, 2))
def test_gram_matrices_are_psd(x):
    assert psd_pivots(x.adjoint() @ x)[0]


@settings(max_examples=30, deadline=None)
@given(mats(3, 3, st.integers(-3, 3).map(Scalar)))
def test_psd_matches_sympy_eigenvalues(m):
    h = m + m.transpose()
    eig = to_sympy(h).eigenvals()
    expected = all(sympy.re(sympy.N(e, 50)) >= -1e-30 for e in eig)
    assert psd_pivots(h)[0] == expected
