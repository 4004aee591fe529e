"""Legs of coproducts and the left-invariant subalgebra ``C`` of a group-like projection.

The right leg of ``Δ(x)`` is the span of all second-leg factors of the
tensors ``Δ(x)(b⊗1)``.  That span is already the smallest subspace ``C`` with
``Δ(x)(A⊗1) ⊆ A⊗C``: every vector in it is attained by slicing, so no search
for a minimum is needed.  Two other slice families give the same space and are
computed as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import Subgroup, left_cosets, right_cosets
from .hopf import HopfStarAlgebra, ModularData, compute_modular_data
from .linalg import Mat, Subspace, Tensor2, Vec, col_space, row_space, vec_scale
from .projection import GroupLikeProjection
from .report import VerificationReport, register, witness_vec
from .scalar import ONE, ZERO

__all__ = [
    "LegResult", "right_leg_of", "left_leg_of", "legs_of", "verify_C_membership",
    "is_left_invariant_subalgebra", "verify_nondegenerate_local_units", "verify_C_structure",
    "semisimplicity", "coset_orientation", "kernel_subspace",
]

CHECKS = register({
    "legs.slice_families_agree": "right leg from Δ(x)(b⊗1), from (b⊗1)Δ(x) and from all slices (ω⊗ι)Δ(x) coincide",
    "legs.left_is_S_right": "for a group-like projection the left leg equals S(right leg)",
    "C.counit_absorb": "ch = ε(c)h for every basis element c of C",
    "C.coproduct_h": "Δ(c)(1⊗h) = c⊗h for every basis element c of C",
    "C.antipode_slide": "(S(c)⊗1)Δ(h) = (1⊗c)Δ(h) for every basis element c of C",
    "C.kernel_coproduct": "C = {a : Δ(a)(1⊗h) = a⊗h} as subspaces",
    "C.kernel_antipode": "C = {a : (1⊗a)Δ(h) = (S(a)⊗1)Δ(h)} as subspaces",
    "C.contains_h": "h ∈ C",
    "C.left_invariant": "C is a ∗-subalgebra containing the right legs of Δ(c) for c ∈ C",
    "C.S2_invariant": "S²(C) = C",
    "C.sigma_invariant": "σ(C) = C and σ = S² on C",
    "C.delta_invariant": "Cδ = δC = C",
    "C.semisimple": "φ restricted to C is faithful and the trace form of C is nondegenerate",
    "C.nondegenerate": "no nonzero c in the subalgebra with cC = 0 or Cc = 0",
    "C.local_units": "an element e of the subalgebra with b e = b for every basis b of A (1 is tried first)",
    "C.monotone": "h ≤ h' implies C_{h'} ⊆ C_h",
    "C.coset_orientation": "which coset family the function-model C is constant on",
})


@dataclass(frozen=True, eq=False)
class LegResult:
    parent: HopfStarAlgebra
    source: Vec
    right_leg: Subspace
    left_leg: Subspace


def _basis_right(a: HopfStarAlgebra) -> list[Mat]:
    return [a.right_mult_matrix(a.basis(j)) for j in range(a.dim)]


def _basis_left(a: HopfStarAlgebra) -> list[Mat]:
    return [a.left_mult_matrix(a.basis(j)) for j in range(a.dim)]


def right_leg_of(a: HopfStarAlgebra, x: Vec, variant: str = "right_mult") -> Subspace:
    """Right leg of ``Δ(x)``.

    ``variant`` selects the slice family: ``"right_mult"`` uses ``Δ(x)(b⊗1)``,
    ``"left_mult"`` uses ``(b⊗1)Δ(x)``, and ``"slices"`` uses ``(ω⊗ι)Δ(x)``.
    """
    dx = a.comultiply(x)
    if variant == "slices":
        return row_space(dx)
    mats = _basis_right(a) if variant == "right_mult" else _basis_left(a)
    rows = []
    for m in mats:
        rows.extend(dx.map_legs(m, None).coeffs.entries)
    return Subspace.span(a.dim, rows)


def left_leg_of(a: HopfStarAlgebra, x: Vec, variant: str = "left_mult") -> Subspace:
    """Left leg of ``Δ(x)``: first-leg factors of ``(1⊗b)Δ(x)`` (or ``Δ(x)(1⊗b)``, or all slices)."""
    dx = a.comultiply(x)
    if variant == "slices":
        return col_space(dx)
    mats = _basis_left(a) if variant == "left_mult" else _basis_right(a)
    cols = []
    for m in mats:
        cols.extend(dx.map_legs(None, m).coeffs.columns())
    return Subspace.span(a.dim, cols)


def legs_of(a: HopfStarAlgebra, x: Vec, rep: VerificationReport | None = None,
            group_like: bool = False) -> LegResult:
    right = right_leg_of(a, x)
    left = left_leg_of(a, x)
    if rep is not None:
        same = (right == right_leg_of(a, x, "left_mult") == right_leg_of(a, x, "slices")
                and left == left_leg_of(a, x, "right_mult") == left_leg_of(a, x, "slices"))
        rep.check("legs.slice_families_agree", same, "slice families give different legs")
        if group_like:
            rep.check("legs.left_is_S_right", left == right.image(a.antipode),
                      "left leg ≠ S(right leg)", {"right_dim": right.dim, "left_dim": left.dim})
    return LegResult(a, tuple(x), right, left)


def kernel_subspace(a: HopfStarAlgebra, f) -> Subspace:
    """``{x : f(x) = 0}`` for a linear map ``f`` from ``A`` to tensors or vectors."""
    d = a.dim
    cols = []
    for j in range(d):
        v = f(a.basis(j))
        if isinstance(v, Tensor2):
            v = tuple(c for row in v.coeffs.entries for c in row)
        cols.append(v)
    return Subspace.span(d, Mat.from_columns(cols).kernel())


def verify_C_membership(a: HopfStarAlgebra, glp: GroupLikeProjection, C: Subspace) -> VerificationReport:
    rep = VerificationReport(a.name)
    h = glp.h
    dh = a.comultiply(h)

    def cond_i(c):
        return a.multiply(c, h) == vec_scale(a.eps(c), h)

    def cond_ii(c):
        return a.tensor_times(a.comultiply(c), None, h) == Tensor2.simple(c, h)

    def cond_iii(c):
        return a.times_tensor(a.S(c), None, dh) == a.times_tensor(None, c, dh)

    for cid, cond in (("C.counit_absorb", cond_i), ("C.coproduct_h", cond_ii),
                      ("C.antipode_slide", cond_iii)):
        bad = next((c for c in C.basis if not cond(c)), None)
        rep.check(cid, bad is None, "identity fails on an element of C",
                  {"element": witness_vec(bad) if bad else None})

    k1 = kernel_subspace(a, lambda x: a.tensor_times(a.comultiply(x), None, h) - Tensor2.simple(x, h))
    k2 = kernel_subspace(a, lambda x: a.times_tensor(None, x, dh) - a.times_tensor(a.S(x), None, dh))
    rep.check("C.kernel_coproduct", k1 == C, "kernel differs from C", {"dims": [k1.dim, C.dim]})
    rep.check("C.kernel_antipode", k2 == C, "kernel differs from C", {"dims": [k2.dim, C.dim]})
    rep.check("C.contains_h", h in C, "h ∉ C")
    return rep


def is_left_invariant_subalgebra(a: HopfStarAlgebra, s: Subspace) -> tuple[bool, dict]:
    """∗-subalgebra whose members have their right legs inside it; witness on failure."""
    for i, x in enumerate(s.basis):
        xs = a.star_of(x)
        if xs not in s:
            return False, {"reason": "not star-closed", "element": witness_vec(x)}
        for j, y in enumerate(s.basis):
            p = a.multiply(x, y)
            if p not in s:
                return False, {"reason": "not closed under product", "pair": [i, j],
                               "product": witness_vec(p)}
    for x in s.basis:
        leg = right_leg_of(a, x, "slices")
        if not leg <= s:
            return False, {"reason": "right leg escapes", "element": witness_vec(x)}
    return True, {}


def _structure_in(a: HopfStarAlgebra, s: Subspace):
    """Left-multiplication matrices of the basis of ``s`` acting on ``s`` (in ``s`` coordinates)."""
    mats = []
    for x in s.basis:
        cols = []
        for y in s.basis:
            c = s.coords(a.multiply(x, y))
            if c is None:
                return None
            cols.append(c)
        mats.append(Mat.from_columns(cols, rows=s.dim))
    return mats


def semisimplicity(a: HopfStarAlgebra, s: Subspace) -> tuple[bool, dict]:
    """Faithful φ on ``s`` plus a nondegenerate trace form ``Tr(L_{xy})``."""
    n = s.dim
    if n == 0:
        return False, {"reason": "zero subspace"}
    gram = Mat(n, n, [tuple(a.phi_of(a.multiply(a.star_of(x), y)) for y in s.basis) for x in s.basis])
    mats = _structure_in(a, s)
    if mats is None:
        return False, {"reason": "not a subalgebra"}
    traces = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            traces[i][j] = (mats[i] @ mats[j]).trace()
    tform = Mat.from_rows(traces)
    g_rank, t_rank = gram.rank(), tform.rank()
    return g_rank == n and t_rank == n, {"gram_rank": g_rank, "trace_form_rank": t_rank, "dim": n}


def verify_nondegenerate_local_units(a: HopfStarAlgebra, s: Subspace) -> VerificationReport:
    rep = VerificationReport(a.name)
    n = s.dim
    mats = _structure_in(a, s)
    if mats is None or n == 0:
        rep.check("C.nondegenerate", False, "not a nonzero subalgebra")
        rep.skip("C.local_units", "not a subalgebra")
        return rep
    # x = Σ x_i s_i with x s_j = 0 for all j: columns are L_{s_i} e_j stacked over j
    left_rows, right_rows = [], []
    for j in range(n):
        for r in range(n):
            left_rows.append(tuple(mats[i][r, j] for i in range(n)))
            right_rows.append(tuple(mats[j][r, i] for i in range(n)))
    ker_l = Mat(len(left_rows), n, left_rows).kernel()
    ker_r = Mat(len(right_rows), n, right_rows).kernel()
    rep.check("C.nondegenerate", not ker_l and not ker_r, "product on the subalgebra is degenerate",
              {"left_kernel": len(ker_l), "right_kernel": len(ker_r)})
    if a.unit in s:
        rep.check("C.local_units", True)
        return rep
    # solve Σ e_i b s_i = b for every basis b of A
    rows, rhs = [], []
    for j in range(a.dim):
        b = a.basis(j)
        prods = [a.multiply(b, x) for x in s.basis]
        for r in range(a.dim):
            rows.append(tuple(p[r] for p in prods))
            rhs.append(b[r])
    sol = Mat(len(rows), n, rows).solve(tuple(rhs))
    if sol is None:
        rep.finding("C.local_units", "no local unit for A inside the subalgebra")
    else:
        rep.check("C.local_units", True)
    return rep


def verify_C_structure(a: HopfStarAlgebra, C: Subspace, md: ModularData | None = None) -> VerificationReport:
    """Invariance of ``C`` under S², σ and δ, ``σ = S²`` on ``C``, and semisimplicity."""
    rep = VerificationReport(a.name)
    md = md or compute_modular_data(a)
    S2 = a.antipode @ a.antipode
    rep.check("C.S2_invariant", C.image(S2) == C, "S²(C) ≠ C")
    same = all(md.sigma.apply(c) == S2.apply(c) for c in C.basis)
    rep.check("C.sigma_invariant", C.image(md.sigma) == C and same, "σ(C) ≠ C or σ ≠ S² on C")
    Cd = Subspace.span(a.dim, (a.multiply(c, md.delta) for c in C.basis))
    dC = Subspace.span(a.dim, (a.multiply(md.delta, c) for c in C.basis))
    rep.check("C.delta_invariant", Cd == C == dC, "Cδ or δC differs from C")
    ok, info = semisimplicity(a, C)
    rep.check("C.semisimple", ok, "radical or φ-degeneracy detected", info)
    return rep


def coset_orientation(a: HopfStarAlgebra, glp: GroupLikeProjection, C: Subspace,
                      rep: VerificationReport) -> str:
    """Report whether ``C`` (function model) is spanned by ``χ_{pK}`` or ``χ_{Kp}``."""
    g, k = a.group, a.subgroup
    if a.model != "function" or g is None:
        rep.skip("C.coset_orientation", "only meaningful in the function model")
        return "n/a"
    kk = Subgroup(g, tuple(p for p in range(g.order) if glp.h[p]))

    def span_of(classes):
        return Subspace.span(a.dim, (tuple(ONE if p in c else ZERO for p in range(a.dim))
                                     for c in classes))

    left = span_of(left_cosets(g, kk).classes)
    right = span_of(right_cosets(g, kk).classes)
    if C == left and C == right:
        verdict = "f(pk)=f(p) and f(kp)=f(p)"
    elif C == left:
        verdict = "f(pk)=f(p)"
    elif C == right:
        verdict = "f(kp)=f(p)"
    else:
        verdict = "neither"
    if verdict == "neither":
        rep.check("C.coset_orientation", False, "C matches no coset family", {"dim": C.dim})
    else:
        rep.finding("C.coset_orientation", f"C consists of the functions with {verdict}",
                    {"equation": verdict})
    return verdict
