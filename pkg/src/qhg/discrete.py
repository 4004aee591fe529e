"""Conditional expectations, the algebra ``C₁ = C ∩ S(C)`` and the discrete hypergroup ``(C₁, Δ₁)``.

``E`` and ``E'`` are stored as matrices on ``A``.  The integrals are rescaled
locally so that ``φ(h) = ψ(h) = 1``; the algebra itself is not modified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compact import SubStructure, build_compact_hypergroup, restrict, verify_hypergroup_axioms, \
    verify_antipode_integral_spanning
from .duality import DualPair
from .hopf import HopfStarAlgebra, ModularData, compute_modular_data, cointegral_space, verify_axioms
from .legs import is_left_invariant_subalgebra, left_leg_of, right_leg_of, semisimplicity
from .linalg import Mat, Subspace, Tensor2, Vec, col_space, psd_pivots, row_space, vec_scale
from .projection import GroupLikeProjection, fourier_projection, is_below
from .report import EngineError, VerificationReport, register, witness_vec
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Expectations", "build_expectations", "C1Algebra", "build_C1", "DiscreteHypergroup",
    "build_discrete_hypergroup", "GateResult", "discrete_type_gate", "verify_leg_monotonicity",
    "verify_left_invariance",
]

CHECKS = register({
    "E.unital": "E(1) = 1 and E'(1) = 1",
    "E.idempotent": "E² = E and E'² = E'",
    "E.image": "E(A) = C and E'(A) = S(C)",
    "E.bimodule": "E(cx) = cE(x), E(xc) = E(x)c for c ∈ C, and likewise E' over S(C)",
    "E.faithful_positive": "[φ(E(b_i* b_j))] and [ψ(E'(b_i* b_j))] are positive definite",
    "E.antipode_exchange": "E∘S = S∘E'",
    "E.commute": "E∘E' = E'∘E",
    "E.composite_image": "E(E'(A)) = C ∩ S(C)",
    "E.integrals_invariant": "φ∘E = φ, ψ∘E = ψ, φ∘E' = φ and ψ∘E' = ψ",
    "E.closed_form": "function model: E(f)(p) = (1/|K|)Σ_k f(pk) and E'(f)(p) = (1/|K|)Σ_k f(kp)",
    "C1.star_subalgebra": "C₁ is closed under product and ∗",
    "C1.antipode_invariant": "S(C₁) = C₁",
    "C1.contains_h": "h ∈ C₁",
    "C1.contains_unit": "1 ∈ C₁",
    "C1.S2_sigma": "S²(C₁) = C₁, σ = S² on C₁, and σ(C₁) = σ'(C₁) = C₁",
    "C1.delta_invariant": "C₁δ = δC₁ = C₁",
    "C1.semisimple": "φ is faithful on C₁ and its trace form is nondegenerate",
    "C1.dimension": "dim C₁ equals #(K\\G/K) (function model) or |K| (group model)",
    "disc.two_formulas": "(E⊗ι)Δ = (ι⊗E')Δ on every basis element of A",
    "disc.slice_formula": "Δ₁(a) = (ι⊗φ₀⊗ι)Δ⁽²⁾(a) with φ₀ = φ(h·h), on every basis element of A",
    "disc.closure": "Δ₁(C₁) ⊆ C₁⊗C₁",
    "disc.unital": "Δ₁(1) = 1⊗1",
    "disc.coassociative": "(Δ₁⊗ι)Δ₁ = (ι⊗Δ₁)Δ₁ on C₁",
    "disc.positive_gram": "[(φ⊗φ)(Δ₁(c_i)*Δ₁(c_j))] is positive semidefinite on C₁",
    "disc.counit": "(ε⊗ι)Δ₁(a) = a = (ι⊗ε)Δ₁(a) on C₁",
    "disc.antipode_star": "S(S(a)*)* = a on C₁",
    "disc.antipode_coproduct": "Δ₁(S(a)) = (S⊗S)Δ₁^op(a) on C₁",
    "disc.integral_invariance": "(ι⊗φ)Δ₁(a) = φ(a)1 and (ψ⊗ι)Δ₁(a) = ψ(a)1 on C₁",
    "disc.phi_eq_psi": "φ = ψ on C₁",
    "disc.is_hopf": "whether Δ₁ is multiplicative on C₁",
    "disc.antipode_law": "m(S⊗ι)Δ₁(a) = ε(a)1 on C₁: required when Δ₁ is multiplicative, recorded otherwise",
    "disc.antipode_integral": "S((ι⊗φ)(Δ₁(a)(1⊗b))) = (ι⊗φ)((1⊗a)Δ₁(b)) on basis pairs of C₁",
    "disc.spanning": "C₁ = span{(ι⊗φ)(Δ₁(a)(1⊗b))}",
    "disc.cointegral": "ah = ε(a)h = ha for every a ∈ C₁",
    "disc.closed_form": "function model: Δ₁(f)(p,q) = (1/|K|)Σ_k f(pkq)",
    "disc.equals_delta_on_C": "when the legs of Δ(h) coincide, Δ₁ = Δ on C",
    "disc.dual_dimension": "dim C₁ equals dim kBk for the dual projection k",
    "gate.legs": "whether the two legs of Δ(h) coincide",
    "gate.hopf_axioms": "C with the restricted coproduct passes the full Hopf ∗-algebra gate",
    "gate.cointegral": "h is a two-sided co-integral of C",
    "gate.discrete_type": "C admits a nonzero co-integral",
    "gate.coproduct_escapes": "when the legs differ, some c ∈ C has Δ(c) ∉ C⊗C",
    "gate.antipode_law_witness": "when the legs differ, some a ∈ C₁ has m(S⊗ι)Δ₁(a) ≠ ε(a)1",
    "gate.verdict": "discrete quantum group or hypergroup only",
})


def _first(pred, items):
    for it in items:
        if not pred(it):
            return it
    return None


def _pos_def(m: Mat) -> tuple[bool, dict]:
    ok, piv, wit = psd_pivots(m)
    full = ok and len(piv) == m.rows and all(piv)
    return full, {"psd": ok, "witness": list(wit) if wit else None}


# --------------------------------------------------------------------------
# conditional expectations


@dataclass(frozen=True, eq=False)
class Expectations:
    parent: HopfStarAlgebra
    h: Vec
    E: Mat
    E_prime: Mat
    C: Subspace
    SC: Subspace
    report: VerificationReport

    def apply(self, x: Vec) -> Vec:
        return self.E.apply(x)

    def apply_prime(self, x: Vec) -> Vec:
        return self.E_prime.apply(x)


def _closed_form_expectations(a: HopfStarAlgebra, h: Vec) -> tuple[Mat, Mat]:
    g = a.group
    k = [p for p in range(a.dim) if h[p]]
    w = Scalar(Fraction(1, len(k)))
    E = [[ZERO] * a.dim for _ in range(a.dim)]
    Ep = [[ZERO] * a.dim for _ in range(a.dim)]
    # E(δ_g)(p) = (1/|K|)·#{k : pk = g}
    for p in range(a.dim):
        for q in k:
            E[p][g.mul(p, q)] = E[p][g.mul(p, q)] + w
            Ep[p][g.mul(q, p)] = Ep[p][g.mul(q, p)] + w
    return Mat.from_rows(E), Mat.from_rows(Ep)


def build_expectations(a: HopfStarAlgebra, glp: GroupLikeProjection) -> Expectations:
    """``E(x) = (ι⊗φ)(Δ(x)(1⊗h))`` and ``E'(x) = (ψ⊗ι)(Δ(x)(h⊗1))``."""
    h = glp.h
    ph, qh = a.phi_of(h), a.psi_of(h)
    if not ph or not qh:
        raise EngineError("integrals vanish on h")
    phi = vec_scale(ph.inverse(), a.phi)
    psi = vec_scale(qh.inverse(), a.psi)
    d = a.dim
    B = [a.basis(i) for i in range(d)]
    E = Mat.from_columns([a.slice_right(a.tensor_times(a.comultiply(x), None, h), phi) for x in B], rows=d)
    Ep = Mat.from_columns([a.slice_left(a.tensor_times(a.comultiply(x), h, None), psi) for x in B], rows=d)
    C = right_leg_of(a, h)
    SC = left_leg_of(a, h)
    rep = VerificationReport(a.name)
    one = a.unit
    rep.check("E.unital", E.apply(one) == one == Ep.apply(one), "E(1) or E'(1) ≠ 1")
    rep.check("E.idempotent", E @ E == E and Ep @ Ep == Ep, "E or E' is not idempotent")
    imE = Subspace.span(d, E.columns())
    imEp = Subspace.span(d, Ep.columns())
    rep.check("E.image", imE == C and imEp == SC, "images differ from C and S(C)",
              {"dims": [imE.dim, C.dim, imEp.dim, SC.dim]})

    def bimod(M, space):
        for c in space.basis:
            for x in B:
                if M.apply(a.multiply(c, x)) != a.multiply(c, M.apply(x)):
                    return False
                if M.apply(a.multiply(x, c)) != a.multiply(M.apply(x), c):
                    return False
        return True

    rep.check("E.bimodule", bimod(E, C) and bimod(Ep, SC), "bimodule property fails")
    gE = Mat(d, d, [tuple(a.phi_of(E.apply(a.multiply(a.star_of(x), y))) for y in B) for x in B])
    gEp = Mat(d, d, [tuple(a.psi_of(Ep.apply(a.multiply(a.star_of(x), y))) for y in B) for x in B])
    ok1, w1 = _pos_def(gE)
    ok2, w2 = _pos_def(gEp)
    rep.check("E.faithful_positive", ok1 and ok2, "Gram form is not positive definite",
              {"E": w1, "E_prime": w2})
    S = a.antipode
    rep.check("E.antipode_exchange", E @ S == S @ Ep, "E∘S ≠ S∘E'")
    rep.check("E.commute", E @ Ep == Ep @ E, "E and E' do not commute")
    comp = Subspace.span(d, (E @ Ep).columns())
    C1 = C.intersect(SC)
    rep.check("E.composite_image", comp == C1, "E(E'(A)) ≠ C ∩ S(C)", {"dims": [comp.dim, C1.dim]})
    inv = all(a.phi_of(E.apply(x)) == a.phi_of(x) and a.psi_of(E.apply(x)) == a.psi_of(x)
              and a.phi_of(Ep.apply(x)) == a.phi_of(x) and a.psi_of(Ep.apply(x)) == a.psi_of(x)
              for x in B)
    rep.check("E.integrals_invariant", inv, "integrals are not invariant under E or E'")
    if a.model == "function" and a.group is not None:
        cE, cEp = _closed_form_expectations(a, h)
        rep.check("E.closed_form", cE == E and cEp == Ep, "closed forms disagree")
    else:
        rep.skip("E.closed_form", "closed form only available in the function model")
    return Expectations(a, h, E, Ep, C, SC, rep)


# --------------------------------------------------------------------------
# C₁


@dataclass(frozen=True, eq=False)
class C1Algebra:
    space: Subspace
    report: VerificationReport


def build_C1(a: HopfStarAlgebra, glp: GroupLikeProjection, ex: Expectations,
             md: ModularData | None = None) -> C1Algebra:
    md = md or compute_modular_data(a)
    C1 = ex.C.intersect(ex.SC)
    rep = VerificationReport(a.name)
    closed = all(a.star_of(x) in C1 for x in C1.basis) and all(
        a.multiply(x, y) in C1 for x in C1.basis for y in C1.basis)
    rep.check("C1.star_subalgebra", closed, "C₁ is not a ∗-subalgebra")
    rep.check("C1.antipode_invariant", C1.image(a.antipode) == C1, "S(C₁) ≠ C₁")
    rep.check("C1.contains_h", glp.h in C1, "h ∉ C₁")
    rep.check("C1.contains_unit", a.unit in C1, "1 ∉ C₁")
    S2 = a.antipode @ a.antipode
    same = all(md.sigma.apply(c) == S2.apply(c) for c in C1.basis)
    rep.check("C1.S2_sigma",
              C1.image(S2) == C1 and same and C1.image(md.sigma) == C1 == C1.image(md.sigma_prime),
              "S², σ or σ' does not preserve C₁, or σ ≠ S² there")
    Cd = Subspace.span(a.dim, (a.multiply(c, md.delta) for c in C1.basis))
    dC = Subspace.span(a.dim, (a.multiply(md.delta, c) for c in C1.basis))
    rep.check("C1.delta_invariant", Cd == C1 == dC, "C₁δ or δC₁ differs from C₁")
    ok, info = semisimplicity(a, C1)
    rep.check("C1.semisimple", ok, "C₁ is not semisimple", info)
    g = a.group
    if g is not None and a.model in ("function", "group"):
        from .group import Subgroup, double_cosets
        K = Subgroup(g, tuple(p for p in range(a.dim) if glp.h[p]))
        want = len(double_cosets(g, K)) if a.model == "function" else K.order
        rep.check("C1.dimension", C1.dim == want, "unexpected dim C₁", {"dim": C1.dim, "expected": want})
    else:
        rep.finding("C1.dimension", f"dim C₁ = {C1.dim}", {"dim": C1.dim})
    return C1Algebra(C1, rep)


# --------------------------------------------------------------------------
# (C₁, Δ₁)


@dataclass(frozen=True, eq=False)
class DiscreteHypergroup:
    sub: SubStructure
    expectations: Expectations
    is_hopf: bool
    report: VerificationReport

    @property
    def algebra(self) -> HopfStarAlgebra:
        return self.sub.algebra

    @property
    def dim(self) -> int:
        return self.sub.space.dim

    def delta1(self, x: Vec) -> Tensor2:
        """``Δ₁`` on all of ``A``."""
        a = self.expectations.parent
        return a.comultiply(x).map_legs(self.expectations.E, None)


def _slice_formula(a: HopfStarAlgebra, h: Vec, x: Vec) -> Tensor2:
    w = [a.phi_of(a.multiply(a.multiply(h, a.basis(j)), h)) / a.phi_of(h) for j in range(a.dim)]
    items = {}
    for (i, j, k), c in a.comult2(x).items():
        if w[j]:
            items[i, k] = items.get((i, k), ZERO) + c * w[j]
    return Tensor2.from_items(a.dim, items)


def _closed_form_delta1(a: HopfStarAlgebra, h: Vec, g_idx: int) -> Tensor2:
    g = a.group
    k = [p for p in range(a.dim) if h[p]]
    w = Scalar(Fraction(1, len(k)))
    items = {}
    for p in range(a.dim):
        for q in range(a.dim):
            n = sum(1 for r in k if g.prod(p, r, q) == g_idx)
            if n:
                items[p, q] = w * n
    return Tensor2.from_items(a.dim, items)


def build_discrete_hypergroup(a: HopfStarAlgebra, glp: GroupLikeProjection, ex: Expectations,
                              c1: C1Algebra, pair: DualPair | None = None,
                              legs_equal: bool | None = None) -> DiscreteHypergroup:
    h = glp.h
    E, Ep = ex.E, ex.E_prime
    d = a.dim
    B = [a.basis(i) for i in range(d)]
    rep = VerificationReport(f"C1({a.name})")

    def delta1(x: Vec) -> Tensor2:
        return a.comultiply(x).map_legs(E, None)

    bad = _first(lambda x: delta1(x) == a.comultiply(x).map_legs(None, Ep), B)
    rep.check("disc.two_formulas", bad is None, "(E⊗ι)Δ ≠ (ι⊗E')Δ",
              {"element": witness_vec(bad) if bad else None})
    bad = _first(lambda x: delta1(x) == _slice_formula(a, h, x), B)
    rep.check("disc.slice_formula", bad is None, "Δ₁ differs from the φ₀-slice of Δ⁽²⁾",
              {"element": witness_vec(bad) if bad else None})
    if a.model == "function" and a.group is not None:
        bad = _first(lambda i: delta1(B[i]) == _closed_form_delta1(a, h, i), range(d))
        rep.check("disc.closed_form", bad is None, "closed form disagrees", {"basis": [bad]})
    else:
        rep.skip("disc.closed_form", "closed form only available in the function model")

    C1 = c1.space
    try:
        sub = restrict(a, C1, a.unit, delta1, f"C1({a.name})", "hypergroup")
    except EngineError as exc:
        rep.check("disc.closure", False, str(exc))
        raise EngineError("Δ₁ does not map C₁ into C₁⊗C₁") from exc
    rep.check("disc.closure", True)
    s = sub.algebra
    is_hopf = verify_hypergroup_axioms(s, rep, None, prefix="disc")
    verify_antipode_integral_spanning(s, rep, ("disc.antipode_integral", "disc.spanning"))
    bad = _first(lambda c: a.multiply(c, h) == vec_scale(a.eps(c), h) == a.multiply(h, c), C1.basis)
    rep.check("disc.cointegral", bad is None, "h is not a two-sided co-integral on C₁",
              {"element": witness_vec(bad) if bad else None})

    if legs_equal is None:
        legs_equal = ex.C == ex.SC
    if legs_equal:
        bad = _first(lambda c: delta1(c) == a.comultiply(c), ex.C.basis)
        rep.check("disc.equals_delta_on_C", bad is None, "Δ₁ ≠ Δ on C",
                  {"element": witness_vec(bad) if bad else None})
    else:
        rep.skip("disc.equals_delta_on_C", "legs differ")

    if pair is not None:
        k = fourier_projection(pair, glp)
        dual_dim = build_compact_hypergroup(pair.b_side, k).dim
        rep.check("disc.dual_dimension", dual_dim == C1.dim, "dim C₁ ≠ dim kBk",
                  {"C1": C1.dim, "kBk": dual_dim})
    else:
        rep.skip("disc.dual_dimension", "no dual pair supplied")
    return DiscreteHypergroup(sub, ex, is_hopf, rep)


# --------------------------------------------------------------------------
# the gate


@dataclass(frozen=True, eq=False)
class GateResult:
    verdict: str
    legs_equal: bool
    hopf: SubStructure | None
    witness: dict
    report: VerificationReport


def _in_tensor_square(t: Tensor2, s: Subspace) -> bool:
    return row_space(t) <= s and col_space(t) <= s


def discrete_type_gate(a: HopfStarAlgebra, glp: GroupLikeProjection, ex: Expectations,
                     disc: DiscreteHypergroup | None = None) -> GateResult:
    """Decide whether ``C`` is a discrete quantum group or only carries the hypergroup ``(C₁, Δ₁)``."""
    h = glp.h
    C = ex.C
    legs_equal = C == ex.SC
    rep = VerificationReport(a.name)
    rep.finding("gate.legs", "equal" if legs_equal else "different", {"value": legs_equal})
    if legs_equal:
        sub = restrict(a, C, a.unit, a.comultiply, f"C({a.name})", "quotient")
        ax = verify_axioms(sub.algebra)
        rep.check("gate.hopf_axioms", ax.ok, "; ".join(ax.summary_lines()))
        rep.extend(ax, "C")
        bad = _first(lambda c: a.multiply(c, h) == vec_scale(a.eps(c), h) == a.multiply(h, c), C.basis)
        rep.check("gate.cointegral", bad is None, "h is not a co-integral of C",
                  {"element": witness_vec(bad) if bad else None})
        co = cointegral_space(sub.algebra)
        rep.check("gate.discrete_type", co.dim > 0, "no co-integral in C", {"dim": co.dim})
        verdict = "discrete quantum group"
        rep.finding("gate.verdict", verdict, {"dim_C": C.dim})
        return GateResult(verdict, True, sub, {}, rep)

    escape = next((c for c in C.basis if not _in_tensor_square(a.comultiply(c), C)), None)
    rep.check("gate.coproduct_escapes", escape is not None, "Δ(C) ⊆ C⊗C although the legs differ",
              None if escape is None else {"element": witness_vec(escape)})
    C1 = disc.sub.space if disc is not None else C.intersect(ex.SC)
    S = a.antipode

    def law_holds(x: Vec) -> bool:
        t = a.comultiply(x).map_legs(ex.E, None)
        return a.multiply_legs(t.map_legs(S, None)) == vec_scale(a.eps(x), a.unit)

    candidates = [h] + list(C1.basis)
    wit = next((x for x in candidates if not law_holds(x)), None)
    witness = {}
    if wit is not None:
        t = a.comultiply(wit).map_legs(ex.E, None)
        witness = {"element": witness_vec(wit),
                   "m(S⊗ι)Δ₁(a)": witness_vec(a.multiply_legs(t.map_legs(S, None))),
                   "ε(a)": a.eps(wit)}
    rep.check("gate.antipode_law_witness", wit is not None,
              "antipode law holds on C₁ although the legs differ", witness or None)
    verdict = "hypergroup only"
    rep.finding("gate.verdict", verdict, witness)
    return GateResult(verdict, False, None, witness, rep)


# --------------------------------------------------------------------------
# properties of C tied to other projections


def verify_left_invariance(a: HopfStarAlgebra, C: Subspace, rep: VerificationReport) -> bool:
    ok, wit = is_left_invariant_subalgebra(a, C)
    rep.check("C.left_invariant", ok, "C is not a left-invariant ∗-subalgebra", wit or None)
    return ok


def verify_leg_monotonicity(a: HopfStarAlgebra, g1: GroupLikeProjection, g2: GroupLikeProjection,
                            rep: VerificationReport) -> None:
    """``h ≤ h'`` implies ``C_{h'} ⊆ C_h``."""
    if not is_below(a, g1.h, g2.h):
        rep.skip("C.monotone", "projections are not comparable")
        return
    c1, c2 = right_leg_of(a, g1.h), right_leg_of(a, g2.h)
    rep.check("C.monotone", c2 <= c1, "C_{h'} ⊄ C_h", {"dims": [c1.dim, c2.dim]})
