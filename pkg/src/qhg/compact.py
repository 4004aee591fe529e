"""The compact quantum hypergroup ``(hAh, Δ₀)`` and, for central ``h``, the Hopf algebra ``Ah``.

Sub-structures are presented on the canonical basis of a :class:`Subspace`
of ``A``.  Coordinates of a member ``v`` are its entries at the pivot columns,
so moving between ``A`` and the subspace is exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .duality import sample_elements
from .group import Subgroup, double_cosets
from .hopf import HopfStarAlgebra, verify_axioms
from .linalg import Mat, Subspace, Tensor2, Vec, dot, psd_pivots, vec_add, vec_scale, zero_vec
from .projection import GroupLikeProjection
from .report import EngineError, VerificationReport, register, witness_vec
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "SubStructure", "restrict", "CompactHypergroup", "build_compact_hypergroup",
    "build_central_quotient", "verify_antipode_integral_spanning", "HeckeBasis", "hecke_structure",
    "verify_hypergroup_axioms",
]

CHECKS = register({
    "hyper.dimension": "dim hAh recorded; equals the double-coset count in the group model",
    "hyper.unital": "Δ₀(h) = h⊗h",
    "hyper.coassociative": "(Δ₀⊗ι)Δ₀ = (ι⊗Δ₀)Δ₀ on every basis element of hAh",
    "hyper.positive_gram": "[(φ₀⊗φ₀)(Δ₀(b_i)*Δ₀(b_j))] is positive semidefinite",
    "hyper.positive_factorization": "Δ₀(x*x) = X*X with X = Δ(x)(h⊗h) on basis and sampled x",
    "hyper.counit": "(ε₀⊗ι)Δ₀(a) = a = (ι⊗ε₀)Δ₀(a)",
    "hyper.antipode_star": "S₀(S₀(a)*)* = a",
    "hyper.antipode_coproduct": "Δ₀(S₀(a)) = (S₀⊗S₀)Δ₀^op(a)",
    "hyper.integral_invariance": "(ι⊗φ₀)Δ₀(a) = φ₀(a)h and (ψ₀⊗ι)Δ₀(a) = ψ₀(a)h",
    "hyper.phi_eq_psi": "φ₀ = ψ₀ on hAh",
    "hyper.antipode_integral": "S₀((ι⊗φ₀)(Δ₀(a)(1⊗b))) = (ι⊗φ₀)((1⊗a)Δ₀(b)) on basis pairs",
    "hyper.spanning": "hAh = span{(ι⊗φ₀)(Δ₀(a)(1⊗b))}",
    "hyper.is_hopf": "whether Δ₀ is multiplicative on hAh",
    "hyper.antipode_law": "m(S₀⊗ι)Δ₀(a) = ε₀(a)h: holds when Δ₀ is multiplicative, witness of failure otherwise",
    "hyper.central_agrees": "for central h, (h⊗h)Δ(a)(h⊗h) = Δ(a)(h⊗h) on hAh = Ah",
    "quotient.central": "h commutes with every basis element (required for Ah)",
    "quotient.axioms": "Ah with Δ(a)(h⊗h) passes the full Hopf ∗-algebra gate",
    "quotient.dimension": "dim Ah recorded; |K| (function model) or [G:K] (group model)",
    "hecke.double_coset_invariance": "π(q) = π(q') iff KqK = Kq'K",
    "hecke.same_subspace": "span{π(q)} equals hAh computed from {h b h}",
    "hecke.product_formula": "π(q)π(q') = (1/|K|) Σ_{r∈K} π(qrq') on all representative pairs",
    "hecke.coproduct": "Δ₀(π(q)) = π(q)⊗π(q)",
    "hecke.counit": "ε₀(π(q)) = 1",
    "hecke.antipode": "S₀(π(q)) = π(q^-1)",
    "hecke.integral": "φ₀(π(q)) = 0 for q ∉ K and π(q) = h exactly for q ∈ K",
    "hecke.antipode_law_fails": "π(q^-1)π(q) ≠ h for some q when K is not normal",
    "hecke.integral_slices": "(ι⊗φ₀)(Δ₀(π(q))(1⊗π(q'))) = [π(q')=π(q^-1)]·|K∩qKq^-1|/|K|·π(q), and the mirrored slice",
})


# --------------------------------------------------------------------------
# restriction to a subspace


@dataclass(frozen=True, eq=False)
class SubStructure:
    """A coordinate algebra on a subspace of ``A`` together with its embedding."""

    algebra: HopfStarAlgebra
    space: Subspace
    parent: HopfStarAlgebra

    def coords(self, v: Vec) -> Vec:
        c = self.space.coords(v)
        if c is None:
            raise EngineError("vector does not lie in the subspace")
        return c

    def embed(self, x: Vec) -> Vec:
        out = zero_vec(self.space.ambient_dim)
        for c, b in zip(x, self.space.basis):
            if c:
                out = vec_add(out, vec_scale(c, b))
        return out

    def tensor_coords(self, t: Tensor2) -> Tensor2:
        """Coordinates of ``t ∈ V⊗V`` in the basis of the subspace (checked)."""
        piv = self.space.pivots
        m = Mat(len(piv), len(piv), [tuple(t.coeffs[i, j] for j in piv) for i in piv])
        B = self.space.as_mat()  # rows are basis vectors
        if B.transpose() @ m @ B != t.coeffs:
            raise EngineError("tensor does not lie in V⊗V")
        return Tensor2(m)

    def embed_tensor(self, t: Tensor2) -> Tensor2:
        B = self.space.as_mat()
        return Tensor2(B.transpose() @ t.coeffs @ B)


def restrict(a: HopfStarAlgebra, space: Subspace, unit: Vec,
             comult: Callable[[Vec], Tensor2], name: str, model: str) -> SubStructure:
    """Restrict product, counit, antipode, star and integrals to ``space``.

    ``comult`` computes the coproduct in ``A⊗A`` of a member; its value must
    lie in ``space⊗space``.
    """
    if space.dim == 0:
        raise EngineError("cannot restrict to the zero subspace")
    m = space.dim
    B = space.basis
    shell = SubStructure(None, space, a)  # coordinate helpers only
    co = shell.coords
    mult = tuple(tuple(co(a.multiply(x, y)) for y in B) for x in B)
    sub = HopfStarAlgebra(
        dim=m,
        labels=tuple(f"v{i}" for i in range(m)),
        mult=mult,
        unit=co(unit),
        comult=tuple(shell.tensor_coords(comult(x)) for x in B),
        counit=tuple(a.eps(x) for x in B),
        antipode=Mat.from_columns([co(a.S(x)) for x in B], rows=m),
        star=Mat.from_columns([co(a.star_of(x)) for x in B], rows=m),
        phi=tuple(a.phi_of(x) for x in B),
        psi=tuple(a.psi_of(x) for x in B),
        name=name,
        model=model,
        group=a.group,
        subgroup=a.subgroup,
    )
    return SubStructure(sub, space, a)


# --------------------------------------------------------------------------
# hAh


@dataclass(frozen=True, eq=False)
class CompactHypergroup:
    sub: SubStructure
    h: Vec
    is_hopf: bool
    report: VerificationReport

    @property
    def algebra(self) -> HopfStarAlgebra:
        return self.sub.algebra

    @property
    def dim(self) -> int:
        return self.sub.space.dim


def _first(pred, items):
    for it in items:
        if not pred(it):
            return it
    return None


def verify_hypergroup_axioms(s: HopfStarAlgebra, rep: VerificationReport,
                             factorization: Callable[[Vec], bool] | None = None,
                             prefix: str = "hyper") -> bool:
    """Check the hypergroup properties on a coordinate algebra.

    Check ids are ``{prefix}.<name>``.  Returns whether the coproduct is
    multiplicative.
    """
    m = s.dim
    E = [s.basis(i) for i in range(m)]
    one = s.unit
    rep.check(f"{prefix}.unital", s.comultiply(one) == Tensor2.simple(one, one), "Δ₀(h) ≠ h⊗h")
    bad = _first(lambda i: s.comult2(E[i]) == s.comult2_right(E[i]), range(m))
    rep.check(f"{prefix}.coassociative", bad is None, "coassociativity fails", {"basis": [bad]})

    tens = [s.comult[i] for i in range(m)]
    phi2 = [[ZERO] * m for _ in range(m)]
    stars = [s.tensor_star(t) for t in tens]
    P = s.phi_matrix
    for i in range(m):
        for j in range(m):
            prod = s.tensor_mul(stars[i], tens[j])
            # (φ⊗φ)(t) = φᵀ C φ
            phi2[i][j] = dot(s.phi, prod.coeffs.apply(s.phi))
    ok, _, wit = psd_pivots(Mat.from_rows(phi2))
    rep.check(f"{prefix}.positive_gram", ok, "Gram proxy is not PSD", {"basis": list(wit) if wit else None})
    if factorization is not None:
        samples = E + list(sample_elements(m, 5, seed=11))
        bad = _first(factorization, samples)
        rep.check(f"{prefix}.positive_factorization", bad is None, "Δ₀(x*x) ≠ X*X",
                  {"element": witness_vec(bad) if bad else None})

    bad = _first(lambda i: s.slice_left(tens[i], s.counit) == E[i] == s.slice_right(tens[i], s.counit),
                 range(m))
    rep.check(f"{prefix}.counit", bad is None, "counit law fails", {"basis": [bad]})
    bad = _first(lambda i: s.star_of(s.S(s.star_of(s.S(E[i])))) == E[i], range(m))
    rep.check(f"{prefix}.antipode_star", bad is None, "S₀(S₀(a)*)* ≠ a", {"basis": [bad]})
    bad = _first(lambda i: s.comultiply(s.S(E[i])) == tens[i].flip().map_legs(s.antipode, s.antipode),
                 range(m))
    rep.check(f"{prefix}.antipode_coproduct", bad is None, "Δ₀S₀ ≠ (S₀⊗S₀)Δ₀^op", {"basis": [bad]})
    bad = _first(lambda i: s.slice_right(tens[i], s.phi) == vec_scale(s.phi[i], one)
                 and s.slice_left(tens[i], s.psi) == vec_scale(s.psi[i], one), range(m))
    rep.check(f"{prefix}.integral_invariance", bad is None, "integrals are not invariant", {"basis": [bad]})
    rep.check(f"{prefix}.phi_eq_psi", s.phi == s.psi, "φ₀ ≠ ψ₀")

    mult_ok = True
    for i in range(m):
        for j in range(m):
            if s.comultiply(s.multiply(E[i], E[j])) != s.tensor_mul(tens[i], tens[j]):
                mult_ok = False
                break
        if not mult_ok:
            break
    rep.finding(f"{prefix}.is_hopf", "true" if mult_ok else "false", {"value": mult_ok})

    def law(i):
        t = tens[i]
        target = vec_scale(s.counit[i], one)
        return (s.multiply_legs(t.map_legs(s.antipode, None)) == target
                and s.multiply_legs(t.map_legs(None, s.antipode)) == target)

    bad = _first(law, range(m))
    if mult_ok:
        rep.check(f"{prefix}.antipode_law", bad is None, "antipode law fails although Δ₀ is multiplicative",
                  {"basis": [bad]})
    else:
        rep.finding(f"{prefix}.antipode_law",
                    "fails as expected" if bad is not None else "holds on the basis",
                    {"basis": [bad], "fails": bad is not None})
    return mult_ok


def verify_antipode_integral_spanning(s: HopfStarAlgebra, rep: VerificationReport | None = None,
                            ids: tuple[str, str] = ("hyper.antipode_integral", "hyper.spanning"),
                            ) -> VerificationReport:
    """Antipode–integral identity on basis pairs and spanning by integral slices."""
    rep = rep if rep is not None else VerificationReport(s.name)
    m = s.dim
    P = s.phi_matrix
    slices = []
    bad = None
    for i in range(m):
        X = s.comult[i].coeffs @ P
        for j in range(m):
            x = X.col(j)
            slices.append(x)
            if bad is None and s.S(x) != s.comult[j].coeffs.apply(P.row(i)):
                bad = [i, j]
    rep.check(ids[0], bad is None, "antipode–integral identity fails", {"basis": bad})
    span = Subspace.span(m, slices)
    rep.check(ids[1], span.dim == m, "slices do not span", {"dim": span.dim})
    return rep


def build_compact_hypergroup(a: HopfStarAlgebra, glp: GroupLikeProjection) -> CompactHypergroup:
    h = glp.h
    H = a.left_mult_matrix(h)
    Hr = a.right_mult_matrix(h)
    space = Subspace.span(a.dim, (a.multiply(a.multiply(h, a.basis(i)), h) for i in range(a.dim)))

    def delta0(x: Vec) -> Tensor2:
        return a.comultiply(x).map_legs(H, H).map_legs(Hr, Hr)

    sub = restrict(a, space, h, delta0, f"hAh({a.name})", "hypergroup")
    rep = VerificationReport(sub.algebra.name)
    detail = {"dim": space.dim}
    if a.model == "group" and a.group is not None:
        nd = len(double_cosets(a.group, _support_subgroup(a, h)))
        detail["double_cosets"] = nd
        rep.check("hyper.dimension", nd == space.dim, "dim hAh ≠ #(K\\G/K)", detail)
    elif a.model == "function" and a.group is not None:
        nk = sum(1 for c in h if c)
        detail["subgroup_order"] = nk
        rep.check("hyper.dimension", nk == space.dim, "dim hAh ≠ |K|", detail)
    else:
        rep.finding("hyper.dimension", f"dim hAh = {space.dim}", detail)

    s = sub.algebra

    def factor(x: Vec) -> bool:
        xa = sub.embed(x)
        X = a.comultiply(xa).map_legs(Hr, Hr)
        lhs = delta0(a.multiply(a.star_of(xa), xa))
        return lhs == a.tensor_mul(a.tensor_star(X), X)

    is_hopf = verify_hypergroup_axioms(s, rep, factor)
    verify_antipode_integral_spanning(s, rep)
    central = all(a.multiply(h, a.basis(i)) == a.multiply(a.basis(i), h) for i in range(a.dim))
    if central:
        agrees = all(a.comultiply(x).map_legs(Hr, Hr) == delta0(x) for x in space.basis)
        rep.check("hyper.central_agrees", agrees and is_hopf,
                  "cut-down differs from Δ(a)(h⊗h) or Δ₀ not multiplicative")
    return CompactHypergroup(sub, h, is_hopf, rep)


def _support_subgroup(a: HopfStarAlgebra, h: Vec) -> Subgroup:
    return Subgroup(a.group, tuple(p for p in range(a.dim) if h[p]))


def build_central_quotient(a: HopfStarAlgebra, glp: GroupLikeProjection) -> tuple[SubStructure, VerificationReport]:
    """``Ah`` with ``Δ₀(a) = Δ(a)(h⊗h)`` and ``φ₀ = ψ₀ = φ|``; certified by the full axiom gate."""
    h = glp.h
    rep = VerificationReport(f"Ah({a.name})")
    central = all(a.multiply(h, a.basis(i)) == a.multiply(a.basis(i), h) for i in range(a.dim))
    rep.check("quotient.central", central, "h is not central")
    if not central:
        raise EngineError("build_central_quotient needs a central group-like projection")
    Hr = a.right_mult_matrix(h)
    space = Subspace.span(a.dim, (a.multiply(a.basis(i), h) for i in range(a.dim)))
    sub = restrict(a, space, h, lambda x: a.comultiply(x).map_legs(Hr, Hr), f"Ah({a.name})", "quotient")
    s = sub.algebra
    phi0 = tuple(a.phi_of(x) for x in space.basis)
    sub = SubStructure(s.with_integrals(phi0, phi0), space, a)
    ax = verify_axioms(sub.algebra)
    rep.check("quotient.axioms", ax.ok, "; ".join(ax.summary_lines()))
    rep.finding("quotient.dimension", f"dim Ah = {space.dim}", {"dim": space.dim})
    rep.extend(ax, "axioms")
    if not ax.ok:
        raise EngineError("Ah fails the Hopf axioms: " + "; ".join(ax.summary_lines()))
    return sub, rep


# --------------------------------------------------------------------------
# Hecke basis


@dataclass(frozen=True, eq=False)
class HeckeBasis:
    reps: tuple[int, ...]
    pi: dict[int, Vec]
    structure: dict[tuple[int, int], dict[int, Scalar]]
    report: VerificationReport


def hecke_structure(a: HopfStarAlgebra, glp: GroupLikeProjection,
                    hyper: CompactHypergroup | None = None) -> HeckeBasis:
    if a.model != "group" or a.group is None:
        raise ValueError("the Hecke basis is defined for group-algebra models")
    g = a.group
    h = glp.h
    k = _support_subgroup(a, h)
    n = k.order
    rep = VerificationReport(f"hecke({a.name})")
    hyper = hyper or build_compact_hypergroup(a, glp)
    sub = hyper.sub
    s = sub.algebra

    pi_all = {q: a.multiply(a.multiply(h, a.basis(q)), h) for q in range(g.order)}
    dc = double_cosets(g, k)
    reps = tuple(c[0] for c in dc.classes)
    bad = None
    for q in range(g.order):
        for q2 in range(q + 1, g.order):
            if (pi_all[q] == pi_all[q2]) != (dc.class_of(q) == dc.class_of(q2)):
                bad = [q, q2]
                break
        if bad:
            break
    rep.check("hecke.double_coset_invariance", bad is None, "π does not separate double cosets",
              {"pair": bad})
    span = Subspace.span(a.dim, (pi_all[r] for r in reps))
    rep.check("hecke.same_subspace", span == sub.space and span.dim == len(reps),
              "π basis spans a different space", {"dims": [span.dim, sub.space.dim]})

    pi_mat = Mat.from_columns([pi_all[r] for r in reps], rows=a.dim)
    structure: dict[tuple[int, int], dict[int, Scalar]] = {}
    w = Scalar(1) / n
    bad = None
    for q in reps:
        for q2 in reps:
            prod = a.multiply(pi_all[q], pi_all[q2])
            formula = zero_vec(a.dim)
            for r in k.elements:
                formula = vec_add(formula, pi_all[g.prod(q, r, q2)])
            formula = vec_scale(w, formula)
            if prod != formula and bad is None:
                bad = [q, q2]
            coeffs = pi_mat.solve(prod)
            if coeffs is None:
                raise EngineError("product leaves the Hecke algebra")
            structure[(q, q2)] = {reps[i]: c for i, c in enumerate(coeffs) if c}
    rep.check("hecke.product_formula", bad is None, "product formula fails", {"pair": bad})

    Hm, Hr = a.left_mult_matrix(h), a.right_mult_matrix(h)

    def delta0(x):
        return a.comultiply(x).map_legs(Hm, Hm).map_legs(Hr, Hr)

    bad = _first(lambda q: delta0(pi_all[q]) == Tensor2.simple(pi_all[q], pi_all[q]), reps)
    rep.check("hecke.coproduct", bad is None, "Δ₀(π(q)) ≠ π(q)⊗π(q)", {"q": bad})
    bad = _first(lambda q: a.eps(pi_all[q]) == ONE, reps)
    rep.check("hecke.counit", bad is None, "ε₀(π(q)) ≠ 1", {"q": bad})
    bad = _first(lambda q: a.S(pi_all[q]) == pi_all[g.inverse[q]], range(g.order))
    rep.check("hecke.antipode", bad is None, "S₀(π(q)) ≠ π(q^-1)", {"q": bad})
    bad = _first(lambda q: ((q in k) == (pi_all[q] == h))
                 and (q in k or a.phi_of(pi_all[q]) == ZERO), range(g.order))
    rep.check("hecke.integral", bad is None, "integral pattern of π(q) is wrong", {"q": bad})

    failing = next((q for q in range(g.order)
                    if a.multiply(pi_all[g.inverse[q]], pi_all[q]) != h), None)
    if failing is None:
        rep.finding("hecke.antipode_law_fails", "π(q^-1)π(q) = h for all q", {"q": None})
    else:
        rep.finding("hecke.antipode_law_fails", "π(q^-1)π(q) ≠ h", {"q": failing, "label": g.label(failing)})

    # slices with φ normalized so that φ(h) = 1
    c = a.phi_of(h).inverse()
    bad = None
    kset = set(k.elements)
    for q in reps:
        for q2 in reps:
            paired = dc.class_of(q2) == dc.class_of(g.inverse[q])
            inter = sum(1 for x in k.elements if g.prod(q, x, g.inverse[q]) in kset)
            scale = Scalar(Fraction(inter, n)) if paired else ZERO
            t = delta0(pi_all[q])
            lhs = vec_scale(c, a.slice_right(t.map_legs(None, a.right_mult_matrix(pi_all[q2])), a.phi))
            t2 = delta0(pi_all[q2]).map_legs(None, a.left_mult_matrix(pi_all[q]))
            lhs2 = vec_scale(c, a.slice_right(t2, a.phi))
            inter2 = sum(1 for x in k.elements if g.prod(q2, x, g.inverse[q2]) in kset)
            scale2 = Scalar(Fraction(inter2, n)) if paired else ZERO
            if lhs != vec_scale(scale, pi_all[q]) or lhs2 != vec_scale(scale2, pi_all[q2]):
                if bad is None:
                    bad = [q, q2]
    rep.check("hecke.integral_slices", bad is None, "slice formula fails", {"pair": bad})
    return HeckeBasis(reps, {r: pi_all[r] for r in reps}, structure, rep)
