"""Finite-dimensional Hopf ∗-algebras given by structure constants.

Everything is concrete coordinates: an element is a :data:`~qhg.linalg.Vec`
in the basis ``b_0 .. b_{d-1}``, the product is a table of vectors, and the
coproduct of each basis element is a :class:`~qhg.linalg.Tensor2`.  The star
is conjugate linear: ``x* = Star · conj(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Sequence

from .group import FiniteGroup, Subgroup
from .linalg import (
    Mat, SingularMatrixError, Subspace, Tensor2, Vec, densify, dot, psd_pivots, rank_of_rows,
    sparse, unit_vec, vec_add, vec_conj, vec_is_zero, vec_scale, vec_sub, zero_vec,
)
from .report import EngineError, VerificationReport, register, witness_vec
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "HopfStarAlgebra", "Element", "ModularData",
    "build_function_algebra", "build_group_algebra", "verify_axioms",
    "compute_modular_data", "verify_modular_data", "cointegral_space",
]

CHECKS = register({
    "hopf.unit": "1·b = b·1 = b for every basis element b",
    "hopf.associativity": "(b_i b_j) b_k = b_i (b_j b_k) on all basis triples",
    "hopf.coassociativity": "(Δ⊗ι)Δ(b) = (ι⊗Δ)Δ(b) on every basis element",
    "hopf.counit": "(ε⊗ι)Δ(b) = b = (ι⊗ε)Δ(b) on every basis element",
    "hopf.comult_multiplicative": "Δ(b_i b_j) = Δ(b_i)Δ(b_j) and Δ(1) = 1⊗1",
    "hopf.counit_multiplicative": "ε(b_i b_j) = ε(b_i)ε(b_j) and ε(1) = 1",
    "hopf.antipode_law": "m(S⊗ι)Δ(b) = ε(b)1 = m(ι⊗S)Δ(b) on every basis element",
    "hopf.antipode_anti": "S(b_i b_j) = S(b_j)S(b_i) and Δ(S b) = (S⊗S)Δ^op(b)",
    "hopf.star_involution": "the star is a conjugate-linear involutive anti-automorphism",
    "hopf.star_comult": "Δ(b*) = Δ(b)^(*⊗*) and ε(b*) = conj ε(b)",
    "hopf.star_antipode": "S(b*) = (S^-1(b))* on every basis element",
    "hopf.T1_bijective": "a⊗b ↦ Δ(a)(1⊗b) is a bijection of A⊗A",
    "hopf.T2_bijective": "a⊗b ↦ (a⊗1)Δ(b) is a bijection of A⊗A",
    "hopf.left_integral": "φ ≠ 0 and (ι⊗φ)Δ(b) = φ(b)1 on every basis element",
    "hopf.right_integral": "ψ ≠ 0 and (ψ⊗ι)Δ(b) = ψ(b)1 on every basis element",
    "hopf.faithful_phi": "the Gram matrix [φ(b_i* b_j)] has full rank",
    "hopf.faithful_psi": "the Gram matrix [ψ(b_i* b_j)] has full rank",
    "hopf.positive_phi": "[φ(b_i* b_j)] is Hermitian positive semidefinite (exact LDL pivots)",
    "hopf.positive_psi": "[ψ(b_i* b_j)] is Hermitian positive semidefinite (exact LDL pivots)",
    "hopf.antipode_integral_phi": "x = (ι⊗φ)(Δ(a)(1⊗b)) implies S(x) = (ι⊗φ)((1⊗a)Δ(b)) on basis pairs",
    "hopf.antipode_integral_psi": "y = (ψ⊗ι)((b⊗1)Δ(a)) implies S(y) = (ψ⊗ι)(Δ(b)(a⊗1)) on basis pairs",
    "hopf.local_units": "the unit is a local unit: e·b = b·e = b for all basis b",
    "hopf.compact_type": "the algebra has an identity",
    "hopf.discrete_type": "dimension of the space of left co-integrals {h : ah = ε(a)h}",
    "modular.delta": "(φ⊗ι)Δ(b) = φ(b)δ on every basis element",
    "modular.delta_inv": "(ι⊗ψ)Δ(b) = ψ(b)δ^-1 and δδ^-1 = 1",
    "modular.delta_antipode_phi": "φ(S(b)) = φ(bδ) on every basis element",
    "modular.sigma": "φ(b_i b_j) = φ(b_j σ(b_i)) on all basis pairs",
    "modular.sigma_prime": "ψ(b_i b_j) = ψ(b_j σ'(b_i)) on all basis pairs",
    "modular.nu": "φ(S²(b)) = νφ(b) on every basis element",
    "modular.counit_delta": "ε(δ) = 1",
    "modular.antipode_delta": "S(δ) = δ^-1",
    "modular.sigma_delta": "σ(δ) = σ'(δ) = ν^-1 δ",
    "modular.sigma_prime_conjugation": "σ'(a) = δσ(a)δ^-1 on every basis element",
    "modular.antipode_sigma_prime": "Sσ' = σ^-1 S",
    "modular.automorphisms_commute": "S², σ and σ' commute pairwise",
    "modular.sigma_star": "σ(a)* = σ^-1(a*) on every basis element",
    "modular.comult_sigma": "Δ(σ(a)) = (S²⊗σ)Δ(a) on every basis element",
    "modular.comult_sigma_prime": "Δ(σ'(a)) = (σ'⊗S^-2)Δ(a) on every basis element",
    "modular.comult_S2": "Δ(S²(a)) = (σ⊗σ'^-1)Δ(a) on every basis element",
    "modular.sigma_multiplicative": "σ and σ' are algebra automorphisms",
})


# --------------------------------------------------------------------------
# the algebra


@dataclass(frozen=True, eq=False)
class HopfStarAlgebra:
    dim: int
    labels: tuple[str, ...]
    mult: tuple[tuple[Vec, ...], ...]
    unit: Vec
    comult: tuple[Tensor2, ...]
    counit: Vec
    antipode: Mat
    star: Mat
    phi: Vec
    psi: Vec
    name: str = ""
    model: str = "custom"  # "function", "group", "dual" or "custom"
    group: FiniteGroup | None = field(default=None, repr=False)
    subgroup: Subgroup | None = field(default=None, repr=False)

    # sparse caches ---------------------------------------------------------

    @cached_property
    def _mult_sp(self) -> list[list[dict[int, Scalar]]]:
        return [[sparse(v) for v in row] for row in self.mult]

    @cached_property
    def _comult_sp(self) -> list[dict[tuple[int, int], Scalar]]:
        return [t.items() for t in self.comult]

    @cached_property
    def antipode_inv(self) -> Mat:
        return self.antipode.inverse()

    @cached_property
    def phi_matrix(self) -> Mat:
        """``P[i][j] = φ(b_i b_j)``."""
        return self.bilinear_matrix(self.phi)

    @cached_property
    def psi_matrix(self) -> Mat:
        return self.bilinear_matrix(self.psi)

    def bilinear_matrix(self, omega: Vec) -> Mat:
        d = self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                s = ZERO
                for k, c in self._mult_sp[i][j].items():
                    if omega[k]:
                        s = s + c * omega[k]
                row.append(s)
            rows.append(tuple(row))
        return Mat(d, d, rows)

    # vector-level operations -------------------------------------------------

    def basis(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def zero(self) -> Vec:
        return zero_vec(self.dim)

    def multiply(self, x: Vec, y: Vec) -> Vec:
        acc: dict[int, Scalar] = {}
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._mult_sp[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j].items():
                    acc[k] = acc.get(k, ZERO) + ab * c
        return densify(acc, self.dim)

    def star_of(self, x: Vec) -> Vec:
        return self.star.apply(vec_conj(x))

    def S(self, x: Vec) -> Vec:
        return self.antipode.apply(x)

    def S_inv(self, x: Vec) -> Vec:
        return self.antipode_inv.apply(x)

    def eps(self, x: Vec) -> Scalar:
        return dot(self.counit, x)

    def phi_of(self, x: Vec) -> Scalar:
        return dot(self.phi, x)

    def psi_of(self, x: Vec) -> Scalar:
        return dot(self.psi, x)

    def comultiply(self, x: Vec) -> Tensor2:
        acc: dict[tuple[int, int], Scalar] = {}
        for i, a in enumerate(x):
            if not a:
                continue
            for key, c in self._comult_sp[i].items():
                acc[key] = acc.get(key, ZERO) + a * c
        return Tensor2.from_items(self.dim, acc)

    def left_mult_matrix(self, x: Vec) -> Mat:
        """Matrix of ``y ↦ x y``."""
        return Mat.from_columns([self.multiply(x, self.basis(j)) for j in range(self.dim)])

    def right_mult_matrix(self, x: Vec) -> Mat:
        """Matrix of ``y ↦ y x``."""
        return Mat.from_columns([self.multiply(self.basis(j), x) for j in range(self.dim)])

    def tensor_mul(self, s: Tensor2, t: Tensor2) -> Tensor2:
        """Product in ``A ⊗ A``: ``(a⊗b)(c⊗d) = ac ⊗ bd``."""
        acc: dict[tuple[int, int], Scalar] = {}
        t_items = list(t.items().items())
        m = self._mult_sp
        for (i, j), a in s.items().items():
            for (k, l), b in t_items:
                ab = a * b
                left = m[i][k]
                right = m[j][l]
                for u, cu in left.items():
                    abu = ab * cu
                    for v, cv in right.items():
                        acc[(u, v)] = acc.get((u, v), ZERO) + abu * cv
        return Tensor2.from_items(self.dim, acc)

    def tensor_times(self, t: Tensor2, x: Vec | None, y: Vec | None) -> Tensor2:
        """``t (x ⊗ y)``; ``None`` stands for the unit."""
        return t.map_legs(None if x is None else self.right_mult_matrix(x),
                          None if y is None else self.right_mult_matrix(y))

    def times_tensor(self, x: Vec | None, y: Vec | None, t: Tensor2) -> Tensor2:
        """``(x ⊗ y) t``; ``None`` stands for the unit."""
        return t.map_legs(None if x is None else self.left_mult_matrix(x),
                          None if y is None else self.left_mult_matrix(y))

    def slice_right(self, t: Tensor2, omega: Vec) -> Vec:
        """``(ι⊗ω)t``."""
        return t.coeffs.apply(omega)

    def slice_left(self, t: Tensor2, omega: Vec) -> Vec:
        """``(ω⊗ι)t``."""
        return t.coeffs.transpose().apply(omega)

    def tensor_star(self, t: Tensor2) -> Tensor2:
        return Tensor2(t.coeffs.conj()).map_legs(self.star, self.star)

    def multiply_legs(self, t: Tensor2) -> Vec:
        """``m(t)``: multiply the two legs together."""
        acc: dict[int, Scalar] = {}
        for (i, j), a in t.items().items():
            for k, c in self._mult_sp[i][j].items():
                acc[k] = acc.get(k, ZERO) + a * c
        return densify(acc, self.dim)

    def comult2(self, x: Vec) -> dict[tuple[int, int, int], Scalar]:
        """``Δ⁽²⁾(x) = (Δ⊗ι)Δ(x)`` as a sparse 3-tensor."""
        acc: dict[tuple[int, int, int], Scalar] = {}
        for (i, j), a in self.comultiply(x).items().items():
            for (u, v), c in self._comult_sp[i].items():
                acc[(u, v, j)] = acc.get((u, v, j), ZERO) + a * c
        return {k: v for k, v in acc.items() if v}

    def comult2_right(self, x: Vec) -> dict[tuple[int, int, int], Scalar]:
        """``(ι⊗Δ)Δ(x)`` as a sparse 3-tensor."""
        acc: dict[tuple[int, int, int], Scalar] = {}
        for (i, j), a in self.comultiply(x).items().items():
            for (u, v), c in self._comult_sp[j].items():
                acc[(i, u, v)] = acc.get((i, u, v), ZERO) + a * c
        return {k: v for k, v in acc.items() if v}

    # matrix forms of maps ------------------------------------------------------

    def linear_map(self, f: Callable[[Vec], Vec]) -> Mat:
        return Mat.from_columns([f(self.basis(j)) for j in range(self.dim)])

    def element(self, coords: Sequence) -> Element:
        coords = tuple(as_scalar(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def with_integrals(self, phi: Vec, psi: Vec) -> HopfStarAlgebra:
        return replace(self, phi=tuple(phi), psi=tuple(psi))

    def renormalized(self, h: Vec) -> HopfStarAlgebra:
        """Rescale φ and ψ so that ``φ(h) = ψ(h) = 1``."""
        a, b = self.phi_of(h), self.psi_of(h)
        if not a or not b:
            raise ValueError("cannot normalize integrals at an element where they vanish")
        return self.with_integrals(vec_scale(a.inverse(), self.phi), vec_scale(b.inverse(), self.psi))

    def __repr__(self):
        return f"HopfStarAlgebra({self.name or self.model}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    parent: HopfStarAlgebra
    coords: Vec

    def _check(self, other: Element) -> None:
        if other.parent is not self.parent:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.parent, vec_add(self.coords, other.coords))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return Element(self.parent, vec_sub(self.coords, other.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.parent, self.parent.multiply(self.coords, other.coords))
        return Element(self.parent, vec_scale(as_scalar(other), self.coords))

    def __rmul__(self, c):
        return Element(self.parent, vec_scale(as_scalar(c), self.coords))

    def __neg__(self):
        return Element(self.parent, vec_scale(-ONE, self.coords))

    def star(self) -> Element:
        return Element(self.parent, self.parent.star_of(self.coords))

    def antipode(self) -> Element:
        return Element(self.parent, self.parent.S(self.coords))

    def comultiply(self) -> Tensor2:
        return self.parent.comultiply(self.coords)

    def counit(self) -> Scalar:
        return self.parent.eps(self.coords)

    def pair(self, omega: Vec) -> Scalar:
        return dot(omega, self.coords)

    def is_zero(self) -> bool:
        return vec_is_zero(self.coords)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.parent is other.parent and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = [f"{c}·{self.parent.labels[i]}" for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) or "0"


# --------------------------------------------------------------------------
# canonical builds


def _group_labels(g: FiniteGroup, prefix: str) -> tuple[str, ...]:
    return tuple(f"{prefix}[{g.label(p)}]" for p in range(g.order))


def build_function_algebra(g: FiniteGroup, normalizer: Subgroup) -> HopfStarAlgebra:
    """``C(G)`` on the basis ``δ_p`` with ``φ = ψ = (1/|K|) Σ_p f(p)``."""
    n = g.order
    mult = tuple(tuple(unit_vec(n, i) if i == j else zero_vec(n) for j in range(n))
                 for i in range(n))
    comult_items: list[dict[tuple[int, int], Scalar]] = [{} for _ in range(n)]
    for u in range(n):
        for v in range(n):
            comult_items[g.table[u][v]][(u, v)] = ONE
    inv = Mat.from_sparse(n, n, {(g.inverse[p], p): ONE for p in range(n)})
    w = Scalar(1) / normalizer.order
    return HopfStarAlgebra(
        dim=n,
        labels=_group_labels(g, "δ"),
        mult=mult,
        unit=(ONE,) * n,
        comult=tuple(Tensor2.from_items(n, c) for c in comult_items),
        counit=unit_vec(n, g.identity),
        antipode=inv,
        star=Mat.identity(n),
        phi=(w,) * n,
        psi=(w,) * n,
        name=f"C({g.name or 'G'})",
        model="function",
        group=g,
        subgroup=normalizer,
    )


def build_group_algebra(g: FiniteGroup, normalizer: Subgroup) -> HopfStarAlgebra:
    """``ℂG`` on the basis ``λ_p`` with ``φ(λ_p) = |K|[p = e]``."""
    n = g.order
    mult = tuple(tuple(unit_vec(n, g.table[p][q]) for q in range(n)) for p in range(n))
    inv = Mat.from_sparse(n, n, {(g.inverse[p], p): ONE for p in range(n)})
    phi = vec_scale(Scalar(normalizer.order), unit_vec(n, g.identity))
    return HopfStarAlgebra(
        dim=n,
        labels=_group_labels(g, "λ"),
        mult=mult,
        unit=unit_vec(n, g.identity),
        comult=tuple(Tensor2.from_items(n, {(p, p): ONE}) for p in range(n)),
        counit=(ONE,) * n,
        antipode=inv,
        star=inv,
        phi=phi,
        psi=phi,
        name=f"C[{g.name or 'G'}]",
        model="group",
        group=g,
        subgroup=normalizer,
    )


# --------------------------------------------------------------------------
# axiom verification


def _first(pred, items):
    for it in items:
        if not pred(it):
            return it
    return None


def _tensor_key(t: Tensor2) -> dict:
    return t.items()


def _transition_rank(a: HopfStarAlgebra, kind: int) -> int:
    """Rank of T1 (kind 1) or T2 (kind 2) as a d²×d² matrix, fed column by column."""
    d = a.dim
    cols = []
    rmats = [a.right_mult_matrix(a.basis(j)) for j in range(d)] if kind == 1 else None
    lmats = [a.left_mult_matrix(a.basis(i)) for i in range(d)] if kind == 2 else None
    for i in range(d):
        for j in range(d):
            if kind == 1:
                t = a.comult[i].map_legs(None, rmats[j])
            else:
                t = a.comult[j].map_legs(lmats[i], None)
            cols.append({u * d + v: c for (u, v), c in t.items().items()})
    return rank_of_rows(cols)


def verify_axioms(a: HopfStarAlgebra, require_positive: bool = True) -> VerificationReport:
    """Check every Hopf ∗-algebra and integral axiom on all basis tuples.

    Failures carry the offending basis indices as witness; nothing raises.
    """
    rep = VerificationReport(a.name)
    d = a.dim
    one = a.unit
    basis = [a.basis(i) for i in range(d)]

    bad = _first(lambda i: a.multiply(one, basis[i]) == basis[i] == a.multiply(basis[i], one), range(d))
    unit_ok = bad is None
    rep.check("hopf.unit", unit_ok, "unit fails", {"basis": [bad]})
    rep.check("hopf.local_units", unit_ok, "unit is not a local unit", {"basis": [bad]})
    rep.check("hopf.compact_type", unit_ok, "the stored unit is not an identity", {"basis": [bad]})

    m = a._mult_sp
    bad = None
    for i in range(d):
        for j in range(d):
            ij = m[i][j]
            for k in range(d):
                lhs: dict[int, Scalar] = {}
                for u, c in ij.items():
                    for w, e in m[u][k].items():
                        lhs[w] = lhs.get(w, ZERO) + c * e
                rhs: dict[int, Scalar] = {}
                for u, c in m[j][k].items():
                    for w, e in m[i][u].items():
                        rhs[w] = rhs.get(w, ZERO) + c * e
                if {x: y for x, y in lhs.items() if y} != {x: y for x, y in rhs.items() if y}:
                    bad = [i, j, k]
                    break
            if bad:
                break
        if bad:
            break
    rep.check("hopf.associativity", bad is None, "associativity fails", {"basis": bad})

    bad = _first(lambda i: a.comult2(basis[i]) == a.comult2_right(basis[i]), range(d))
    rep.check("hopf.coassociativity", bad is None, "coassociativity fails", {"basis": [bad]})

    bad = _first(lambda i: a.slice_left(a.comult[i], a.counit) == basis[i]
                 == a.slice_right(a.comult[i], a.counit), range(d))
    rep.check("hopf.counit", bad is None, "counit law fails", {"basis": [bad]})

    ok = a.comultiply(one) == Tensor2.simple(one, one)
    bad = None if ok else ["unit"]
    if ok:
        for i in range(d):
            for j in range(d):
                if a.comultiply(a.multiply(basis[i], basis[j])) != a.tensor_mul(a.comult[i], a.comult[j]):
                    bad = [i, j]
                    break
            if bad:
                break
    rep.check("hopf.comult_multiplicative", bad is None, "Δ is not multiplicative", {"basis": bad})

    bad = None if a.eps(one) == ONE else ["unit"]
    if bad is None:
        bad = _first(lambda ij: a.eps(a.multiply(basis[ij[0]], basis[ij[1]]))
                     == a.counit[ij[0]] * a.counit[ij[1]],
                     [(i, j) for i in range(d) for j in range(d)])
        bad = list(bad) if bad else None
    rep.check("hopf.counit_multiplicative", bad is None, "ε is not multiplicative", {"basis": bad})

    def antipode_ok(i):
        t = a.comult[i]
        target = vec_scale(a.counit[i], one)
        left = a.multiply_legs(t.map_legs(a.antipode, None))
        right = a.multiply_legs(t.map_legs(None, a.antipode))
        return left == target and right == target

    bad = _first(antipode_ok, range(d))
    rep.check("hopf.antipode_law", bad is None, "m(S⊗ι)Δ(b) ≠ ε(b)1 or m(ι⊗S)Δ(b) ≠ ε(b)1",
              {"basis": [bad]})

    try:
        s_inv = a.antipode_inv
    except SingularMatrixError:
        s_inv = None
    bad = None
    for i in range(d):
        for j in range(d):
            if a.S(a.multiply(basis[i], basis[j])) != a.multiply(a.S(basis[j]), a.S(basis[i])):
                bad = [i, j]
                break
        if bad:
            break
    if bad is None:
        b1 = _first(lambda i: a.comultiply(a.S(basis[i]))
                    == a.comult[i].flip().map_legs(a.antipode, a.antipode), range(d))
        bad = None if b1 is None else [b1]
    rep.check("hopf.antipode_anti", bad is None, "S is not an anti-(co)homomorphism", {"basis": bad})

    bad = _first(lambda i: a.star_of(a.star_of(basis[i])) == basis[i], range(d))
    if bad is None:
        for i in range(d):
            for j in range(d):
                lhs = a.star_of(a.multiply(basis[i], basis[j]))
                if lhs != a.multiply(a.star_of(basis[j]), a.star_of(basis[i])):
                    bad = (i, j)
                    break
            if bad is not None:
                break
    rep.check("hopf.star_involution", bad is None, "star is not an involutive anti-automorphism",
              {"basis": bad if isinstance(bad, tuple) else [bad]})

    bad = _first(lambda i: a.comultiply(a.star_of(basis[i])) == a.tensor_star(a.comult[i])
                 and a.eps(a.star_of(basis[i])) == a.counit[i].conjugate(), range(d))
    rep.check("hopf.star_comult", bad is None, "Δ or ε is not a ∗-map", {"basis": [bad]})

    if s_inv is None:
        rep.check("hopf.star_antipode", False, "antipode is not invertible", {"basis": []})
    else:
        bad = _first(lambda i: a.S(a.star_of(basis[i])) == a.star_of(a.S_inv(basis[i])), range(d))
        rep.check("hopf.star_antipode", bad is None, "S(b*) ≠ (S^-1(b))*", {"basis": [bad]})

    r1 = _transition_rank(a, 1)
    rep.check("hopf.T1_bijective", r1 == d * d, f"rank {r1} < {d * d}", {"rank": r1})
    r2 = _transition_rank(a, 2)
    rep.check("hopf.T2_bijective", r2 == d * d, f"rank {r2} < {d * d}", {"rank": r2})

    _verify_integrals(a, rep, require_positive)

    if s_inv is not None:
        _verify_antipode_integral(a, rep)
    else:
        rep.skip("hopf.antipode_integral_phi", "antipode not invertible")
        rep.skip("hopf.antipode_integral_psi", "antipode not invertible")

    co = cointegral_space(a)
    rep.finding("hopf.discrete_type", f"left co-integral space has dimension {co.dim}",
                {"dim": co.dim})
    return rep


def _verify_integrals(a: HopfStarAlgebra, rep: VerificationReport, require_positive: bool) -> None:
    d = a.dim
    for name, omega, slicer in (("phi", a.phi, a.slice_right), ("psi", a.psi, a.slice_left)):
        cid = "hopf.left_integral" if name == "phi" else "hopf.right_integral"
        if vec_is_zero(omega):
            rep.check(cid, False, f"{name} is zero", {"functional": name})
        else:
            bad = _first(lambda i: slicer(a.comult[i], omega) == vec_scale(omega[i], a.unit), range(d))
            rep.check(cid, bad is None, f"{name} is not invariant", {"basis": [bad]})
        gram = Mat(d, d, [tuple(dot(omega, a.multiply(a.star_of(a.basis(i)), a.basis(j)))
                                for j in range(d)) for i in range(d)])
        rk = gram.rank()
        rep.check(f"hopf.faithful_{name}", rk == d, f"Gram rank {rk} < {d}", {"rank": rk})
        if require_positive:
            ok, _, wit = psd_pivots(gram)
            rep.check(f"hopf.positive_{name}", ok, "Gram matrix is not positive semidefinite",
                      {"basis": list(wit) if wit else None})
        else:
            rep.skip(f"hopf.positive_{name}", "positivity relaxed to faithfulness")


def _verify_antipode_integral(a: HopfStarAlgebra, rep: VerificationReport) -> None:
    d = a.dim
    P = a.phi_matrix  # φ(b_v b_w)
    Q = a.psi_matrix
    bad = None
    for i in range(d):
        # columns j: (ι⊗φ)(Δ(b_i)(1⊗b_j)) = Σ_uv c_uv φ(b_v b_j) b_u
        X = a.comult[i].coeffs @ P
        for j in range(d):
            lhs = a.S(X.col(j))
            # (ι⊗φ)((1⊗b_i)Δ(b_j)) = Σ_uv c^j_uv φ(b_i b_v) b_u
            rhs = a.comult[j].coeffs.apply(P.row(i))
            if lhs != rhs:
                bad = [i, j]
                break
        if bad:
            break
    rep.check("hopf.antipode_integral_phi", bad is None, "antipode–integral identity fails for φ",
              {"basis": bad})
    bad = None
    for i in range(d):
        # rows j: (ψ⊗ι)((b_j⊗1)Δ(b_i)) = Σ_uv c_uv ψ(b_j b_u) b_v
        Y = Q @ a.comult[i].coeffs
        for j in range(d):
            lhs = a.S(Y.row(j))
            # (ψ⊗ι)(Δ(b_j)(b_i⊗1)) = Σ_uv c^j_uv ψ(b_u b_i) b_v
            rhs = a.comult[j].coeffs.transpose().apply(Q.col(i))
            if lhs != rhs:
                bad = [i, j]
                break
        if bad:
            break
    rep.check("hopf.antipode_integral_psi", bad is None, "antipode–integral identity fails for ψ",
              {"basis": bad})


def cointegral_space(a: HopfStarAlgebra) -> Subspace:
    """``{h : b h = ε(b) h for every basis b}`` as a kernel."""
    d = a.dim
    rows = []
    for i in range(d):
        L = a.left_mult_matrix(a.basis(i))
        e = a.counit[i]
        for r in range(d):
            row = list(L.row(r))
            row[r] = row[r] - e
            rows.append(tuple(row))
    return Subspace.span(d, Mat(len(rows), d, rows).kernel())


# --------------------------------------------------------------------------
# modular data


@dataclass(frozen=True)
class ModularData:
    delta: Vec
    delta_inv: Vec
    sigma: Mat
    sigma_prime: Mat
    nu: Scalar

    def is_trivial(self, a: HopfStarAlgebra) -> bool:
        return (self.delta == a.unit and self.sigma.is_identity()
                and self.sigma_prime.is_identity() and self.nu == ONE)


def _pick_nonvanishing(omega: Vec) -> int:
    for i, c in enumerate(omega):
        if c:
            return i
    raise ValueError("functional vanishes on the basis")


def compute_modular_data(a: HopfStarAlgebra) -> ModularData:
    """Solve for δ, δ^-1, σ, σ', ν from their defining identities.

    Raises :class:`~qhg.linalg.SingularMatrixError` when the integral is not
    faithful, which means the input was inconsistent.
    """
    i0 = _pick_nonvanishing(a.phi)
    delta = vec_scale(a.phi[i0].inverse(), a.slice_left(a.comult[i0], a.phi))
    j0 = _pick_nonvanishing(a.psi)
    delta_inv = vec_scale(a.psi[j0].inverse(), a.slice_right(a.comult[j0], a.psi))
    P, Q = a.phi_matrix, a.psi_matrix
    sigma = P.inverse() @ P.transpose()
    sigma_prime = Q.inverse() @ Q.transpose()
    s2 = a.antipode @ a.antipode
    nu = dot(a.phi, s2.col(i0)) / a.phi[i0]
    return ModularData(delta, delta_inv, sigma, sigma_prime, nu)


def verify_modular_data(a: HopfStarAlgebra, md: ModularData) -> VerificationReport:
    rep = VerificationReport(a.name)
    d = a.dim
    basis = [a.basis(i) for i in range(d)]
    S, Sinv = a.antipode, a.antipode_inv
    S2 = S @ S
    S2inv = Sinv @ Sinv
    sig, sigp = md.sigma, md.sigma_prime
    try:
        sig_inv, sigp_inv = sig.inverse(), sigp.inverse()
    except SingularMatrixError:
        rep.check("modular.sigma", False, "σ is singular", {})
        return rep
    delta, dinv = md.delta, md.delta_inv

    bad = _first(lambda i: a.slice_left(a.comult[i], a.phi) == vec_scale(a.phi[i], delta), range(d))
    rep.check("modular.delta", bad is None, "(φ⊗ι)Δ(b) ≠ φ(b)δ", {"basis": [bad]})
    ok = a.multiply(delta, dinv) == a.unit == a.multiply(dinv, delta)
    bad = _first(lambda i: a.slice_right(a.comult[i], a.psi) == vec_scale(a.psi[i], dinv), range(d))
    rep.check("modular.delta_inv", ok and bad is None, "δ^-1 identity fails", {"basis": [bad]})
    bad = _first(lambda i: a.phi_of(a.S(basis[i])) == a.phi_of(a.multiply(basis[i], delta)), range(d))
    rep.check("modular.delta_antipode_phi", bad is None, "φ(S(b)) ≠ φ(bδ)", {"basis": [bad]})

    P, Q = a.phi_matrix, a.psi_matrix
    rep.check("modular.sigma", P @ sig == P.transpose(), "φ(ab) ≠ φ(bσ(a))", {})
    rep.check("modular.sigma_prime", Q @ sigp == Q.transpose(), "ψ(ab) ≠ ψ(bσ'(a))", {})
    bad = _first(lambda i: a.phi_of(S2.col(i)) == md.nu * a.phi[i], range(d))
    rep.check("modular.nu", bad is None, "φ(S²b) ≠ νφ(b)", {"basis": [bad], "nu": md.nu})

    rep.check("modular.counit_delta", a.eps(delta) == ONE, "ε(δ) ≠ 1", {"value": a.eps(delta)})
    rep.check("modular.antipode_delta", a.S(delta) == dinv, "S(δ) ≠ δ^-1", {"delta": witness_vec(delta)})
    target = vec_scale(md.nu.inverse(), delta)
    rep.check("modular.sigma_delta", sig.apply(delta) == target == sigp.apply(delta),
              "σ(δ) or σ'(δ) ≠ ν^-1δ", {"delta": witness_vec(delta)})
    Ld, Rdinv = a.left_mult_matrix(delta), a.right_mult_matrix(dinv)
    rep.check("modular.sigma_prime_conjugation", sigp == Ld @ Rdinv @ sig, "σ' ≠ δσ(·)δ^-1", {})
    rep.check("modular.antipode_sigma_prime", S @ sigp == sig_inv @ S, "Sσ' ≠ σ^-1 S", {})
    comm = (S2 @ sig == sig @ S2) and (S2 @ sigp == sigp @ S2) and (sig @ sigp == sigp @ sig)
    rep.check("modular.automorphisms_commute", comm, "S², σ, σ' do not commute", {})
    bad = _first(lambda i: a.star_of(sig.col(i)) == sig_inv.apply(a.star_of(basis[i])), range(d))
    rep.check("modular.sigma_star", bad is None, "σ(a)* ≠ σ^-1(a*)", {"basis": [bad]})

    bad = _first(lambda i: a.comultiply(sig.col(i)) == a.comult[i].map_legs(S2, sig), range(d))
    rep.check("modular.comult_sigma", bad is None, "Δσ ≠ (S²⊗σ)Δ", {"basis": [bad]})
    bad = _first(lambda i: a.comultiply(sigp.col(i)) == a.comult[i].map_legs(sigp, S2inv), range(d))
    rep.check("modular.comult_sigma_prime", bad is None, "Δσ' ≠ (σ'⊗S^-2)Δ", {"basis": [bad]})
    bad = _first(lambda i: a.comultiply(S2.col(i)) == a.comult[i].map_legs(sig, sigp_inv), range(d))
    rep.check("modular.comult_S2", bad is None, "ΔS² ≠ (σ⊗σ'^-1)Δ", {"basis": [bad]})

    bad = None
    for i in range(d):
        for j in range(d):
            prod = a.multiply(basis[i], basis[j])
            if (sig.apply(prod) != a.multiply(sig.col(i), sig.col(j))
                    or sigp.apply(prod) != a.multiply(sigp.col(i), sigp.col(j))):
                bad = [i, j]
                break
        if bad:
            break
    rep.check("modular.sigma_multiplicative", bad is None, "σ or σ' not multiplicative", {"basis": bad})
    return rep
