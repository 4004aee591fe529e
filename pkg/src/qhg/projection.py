"""Group-like projections: self-adjoint idempotents ``h`` with ``Δ(h)(1⊗h) = h⊗h``."""

from __future__ import annotations

from dataclasses import dataclass

from .duality import DualPair, fourier
from .group import Subgroup
from .hopf import HopfStarAlgebra, ModularData, compute_modular_data
from .linalg import Subspace, Tensor2, Vec, col_space, row_space, vec_is_zero, vec_scale
from .report import EngineError, VerificationReport, register, witness_vec
from .scalar import ONE, Scalar

__all__ = [
    "GroupLikeProjection", "is_group_like", "certify", "characteristic_projection",
    "haar_projection", "canonical_projection", "fourier_projection", "verify_ordered_pair",
    "centrality_equivalences", "is_below",
]

CHECKS = register({
    "glp.nonzero": "h ≠ 0",
    "glp.self_adjoint": "h* = h",
    "glp.idempotent": "h² = h",
    "glp.defining_identity": "Δ(h)(1⊗h) = h⊗h",
    "glp.right_identity": "Δ(h)(h⊗1) = h⊗h",
    "glp.counit": "ε(h) = 1",
    "glp.antipode": "S(h) = h",
    "glp.h_delta": "hδ = h",
    "glp.sigma_fixed": "σ(h) = σ'(h) = h",
    "glp.nu_trivial": "ν = 1",
    "glp.integral_usage": "which certified consequences were evaluated through the integrals",
    "glp.fourier_image": "k = F(h)/φ(h) is a group-like projection in the dual",
    "glp.fourier_normalization": "φ(h) = 1 before transforming (normalization applied locally)",
    "order.comparable": "hh' = h'h = h, i.e. h ≤ h'",
    "order.dual_reverses": "h ≤ h' implies k k' = k' k = k', i.e. k' ≤ k",
    "order.coproduct_left": "Δ(h')(1⊗h) = h'⊗h",
    "order.coproduct_right": "Δ(h')(h⊗1) = h⊗h'",
    "central.commutes": "h commutes with every basis element",
    "central.hA_eq_Ah": "span{h b} = span{b h} as subspaces",
    "central.dual_coproduct": "Δ^op(k) = (ι⊗S²)(Δ(k)(1⊗δ^-1)) in the dual",
    "central.dual_legs": "the left and right legs of Δ(k) span the same subspace",
    "central.equivalent": "the four centrality conditions agree; value reported",
    "central.dual_k_vs_legs_h": "k is central in B iff the two legs of Δ(h) coincide",
})

_INTEGRAL_DEPENDENT = ("glp.h_delta", "glp.sigma_fixed", "glp.nu_trivial")


@dataclass(frozen=True, eq=False)
class GroupLikeProjection:
    parent: HopfStarAlgebra
    h: Vec
    certificate: VerificationReport
    integral_dependent: tuple[str, ...] = _INTEGRAL_DEPENDENT


def _def_checks(a: HopfStarAlgebra, h: Vec) -> list[tuple[str, bool, dict]]:
    hh = Tensor2.simple(h, h)
    dh = a.comultiply(h)
    out = [("glp.nonzero", not vec_is_zero(h), {})]
    out.append(("glp.self_adjoint", a.star_of(h) == h, {"star": witness_vec(a.star_of(h))}))
    sq = a.multiply(h, h)
    out.append(("glp.idempotent", sq == h, {"square": witness_vec(sq)}))
    lhs = a.tensor_times(dh, None, h)
    out.append(("glp.defining_identity", lhs == hh,
                {"difference": {f"{i},{j}": c.to_json() for (i, j), c in (lhs - hh).items().items()}}))
    return out


def is_group_like(a: HopfStarAlgebra, h: Vec,
                  md: ModularData | None = None) -> tuple[bool, GroupLikeProjection | None, dict]:
    """Decide the defining identities exactly.

    On success the consequences are certified too; any failure there raises
    :class:`EngineError` because it cannot happen for a genuine projection.
    """
    if len(h) != a.dim:
        raise ValueError("element does not belong to this algebra")
    checks = _def_checks(a, h)
    failing = next(((cid, w) for cid, ok, w in checks if not ok), None)
    if failing is not None:
        return False, None, {"failed": failing[0], "element": witness_vec(h), **failing[1]}
    return True, certify(a, h, md, checks), {}


def certify(a: HopfStarAlgebra, h: Vec, md: ModularData | None = None,
            checks: list | None = None) -> GroupLikeProjection:
    rep = VerificationReport(a.name)
    for cid, ok, w in checks if checks is not None else _def_checks(a, h):
        rep.check(cid, ok, "defining identity fails", w)
    md = md or compute_modular_data(a)
    hh = Tensor2.simple(h, h)
    rep.check("glp.right_identity", a.tensor_times(a.comultiply(h), h, None) == hh,
              "Δ(h)(h⊗1) ≠ h⊗h")
    rep.check("glp.counit", a.eps(h) == ONE, "ε(h) ≠ 1", {"value": a.eps(h)})
    rep.check("glp.antipode", a.S(h) == h, "S(h) ≠ h", {"S(h)": witness_vec(a.S(h))})
    rep.check("glp.h_delta", a.multiply(h, md.delta) == h, "hδ ≠ h")
    rep.check("glp.sigma_fixed", md.sigma.apply(h) == h == md.sigma_prime.apply(h),
              "σ(h) or σ'(h) ≠ h")
    rep.check("glp.nu_trivial", md.nu == ONE, "ν ≠ 1", {"nu": md.nu})
    rep.finding("glp.integral_usage", "evaluated with φ/ψ: " + ", ".join(_INTEGRAL_DEPENDENT),
                {"ids": list(_INTEGRAL_DEPENDENT)})
    if not rep.ok:
        raise EngineError("group-like projection fails a consequence: "
                          + "; ".join(rep.summary_lines()))
    return GroupLikeProjection(a, tuple(h), rep)


def _require_group(a: HopfStarAlgebra, k: Subgroup, model: str) -> None:
    if a.model != model:
        raise ValueError(f"expected a {model}-model algebra, got {a.model!r}")
    if a.group is None or k.parent is not a.group:
        raise ValueError("subgroup does not belong to the algebra's group")


def characteristic_projection(a: HopfStarAlgebra, k: Subgroup) -> GroupLikeProjection:
    """``χ_K`` in the function algebra."""
    _require_group(a, k, "function")
    h = tuple(ONE if p in k else Scalar(0) for p in range(a.dim))
    ok, glp, wit = is_group_like(a, h)
    if not ok:
        raise EngineError(f"χ_K is not group-like: {wit}")
    return glp


def haar_projection(a: HopfStarAlgebra, k: Subgroup) -> GroupLikeProjection:
    """``(1/|K|) Σ_{p∈K} λ_p`` in the group algebra."""
    _require_group(a, k, "group")
    w = Scalar(1) / k.order
    h = tuple(w if p in k else Scalar(0) for p in range(a.dim))
    ok, glp, wit = is_group_like(a, h)
    if not ok:
        raise EngineError(f"Haar projection is not group-like: {wit}")
    return glp


def canonical_projection(a: HopfStarAlgebra, k: Subgroup) -> GroupLikeProjection:
    return characteristic_projection(a, k) if a.model == "function" else haar_projection(a, k)


def fourier_projection(pair: DualPair, glp: GroupLikeProjection,
                       rep: VerificationReport | None = None) -> GroupLikeProjection:
    """``k = F(h)`` computed with ``φ`` rescaled so that ``φ(h) = 1``."""
    a, b = pair.a_side, pair.b_side
    if glp.parent is not a:
        raise ValueError("projection does not live on the A side of the pair")
    ph = a.phi_of(glp.h)
    if rep is not None:
        rep.check("glp.fourier_normalization", bool(ph), "φ(h) = 0", {"phi(h)": ph})
    k = vec_scale(ph.inverse(), fourier(pair, glp.h))
    ok, kp, wit = is_group_like(b, k)
    if rep is not None:
        rep.check("glp.fourier_image", ok, "F(h) is not group-like", wit)
    if not ok:
        raise EngineError(f"Fourier image of a group-like projection is not group-like: {wit}")
    return kp


def is_below(a: HopfStarAlgebra, h: Vec, h2: Vec) -> bool:
    """``h ≤ h'`` in the sense ``hh' = h'h = h``."""
    return a.multiply(h, h2) == h == a.multiply(h2, h)


def verify_ordered_pair(pair: DualPair, g1: GroupLikeProjection, g2: GroupLikeProjection,
                        k1: GroupLikeProjection | None = None,
                        k2: GroupLikeProjection | None = None) -> VerificationReport:
    a, b = pair.a_side, pair.b_side
    rep = VerificationReport(a.name)
    h, h2 = g1.h, g2.h
    if not is_below(a, h, h2):
        rep.finding("order.comparable", "incomparable: hh' = h'h = h does not hold")
        return rep
    rep.check("order.comparable", True)
    k1 = k1 or fourier_projection(pair, g1)
    k2 = k2 or fourier_projection(pair, g2)
    k, kk = k1.h, k2.h
    rep.check("order.dual_reverses", b.multiply(k, kk) == kk == b.multiply(kk, k),
              "k k' = k' k = k' fails", {"k": witness_vec(k), "k'": witness_vec(kk)})
    dh2 = a.comultiply(h2)
    rep.check("order.coproduct_left", a.tensor_times(dh2, None, h) == Tensor2.simple(h2, h),
              "Δ(h')(1⊗h) ≠ h'⊗h")
    rep.check("order.coproduct_right", a.tensor_times(dh2, h, None) == Tensor2.simple(h, h2),
              "Δ(h')(h⊗1) ≠ h⊗h'")
    return rep


def centrality_equivalences(pair: DualPair, glp: GroupLikeProjection,
                            kp: GroupLikeProjection | None = None,
                            md_b: ModularData | None = None) -> tuple[bool, VerificationReport]:
    """Evaluate the four centrality conditions and insist they agree."""
    a, b = pair.a_side, pair.b_side
    h = glp.h
    rep = VerificationReport(a.name)
    kp = kp or fourier_projection(pair, glp)
    k = kp.h
    md_b = md_b or compute_modular_data(b)

    c1 = all(a.multiply(h, a.basis(i)) == a.multiply(a.basis(i), h) for i in range(a.dim))
    hA = Subspace.span(a.dim, (a.multiply(h, a.basis(i)) for i in range(a.dim)))
    Ah = Subspace.span(a.dim, (a.multiply(a.basis(i), h) for i in range(a.dim)))
    c2 = hA == Ah
    dk = b.comultiply(k)
    S2 = b.antipode @ b.antipode
    rhs = b.tensor_times(dk, None, md_b.delta_inv).map_legs(None, S2)
    c3 = dk.flip() == rhs
    c4 = row_space(dk) == col_space(dk)
    values = {"commutes": c1, "hA_eq_Ah": c2, "dual_coproduct": c3, "dual_legs": c4}
    for name, v in values.items():
        rep.finding(f"central.{name}", "true" if v else "false", {"value": v})
    agree = len(set(values.values())) == 1
    rep.check("central.equivalent", agree, "centrality conditions disagree", values)
    if not agree:
        raise EngineError(f"centrality conditions disagree: {values}")
    k_central = all(b.multiply(k, b.basis(i)) == b.multiply(b.basis(i), k) for i in range(b.dim))
    dh = a.comultiply(h)
    legs_equal = row_space(dh) == col_space(dh)
    rep.check("central.dual_k_vs_legs_h", k_central == legs_equal,
              "centrality of k does not match coincidence of the legs of Δ(h)",
              {"k_central": k_central, "legs_equal": legs_equal})
    return c1, rep
