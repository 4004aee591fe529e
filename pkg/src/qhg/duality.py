"""The dual algebra ``B`` of ``A`` with the opposite coproduct, and the Fourier transform.

``B`` is built on the basis dual to the basis of ``A``, so the pairing matrix
is the identity and an element of ``B`` is stored by its values on the basis
of ``A``: ``b_j = ⟨a_j, b⟩``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .hopf import HopfStarAlgebra, ModularData, compute_modular_data, verify_axioms
from .linalg import Mat, Tensor2, Vec, dot, unit_vec, vec_scale
from .report import EngineError, VerificationReport, register, witness_vec
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "DualPair", "dualize", "fourier", "inverse_fourier", "verify_plancherel",
    "verify_dual_modular", "verify_pairing", "verify_double_dual", "sample_elements",
]

CHECKS = register({
    "dual.pairing_perfect": "the pairing matrix between A and B is invertible",
    "dual.antipode_pairing": "⟨S(a), b⟩ = ⟨a, S^-1(b)⟩ on all basis pairs",
    "dual.product_pairing": "⟨a, bb'⟩ = ⟨Δ(a), b⊗b'⟩ on all basis triples",
    "dual.coproduct_pairing": "⟨a⊗a', Δ_B(b)⟩ = ⟨a'a, b⟩ on all basis triples (opposite coproduct)",
    "dual.star_pairing": "⟨a, b*⟩ = conj⟨S(a)*, b⟩ on all basis pairs",
    "dual.counit_unit": "ε_B(b) = ⟨1, b⟩ and 1_B = ε_A",
    "dual.module_actions": "(bb')▷a = b▷(b'▷a) and (aa')▷b = a'▷(a▷b) on seeded random triples",
    "dual.integral_rule": "φ_B(F(a)) = ε(a) on every basis element",
    "dual.fourier_inverse": "F^-1(F(a)) = a on every basis element and F(F^-1(b)) = b",
    "dual.plancherel_basis": "φ_B(F(a)*F(a)) = φ(a*a) on every basis element",
    "dual.plancherel_random": "φ_B(F(a)*F(a)) = φ(a*a) on 20 seeded random elements",
    "dual.modular_delta": "⟨a, δ_B⟩ = ε(σ(a)) = ε(σ'(a)) on every basis element",
    "dual.modular_delta_inv": "⟨a, δ_B^-1⟩ = ε(σ^-1(a)) = ε(σ'^-1(a)) on every basis element",
    "dual.modular_sigma": "⟨a, σ_B(b)⟩ = ⟨δ^-1 S^-2(a), b⟩ on all basis pairs",
    "dual.modular_sigma_inv": "⟨a, σ_B^-1(b)⟩ = ⟨δ S²(a), b⟩ on all basis pairs",
    "dual.double_dual": "the double dual is (A^op, Δ^op) and the antipode of A is an isomorphism onto it",
    "dual.cointegral_unit": "for h with φ(h) = 1 that is a left co-integral, F(h) = 1_B",
})


@dataclass(frozen=True, eq=False)
class DualPair:
    a_side: HopfStarAlgebra
    b_side: HopfStarAlgebra
    pairing: Mat
    report: VerificationReport

    @cached_property
    def fourier_matrix(self) -> Mat:
        """``F(a)_i = φ(a_i a)``: the matrix ``[φ(a_i a_j)]``."""
        return self.a_side.phi_matrix


def dualize(a: HopfStarAlgebra, require_positive: bool = True) -> DualPair:
    """Build ``B = Â`` with ``Δ_B = Δ̂^op`` and verify it.

    Raises :class:`EngineError` when the dual fails the Hopf axiom gate.
    """
    d = a.dim
    mult = tuple(
        tuple(tuple(a.comult[i].coeffs[j, k] for i in range(d)) for k in range(d))
        for j in range(d)
    )
    # ⟨a_j ⊗ a_k, Δ_B(b_i)⟩ = ⟨a_k a_j, b_i⟩
    comult = tuple(
        Tensor2(Mat(d, d, [tuple(a.mult[k][j][i] for k in range(d)) for j in range(d)]))
        for i in range(d)
    )
    S_B = a.antipode.transpose().inverse()
    star_B = (a.star.conj() @ a.antipode).transpose()
    P = a.phi_matrix
    phi_B = P.inverse().transpose().apply(a.counit)
    psi_B = S_B.transpose().apply(phi_B)
    b = HopfStarAlgebra(
        dim=d,
        labels=tuple(f"ω[{lab}]" for lab in a.labels),
        mult=mult,
        unit=tuple(a.counit),
        comult=comult,
        counit=tuple(a.unit),
        antipode=S_B,
        star=star_B,
        phi=phi_B,
        psi=psi_B,
        name=f"dual({a.name})",
        model="dual",
        group=a.group,
        subgroup=a.subgroup,
    )
    rep = verify_axioms(b, require_positive=require_positive)
    if not rep.ok:
        raise EngineError("dual algebra fails the Hopf axioms: "
                          + "; ".join(rep.summary_lines()))
    return DualPair(a, b, Mat.identity(d), rep)


def fourier(pair: DualPair, x: Vec) -> Vec:
    """``F(x) = φ(· x)`` in coordinates of ``B``."""
    if len(x) != pair.a_side.dim:
        raise ValueError("element does not belong to the A side")
    return pair.fourier_matrix.apply(x)


def inverse_fourier(pair: DualPair, y: Vec) -> Vec:
    """``a = φ_B(S_B^-1(·) y)``: coordinate ``i`` is ``φ_B(S_B^-1(ω_i) y)``."""
    b = pair.b_side
    if len(y) != b.dim:
        raise ValueError("element does not belong to the B side")
    return tuple(b.phi_of(b.multiply(b.S_inv(b.basis(i)), y)) for i in range(b.dim))


def sample_elements(dim: int, count: int = 20, seed: int = 20240601) -> list[Vec]:
    """Deterministic pseudo-random elements with small Gaussian-integer coordinates."""
    rng = random.Random(seed + dim)
    out = []
    for _ in range(count):
        out.append(tuple(Scalar(rng.randint(-3, 3), rng.randint(-2, 2)) for _ in range(dim)))
    return out


def _first(pred, items):
    for it in items:
        if not pred(it):
            return it
    return None


def verify_pairing(pair: DualPair) -> VerificationReport:
    """Independent checks of the pairing conventions between ``A`` and ``B``."""
    a, b = pair.a_side, pair.b_side
    d = a.dim
    rep = VerificationReport(b.name)
    pm = pair.pairing
    rep.check("dual.pairing_perfect", pm.rank() == d, "pairing is degenerate", {})

    def pair_ab(x: Vec, y: Vec) -> Scalar:
        return dot(x, pm.apply(y))

    A = [a.basis(i) for i in range(d)]
    B = [b.basis(i) for i in range(d)]
    bad = None
    for i in range(d):
        for j in range(d):
            if pair_ab(a.S(A[i]), B[j]) != pair_ab(A[i], b.S_inv(B[j])):
                bad = [i, j]
                break
        if bad:
            break
    rep.check("dual.antipode_pairing", bad is None, "⟨S(a),b⟩ ≠ ⟨a,S^-1(b)⟩", {"basis": bad})

    bad = None
    for i in range(d):
        t = a.comult[i]
        for j in range(d):
            for k in range(d):
                if pair_ab(A[i], b.multiply(B[j], B[k])) != t.coeffs[j, k]:
                    bad = [i, j, k]
                    break
            if bad:
                break
        if bad:
            break
    rep.check("dual.product_pairing", bad is None, "product of B is not dual to Δ_A", {"basis": bad})

    bad = None
    for i in range(d):
        t = b.comult[i]
        for j in range(d):
            for k in range(d):
                if t.coeffs[j, k] != pair_ab(a.multiply(A[k], A[j]), B[i]):
                    bad = [i, j, k]
                    break
            if bad:
                break
        if bad:
            break
    rep.check("dual.coproduct_pairing", bad is None, "Δ_B is not the flipped dual of the product",
              {"basis": bad})

    bad = None
    for i in range(d):
        for j in range(d):
            lhs = pair_ab(A[i], b.star_of(B[j]))
            rhs = pair_ab(a.star_of(a.S(A[i])), B[j]).conjugate()
            if lhs != rhs:
                bad = [i, j]
                break
        if bad:
            break
    rep.check("dual.star_pairing", bad is None, "⟨a,b*⟩ ≠ conj⟨S(a)*,b⟩", {"basis": bad})

    ok = all(b.counit[j] == pair_ab(a.unit, B[j]) for j in range(d)) and \
        all(pair_ab(A[i], b.unit) == a.counit[i] for i in range(d))
    rep.check("dual.counit_unit", ok, "counit/unit of B do not match evaluation at 1_A and ε_A", {})

    samples = sample_elements(d, 15, seed=7)
    bad = None
    for n in range(5):
        x, y, z = samples[3 * n], samples[3 * n + 1], samples[3 * n + 2]
        # B acting on A: y▷x = (ι⊗y)Δ(x)
        def act_b(bb, aa):
            return a.slice_right(a.comultiply(aa), pm.apply(bb))
        # A acting on B: x▷y = (ι⊗x)Δ_B(y)
        def act_a(aa, bb):
            return b.slice_right(b.comultiply(bb), pm.transpose().apply(aa))
        if act_b(b.multiply(y, z), x) != act_b(y, act_b(z, x)):
            bad = {"triple": n, "action": "B on A"}
            break
        if act_a(a.multiply(x, z), y) != act_a(z, act_a(x, y)):
            bad = {"triple": n, "action": "A on B"}
            break
    rep.check("dual.module_actions", bad is None, "induced module actions are not associative", bad)

    F = pair.fourier_matrix
    bad = _first(lambda i: b.phi_of(F.col(i)) == a.counit[i], range(d))
    rep.check("dual.integral_rule", bad is None, "φ_B(F(a)) ≠ ε(a)", {"basis": [bad]})

    bad = _first(lambda i: inverse_fourier(pair, fourier(pair, A[i])) == A[i]
                 and fourier(pair, inverse_fourier(pair, B[i])) == B[i], range(d))
    rep.check("dual.fourier_inverse", bad is None, "Fourier inversion fails", {"basis": [bad]})
    return rep


def verify_plancherel(pair: DualPair, count: int = 20) -> VerificationReport:
    a, b = pair.a_side, pair.b_side
    rep = VerificationReport(b.name)

    def holds(x: Vec) -> bool:
        y = fourier(pair, x)
        return b.phi_of(b.multiply(b.star_of(y), y)) == a.phi_of(a.multiply(a.star_of(x), x))

    bad = _first(lambda i: holds(a.basis(i)), range(a.dim))
    rep.check("dual.plancherel_basis", bad is None, "Plancherel fails on a basis element",
              {"basis": [bad]})
    bad = _first(holds, sample_elements(a.dim, count))
    rep.check("dual.plancherel_random", bad is None, "Plancherel fails on a sampled element",
              {"element": witness_vec(bad) if bad else None})
    return rep


def verify_dual_modular(pair: DualPair, md_a: ModularData | None = None,
                        md_b: ModularData | None = None) -> VerificationReport:
    a, b = pair.a_side, pair.b_side
    md_a = md_a or compute_modular_data(a)
    md_b = md_b or compute_modular_data(b)
    d = a.dim
    rep = VerificationReport(b.name)
    pm = pair.pairing

    def pair_ab(x: Vec, y: Vec) -> Scalar:
        return dot(x, pm.apply(y))

    sig, sigp = md_a.sigma, md_a.sigma_prime
    sig_inv, sigp_inv = sig.inverse(), sigp.inverse()
    A = [a.basis(i) for i in range(d)]
    bad = _first(lambda i: pair_ab(A[i], md_b.delta) == a.eps(sig.col(i)) == a.eps(sigp.col(i)),
                 range(d))
    rep.check("dual.modular_delta", bad is None, "⟨a,δ_B⟩ ≠ ε(σ(a))", {"basis": [bad]})
    bad = _first(lambda i: pair_ab(A[i], md_b.delta_inv) == a.eps(sig_inv.col(i))
                 == a.eps(sigp_inv.col(i)), range(d))
    rep.check("dual.modular_delta_inv", bad is None, "⟨a,δ_B^-1⟩ ≠ ε(σ^-1(a))", {"basis": [bad]})

    Sinv2 = a.antipode_inv @ a.antipode_inv
    S2 = a.antipode @ a.antipode
    sig_b, sig_b_inv = md_b.sigma, md_b.sigma.inverse()
    bad = bad2 = None
    for i in range(d):
        left1 = a.multiply(md_a.delta_inv, Sinv2.col(i))
        left2 = a.multiply(md_a.delta, S2.col(i))
        for j in range(d):
            bj = b.basis(j)
            if bad is None and pair_ab(A[i], sig_b.col(j)) != pair_ab(left1, bj):
                bad = [i, j]
            if bad2 is None and pair_ab(A[i], sig_b_inv.col(j)) != pair_ab(left2, bj):
                bad2 = [i, j]
    rep.check("dual.modular_sigma", bad is None, "⟨a,σ(b)⟩ ≠ ⟨δ^-1S^-2(a),b⟩", {"basis": bad})
    rep.check("dual.modular_sigma_inv", bad2 is None, "⟨a,σ^-1(b)⟩ ≠ ⟨δS²(a),b⟩", {"basis": bad2})
    return rep


def verify_double_dual(pair: DualPair) -> VerificationReport:
    """Compare ``dualize(dualize(A))`` with ``A`` on canonical bases.

    With the opposite coproduct on each dual the double dual is
    ``(A^op, Δ^op)``; the antipode of ``A`` is the pairing-compatible
    isomorphism, and the identity matrix is one exactly when ``S`` is trivial.
    """
    a = pair.a_side
    c = dualize(pair.b_side).b_side
    d = a.dim
    rep = VerificationReport(c.name)
    problems = []
    for i in range(d):
        for j in range(d):
            if c.mult[i][j] != a.mult[j][i]:
                problems.append(("opposite product", i, j))
                break
        if c.comult[i] != a.comult[i].flip():
            problems.append(("opposite coproduct", i))
        if problems:
            break
    if c.counit != a.counit or c.unit != a.unit:
        problems.append(("counit/unit",))
    S = a.antipode
    basis = [a.basis(i) for i in range(d)]
    for i in range(d):
        if c.comultiply(S.col(i)) != a.comult[i].map_legs(S, S):
            problems.append(("S not comultiplicative onto double dual", i))
            break
        for j in range(d):
            if S.apply(a.multiply(basis[i], basis[j])) != c.multiply(S.col(i), S.col(j)):
                problems.append(("S not multiplicative onto double dual", i, j))
                break
        if c.star_of(S.col(i)) != S.apply(a.star_of(basis[i])):
            problems.append(("S does not intertwine stars", i))
    if S.transpose().apply(c.counit) != a.counit or c.antipode @ S != S @ a.antipode:
        problems.append(("S does not intertwine counit/antipode",))
    # φ_C∘S is a left integral on A, so it is a multiple of φ
    phi_pulled = S.transpose().apply(c.phi)
    k = next((i for i in range(d) if a.phi[i]), None)
    ratio = phi_pulled[k] / a.phi[k] if k is not None else ZERO
    if not ratio or vec_scale(ratio, a.phi) != phi_pulled:
        problems.append(("integrals not proportional",))
    rep.check("dual.double_dual", not problems, "double dual comparison failed",
              {"problems": [list(map(str, p)) for p in problems[:3]],
               "identity_is_iso": S.is_identity()})
    return rep


def check_cointegral_unit(pair: DualPair, h: Vec, rep: VerificationReport) -> None:
    a, b = pair.a_side, pair.b_side
    is_co = all(a.multiply(a.basis(i), h) == vec_scale(a.counit[i], h) for i in range(a.dim))
    if not is_co:
        rep.skip("dual.cointegral_unit", "element is not a left co-integral")
        return
    hn = vec_scale(a.phi_of(h).inverse(), h)
    rep.check("dual.cointegral_unit", fourier(pair, hn) == b.unit, "F(h) ≠ 1_B",
              {"element": witness_vec(fourier(pair, hn))})
