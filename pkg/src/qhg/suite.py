"""Group specs and the full verification suite.

A suite run is split into independent units (one per model, plus the
ordered-pair unit when a second subgroup is given).  Units only receive the
spec dictionary, rebuild everything from it, and return a report; assembly
sorts the results, so the output does not depend on the number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .compact import build_central_quotient, build_compact_hypergroup, hecke_structure
from .discrete import (build_C1, build_discrete_hypergroup, build_expectations, discrete_type_gate,
                       verify_leg_monotonicity, verify_left_invariance)
from .duality import (check_cointegral_unit, dualize, verify_double_dual, verify_dual_modular,
                      verify_pairing, verify_plancherel)
from .group import FiniteGroup, GroupError, Subgroup, double_cosets, group_from_json, is_normal, left_cosets
from .hopf import (HopfStarAlgebra, build_function_algebra, build_group_algebra, cointegral_space,
                   compute_modular_data, verify_axioms, verify_modular_data)
from .legs import coset_orientation, legs_of, verify_nondegenerate_local_units, verify_C_membership, verify_C_structure
from .projection import canonical_projection, centrality_equivalences, fourier_projection, verify_ordered_pair
from .report import VerificationReport, register

__all__ = ["GroupSpec", "SpecError", "parse_spec", "suite_cap", "run_model", "run_chain", "run_suite", "run_spec"]

DEFAULT_SUITE_CAP = 24
MODELS = ("function", "group")

CHECKS = register({
    "group.valid": "the multiplication table is a group and K (and K') are subgroups",
    "group.coset_counts": "|G| = Σ double-coset sizes = [G:K]·|K|",
    "group.normal": "whether K is normal in G",
})


class SpecError(ValueError):
    """The group spec cannot be turned into a verifiable instance."""


@dataclass
class GroupSpec:
    raw: dict
    group: FiniteGroup
    subgroup: Subgroup
    second_subgroup: Subgroup | None
    models: tuple[str, ...]
    instance: str = field(default="")


def suite_cap() -> int:
    raw = os.environ.get("QHG_ORDER_CAP")
    if raw is None:
        return DEFAULT_SUITE_CAP
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"QHG_ORDER_CAP must be an integer, got {raw!r}") from None


def _instance_id(raw: dict, g: FiniteGroup, k: Subgroup) -> str:
    if "name" in raw:
        return str(raw["name"])
    src = raw.get("catalog") or g.name or f"group of order {g.order}"
    sub = raw.get("subgroup")
    sub = sub if isinstance(sub, str) else f"K of order {k.order}"
    return f"{src} / {sub}"


def parse_spec(raw: dict) -> GroupSpec:
    if not isinstance(raw, dict):
        raise SpecError("group spec must be a JSON object")
    model = raw.get("model", "both")
    if model not in ("function", "group", "both"):
        raise SpecError(f"model must be function, group or both, got {model!r}")
    try:
        g, k, k2 = group_from_json(raw)
    except (GroupError, KeyError, TypeError, ValueError) as exc:
        raise SpecError(str(exc)) from exc
    cap = suite_cap()
    if g.order > cap:
        raise SpecError(f"group order {g.order} exceeds the suite cap {cap} (set QHG_ORDER_CAP)")
    models = MODELS if model == "both" else (model,)
    return GroupSpec(raw, g, k, k2, models, _instance_id(raw, g, k))


def _build(g: FiniteGroup, k: Subgroup, model: str) -> HopfStarAlgebra:
    return build_function_algebra(g, k) if model == "function" else build_group_algebra(g, k)


def _group_checks(spec: GroupSpec) -> VerificationReport:
    g, k, k2 = spec.group, spec.subgroup, spec.second_subgroup
    rep = VerificationReport(spec.instance)
    try:
        g.validate()
        k.validate()
        if k2 is not None:
            k2.validate()
        rep.check("group.valid", True)
    except GroupError as exc:
        rep.check("group.valid", False, str(exc))
    dc = double_cosets(g, k)
    total = sum(len(c) for c in dc.classes)
    rep.check("group.coset_counts", total == g.order == len(left_cosets(g, k).classes) * k.order,
              "coset sizes do not add up", {"double_coset_total": total})
    normal = is_normal(g, k)
    rep.finding("group.normal", "true" if normal else "false", {"value": normal})
    return rep


def run_model(spec: GroupSpec, model: str) -> VerificationReport:
    """Every verifier on one model, in dependency order."""
    g, k = spec.group, spec.subgroup
    out = VerificationReport(spec.instance)
    a = _build(g, k, model)
    out.extend(verify_axioms(a), f"{model}/hopf")
    md = compute_modular_data(a)
    out.extend(verify_modular_data(a, md), f"{model}/modular")

    glp = canonical_projection(a, k)
    out.extend(glp.certificate, f"{model}/projection")

    pair = dualize(a)
    b = pair.b_side
    out.extend(pair.report, f"{model}/dual/hopf")
    md_b = compute_modular_data(b)
    out.extend(verify_modular_data(b, md_b), f"{model}/dual/modular")
    out.extend(verify_pairing(pair), f"{model}/duality")
    out.extend(verify_plancherel(pair), f"{model}/duality")
    out.extend(verify_dual_modular(pair, md, md_b), f"{model}/duality")
    out.extend(verify_double_dual(pair), f"{model}/duality")
    co_rep = VerificationReport(spec.instance)
    co = cointegral_space(a)
    check_cointegral_unit(pair, co.basis[0], co_rep)
    out.extend(co_rep, f"{model}/duality")

    f_rep = VerificationReport(spec.instance)
    kp = fourier_projection(pair, glp, f_rep)
    out.extend(f_rep, f"{model}/projection")
    out.extend(kp.certificate, f"{model}/dual/projection")
    _, c_rep = centrality_equivalences(pair, glp, kp, md_b)
    out.extend(c_rep, f"{model}/centrality")

    hyper = build_compact_hypergroup(a, glp)
    out.extend(hyper.report, f"{model}/hAh")
    if model == "group":
        out.extend(hecke_structure(a, glp, hyper).report, f"{model}/hecke")
    if all(a.multiply(glp.h, a.basis(i)) == a.multiply(a.basis(i), glp.h) for i in range(a.dim)):
        _, q_rep = build_central_quotient(a, glp)
        out.extend(q_rep, f"{model}/Ah")

    l_rep = VerificationReport(spec.instance)
    legs = legs_of(a, glp.h, l_rep, group_like=True)
    C = legs.right_leg
    l_rep.extend(verify_C_membership(a, glp, C))
    l_rep.extend(verify_C_structure(a, C, md))
    l_rep.extend(verify_nondegenerate_local_units(a, C))
    coset_orientation(a, glp, C, l_rep)
    verify_left_invariance(a, C, l_rep)
    out.extend(l_rep, f"{model}/legs")

    ex = build_expectations(a, glp)
    out.extend(ex.report, f"{model}/expectations")
    c1 = build_C1(a, glp, ex, md)
    out.extend(c1.report, f"{model}/C1")
    disc = build_discrete_hypergroup(a, glp, ex, c1, pair)
    out.extend(disc.report, f"{model}/C1")
    gate = discrete_type_gate(a, glp, ex, disc)
    out.extend(gate.report, f"{model}/gate")
    return out


def run_chain(spec: GroupSpec, model: str) -> VerificationReport:
    """Ordered-pair checks for ``K ≤ K'`` (or ``{e} ≤ K`` when no second subgroup is given)."""
    g = spec.group
    lo, hi = spec.subgroup, spec.second_subgroup
    if hi is None:
        lo, hi = Subgroup(g, (g.identity,), "trivial"), spec.subgroup
    a = _build(g, lo, model)
    pair = dualize(a)
    p_lo, p_hi = canonical_projection(a, lo), canonical_projection(a, hi)
    # χ_K ≤ χ_K' in the function model, the Haar projections reverse the order
    small, big = (p_lo, p_hi) if model == "function" else (p_hi, p_lo)
    out = VerificationReport(spec.instance)
    out.extend(verify_ordered_pair(pair, small, big), f"{model}/chain")
    m_rep = VerificationReport(spec.instance)
    verify_leg_monotonicity(a, small, big, m_rep)
    out.extend(m_rep, f"{model}/chain")
    return out


def _unit(args: tuple[dict, str, str]) -> tuple[str, VerificationReport]:
    raw, kind, model = args
    spec = parse_spec(raw)
    t = time.perf_counter()
    rep = run_model(spec, model) if kind == "model" else run_chain(spec, model)
    return f"{kind}:{model}:{time.perf_counter() - t:.3f}", rep


def _units(spec: GroupSpec, chain: bool, full: bool) -> list[tuple[dict, str, str]]:
    units = []
    for m in spec.models:
        if full:
            units.append((spec.raw, "model", m))
        if chain:
            units.append((spec.raw, "chain", m))
    return units


def run_suite(spec: GroupSpec, jobs: int = 1, chain: bool = True, full: bool = True,
              timing: bool = False) -> VerificationReport:
    """Run every unit and merge; timings are only recorded when asked for."""
    units = _units(spec, chain, full)
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(units))) as pool:
            results = list(pool.map(_unit, units))
    else:
        results = [_unit(u) for u in units]
    out = VerificationReport(spec.instance)
    if full:
        out.extend(_group_checks(spec), "group")
    for tag, rep in results:
        out.extend(rep)
        if timing:
            name, secs = tag.rsplit(":", 1)
            out.timings[name] = float(secs)
    return out


def run_spec(raw: dict, jobs: int = 1, **kw) -> VerificationReport:
    """Parse and run; parse errors surface before any check runs."""
    return run_suite(parse_spec(raw), jobs=jobs, **kw)

