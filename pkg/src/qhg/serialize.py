"""JSON dumps of structure constants.  Every scalar is an exact ``{"re", "im"}`` fraction pair."""

from __future__ import annotations

from .compact import CompactHypergroup, HeckeBasis
from .discrete import C1Algebra, DiscreteHypergroup, Expectations
from .hopf import HopfStarAlgebra
from .linalg import Mat, Subspace, Tensor2, Vec
from .report import SCHEMA, EngineError
from .scalar import Scalar

__all__ = [
    "vec_to_json", "vec_from_json", "mat_to_json", "mat_from_json", "dump_algebra",
    "load_algebra", "dump_hecke", "dump_discrete", "dump_hypergroup",
]


def vec_to_json(v: Vec) -> list:
    return [c.to_json() for c in v]


def vec_from_json(obj) -> Vec:
    return tuple(Scalar.from_json(c) for c in obj)


def mat_to_json(m: Mat) -> list:
    return [vec_to_json(r) for r in m.entries]


def mat_from_json(obj) -> Mat:
    rows = [vec_from_json(r) for r in obj]
    return Mat(len(rows), len(rows[0]) if rows else 0, rows)


def _space_to_json(s: Subspace) -> dict:
    return {"dim": s.dim, "pivots": list(s.pivots), "basis": [vec_to_json(b) for b in s.basis]}


def dump_algebra(a: HopfStarAlgebra) -> dict:
    return {
        "schema": SCHEMA,
        "name": a.name,
        "model": a.model,
        "dim": a.dim,
        "labels": list(a.labels),
        "unit": vec_to_json(a.unit),
        "mult": [[vec_to_json(a.mult[i][j]) for j in range(a.dim)] for i in range(a.dim)],
        "comult": [mat_to_json(t.coeffs) for t in a.comult],
        "counit": vec_to_json(a.counit),
        "antipode": mat_to_json(a.antipode),
        "star": mat_to_json(a.star),
        "phi": vec_to_json(a.phi),
        "psi": vec_to_json(a.psi),
    }


def load_algebra(obj: dict) -> HopfStarAlgebra:
    """Inverse of :func:`dump_algebra`.  The result carries no group data (model ``custom``)."""
    if obj.get("schema") != SCHEMA:
        raise EngineError(f"unsupported schema {obj.get('schema')!r}")
    d = int(obj["dim"])
    try:
        mult = tuple(tuple(vec_from_json(obj["mult"][i][j]) for j in range(d)) for i in range(d))
        return HopfStarAlgebra(
            dim=d,
            labels=tuple(obj.get("labels") or (f"b{i}" for i in range(d))),
            mult=mult,
            unit=vec_from_json(obj["unit"]),
            comult=tuple(Tensor2(mat_from_json(m)) for m in obj["comult"]),
            counit=vec_from_json(obj["counit"]),
            antipode=mat_from_json(obj["antipode"]),
            star=mat_from_json(obj["star"]),
            phi=vec_from_json(obj["phi"]),
            psi=vec_from_json(obj["psi"]),
            name=obj.get("name", "custom"),
            model="custom",
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise EngineError(f"malformed structure-constant dump: {exc}") from exc


def dump_hypergroup(hg: CompactHypergroup) -> dict:
    out = dump_algebra(hg.algebra)
    out["space"] = _space_to_json(hg.sub.space)
    out["is_hopf"] = hg.is_hopf
    return out


def dump_hecke(a: HopfStarAlgebra, hb: HeckeBasis) -> dict:
    g = a.group
    idx = {q: i for i, q in enumerate(hb.reps)}
    return {
        "schema": SCHEMA,
        "name": f"hecke({a.name})",
        "dim": len(hb.reps),
        "representatives": [g.label(q) for q in hb.reps],
        "pi": [vec_to_json(hb.pi[q]) for q in hb.reps],
        "structure": [
            [{str(idx[r]): c.to_json() for r, c in sorted(hb.structure[q, q2].items())}
             for q2 in hb.reps]
            for q in hb.reps
        ],
    }


def dump_discrete(ex: Expectations, c1: C1Algebra, disc: DiscreteHypergroup) -> dict:
    s = disc.algebra
    return {
        "schema": SCHEMA,
        "name": s.name,
        "C": _space_to_json(ex.C),
        "S(C)": _space_to_json(ex.SC),
        "C1": _space_to_json(c1.space),
        "E": mat_to_json(ex.E),
        "E_prime": mat_to_json(ex.E_prime),
        "delta1": [mat_to_json(t.coeffs) for t in s.comult],
        "mult": [[vec_to_json(s.mult[i][j]) for j in range(s.dim)] for i in range(s.dim)],
        "is_hopf": disc.is_hopf,
    }
