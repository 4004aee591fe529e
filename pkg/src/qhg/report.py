"""Verification reports and the registry of check ids.

Every check the engine can emit is registered here with a one-line statement
of the identity it verifies.  Modules register their checks at import time;
emitting an unregistered id is an engine bug and raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .linalg import Vec
from .scalar import Scalar

__all__ = [
    "PASS", "FAIL", "SKIPPED", "FINDING", "STATUSES",
    "CheckResult", "VerificationReport", "EngineError",
    "REGISTRY", "register", "witness_vec", "SCHEMA",
]

SCHEMA = "qhg/1"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
FINDING = "finding"
STATUSES = (PASS, FAIL, SKIPPED, FINDING)

REGISTRY: dict[str, str] = {}


class EngineError(RuntimeError):
    """A consequence that must hold on certified input did not: a bug, not a finding."""


def register(checks: dict[str, str]) -> dict[str, str]:
    for cid, desc in checks.items():
        if cid in REGISTRY and REGISTRY[cid] != desc:
            raise ValueError(f"check id {cid!r} registered twice with different descriptions")
        REGISTRY[cid] = desc
    return checks


def witness_vec(v: Vec) -> list[dict]:
    return [a.to_json() for a in v]


def _jsonable(x):
    if isinstance(x, Scalar):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    detail: str = ""
    witness: object = None
    timing: float | None = None

    def to_json(self, scope: str = "") -> dict:
        out = {"id": self.check_id, "status": self.status}
        if scope:
            out["scope"] = scope
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.timing is not None:
            out["timing"] = self.timing
        return out


@dataclass
class VerificationReport:
    """An ordered collection of check results for one instance.

    Results carry a ``scope`` (for example ``"function"`` or ``"group/dual"``)
    so that one report can hold the checks of several related structures.
    """

    instance: str = ""
    results: list[tuple[str, CheckResult]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def _add(self, scope: str, res: CheckResult) -> CheckResult:
        if res.check_id not in REGISTRY:
            raise EngineError(f"unregistered check id {res.check_id!r}")
        self.results.append((scope, res))
        return res

    def check(self, check_id: str, ok: bool, detail: str = "", witness=None, scope: str = "") -> bool:
        self._add(scope, CheckResult(check_id, PASS if ok else FAIL, "" if ok else detail,
                                     None if ok else witness))
        return ok

    def finding(self, check_id: str, detail: str, witness=None, scope: str = "") -> None:
        self._add(scope, CheckResult(check_id, FINDING, detail, witness))

    def skip(self, check_id: str, detail: str, scope: str = "") -> None:
        self._add(scope, CheckResult(check_id, SKIPPED, detail))

    def extend(self, other: VerificationReport, scope: str = "") -> None:
        for s, r in other.results:
            self.results.append((_join_scope(scope, s), r))

    # queries ---------------------------------------------------------------

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for _, r in self.results)

    def failures(self) -> list[tuple[str, CheckResult]]:
        return [(s, r) for s, r in self.results if r.status == FAIL]

    def get(self, check_id: str, scope: str | None = None) -> list[CheckResult]:
        return [r for s, r in self.results
                if r.check_id == check_id and (scope is None or s == scope)]

    def status_of(self, check_id: str, scope: str | None = None) -> str:
        """Worst status among matching results (fail beats finding beats pass)."""
        found = self.get(check_id, scope)
        if not found:
            raise KeyError(check_id)
        for st in (FAIL, FINDING, SKIPPED, PASS):
            if any(r.status == st for r in found):
                return st
        raise AssertionError("unreachable")

    def passed(self, check_id: str, scope: str | None = None) -> bool:
        return self.status_of(check_id, scope) == PASS

    def ids(self) -> set[str]:
        return {r.check_id for _, r in self.results}

    def counts(self) -> dict[str, int]:
        out = {st: 0 for st in STATUSES}
        for _, r in self.results:
            out[r.status] += 1
        return out

    def sorted_results(self) -> list[tuple[str, CheckResult]]:
        return sorted(self.results, key=lambda sr: (sr[0], sr[1].check_id, sr[1].status,
                                                    sr[1].detail))

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "instance": self.instance,
            "ok": self.ok,
            "counts": self.counts(),
            "checks": [r.to_json(s) for s, r in self.sorted_results()],
            **({"timings": dict(sorted(self.timings.items()))} if self.timings else {}),
        }

    def summary_lines(self) -> Iterable[str]:
        for s, r in self.sorted_results():
            if r.status != PASS:
                where = f"[{s}] " if s else ""
                yield f"{r.status.upper():8} {where}{r.check_id}: {r.detail}"


def _join_scope(outer: str, inner: str) -> str:
    if outer and inner:
        return f"{outer}/{inner}"
    return outer or inner
