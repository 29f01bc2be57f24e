"""Verification registry: identity records, residual reports, suite runner.

Every in-scope formula is registered as an (lhs, rhs, sampler) record in
one of the groups PRELIM, CONTOUR, MELLIN, FOURIER, SERIES.  Both sides
of a record are evaluated with independent machinery (a quadrature side
never reuses the series side's intermediates) and compared as a relative
residual.  Suite runs are deterministic given a seed.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .core import Truncation
from .errors import QKitError

__all__ = [
    "IdentityRecord",
    "ResidualReport",
    "GROUPS",
    "register",
    "get_identity",
    "catalog",
    "evaluate_identity",
    "run_suite",
    "reports_to_json",
    "reports_to_csv",
]

GROUPS = ("PRELIM", "CONTOUR", "MELLIN", "FOURIER", "SERIES")

# Default tolerance ladder per group; records may override.
GROUP_TOL = {
    "PRELIM": 1e-10,
    "CONTOUR": 1e-8,
    "MELLIN": 1e-5,
    "FOURIER": 1e-8,
    "SERIES": 1e-10,
}


@dataclass(frozen=True)
class IdentityRecord:
    """A registered identity: two evaluator closures plus a domain sampler.

    lhs/rhs take (params: dict, tr: Truncation) and return a complex
    value.  sampler takes a random.Random and returns a params dict that
    satisfies every domain constraint of the identity.  route tags
    document the evaluation machinery of each side so the structural
    independence of the two routes can be asserted.
    """

    id: str
    group: str
    anchor: str
    lhs: object
    rhs: object
    sampler: object
    lhs_route: str
    rhs_route: str
    default_tol: float = 0.0
    corrected: bool = False

    def tol(self) -> float:
        return self.default_tol if self.default_tol > 0 else GROUP_TOL[self.group]


@dataclass
class ResidualReport:
    """Outcome of evaluating one identity at one parameter point."""

    id: str
    group: str
    params: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    status: str  # pass | fail | skipped(budget) | skipped(domain)
    corrected: bool
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


_REGISTRY: dict[str, IdentityRecord] = {}


def register(record: IdentityRecord) -> IdentityRecord:
    if record.group not in GROUPS:
        raise QKitError(f"unknown group {record.group!r}")
    if record.id in _REGISTRY:
        raise QKitError(f"duplicate identity id {record.id!r}")
    _REGISTRY[record.id] = record
    return record


def _load_registry():
    # Importing the registry package populates _REGISTRY via register().
    from . import registry  # noqa: F401


def get_identity(identity_id: str) -> IdentityRecord:
    _load_registry()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise QKitError(f"unknown identity id {identity_id!r}") from None


def all_identities() -> list:
    _load_registry()
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def catalog() -> list:
    """Stable-ordered sequence of (id, group, anchor) for every identity."""
    return [(r.id, r.group, r.anchor) for r in all_identities()]


def _rel_err(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def _truncation_for(tol: float) -> Truncation:
    # engines get a thin slice of the identity tolerance: integrals with
    # internal cancellation amplify the integrand's own evaluation error
    # by the mass-to-value ratio, so the slice must leave a wide reserve
    # (and never be looser than 1e-9, for the vertical-line tail bound)
    return Truncation(tol=max(1e-14, min(tol * 1e-3, 1e-9)), max_terms=100000)


def evaluate_identity(identity_id: str, params: dict, tol: float = 0.0) -> ResidualReport:
    """Evaluate both sides of one identity and report the residual.

    Numeric failures (budget exhaustion, overflow) yield a
    skipped(budget) report; parameter-domain violations raised by either
    side yield skipped(domain).  Failures are data, not exceptions.
    """
    rec = get_identity(identity_id)
    use_tol = tol if tol > 0 else rec.tol()
    tr = _truncation_for(use_tol)
    start = time.perf_counter()
    try:
        lhs = complex(rec.lhs(params, tr))
        rhs = complex(rec.rhs(params, tr))
    except QKitError as exc:
        kind = "domain" if "domain" in type(exc).__name__.lower() else "budget"
        wall = (time.perf_counter() - start) * 1000.0
        return ResidualReport(
            rec.id, rec.group, dict(params), complex("nan"), complex("nan"),
            float("nan"), float("nan"), f"skipped({kind})", rec.corrected, wall,
        )
    wall = (time.perf_counter() - start) * 1000.0
    abs_err = abs(lhs - rhs)
    rel = _rel_err(lhs, rhs)
    status = "pass" if rel <= use_tol else "fail"
    return ResidualReport(
        rec.id, rec.group, dict(params), lhs, rhs, abs_err, rel, status, rec.corrected, wall
    )


def sample_params(identity_id: str, seed: int, index: int) -> dict:
    """Deterministic parameter draw #index for one identity."""
    rec = get_identity(identity_id)
    rng = random.Random(f"{seed}:{identity_id}:{index}")
    return rec.sampler(rng)


def _evaluate_task(task):
    identity_id, params, tol = task
    return evaluate_identity(identity_id, params, tol)


def run_suite(group: str, samples_per_identity: int = 3, seed: int = 0,
              tol_override: float = 0.0, threads: int = 1) -> list:
    """Evaluate every identity of a group at sampled points.

    Deterministic given the seed: parameter draws depend only on
    (seed, identity id, sample index), and reports are ordered by
    (identity id, sample index) regardless of evaluation parallelism.
    """
    if group not in GROUPS:
        raise QKitError(f"unknown group {group!r}")
    records = [r for r in all_identities() if r.group == group]
    tasks = []
    for rec in records:
        for k in range(samples_per_identity):
            params = sample_params(rec.id, seed, k)
            tasks.append((rec.id, params, tol_override))
    if threads > 1 and len(tasks) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_evaluate_task, tasks, chunksize=1))
    else:
        reports = [_evaluate_task(t) for t in tasks]
    return reports


def _param_value_to_json(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def report_to_dict(rep: ResidualReport, deterministic: bool = True) -> dict:
    """Schema: {id, group, params, lhs:[re,im], rhs:[re,im], abs_err, rel_err,
    status, corrected, wall_ms}.

    wall_ms is serialized as 0 so that fixed-seed runs are byte-identical;
    measured timings are reported separately on stderr by the CLI.
    """
    return {
        "id": rep.id,
        "group": rep.group,
        "params": {k: _param_value_to_json(v) for k, v in sorted(rep.params.items())},
        "lhs": [rep.lhs.real, rep.lhs.imag],
        "rhs": [rep.rhs.real, rep.rhs.imag],
        "abs_err": rep.abs_err,
        "rel_err": rep.rel_err,
        "status": rep.status,
        "corrected": rep.corrected,
        "wall_ms": 0.0 if deterministic else rep.wall_ms,
    }


def reports_to_json(reports, deterministic: bool = True) -> str:
    return json.dumps([report_to_dict(r, deterministic) for r in reports], indent=2,
                      allow_nan=True, sort_keys=False)


def reports_to_csv(reports, deterministic: bool = True) -> str:
    import csv
    import io

    cols = ["id", "group", "params", "lhs", "rhs", "abs_err", "rel_err",
            "status", "corrected", "wall_ms"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rep in reports:
        d = report_to_dict(rep, deterministic)
        writer.writerow([
            d["id"], d["group"], json.dumps(d["params"], sort_keys=True),
            json.dumps(d["lhs"]), json.dumps(d["rhs"]),
            repr(d["abs_err"]), repr(d["rel_err"]), d["status"],
            d["corrected"], repr(d["wall_ms"]),
        ])
    return buf.getvalue()
