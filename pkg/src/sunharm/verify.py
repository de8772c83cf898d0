"""Case orchestration: run verifications, aggregate structured reports.

A report document is a plain dict (JSON-ready).  Its content, apart from the
timing fields ``seconds`` and ``total_seconds``, is a pure function of the
requested configuration and the tool version; sweep entries are emitted in
(n, m, kind, dual) order regardless of how many workers computed them.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from .checks import lemma_battery, riemann_split_report
from .exactfield import BACKEND_NAME
from .harmonic import (
    DECISION_NOTES,
    classify,
    cocycle_from_vector,
    kernel_is_invariant,
    assemble_system,
)
from .linalg import kernel_basis
from .symrep import RepContext

VERSION = "0.1.0"

_RIEMANN_NOTE = (
    "n = 1 kernels split into both linearity types, so the one-sided"
    " classifier does not apply; reporting the split instead"
)


def verify_case(n: int, m: int, dual: bool = False, with_lemmas: bool = False) -> dict:
    """Kernel computation + classification for one case (n = 1 gets the
    split report instead of the one-sided classifier)."""
    t0 = time.perf_counter()
    ctx = RepContext(n, m, dual)
    if n == 1:
        rep = riemann_split_report(ctx)
        case = {
            "case": {"n": n, "m": m, "dual": dual},
            "mode": "riemann-surface",
            "note": _RIEMANN_NOTE,
            "system": {
                "rows": (1 + 1) * ctx.dim_w,
                "columns": 2 * ctx.dim_w,
            },
            "kernel": {"dimension": rep["kernel_dim"], "expected_dimension": None},
            "riemann": {
                "complex_linear_dim": rep["complex_linear_dim"],
                "conjugate_linear_dim": rep["conjugate_linear_dim"],
                "split": rep["split"],
            },
            "checks": rep["checks"],
            "lemmas": [],
            "decisions": list(DECISION_NOTES),
        }
    else:
        M = assemble_system(ctx)
        kernel = [cocycle_from_vector(ctx, v) for v in kernel_basis(M)]
        report = classify(ctx, kernel, (M.rows, M.cols))
        report.checks.append(
            {
                "name": "compact-invariance",
                "status": "pass" if kernel_is_invariant(ctx, kernel) else "fail",
                "details": "the unitary corpus maps the kernel into itself",
            }
        )
        case = report.as_dict()
    if with_lemmas:
        case["lemmas"] = lemma_battery(n, m)
    case["seconds"] = round(time.perf_counter() - t0, 6)
    return case


def lemmas_case(n: int, m: int) -> dict:
    """The structure-check battery alone, as a report entry."""
    t0 = time.perf_counter()
    case = {
        "case": {"n": n, "m": m, "dual": False},
        "mode": "lemma-battery",
        "checks": [],
        "lemmas": lemma_battery(n, m),
        "decisions": list(DECISION_NOTES),
        "seconds": round(time.perf_counter() - t0, 6),
    }
    return case


_KIND_ORDER = {"verify-primal": 0, "verify-dual": 1, "lemmas": 2, "riemann": 3}


def _case_key(spec: tuple) -> tuple:
    kind, n, m = spec
    return (n, m, _KIND_ORDER[kind])


def _run_spec(spec: tuple) -> dict:
    kind, n, m = spec
    if kind == "verify-primal":
        return verify_case(n, m, dual=False)
    if kind == "verify-dual":
        return verify_case(n, m, dual=True)
    if kind == "lemmas":
        return lemmas_case(n, m)
    if kind == "riemann":
        return verify_case(n, m, dual=False)
    raise ValueError(f"unknown case kind {kind}")


def sweep_specs(n_max: int | None, m_max: int | None) -> list[tuple]:
    """Deterministic case list for a sweep.

    With explicit bounds: the rectangle 2 <= n <= n_max, 1 <= m <= m_max.
    With defaults: the budgeted grid n <= 3, m <= 4 plus (4,1) and (4,2).
    Riemann-surface entries (n = 1, m in {2, 4}) ride along when m_max
    allows.  Every (n, m) contributes a primal case, a dual case and the
    structure battery.
    """
    defaulted = n_max is None and m_max is None
    if defaulted:
        grid = [(n, m) for n in (2, 3) for m in (1, 2, 3, 4)]
        grid += [(4, 1), (4, 2)]
        mm = 4
    else:
        n_max = 3 if n_max is None else n_max
        m_max = 4 if m_max is None else m_max
        if n_max < 2 or m_max < 1:
            raise ValueError("sweep bounds must cover at least the case (2, 1)")
        grid = [(n, m) for n in range(2, n_max + 1) for m in range(1, m_max + 1)]
        mm = m_max
    specs: list[tuple] = []
    for n, m in grid:
        specs.append(("verify-primal", n, m))
        specs.append(("verify-dual", n, m))
        specs.append(("lemmas", n, m))
    for m in (2, 4):
        if m <= mm:
            specs.append(("riemann", 1, m))
    return sorted(specs, key=_case_key)


def run_sweep(n_max: int | None, m_max: int | None, jobs: int = 1) -> dict:
    specs = sweep_specs(n_max, m_max)
    t0 = time.perf_counter()
    cases: list[dict] = []
    interrupted = False
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                cases = list(pool.map(_run_spec, specs))
        else:
            for spec in specs:
                cases.append(_run_spec(spec))
    except KeyboardInterrupt:
        interrupted = True
        done = len(cases)
        for spec in specs[done:]:
            kind, n, m = spec
            cases.append(
                {
                    "case": {"n": n, "m": m, "dual": kind == "verify-dual"},
                    "mode": kind,
                    "status": "incomplete",
                    "checks": [],
                    "lemmas": [],
                }
            )
    # jobs is an execution detail: concurrency must not affect the report.
    doc = make_document(
        command="sweep",
        config={"n_max": n_max, "m_max": m_max},
        cases=cases,
    )
    if interrupted:
        doc["status"] = "incomplete"
    doc["total_seconds"] = round(time.perf_counter() - t0, 6)
    return doc


def make_document(command: str, config: dict, cases: list[dict]) -> dict:
    counts = {"pass": 0, "fail": 0, "vacuous": 0}
    incomplete = 0
    for case in cases:
        if case.get("status") == "incomplete":
            incomplete += 1
            continue
        for c in case.get("checks", []):
            counts[c["status"]] = counts.get(c["status"], 0) + 1
        for c in case.get("lemmas", []):
            counts[c["status"]] = counts.get(c["status"], 0) + 1
    doc = {
        "tool": "sunharm",
        "version": VERSION,
        "backend": BACKEND_NAME,
        "command": command,
        "config": config,
        "cases": cases,
        "summary": {
            "cases": len(cases),
            "checks_passed": counts.get("pass", 0),
            "checks_failed": counts.get("fail", 0),
            "checks_vacuous": counts.get("vacuous", 0),
            "cases_incomplete": incomplete,
        },
    }
    return doc


def exit_code_for(doc: dict) -> int:
    """0 iff every executed check passed and nothing was left incomplete."""
    s = doc["summary"]
    if s["checks_failed"] or s["cases_incomplete"]:
        return 1
    return 0
