"""Run the embedded fixture tables end to end.

Each row of ``data/tables.json`` names a base construction and a list of
transform steps.  The runner builds every stage, analyzes it and compares
the measured values with the stored expectations by exact equality.  Rows
whose source code is not built in are reported ``SKIPPED(external)``; rows
holding a suspected misprint are ``SKIPPED(typo)``; rows too large for the
default run are ``SKIPPED(extended)`` unless explicitly requested.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Iterable

from mincode import constructions as cons
from mincode.analysis import analyze
from mincode.codes import LinearCode, WeightDistribution
from mincode.errors import MincodeError, UnknownFamily
from mincode.families import family_parameters

PASS, FAIL = "PASS", "FAIL"


@lru_cache(maxsize=None)
def load_tables() -> dict[str, dict]:
    """Tables keyed by id and by every alias."""
    text = resources.files("mincode").joinpath("data/tables.json").read_text(encoding="utf-8")
    out: dict[str, dict] = {}
    for table in json.loads(text)["tables"]:
        for key in [table["id"], *table.get("aliases", [])]:
            out[key.lower()] = table
    return out


def table_ids() -> list[str]:
    seen: dict[str, list[str]] = {}
    for table in load_tables().values():
        seen.setdefault(table["id"], [table["id"], *table.get("aliases", [])])
    return [" / ".join(v) for v in seen.values()]


def get_table(table_id: str) -> dict:
    try:
        return load_tables()[table_id.strip().lower()]
    except KeyError:
        raise UnknownFamily(f"unknown table {table_id!r}; known: {', '.join(table_ids())}") from None


def build_base(spec: dict[str, Any]) -> LinearCode:
    kind = spec["construct"]
    if kind == "simplex":
        return cons.simplex(spec["q"], spec["m"])
    if kind == "solomon-stiffler":
        return cons.solomon_stiffler(spec["k"], spec["u"])
    if kind == "even-weight":
        return cons.even_weight_code(spec["n"])
    if kind == "dual-bch":
        return cons.dual_bch_trace(spec["m"])
    raise ValueError(f"unknown construction {kind!r}")


@dataclass
class Stage:
    code: LinearCode
    n_prime: int | None = None
    pad: int | None = None
    predicted: WeightDistribution | None = None


def run_recipe(recipe: dict[str, Any]) -> list[Stage]:
    stages = [Stage(build_base(recipe["base"]))]
    for step in recipe.get("steps", []):
        prev = stages[-1].code
        op = step["op"]
        if op == "complement":
            stages.append(Stage(cons.simplex_complement(prev, step["h"]).code))
        elif op in ("extend", "self-orthogonal-extend"):
            fn = cons.ab_violating_extend if op == "extend" else cons.self_orthogonal_extend
            r = fn(prev)
            stages.append(Stage(r.code, r.n_prime, r.pad, r.predicted))
        else:
            raise ValueError(f"unknown step {op!r}")
    return stages


@dataclass
class RowResult:
    row: str
    label: str
    status: str  # PASS, FAIL or SKIPPED(...)
    problems: list[str] = field(default_factory=list)

    @property
    def skipped(self) -> bool:
        return self.status.startswith("SKIPPED")

    def lines(self, table_id: str) -> list[str]:
        out = [f"{self.status:<18} {table_id}/{self.row}  {self.label}"]
        out.extend(f"    {p}" for p in self.problems)
        return out


def _compare(tag: str, expected: Any, measured: Any, problems: list[str]) -> None:
    if expected != measured:
        problems.append(f"{tag}: expected {expected}, measured {measured}")


def _check_stage(label: str, stage: Stage, expect: dict[str, Any], problems: list[str]) -> None:
    wants_minimal = "minimal" in expect
    report = analyze(stage.code, skip_minimality=not wants_minimal)
    measured = {
        "n": report.n, "k": report.k, "d": report.d, "w_max": report.w_max,
        "minimal": report.minimal, "ab_satisfied": report.ab_satisfied,
        "self_orthogonal": report.self_orthogonal, "doubly_even": report.doubly_even,
        "projective": report.projective, "griesmer_defect": report.griesmer_defect,
        "pad": stage.pad,
    }
    for key, want in expect.items():
        if key == "label":
            continue
        if key == "weights":
            _compare(f"{label} weights", want, report.distribution.nonzero_weights, problems)
        elif key == "distribution":
            _compare(f"{label} distribution", {w: c for w, c in want}, dict(report.distribution.counts), problems)
        else:
            _compare(f"{label} {key}", want, measured[key], problems)
    if stage.predicted is not None and stage.predicted != report.distribution:
        problems.append(f"{label} predicted {stage.predicted.counts} != measured {report.distribution.counts}")


def _check_family(fam: dict[str, Any], final: Stage, problems: list[str]) -> None:
    exp = family_parameters(fam["id"], fam["params"])
    dist = final.code.weight_distribution()
    got = (final.code.n, final.code.k, dist.min_weight, dist.max_weight)
    _compare(f"family {fam['id']} [n,k,d,w_max]", (exp.n, exp.k, exp.d, exp.w_max), got, problems)
    if final.n_prime is not None:
        _compare(f"family {fam['id']} n'", exp.n_prime, final.n_prime, problems)
    if exp.distribution is not None:
        _compare(f"family {fam['id']} distribution", dict(exp.distribution.counts), dict(dist.counts), problems)


def run_row(row: dict[str, Any], extended: bool = False) -> RowResult:
    status = row.get("status", "run")
    if status in ("external", "typo") or (status == "extended" and not extended):
        return RowResult(row["row"], row["label"], f"SKIPPED({status})")
    problems: list[str] = []
    try:
        stages = run_recipe(row["recipe"])
        expects = row["expect"]
        if len(expects) != len(stages):
            problems.append(f"recipe gives {len(stages)} stages, fixture expects {len(expects)}")
        for stage, expect in zip(stages, expects):
            _check_stage(expect.get("label", "?"), stage, expect, problems)
        if "family" in row:
            _check_family(row["family"], stages[-1], problems)
    except MincodeError as exc:
        problems.append(f"{type(exc).__name__}: {exc}")
    return RowResult(row["row"], row["label"], FAIL if problems else PASS, problems)


@dataclass
class TableResult:
    table_id: str
    rows: list[RowResult]

    @property
    def counts(self) -> dict[str, int]:
        passed = sum(r.status == PASS for r in self.rows)
        failed = sum(r.status == FAIL for r in self.rows)
        return {"passed": passed, "failed": failed, "skipped": len(self.rows) - passed - failed}

    @property
    def ok(self) -> bool:
        return self.counts["failed"] == 0

    def summary(self) -> str:
        c = self.counts
        return f"table {self.table_id}: {c['passed']} passed, {c['failed']} failed, {c['skipped']} skipped"


def reproduce(
    table_id: str,
    jobs: int = 1,
    extended: bool = False,
    emit: Callable[[str], None] | None = None,
) -> TableResult:
    """Run every row of a table; rows may run concurrently, output stays in table order."""
    table = get_table(table_id)
    rows = table["rows"]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda r: run_row(r, extended), rows))
    else:
        results = [run_row(r, extended) for r in rows]
    result = TableResult(table["id"], results)
    if emit is not None:
        for r in results:
            for line in r.lines(table["id"]):
                emit(line)
        emit(result.summary())
    return result


def all_tables() -> Iterable[str]:
    seen = []
    for t in load_tables().values():
        if t["id"] not in seen:
            seen.append(t["id"])
    return seen
