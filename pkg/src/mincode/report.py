"""Text and JSON rendering of :class:`~mincode.analysis.CodeReport`."""

from __future__ import annotations

import json

from mincode.analysis import SKIPPED, CodeReport


def to_json(report: CodeReport) -> str:
    """Stable JSON: fixed key order, no timestamps, one field per line."""
    return dumps_flat(report.to_dict())


def dumps_flat(doc: dict) -> str:
    # Top-level keys on their own lines, values (pair lists included) inline.
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"


def _flag(value) -> str:
    if value is None:
        return "n/a"
    if value == SKIPPED:
        return "skipped"
    return "yes" if value else "no"


def to_text(report: CodeReport) -> str:
    r = report
    d = "?" if r.d is None else r.d
    lines = [f"code: [{r.n},{r.k},{d}]_{r.q}" + (f"  ({r.name})" if r.name else "")]
    if r.distribution is not None:
        lines.append(f"max weight: {r.w_max}")
        lines.append(f"weight enumerator: {r.distribution.enumerator()}")
        ratio = f"{r.ab_ratio.numerator}/{r.ab_ratio.denominator}"
        lines.append(f"w_min/w_max = {ratio} vs (q-1)/q = {r.q - 1}/{r.q}: AB {'satisfied' if r.ab_satisfied else 'violated'}")
    else:
        lines.append("weight distribution: not enumerated (above cap)")
    lines.append(f"minimal: {_flag(r.minimal)}")
    if r.witness is not None:
        outer, inner = (" ".join(map(str, w.tolist())) for w in r.witness)
        lines.append(f"  witness: supp({inner}) inside supp({outer})")
    lines.append(f"projective: {_flag(r.projective)}")
    lines.append(f"self-orthogonal: {_flag(r.self_orthogonal)}")
    if r.doubly_even is not None:
        lines.append(f"doubly even: {_flag(r.doubly_even)}")
    if r.griesmer_length is not None:
        lines.append(f"Griesmer bound: {r.griesmer_length}, defect {r.griesmer_defect}")
    if r.n_prime is not None:
        lines.append(f"n': {r.n_prime}" + (f", pad {r.pad}" if r.pad else ""))
    if r.predicted_distribution is not None:
        verdict = "matches" if r.predicted_matches else "DIFFERS from"
        lines.append(f"predicted enumerator: {r.predicted_distribution.enumerator()} ({verdict} measured)")
    if r.complement_threshold_met is not None:
        lines.append(f"complement threshold q^(h+k-2) > w_max: {_flag(r.complement_threshold_met)}")
    return "\n".join(lines) + "\n"


def render(report: CodeReport, as_json: bool) -> str:
    return to_json(report) if as_json else to_text(report)
