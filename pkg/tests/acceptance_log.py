"""Collects one verdict per acceptance criterion for the terminal summary."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass

RESULTS: dict[int, "Verdict"] = {}


@dataclass
class Verdict:
    number: int
    title: str
    ok: bool
    elapsed: float
    limit: float
    detail: str = ""

    def line(self) -> str:
        state = "PASS" if self.ok else "FAIL"
        extra = f"; {self.detail}" if self.detail else ""
        return f"{state} criterion {self.number}: {self.title} ({self.elapsed:.2f}s / {self.limit:g}s{extra})"


class Check:
    def __init__(self) -> None:
        self.failures: list[str] = []
        self.notes: list[str] = []

    def expect(self, cond: bool, message: str) -> None:
        if not cond:
            self.failures.append(message)


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the block; record PASS only if nothing failed and it beat ``limit``."""
    check = Check()
    start = time.perf_counter()
    error = None
    try:
        yield check
    except Exception as exc:  # recorded, then re-raised for pytest
        error = exc
        check.failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        check.failures.append(f"took {elapsed:.2f}s, limit {limit:g}s")
    detail = "; ".join(check.failures[:3] or check.notes)
    RESULTS[number] = Verdict(number, title, not check.failures, elapsed, limit, detail)
    if error is not None:
        raise error
    assert not check.failures, "\n".join(check.failures)
