"""Shared record of acceptance verdicts, printed at the end of the pytest run."""

from __future__ import annotations

LINES: list[str] = []


def record(criterion: str, passed: bool, detail: str) -> None:
    line = f"{'PASS' if passed else 'FAIL'}  criterion {criterion}: {detail}"
    LINES.append(line)
    print(line)
