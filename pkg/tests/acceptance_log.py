"""Shared registry for acceptance-criteria outcomes.

test_acceptance.py records one entry per criterion; the conftest terminal
hook replays them at the end of the run so the pass/fail lines are visible
even under pytest's default output capture.
"""

RESULTS: list[tuple[str, bool, str]] = []


def record(name: str, passed: bool, detail: str = "") -> None:
    RESULTS.append((name, passed, detail))
    status = "PASS" if passed else "FAIL"
    line = f"[acceptance] {name}: {status}"
    if detail:
        line += f" ({detail})"
    print(line)
