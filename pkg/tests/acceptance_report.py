"""Shared registry for the acceptance suite's PASS/FAIL summary lines."""

RESULTS: list[tuple[str, str]] = []


def record_criterion(name: str, passed: bool) -> None:
    RESULTS.append((name, "PASS" if passed else "FAIL"))
