"""Brute-force references and the classical extended-Euclid baseline.

Nothing here calls into the Dayan engine or the solvers it is used to check.
The step-count comparison lives here too since it needs the Euclid counter.
"""

from __future__ import annotations

import csv
import enum
import io
import math
import random
import statistics
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

DEFAULT_SCAN_BOUND = 10**7


class ScanBoundError(ValueError):
    pass


def brute_inverse(a: int, m: int) -> Optional[int]:
    """Scan the sign-aware range of ``m`` for ``x`` with ``a*x = 1 (mod m)``."""
    if abs(m) <= 1:
        raise ValueError("brute_inverse needs |m| > 1")
    candidates = range(1, m) if m > 0 else range(m + 1, 0)
    for x in candidates:
        if (a * x - 1) % m == 0:
            return x
    return None


def brute_ext_inverse(b: int, a: int, m: int) -> Optional[int]:
    """Smallest ``x`` in ``[0, m)`` with ``a*x = b (mod m)``, or ``None``."""
    if m <= 1:
        raise ValueError("brute_ext_inverse needs m > 1")
    for x in range(m):
        if (a * x - b) % m == 0:
            return x
    return None


def brute_ext_inverse_table(a: int, m: int) -> dict[int, int]:
    """``{b: x}`` for every solvable ``b`` in ``[0, m)``, from one pass over x.

    Equivalent to calling :func:`brute_ext_inverse` for each ``b`` but
    ``O(m)`` in total; the first hit per residue is the smallest ``x``.
    """
    if m <= 1:
        raise ValueError("need m > 1")
    table: dict[int, int] = {}
    for x in range(m):
        table.setdefault(a * x % m, x)
    return table


def brute_crt(system: Sequence, bound: int = DEFAULT_SCAN_BOUND) -> Optional[tuple[int, int]]:
    """Scan ``[0, lcm)`` for a simultaneous solution.

    ``system`` holds objects with ``residue`` and ``modulus`` attributes.  Any
    solution is congruent to the residue of the largest modulus, so only that
    progression is walked.
    """
    moduli = [c.modulus for c in system]
    if any(m <= 1 for m in moduli):
        raise ValueError("moduli must exceed 1")
    lcm = math.lcm(*moduli)
    if lcm > bound:
        raise ScanBoundError(f"lcm {lcm} exceeds scan bound {bound}")
    anchor = max(system, key=lambda c: c.modulus)
    rest = [(c.residue % c.modulus, c.modulus) for c in system if c is not anchor]
    for x in range(anchor.residue % anchor.modulus, lcm, anchor.modulus):
        if all(x % m == a for a, m in rest):
            return x, lcm
    return None


class Algorithm(enum.Enum):
    EXTENDED_EUCLID = "euclid"
    DAYAN_ALL_PLUS = "dayan_plus"
    DAYAN_ALL_MINUS = "dayan_minus"
    DAYAN_LEAST_ABS = "dayan_leastabs"


@dataclass(frozen=True)
class StepCount:
    algorithm: Algorithm
    divisions: int


def euclid_inverse_counted(a: int, m: int) -> tuple[Optional[int], StepCount]:
    """Classical extended Euclid on ``(m, a mod m)``, counting divisions.

    One division is one quotient/remainder computation.  The initial
    reduction of ``a`` is not counted.
    """
    if m <= 1:
        raise ValueError("modulus must exceed 1")
    old_r, r = m, a % m
    old_t, t = 0, 1
    steps = 0
    while r:
        quo, rem = divmod(old_r, r)
        steps += 1
        old_r, r = r, rem
        old_t, t = t, old_t - quo * t
    count = StepCount(Algorithm.EXTENDED_EUCLID, steps)
    if old_r != 1:
        return None, count
    return old_t % m, count


CSV_COLUMNS = (
    "p",
    "q",
    "a",
    "euclid_steps",
    "dayan_plus_steps",
    "dayan_minus_steps",
    "dayan_leastabs_steps",
)


@dataclass(frozen=True)
class StepComparison:
    rows: list[dict[str, int]]

    def summary(self) -> dict[str, dict]:
        """Per-column mean, min, max and a histogram of step counts."""
        out = {}
        for col in CSV_COLUMNS[3:]:
            values = [row[col] for row in self.rows]
            out[col] = {
                "mean": statistics.fmean(values) if values else float("nan"),
                "min": min(values, default=0),
                "max": max(values, default=0),
                "histogram": dict(sorted(Counter(values).items())),
            }
        return out

    def to_csv(self, handle=None) -> str:
        buf = handle if handle is not None else io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue() if handle is None else ""


def _sample_tasks(p_range: tuple[int, int], samples: int, rng: random.Random) -> Iterable[tuple[int, int, int]]:
    lo, hi = p_range
    lo = max(lo, 3)
    if hi < lo:
        raise ValueError(f"empty p range {p_range}")
    produced = 0
    while produced < samples:
        p = rng.randint(lo, hi)
        q = rng.randint(2, p - 1)
        if math.gcd(p, q) != 1:
            continue
        yield p, q, rng.randrange(p)
        produced += 1


def compare_steps(
    p_range: tuple[int, int], samples: int, seed: int = 0
) -> StepComparison:
    """Division counts of Euclid vs. the Dayan strategies on random tasks.

    Each task is ``(a * q^-1) mod p`` with ``gcd(p, q) = 1`` known in advance.
    Euclid pays for the full inverse; the Dayan engine stops as soon as its
    sum is complete.  No verdict is drawn, only the counts are reported.
    """
    # imported lazily so the brute-force references above stay independent
    from .dayan import ALL_MINUS, ALL_PLUS, LEAST_ABSOLUTE, run_trace

    rng = random.Random(seed)
    rows = []
    for p, q, a in _sample_tasks(p_range, samples, rng):
        inverse, euclid = euclid_inverse_counted(q, p)
        assert inverse is not None
        row = {"p": p, "q": q, "a": a, "euclid_steps": euclid.divisions}
        for col, strat in (
            ("dayan_plus_steps", ALL_PLUS),
            ("dayan_minus_steps", ALL_MINUS),
            ("dayan_leastabs_steps", LEAST_ABSOLUTE),
        ):
            row[col] = run_trace(p, q, a, strat, find_gcd=False).sum_divisions
        rows.append(row)
    return StepComparison(rows)
