"""Closed-form edge bounds, the exact edge-count identity, and the
inequality chain linking the construction's edge count to the general
lower-bound formula.

Real-valued formulas are evaluated in double precision; comparisons carry
an explicit 1e-9 slack because the exponent log2(3) is irrational.  The
chain links are compared on their subtracted terms rather than on the full
3n - 6 - term values, which avoids cancellation at large n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .construction import DomainError, block_plan, choose_level

LOG2_3 = math.log2(3)
FLOAT_SLACK = 1e-9


def thm2_lower(n: int, k: int) -> float:
    """General lower-bound formula 3n - 6 - 6 * 3^log2(3) * n / k^log2(3)."""
    if k < 7 or n < 1:
        raise DomainError(f"need k >= 7 and n >= 1, got n={n}, k={k}")
    return 3 * n - 6 - 6 * (3**LOG2_3) * n / (k**LOG2_3)


def conj1_value(n: int, k: int) -> float:
    """Conjectured (and disproved) upper bound 3n - 6 - (3n + 6) / k."""
    return 3 * n - 6 - (3 * n + 6) / k


def conj2_form(n: int, k: int, d: float) -> float:
    """Conjectured upper-bound family 3n - 6 - d*n / k^log2(3); d is a free
    parameter, never asserted."""
    return 3 * n - 6 - d * n / (k**LOG2_3)


def lan_song_slope(k: int) -> float:
    """Per-n coefficient of the earlier block construction's bound.

    The additive constant in that bound is unspecified, so only the slope is
    exposed; defined for k >= 11.
    """
    if k < 11:
        raise DomainError(f"slope defined for k >= 11, got {k}")
    return 3 - (3 - 2 / (k - 2)) / (k - 6 + (k - 1) // 2)


def exact_edge_count(n: int, k: int) -> int:
    """Exact edge count 3n - 6 - (s - 1) of the glued construction."""
    plan = block_plan(n, k)
    return 3 * n - 6 - (plan.s - 1)


@dataclass(frozen=True)
class ChainReport:
    """The four chain values and each link's verdict."""

    n: int
    k: int
    i: int
    exact_edges: int
    link1_value: float  # 3n - 6 - 2(n-2)/(3^i + 1)
    link2_value: float  # 3n - 6 - 6(n-2)/(3^log2(k/3) + 3)
    link3_value: float  # thm2_lower(n, k)
    link1_ok: bool
    link2_ok: bool
    link3_ok: bool

    @property
    def ok(self) -> bool:
        return self.link1_ok and self.link2_ok and self.link3_ok


def verify_inequality_chain(n: int, k: int) -> ChainReport:
    """Check exact_edges >= link1 >= link2 >= link3 with float slack.

    Each comparison is done on the subtracted terms t = (3n - 6) - value, so
    the verdicts stay meaningful when 3n - 6 dwarfs the differences.
    """
    plan = block_plan(n, k)
    i, s = plan.i, plan.s
    t0 = float(s - 1)
    t1 = 2 * (n - 2) / (3**i + 1)
    t2 = 6 * (n - 2) / (3 ** math.log2(k / 3) + 3)
    t3 = 6 * (3**LOG2_3) * n / (k**LOG2_3)
    base = 3 * n - 6
    return ChainReport(
        n=n,
        k=k,
        i=i,
        exact_edges=base - (s - 1),
        link1_value=base - t1,
        link2_value=base - t2,
        link3_value=base - t3,
        link1_ok=t0 <= t1 + FLOAT_SLACK,
        link2_ok=t1 <= t2 + FLOAT_SLACK,
        link3_ok=t2 <= t3 + FLOAT_SLACK,
    )


@dataclass(frozen=True)
class BoundsRow:
    n: int
    k: int
    i: int
    s: int
    exact_edges: int
    thm2_lower: float
    conj1_value: float
    lan_song_slope: float | None
    three_n_minus_6: int
    chain_ok: bool


def bounds_row(n: int, k: int) -> BoundsRow:
    plan = block_plan(n, k)
    chain = verify_inequality_chain(n, k)
    return BoundsRow(
        n=n,
        k=k,
        i=plan.i,
        s=plan.s,
        exact_edges=exact_edge_count(n, k),
        thm2_lower=thm2_lower(n, k),
        conj1_value=conj1_value(n, k),
        lan_song_slope=lan_song_slope(k) if k >= 11 else None,
        three_n_minus_6=3 * n - 6,
        chain_ok=chain.ok,
    )


def bounds_table(k_values: list[int], n_values: list[int]) -> list[BoundsRow]:
    """Rows for every valid (n, k) pair of the grids, sorted by (k, n).

    Pairs with n below the construction's minimum for k are skipped.
    """
    rows = []
    for k in sorted(set(k_values)):
        for n in sorted(set(n_values)):
            try:
                rows.append(bounds_row(n, k))
            except DomainError:
                continue
    return rows


CSV_HEADER = "n,k,i,s,exact_edges,thm2_lower,conj1,lan_song_slope,chain_ok"


def bounds_csv(rows: list[BoundsRow]) -> str:
    """Fixed-schema CSV; floats printed with 6 decimals, the slope column is
    empty for k < 11."""
    lines = [CSV_HEADER]
    for r in rows:
        slope = f"{r.lan_song_slope:.6f}" if r.lan_song_slope is not None else ""
        lines.append(
            f"{r.n},{r.k},{r.i},{r.s},{r.exact_edges},"
            f"{r.thm2_lower:.6f},{r.conj1_value:.6f},{slope},"
            f"{'true' if r.chain_ok else 'false'}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReferenceBound:
    name: str
    value: float
    min_n: int
    applicable: bool


def reference_upper_bounds(n: int) -> list[ReferenceBound]:
    """Known small-cycle upper-bound formulas, for context in reports."""
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    specs = [
        ("C4", (15 * n - 30) / 7, 4),
        ("C5", (12 * n - 33) / 5, 11),
        ("Theta4", (12 * n - 24) / 5, 4),
        ("Theta5", (5 * n - 10) / 2, 5),
        ("C6", (5 * n - 14) / 2, 18),
    ]
    return [
        ReferenceBound(name, value, min_n, n >= min_n)
        for name, value, min_n in specs
    ]
